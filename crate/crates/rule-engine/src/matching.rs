//! Locating rule instances inside linear combinations.
//!
//! A match is a *corridor*: a window of `width` adjacent wires through a
//! term, together with a selection of the term's slices that, extracted in
//! order, form an interchange representative of one side of a rule instance.
//! Slices that are not selected must float out of the way: everything below
//! the first selected slice stays put, and every other unselected slice is
//! pushed above the selection by adjacent interchange swaps (which is
//! possible exactly when it does not genuinely interleave with the matched
//! content). An [`Occurrence`] records the term, the selected levels, the
//! corridor position and the concrete instance — precisely the data needed
//! to replay the rearrangement when the rule is applied.
//!
//! Matching is complete modulo interchange: rather than normalizing the
//! candidate content, the matcher enumerates all interchange representatives
//! of the (small) pattern side and looks for each of them literally. A match
//! of an empty pattern (an identity side, as in the adjunction equations used
//! backward to grow a zigzag out of a straight strand) selects no slices at
//! all and is reported once per insertion height and corridor position.

use crate::rule::{ConcreteRule, Direction, RewriteRule, RuleContext};
use diagram_core::{swap_adjacent, Diagram, LinComb, Slice};
use std::collections::{BTreeMap, BTreeSet};

/// One way a rule side occurs inside a linear combination.
#[derive(Debug, Clone)]
pub struct Occurrence {
    /// The term of the combination containing the match (a canonical form).
    pub term: Diagram,
    /// Levels of the term's slices forming the matched content, bottom up.
    /// Empty when the matched pattern side is an identity.
    pub levels: Vec<usize>,
    /// Height at which the matched band sits: `levels[0]` for a non-empty
    /// selection, the insertion height for an identity pattern.
    pub band_level: usize,
    /// Leftmost wire of the corridor at the bottom of the matched band.
    pub wire_start: usize,
    /// The concrete instance matched, with all indices and weights assigned.
    pub instance: ConcreteRule,
    /// Which right-hand-side term was matched (backward direction only).
    pub matched_rhs: Option<usize>,
}

/// All interchange representatives of a small stack: the closure of the slice
/// list under adjacent swaps. Rule sides are tiny, so the orbit is too; a
/// generous cap guards against misuse on full-size diagrams.
pub(crate) fn representatives(slices: &[Slice]) -> Vec<Vec<Slice>> {
    let mut seen: BTreeSet<Vec<Slice>> = BTreeSet::new();
    let mut queue = vec![slices.to_vec()];
    seen.insert(slices.to_vec());
    while let Some(cur) = queue.pop() {
        for k in 0..cur.len().saturating_sub(1) {
            if let Some((lo, hi)) = swap_adjacent(cur[k], cur[k + 1]) {
                let mut next = cur.clone();
                next[k] = lo;
                next[k + 1] = hi;
                if seen.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
        assert!(
            seen.len() <= 100_000,
            "interchange orbit of a pattern side is unreasonably large"
        );
    }
    seen.into_iter().collect()
}

/// Pushes `slice` below the whole `pending` stack by adjacent interchange
/// swaps, returning the displaced stack and the arrived slice. `None` when
/// some pending slice genuinely blocks the descent.
pub(crate) fn bubble_down(pending: &[Slice], slice: Slice) -> Option<(Vec<Slice>, Slice)> {
    let mut pending = pending.to_vec();
    let mut cur = slice;
    for k in (0..pending.len()).rev() {
        let (lo, hi) = swap_adjacent(pending[k], cur)?;
        cur = lo;
        pending[k] = hi;
    }
    Some((pending, cur))
}

/// Extends a partial selection level by level. `idx` counts already matched
/// target slices; `pending` holds skipped slices in the frame where the
/// matched band sits below all of them.
fn extend_match(
    slices: &[Slice],
    target: &[Slice],
    level: usize,
    idx: usize,
    pending: &[Slice],
    selected: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if idx == target.len() {
        out.push(selected.clone());
        return;
    }
    if level == slices.len() {
        return;
    }
    let s = slices[level];
    if let Some((displaced, down)) = bubble_down(pending, s) {
        if down == target[idx] {
            selected.push(level);
            extend_match(
                slices,
                target,
                level + 1,
                idx + 1,
                &displaced,
                selected,
                out,
            );
            selected.pop();
        }
    }
    // Alternatively leave the slice as context floating above the band.
    let mut skipped = pending.to_vec();
    skipped.push(s);
    extend_match(slices, target, level + 1, idx, &skipped, selected, out);
}

/// Every way `rule` matches inside `x` when applied in direction `dir`.
///
/// The pattern side is the left-hand diagram for [`Direction::Forward`] and
/// each right-hand term in turn for [`Direction::Backward`]. The list is
/// complete — every corridor whose extractable content equals the pattern up
/// to interchange is reported — and deterministically ordered by term, then
/// anchor height, then corridor position, then instance. An empty result
/// simply means the rule does not apply.
pub fn find_occurrences(
    x: &LinComb,
    rule: &RewriteRule,
    dir: Direction,
    ctx: &RuleContext<'_>,
) -> Vec<Occurrence> {
    let mut out = Vec::new();
    let mut rep_cache: BTreeMap<Vec<Slice>, Vec<Vec<Slice>>> = BTreeMap::new();
    for (term, _) in x.iter() {
        let words = term.words_at_levels();
        let slices = term.slices();
        // `anchor` ranges one past the top so identity patterns can be
        // matched above every slice.
        for anchor in 0..=slices.len() {
            let word = &words[anchor];
            for &width in &rule.widths {
                if width > word.len() {
                    continue;
                }
                for u in 0..=(word.len() - width) {
                    let letters = &word.letters()[u..u + width];
                    let mu = word.weight_left_of(term.base(), u + width, ctx.datum);
                    for inst in rule.instances(letters, &mu, ctx) {
                        let patterns: Vec<(Option<usize>, Diagram)> = match dir {
                            Direction::Forward => vec![(None, inst.lhs.clone())],
                            Direction::Backward => inst
                                .rhs
                                .iter()
                                .enumerate()
                                .map(|(k, (d, _))| (Some(k), d.clone()))
                                .collect(),
                        };
                        for (matched_rhs, pattern) in patterns {
                            if pattern.height() == 0 {
                                out.push(Occurrence {
                                    term: term.clone(),
                                    levels: Vec::new(),
                                    band_level: anchor,
                                    wire_start: u,
                                    instance: inst.clone(),
                                    matched_rhs,
                                });
                                continue;
                            }
                            if anchor == slices.len() {
                                continue;
                            }
                            let reps = rep_cache
                                .entry(pattern.slices().to_vec())
                                .or_insert_with(|| representatives(pattern.slices()))
                                .clone();
                            for rep in reps {
                                let shifted: Vec<Slice> = rep
                                    .iter()
                                    .map(|s| Slice::new(s.offset + u, s.gen))
                                    .collect();
                                if shifted[0] != slices[anchor] {
                                    continue;
                                }
                                let mut selected = vec![anchor];
                                let mut matches = Vec::new();
                                extend_match(
                                    slices,
                                    &shifted,
                                    anchor + 1,
                                    1,
                                    &[],
                                    &mut selected,
                                    &mut matches,
                                );
                                for levels in matches {
                                    out.push(Occurrence {
                                        term: term.clone(),
                                        levels,
                                        band_level: anchor,
                                        wire_start: u,
                                        instance: inst.clone(),
                                        matched_rhs,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use diagram_core::GeneratorKind;

    #[test]
    fn orbit_of_side_by_side_births() {
        let stack = vec![
            Slice::new(0, GeneratorKind::RightCup(0)),
            Slice::new(0, GeneratorKind::RightCup(0)),
        ];
        let reps = representatives(&stack);
        assert_eq!(reps.len(), 2);
        assert!(reps.contains(&vec![
            Slice::new(0, GeneratorKind::RightCup(0)),
            Slice::new(2, GeneratorKind::RightCup(0)),
        ]));
    }

    #[test]
    fn orbit_of_chained_dots_is_trivial() {
        let stack = vec![
            Slice::new(1, GeneratorKind::UpDot(0)),
            Slice::new(1, GeneratorKind::UpDot(0)),
        ];
        assert_eq!(representatives(&stack).len(), 1);
    }

    #[test]
    fn bubble_down_past_disjoint_context() {
        let pending = vec![Slice::new(3, GeneratorKind::UpDot(1))];
        let slice = Slice::new(0, GeneratorKind::UpDot(0));
        let (displaced, down) = bubble_down(&pending, slice).expect("disjoint slices commute");
        assert_eq!(down, slice);
        assert_eq!(displaced, pending);
    }

    #[test]
    fn bubble_down_blocked_on_shared_wire() {
        let pending = vec![Slice::new(0, GeneratorKind::UpDot(0))];
        let slice = Slice::new(0, GeneratorKind::UpDot(0));
        assert!(bubble_down(&pending, slice).is_none());
    }
}
