//! Replacing a matched rectangle by the other side of its equation.

use crate::error::EngineError;
use crate::matching::{bubble_down, Occurrence};
use crate::rule::{Direction, RewriteRule, RuleContext};
use cartan_config::Rat;
use diagram_core::{canonical_form, Diagram, LinComb, Slice};
use num_traits::{One, Zero};

/// The matched term rearranged into context below, matched band, and context
/// above, all in compatible coordinates.
struct Banded {
    below: Vec<Slice>,
    band: Vec<Slice>,
    above: Vec<Slice>,
}

/// Replays the rearrangement recorded by an occurrence: everything below the
/// band level stays put, selected slices bubble down past previously skipped
/// ones, and skipped slices float above the band.
fn reband(term: &Diagram, levels: &[usize], band_level: usize) -> Result<Banded, EngineError> {
    let slices = term.slices();
    let stale = |msg: &str| EngineError::StaleOccurrence(msg.to_string());
    if levels.windows(2).any(|w| w[0] >= w[1]) {
        return Err(stale("selected levels are not strictly increasing"));
    }
    if band_level > slices.len() || levels.last().is_some_and(|&l| l >= slices.len()) {
        return Err(stale("selected levels exceed the term's height"));
    }
    if levels.first().is_some_and(|&l| l != band_level) {
        return Err(stale("band level disagrees with the first selected level"));
    }
    let below = slices[..band_level].to_vec();
    let mut band = Vec::new();
    let mut pending: Vec<Slice> = Vec::new();
    let mut sel = levels.iter().copied().peekable();
    for (k, &s) in slices.iter().enumerate().skip(band_level) {
        if sel.peek() == Some(&k) {
            sel.next();
            let (displaced, down) = bubble_down(&pending, s)
                .ok_or_else(|| stale("selected slices no longer extract by interchange"))?;
            pending = displaced;
            band.push(down);
        } else {
            pending.push(s);
        }
    }
    Ok(Banded {
        below,
        band,
        above: pending,
    })
}

/// Applies `rule` at the matched occurrence `occ`, in direction `dir`.
///
/// Writing the matched instance as an equation `lhs = rhs`, the result is
/// `x − c·context[matched side] + c·context[other side]`, where `c` is chosen
/// so that the matched term of `x` cancels exactly. Adding
/// `c·(context[lhs] − context[rhs])` is sound for every scalar `c` because
/// the two context embeddings are equal in the 2-category; fixing `c` this
/// way makes the step behave like a classical rewrite. Forward application
/// replaces the matched term by the embedded right-hand side; backward
/// application replaces it by the embedded left-hand diagram minus the other
/// embedded right-hand terms.
///
/// Errors with [`EngineError::StaleOccurrence`] when `occ` does not describe
/// a rectangle of `x` any more (its term vanished, or the recorded selection
/// no longer extracts to the recorded pattern side).
pub fn apply_at(
    x: &LinComb,
    rule: &RewriteRule,
    occ: &Occurrence,
    dir: Direction,
    ctx: &RuleContext<'_>,
) -> Result<LinComb, EngineError> {
    let c_term = x.coeff_of(&occ.term);
    if c_term.is_zero() {
        return Err(EngineError::StaleOccurrence(format!(
            "the matched term is no longer present (rule {})",
            rule.name
        )));
    }
    let banded = reband(&occ.term, &occ.levels, occ.band_level)?;

    // The equation's two sides as coefficient-diagram lists.
    let lhs_side = vec![(Rat::one(), occ.instance.lhs.clone())];
    let rhs_side: Vec<(Rat, Diagram)> = occ
        .instance
        .rhs
        .iter()
        .map(|(d, c)| (c.clone(), d.clone()))
        .collect();
    let (pattern, factor, matched_side, other_side) = match dir {
        Direction::Forward => (&occ.instance.lhs, Rat::one(), &lhs_side, &rhs_side),
        Direction::Backward => {
            let k = occ.matched_rhs.ok_or_else(|| {
                EngineError::StaleOccurrence(
                    "backward occurrence lacks a matched right-hand term".into(),
                )
            })?;
            let (c, d) = rhs_side
                .get(k)
                .map(|(c, d)| (c.clone(), d))
                .ok_or_else(|| {
                    EngineError::StaleOccurrence("matched right-hand term out of range".into())
                })?;
            (d, c, &rhs_side, &lhs_side)
        }
    };

    // Verify the extracted band still equals the matched pattern side.
    if banded.band.iter().any(|s| s.offset < occ.wire_start) {
        return Err(EngineError::StaleOccurrence(
            "band escapes the corridor".into(),
        ));
    }
    let band_rel: Vec<Slice> = banded
        .band
        .iter()
        .map(|s| Slice::new(s.offset - occ.wire_start, s.gen))
        .collect();
    let band_diagram = Diagram::new(
        pattern.base().clone(),
        pattern.domain().clone(),
        band_rel,
        ctx.datum,
    )
    .map_err(|_| {
        EngineError::StaleOccurrence("band is not a diagram over the pattern boundary".into())
    })?;
    if canonical_form(&band_diagram) != canonical_form(pattern) {
        return Err(EngineError::StaleOccurrence(
            "band no longer equals the matched pattern side".into(),
        ));
    }

    // Embed a corridor-sized diagram back into the term's context.
    let embed = |d: &Diagram| -> Result<Diagram, EngineError> {
        let mut slices = banded.below.clone();
        slices.extend(
            d.slices()
                .iter()
                .map(|s| Slice::new(s.offset + occ.wire_start, s.gen)),
        );
        slices.extend(banded.above.iter().copied());
        Diagram::new(
            occ.term.base().clone(),
            occ.term.domain().clone(),
            slices,
            ctx.datum,
        )
        .map_err(|source| EngineError::BadReplacement {
            rule: rule.name.to_string(),
            source,
        })
    };

    let c = c_term / factor;
    let mut delta = LinComb::zero(x.interface().clone());
    for (coeff, d) in matched_side {
        delta.insert(-(&c * coeff), embed(d)?)?;
    }
    for (coeff, d) in other_side {
        delta.insert(&c * coeff, embed(d)?)?;
    }
    Ok(x.add(&delta)?)
}
