//! A tiny recipe language for stating equations.
//!
//! A *recipe* is a bottom-up list of generator insertions over a fixed
//! boundary word; [`build_term`] elaborates it through the macro-lowering
//! builder into a scaled diagram, and [`instance`] assembles a left recipe
//! and scaled right recipes into one concrete, well-formed rule instance.
//! A recipe that fails a guard or does not type-check yields `None`, which
//! rule closures use as their admissibility filter.

use cartan_config::{CartanDatum, Idx, Rat, Weight};
use diagram_core::GeneratorKind::*;
use diagram_core::{Diagram, DiagramBuilder, GeneratorKind, Letter, LinComb, SignedWord};
use num_traits::One;
use rule_engine::{ConcreteRule, RuleContext};

/// One diagram, written as insertions `(offset, generator)` from the bottom.
pub type Steps = Vec<(usize, GeneratorKind)>;

/// `n` dots on the strand at `offset` (which must be upward there).
pub fn dots(offset: usize, i: Idx, n: usize) -> Steps {
    vec![(offset, UpDot(i)); n]
}

/// `n` downward dots on the strand at `offset` (downward there).
pub fn down_dots(offset: usize, i: Idx, n: usize) -> Steps {
    vec![(offset, DownDot(i)); n]
}

/// The sideways crossing `F_a E_b -> E_b F_a` inverse to the leftward one,
/// picking the same-color generator on the diagonal.
pub fn inv_side(a: Idx, b: Idx) -> GeneratorKind {
    if a == b {
        InvSideSame(a)
    } else {
        InvSide(a, b)
    }
}

/// Elaborates a recipe over `letters` based at `mu`. `None` when an insertion
/// does not type-check or a guard fails, marking the instance inadmissible.
pub fn build_term(
    ctx: &RuleContext<'_>,
    mu: &Weight,
    letters: &[Letter],
    steps: &[(usize, GeneratorKind)],
) -> Option<(Rat, Diagram)> {
    let mut b = DiagramBuilder::new(
        ctx.datum,
        ctx.params,
        mu.clone(),
        SignedWord(letters.to_vec()),
    );
    for &(o, g) in steps {
        b.push(o, g).ok()?;
    }
    b.finish().ok()
}

/// Assembles the equation `c_l * <left recipe> = sum of q_k * <recipe_k>`
/// into a concrete instance whose stored left side carries coefficient one.
///
/// `None` when the left side is inadmissible at this boundary. A right side
/// that fails to elaborate while the left side succeeded is an encoding bug:
/// both sides of a genuine equation type-check together.
pub fn instance(
    ctx: &RuleContext<'_>,
    mu: &Weight,
    letters: &[Letter],
    lhs: (Rat, Steps),
    rhs: Vec<(Rat, Steps)>,
) -> Option<ConcreteRule> {
    let (c_stated, lhs_steps) = lhs;
    let (c_built, lhs_diag) = build_term(ctx, mu, letters, &lhs_steps)?;
    let c = c_stated * c_built;
    debug_assert!(!num_traits::Zero::is_zero(&c), "left side scaled to zero");
    let interface = diagram_core::Interface::of(&lhs_diag);
    let mut comb = LinComb::zero(interface);
    for (q, steps) in rhs {
        match build_term(ctx, mu, letters, &steps) {
            Some((cq, dq)) => {
                comb.insert(q * cq / c.clone(), dq)
                    .expect("right-hand term over the instance interface");
            }
            None => {
                debug_assert!(false, "right-hand recipe failed while left side built");
                return None;
            }
        }
    }
    Some(ConcreteRule {
        lhs: lhs_diag,
        rhs: comb,
    })
}

/// The closed dotted bubble of the given orientation with `r` dots (possibly
/// negative) inserted at `offset`, for a point whose region weight is `mu`.
///
/// Non-negative `r` gives the honest bubble. Negative `r` is shorthand whose
/// value is fixed by the inversion data: a scalar, zero (`None`), or minus a
/// club- or spade-decorated circle.
pub fn bubble_value(
    _datum: &CartanDatum,
    mu: &Weight,
    i: Idx,
    clockwise: bool,
    r: i64,
    offset: usize,
) -> Option<(Rat, Steps)> {
    let h = mu.pairing(i);
    if r >= 0 {
        let r = r as usize;
        let mut v: Steps;
        if clockwise {
            v = vec![(offset, LeftCup(i))];
            v.extend(dots(offset, i, r));
            v.push((offset, RightCap(i)));
        } else {
            v = vec![(offset, RightCup(i))];
            v.extend(dots(offset + 1, i, r));
            v.push((offset, LeftCap(i)));
        }
        return Some((Rat::one(), v));
    }
    if clockwise {
        match r.cmp(&(h - 1)) {
            std::cmp::Ordering::Equal => Some((Rat::one(), Vec::new())),
            std::cmp::Ordering::Less => None,
            std::cmp::Ordering::Greater => {
                // Here h <= r < 0: a club with -h extra dots, negated.
                let mut v: Steps = vec![(offset, RightCup(i))];
                v.extend(dots(offset + 1, i, (-h) as usize));
                v.push((offset, ClubCap((-r - 1) as usize, i)));
                Some((-Rat::one(), v))
            }
        }
    } else {
        match r.cmp(&(-h - 1)) {
            std::cmp::Ordering::Equal => Some((Rat::one(), Vec::new())),
            std::cmp::Ordering::Less => None,
            std::cmp::Ordering::Greater => {
                // Here -r <= h and r < 0: a spade with h extra dots, negated.
                let mut v: Steps = vec![(offset, SpadeCup((-r - 1) as usize, i))];
                v.extend(dots(offset, i, h as usize));
                v.push((offset, RightCap(i)));
                Some((-Rat::one(), v))
            }
        }
    }
}

/// Convenience: `one()` as a rational.
pub fn one() -> Rat {
    Rat::one()
}

/// Convenience: an integer as a rational.
pub fn int(n: i64) -> Rat {
    cartan_config::rat_int(n)
}
