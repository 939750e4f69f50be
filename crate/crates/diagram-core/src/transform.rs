//! The contravariant symmetry `T` exchanging upward and downward strands.
//!
//! `T` mirrors a diagram top-to-bottom: objects map to their negatives,
//! `E_i` and `F_i` trade places, vertical composition reverses, and
//! horizontal composition is preserved. On generators it acts by
//!
//! * dot ↦ downward dot, and vice versa;
//! * `τ_ij ↦ -τ'_ji` and `τ'_ij ↦ -τ_ji`;
//! * rightward cup ↦ rightward cap, and vice versa;
//! * `σ'[F=i, E=j] ↦ -t_ji · σ'[F=j, E=i]` (so `σ'[i,i] ↦ -σ'[i,i]`);
//! * `♠_n ↦ ♣_n` and `♣_n ↦ ♠_n`.
//!
//! The scalars are the units of the **target** category. `T` maps the
//! category built from the primed parameters isomorphically onto the one
//! built from `params` (with reversed vertical composition), and applying
//! it twice — priming the parameter set for the inner pass — is the
//! identity.
//!
//! Concretely the image is assembled by walking the slices in reverse
//! order and emitting each generator's image at the *same* offset: a
//! top-to-bottom mirror does not move anything sideways, so the number of
//! strands left of every generator is unchanged.

use cartan_config::{CartanDatum, ParamSet, Rat};
use num_traits::One;

use crate::builder::DiagramBuilder;
use crate::diagram::Diagram;
use crate::generator::GeneratorKind::*;
use crate::lincomb::{Interface, LinComb};

/// Applies `T` to a single diagram, returning the accumulated scalar and
/// the mirrored diagram.
///
/// The input must live in the category defined by the primed counterpart
/// of `target_params`; the output lives in the category defined by
/// `target_params` itself, whose units enter the crossing scalars.
pub fn transform_diagram(
    d: &Diagram,
    datum: &CartanDatum,
    target_params: &ParamSet,
) -> (Rat, Diagram) {
    let base = d.base().negated();
    let domain = d.codomain().flipped();
    let mut b = DiagramBuilder::new(datum, target_params, base, domain);
    for slice in d.slices().iter().rev() {
        let o = slice.offset;
        let pushed = match slice.gen {
            UpDot(i) => b.push(o, DownDot(i)),
            UpCross(i, j) => b.scale(&-Rat::one()).push(o, DownCross(j, i)),
            RightCup(i) => b.push(o, RightCap(i)),
            RightCap(i) => b.push(o, RightCup(i)),
            InvSide(i, j) => b.scale(&-target_params.t(j, i)).push(o, InvSide(j, i)),
            InvSideSame(i) => b.scale(&-Rat::one()).push(o, InvSideSame(i)),
            SpadeCup(n, i) => b.push(o, ClubCap(n, i)),
            ClubCap(n, i) => b.push(o, SpadeCup(n, i)),
            g => unreachable!("validated diagrams are primitive, found {g}"),
        };
        pushed.expect("the mirror of a valid slice is valid");
    }
    b.finish().expect("the mirror of a valid diagram is valid")
}

/// Applies `T` term by term to a linear combination.
#[allow(non_snake_case)]
pub fn transform_T(lc: &LinComb, datum: &CartanDatum, target_params: &ParamSet) -> LinComb {
    let iface = lc.interface();
    let out_iface = Interface::new(
        iface.base.negated(),
        iface.cod.flipped(),
        iface.dom.flipped(),
    );
    let mut out = LinComb::zero(out_iface);
    for (d, c) in lc.iter() {
        let (scalar, image) = transform_diagram(d, datum, target_params);
        out.insert(c * &scalar, image)
            .expect("mirrored terms share the mirrored interface");
    }
    out
}
