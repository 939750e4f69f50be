//! Raw composition of single diagrams.
//!
//! These helpers concatenate slice stacks without any interface checking or
//! canonicalization; the checked, bilinear versions live on
//! [`crate::LinComb`]. Callers must ensure the boundaries match (debug
//! builds assert it).

use crate::diagram::{Diagram, Slice};

/// Vertical composition `upper ∘ lower` (`lower` drawn below): the stacks
/// are concatenated, `lower` first.
pub fn diagram_vcomp(upper: &Diagram, lower: &Diagram) -> Diagram {
    debug_assert_eq!(upper.base(), lower.base());
    debug_assert_eq!(upper.domain(), lower.codomain());
    let mut slices = lower.slices().to_vec();
    slices.extend_from_slice(upper.slices());
    Diagram::assemble_unchecked(lower.base().clone(), lower.domain().clone(), slices)
}

/// Horizontal composition `left ⋆ right` (`left` drawn to the left): the
/// left stack runs first beside `right`'s domain, then the right stack runs
/// beside `left`'s codomain.
pub fn diagram_hcomp(left: &Diagram, right: &Diagram) -> Diagram {
    let pad = left.codomain().len();
    let mut slices = left.slices().to_vec();
    slices.extend(
        right
            .slices()
            .iter()
            .map(|s| Slice::new(s.offset + pad, s.gen)),
    );
    Diagram::assemble_unchecked(
        right.base().clone(),
        left.domain().concat(right.domain()),
        slices,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::GeneratorKind::*;
    use crate::word::{Letter, SignedWord};
    use cartan_config::{a2, Weight};

    #[test]
    fn vertical_concatenates_stacks() {
        let datum = a2();
        let base = Weight::zero(2);
        let dom = SignedWord(vec![Letter::up(0)]);
        let dot = Diagram::new(
            base.clone(),
            dom.clone(),
            vec![Slice::new(0, UpDot(0))],
            &datum,
        )
        .unwrap();
        let two = diagram_vcomp(&dot, &dot);
        assert_eq!(two.height(), 2);
        assert_eq!(two.domain(), &dom);
        assert_eq!(two.codomain(), &dom);
    }

    #[test]
    fn horizontal_pads_right_factor() {
        let datum = a2();
        let base = Weight::zero(2);
        let cup = Diagram::new(
            base.clone(),
            SignedWord::empty(),
            vec![Slice::new(0, RightCup(0))],
            &datum,
        )
        .unwrap();
        let dot = Diagram::new(
            base.clone(),
            SignedWord(vec![Letter::up(1)]),
            vec![Slice::new(0, UpDot(1))],
            &datum,
        )
        .unwrap();
        // dot ⋆ cup: the dot strand sits left, so the cup shifts by one.
        let d = diagram_hcomp(&dot, &cup);
        assert_eq!(d.slices()[0], Slice::new(0, UpDot(1)));
        assert_eq!(d.slices()[1], Slice::new(1, RightCup(0)));
        assert_eq!(d.codomain().to_string(), "E1 F0 E0");
    }
}
