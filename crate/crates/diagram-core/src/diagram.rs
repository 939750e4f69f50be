//! Sliced diagrams.
//!
//! A diagram is a vertical stack of *slices*, each holding exactly one
//! primitive generator at a horizontal offset; all other strands pass through
//! a slice vertically. Reading from the domain word upward, every slice
//! rewrites a contiguous span of the current word. The base weight labels
//! the region to the right of all strands; the weight of any other region is
//! obtained by shifting across the strands to its right, so region weights
//! are derived data and never stored.
//!
//! Two stacks that differ only in the vertical order of far-apart generators
//! describe the same morphism; [`crate::canonical_form`] picks a unique
//! representative of that equivalence class.

use cartan_config::{CartanDatum, Weight};

use crate::error::DiagramError;
use crate::generator::GeneratorKind;
use crate::word::{Letter, SignedWord};

/// One level of a diagram: a single generator at a horizontal offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slice {
    /// Number of strands passing to the left of the generator.
    pub offset: usize,
    /// The generator occupying this level.
    pub gen: GeneratorKind,
}

impl Slice {
    /// Convenience constructor.
    pub fn new(offset: usize, gen: GeneratorKind) -> Slice {
        Slice { offset, gen }
    }
}

impl std::fmt::Display for Slice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}@{}", self.gen, self.offset)
    }
}

/// A single sliced diagram (one monomial; scalars live in [`crate::LinComb`]).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    base: Weight,
    domain: SignedWord,
    codomain: SignedWord,
    slices: Vec<Slice>,
}

impl Diagram {
    /// Builds and validates a diagram from its parts.
    ///
    /// Validation checks, slice by slice from the bottom: the generator is
    /// primitive, its footprint fits inside the current word, the letters in
    /// the footprint match its typing, and any weight guard (spades, clubs)
    /// holds at the generator's local weight.
    pub fn new(
        base: Weight,
        domain: SignedWord,
        slices: Vec<Slice>,
        datum: &CartanDatum,
    ) -> Result<Diagram, DiagramError> {
        let mut word: Vec<Letter> = domain.letters().to_vec();
        for (k, slice) in slices.iter().enumerate() {
            let gen = slice.gen;
            if !gen.is_primitive() {
                return Err(DiagramError::NotPrimitive { gen });
            }
            if let GeneratorKind::InvSide(i, j) = gen {
                if i == j {
                    return Err(DiagramError::InvSideEqualColors { idx: i });
                }
            }
            let d_in = gen.arity_in();
            if slice.offset + d_in > word.len() {
                return Err(DiagramError::OffsetOutOfRange {
                    slice: k,
                    gen,
                    offset: slice.offset,
                    width: word.len(),
                });
            }
            let expected = gen.domain_letters();
            let found = &word[slice.offset..slice.offset + d_in];
            if expected != found {
                return Err(DiagramError::WordMismatch {
                    slice: k,
                    gen,
                    expected: SignedWord(expected).to_string(),
                    offset: slice.offset,
                    found: SignedWord(found.to_vec()).to_string(),
                });
            }
            check_guard(k, slice, &word, &base, datum)?;
            word.splice(slice.offset..slice.offset + d_in, gen.codomain_letters());
        }
        Ok(Diagram { base, domain, codomain: SignedWord(word), slices })
    }

    /// Builds a diagram that is already known to be valid.
    ///
    /// Used internally by operations that preserve validity (interchange
    /// swaps, composition of validated diagrams); they recompute the codomain
    /// but skip the guard checks. Debug builds still assert full validity.
    pub(crate) fn assemble_unchecked(
        base: Weight,
        domain: SignedWord,
        slices: Vec<Slice>,
    ) -> Diagram {
        let mut word = domain.letters().to_vec();
        for slice in &slices {
            debug_assert!(slice.gen.is_primitive());
            debug_assert!(slice.offset + slice.gen.arity_in() <= word.len());
            debug_assert_eq!(
                slice.gen.domain_letters(),
                word[slice.offset..slice.offset + slice.gen.arity_in()],
                "assemble_unchecked given an invalid stack"
            );
            word.splice(
                slice.offset..slice.offset + slice.gen.arity_in(),
                slice.gen.codomain_letters(),
            );
        }
        Diagram { base, domain, codomain: SignedWord(word), slices }
    }

    /// The identity diagram on `word` based at `base`: no slices.
    pub fn identity(word: SignedWord, base: Weight) -> Diagram {
        Diagram { base, domain: word.clone(), codomain: word, slices: Vec::new() }
    }

    /// The base weight (the region right of all strands).
    pub fn base(&self) -> &Weight {
        &self.base
    }

    /// The bottom boundary word.
    pub fn domain(&self) -> &SignedWord {
        &self.domain
    }

    /// The top boundary word.
    pub fn codomain(&self) -> &SignedWord {
        &self.codomain
    }

    /// The slices, bottom to top.
    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    /// Number of slices.
    pub fn height(&self) -> usize {
        self.slices.len()
    }

    /// The boundary words at every level: entry `k` is the word below slice
    /// `k`, and the last entry is the codomain.
    pub fn words_at_levels(&self) -> Vec<SignedWord> {
        let mut out = Vec::with_capacity(self.slices.len() + 1);
        let mut word = self.domain.letters().to_vec();
        out.push(SignedWord(word.clone()));
        for slice in &self.slices {
            word.splice(
                slice.offset..slice.offset + slice.gen.arity_in(),
                slice.gen.codomain_letters(),
            );
            out.push(SignedWord(word.clone()));
        }
        out
    }

    /// The local weight of slice `k`: the weight of the region immediately
    /// right of its generator's footprint.
    pub fn local_weight(&self, k: usize, datum: &CartanDatum) -> Weight {
        let mut word = self.domain.letters().to_vec();
        for slice in &self.slices[..k] {
            word.splice(
                slice.offset..slice.offset + slice.gen.arity_in(),
                slice.gen.codomain_letters(),
            );
        }
        let slice = &self.slices[k];
        SignedWord(word).weight_left_of(
            &self.base,
            slice.offset + slice.gen.arity_in(),
            datum,
        )
    }

}

/// Checks the weight guard of spades and clubs at their local weight.
pub(crate) fn check_guard(
    k: usize,
    slice: &Slice,
    word: &[Letter],
    base: &Weight,
    datum: &CartanDatum,
) -> Result<(), DiagramError> {
    let (n, i, need_positive) = match slice.gen {
        GeneratorKind::SpadeCup(n, i) => (n, i, true),
        GeneratorKind::ClubCap(n, i) => (n, i, false),
        _ => return Ok(()),
    };
    let right = slice.offset + slice.gen.arity_in();
    let local = SignedWord(word.to_vec()).weight_left_of(base, right, datum);
    let h = local.pairing(i);
    let ok = if need_positive { (n as i64) < h } else { (n as i64) < -h };
    if ok {
        Ok(())
    } else {
        let requirement = if need_positive {
            format!("0 <= {n} < h = {h}")
        } else {
            format!("0 <= {n} < -h = {}", -h)
        };
        Err(DiagramError::GuardViolation {
            slice: k,
            gen: slice.gen,
            weight: local.to_string(),
            requirement,
        })
    }
}

impl std::fmt::Display for Diagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{} => {} @ {}]", self.domain, self.codomain, self.base)?;
        if !self.slices.is_empty() {
            write!(f, " ")?;
            for (k, s) in self.slices.iter().enumerate() {
                if k > 0 {
                    write!(f, "; ")?;
                }
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cartan_config::{a1, a2};

    fn up(i: usize) -> Letter {
        Letter::up(i)
    }
    fn down(i: usize) -> Letter {
        Letter::down(i)
    }

    #[test]
    fn identity_has_equal_boundaries() {
        let d = Diagram::identity(SignedWord(vec![up(0), down(1)]), Weight::zero(2));
        assert_eq!(d.domain(), d.codomain());
        assert_eq!(d.height(), 0);
    }

    #[test]
    fn cap_after_cup_is_a_circle_interface() {
        let datum = a1();
        let d = Diagram::new(
            Weight::new(vec![0]),
            SignedWord::empty(),
            vec![
                Slice::new(0, GeneratorKind::RightCup(0)),
                Slice::new(0, GeneratorKind::InvSideSame(0)),
                Slice::new(0, GeneratorKind::RightCap(0)),
            ],
            &datum,
        )
        .unwrap();
        assert!(d.codomain().is_empty());
    }

    #[test]
    fn word_mismatch_is_reported() {
        let datum = a2();
        let err = Diagram::new(
            Weight::zero(2),
            SignedWord(vec![up(0), up(0)]),
            vec![Slice::new(0, GeneratorKind::UpCross(0, 1))],
            &datum,
        )
        .unwrap_err();
        assert!(matches!(err, DiagramError::WordMismatch { .. }));
    }

    #[test]
    fn spade_guard_uses_local_weight() {
        let datum = a1();
        // Base weight 3: a spade with n = 2 needs 2 < h = 3, fine; n = 3 fails.
        let base = Weight::new(vec![3]);
        let ok = Diagram::new(
            base.clone(),
            SignedWord::empty(),
            vec![Slice::new(0, GeneratorKind::SpadeCup(2, 0))],
            &datum,
        );
        assert!(ok.is_ok());
        let err = Diagram::new(
            base,
            SignedWord::empty(),
            vec![Slice::new(0, GeneratorKind::SpadeCup(3, 0))],
            &datum,
        )
        .unwrap_err();
        assert!(matches!(err, DiagramError::GuardViolation { .. }));
    }

    #[test]
    fn spade_guard_sees_letters_to_its_right() {
        let datum = a1();
        // Base 1, but an E_0 strand to the right raises the local pairing by
        // a_00 = 2, so n = 2 < h = 3 is allowed at the left of it.
        let base = Weight::new(vec![1]);
        let d = Diagram::new(
            base,
            SignedWord(vec![up(0)]),
            vec![Slice::new(0, GeneratorKind::SpadeCup(2, 0))],
            &datum,
        );
        assert!(d.is_ok());
    }

    #[test]
    fn local_weight_tracks_levels() {
        let datum = a1();
        let d = Diagram::new(
            Weight::new(vec![0]),
            SignedWord(vec![up(0), down(0)]),
            vec![Slice::new(0, GeneratorKind::RightCap(0)), Slice::new(0, GeneratorKind::RightCup(0))],
            &datum,
        )
        .unwrap();
        // The cap's footprint covers both strands: local weight is the base.
        assert_eq!(d.local_weight(0, &datum).pairings(), &[0]);
        // The cup inserts into the empty word: local weight is again the base.
        assert_eq!(d.local_weight(1, &datum).pairings(), &[0]);
    }

    #[test]
    fn macro_kinds_are_rejected() {
        let datum = a1();
        let err = Diagram::new(
            Weight::new(vec![0]),
            SignedWord(vec![down(0)]),
            vec![Slice::new(0, GeneratorKind::DownDot(0))],
            &datum,
        )
        .unwrap_err();
        assert!(matches!(err, DiagramError::NotPrimitive { .. }));
    }
}
