//! Incremental construction of diagrams, with macro lowering.
//!
//! The builder accepts any [`GeneratorKind`], primitive or macro, and keeps
//! a running scalar. Macros lower to fixed composites of primitives:
//!
//! * `x'` (downward dot) is the mate of the dot: cup, dot, cap.
//! * `σ` (rightward crossing) is cup, upward crossing, cap, all colored by
//!   the downward strand.
//! * `τ'_ij` (downward crossing) is `t_ij^{-1}` times the double mate of the
//!   upward crossing, built from `σ`.
//! * `η'` (leftward cup) at local weight `λ` is the spade `♠_{h-1}` when
//!   `h = ⟨h_i, λ⟩ > 0`, and `σ' ∘ (1 ⋆ x^{-h}) ∘ η` when `h ≤ 0`.
//! * `ε'` (leftward cap) is the club `♣_{-h-1}` when `h < 0`, and
//!   `-ε ∘ (x^h ⋆ 1) ∘ σ'` when `h ≥ 0`.
//!
//! Dotted bubbles are provided as a convenience on top of these: clockwise
//! `ε ∘ (x^r ⋆ 1) ∘ η'` and counterclockwise `ε' ∘ (1 ⋆ x^r) ∘ η`.

use cartan_config::{CartanDatum, ParamSet, Rat, Weight};
use num_traits::One;

use crate::diagram::{check_guard, Diagram, Slice};
use crate::error::DiagramError;
use crate::generator::GeneratorKind::{self, *};
use crate::lincomb::LinComb;
use crate::word::{Letter, SignedWord};

/// Builds one scaled diagram bottom-up, lowering macro generators.
pub struct DiagramBuilder<'a> {
    datum: &'a CartanDatum,
    params: &'a ParamSet,
    base: Weight,
    domain: SignedWord,
    word: Vec<Letter>,
    slices: Vec<Slice>,
    coeff: Rat,
}

impl<'a> DiagramBuilder<'a> {
    /// Starts from the identity on `domain` based at `base`.
    pub fn new(
        datum: &'a CartanDatum,
        params: &'a ParamSet,
        base: Weight,
        domain: SignedWord,
    ) -> Self {
        let word = domain.letters().to_vec();
        DiagramBuilder {
            datum,
            params,
            base,
            domain,
            word,
            slices: Vec::new(),
            coeff: Rat::one(),
        }
    }

    /// The word at the current (top) boundary.
    pub fn word(&self) -> SignedWord {
        SignedWord(self.word.clone())
    }

    /// The weight of the region right of the first `offset` strands at the
    /// current boundary.
    pub fn local_weight(&self, offset: usize) -> Weight {
        SignedWord(self.word.clone()).weight_left_of(&self.base, offset, self.datum)
    }

    /// Appends a generator (macro or primitive) at `offset`.
    pub fn push(&mut self, offset: usize, gen: GeneratorKind) -> Result<&mut Self, DiagramError> {
        let d_in = gen.arity_in();
        if offset + d_in > self.word.len() {
            return Err(DiagramError::OffsetOutOfRange {
                slice: self.slices.len(),
                gen,
                offset,
                width: self.word.len(),
            });
        }
        let expected = gen.domain_letters();
        if expected != self.word[offset..offset + d_in] {
            return Err(DiagramError::WordMismatch {
                slice: self.slices.len(),
                gen,
                expected: SignedWord(expected).to_string(),
                offset,
                found: SignedWord(self.word[offset..offset + d_in].to_vec()).to_string(),
            });
        }
        match gen {
            DownDot(i) => {
                self.push_prim(offset, RightCup(i))?;
                self.push_prim(offset + 1, UpDot(i))?;
                self.push_prim(offset + 1, RightCap(i))?;
            }
            SideCross(e, f) => {
                self.push_prim(offset, RightCup(f))?;
                self.push_prim(offset + 1, UpCross(f, e))?;
                self.push_prim(offset + 2, RightCap(f))?;
            }
            DownCross(i, j) => {
                self.coeff *= self.params.t(i, j).recip();
                self.push_prim(offset, RightCup(j))?;
                self.push(offset + 1, SideCross(j, i))?;
                self.push_prim(offset + 2, RightCap(j))?;
            }
            LeftCup(i) => {
                let h = self.local_weight(offset).pairing(i);
                if h > 0 {
                    self.push_prim(offset, SpadeCup((h - 1) as usize, i))?;
                } else {
                    self.push_prim(offset, RightCup(i))?;
                    for _ in 0..(-h) {
                        self.push_prim(offset + 1, UpDot(i))?;
                    }
                    self.push_prim(offset, InvSideSame(i))?;
                }
            }
            LeftCap(i) => {
                let h = self.local_weight(offset + 2).pairing(i);
                if h < 0 {
                    self.push_prim(offset, ClubCap((-h - 1) as usize, i))?;
                } else {
                    self.coeff = -self.coeff.clone();
                    self.push_prim(offset, InvSideSame(i))?;
                    for _ in 0..h {
                        self.push_prim(offset, UpDot(i))?;
                    }
                    self.push_prim(offset, RightCap(i))?;
                }
            }
            _ => self.push_prim(offset, gen)?,
        }
        Ok(self)
    }

    /// Appends `n` dots on the upward strand at `offset`.
    pub fn push_dots(&mut self, offset: usize, i: usize, n: usize) -> Result<&mut Self, DiagramError> {
        for _ in 0..n {
            self.push(offset, UpDot(i))?;
        }
        Ok(self)
    }

    /// Appends a closed dotted bubble at `offset`: clockwise means the
    /// strand flows left-to-right across the top (rightward cap over a
    /// leftward cup), counterclockwise the reverse.
    pub fn push_bubble(
        &mut self,
        offset: usize,
        clockwise: bool,
        i: usize,
        r: usize,
    ) -> Result<&mut Self, DiagramError> {
        if clockwise {
            self.push(offset, LeftCup(i))?;
            self.push_dots(offset, i, r)?;
            self.push(offset, RightCap(i))?;
        } else {
            self.push(offset, RightCup(i))?;
            self.push_dots(offset + 1, i, r)?;
            self.push(offset, LeftCap(i))?;
        }
        Ok(self)
    }

    /// Multiplies the running scalar.
    pub fn scale(&mut self, q: &Rat) -> &mut Self {
        self.coeff *= q;
        self
    }

    /// Appends one validated primitive slice.
    fn push_prim(&mut self, offset: usize, gen: GeneratorKind) -> Result<(), DiagramError> {
        debug_assert!(gen.is_primitive());
        let slice = Slice::new(offset, gen);
        let d_in = gen.arity_in();
        debug_assert!(offset + d_in <= self.word.len());
        debug_assert_eq!(gen.domain_letters(), self.word[offset..offset + d_in]);
        check_guard(self.slices.len(), &slice, &self.word, &self.base, self.datum)?;
        self.word.splice(offset..offset + d_in, gen.codomain_letters());
        self.slices.push(slice);
        Ok(())
    }

    /// Finishes the build, returning the accumulated scalar and the diagram.
    pub fn finish(self) -> Result<(Rat, Diagram), DiagramError> {
        let d = Diagram::new(self.base, self.domain, self.slices, self.datum)?;
        Ok((self.coeff, d))
    }

    /// Finishes as a one-term (or zero) linear combination.
    pub fn finish_lincomb(self) -> Result<LinComb, DiagramError> {
        let (coeff, d) = self.finish()?;
        Ok(LinComb::from_scaled_diagram(coeff, d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cartan_config::{a1, a2, rat, standard_params};

    #[test]
    fn down_dot_lowers_to_mate() {
        let datum = a1();
        let params = standard_params(&datum);
        let mut b = DiagramBuilder::new(
            &datum,
            &params,
            Weight::new(vec![0]),
            SignedWord(vec![Letter::down(0)]),
        );
        b.push(0, DownDot(0)).unwrap();
        let (c, d) = b.finish().unwrap();
        assert_eq!(c, Rat::one());
        assert_eq!(d.height(), 3);
        assert_eq!(d.codomain().to_string(), "F0");
    }

    #[test]
    fn down_cross_carries_inverse_unit() {
        let datum = a2();
        let params = cartan_config::ParamSet::new(
            &datum,
            vec![((0, 1), rat(3, 1)), ((1, 0), rat(5, 1))].into_iter().collect(),
            std::collections::BTreeMap::new(),
            true,
        )
        .unwrap();
        let mut b = DiagramBuilder::new(
            &datum,
            &params,
            Weight::zero(2),
            SignedWord(vec![Letter::down(0), Letter::down(1)]),
        );
        b.push(0, DownCross(0, 1)).unwrap();
        let (c, d) = b.finish().unwrap();
        assert_eq!(c, rat(1, 3));
        assert_eq!(d.codomain().to_string(), "F1 F0");
        assert_eq!(d.height(), 5);
    }

    #[test]
    fn left_cup_branches_on_h() {
        let datum = a1();
        let params = standard_params(&datum);
        // h = 2 > 0: a single spade.
        let mut b = DiagramBuilder::new(&datum, &params, Weight::new(vec![2]), SignedWord::empty());
        b.push(0, LeftCup(0)).unwrap();
        let (c, d) = b.finish().unwrap();
        assert_eq!(c, Rat::one());
        assert_eq!(d.slices(), &[Slice::new(0, SpadeCup(1, 0))]);
        // h = -1 ≤ 0: cup, one dot, sideways crossing.
        let mut b = DiagramBuilder::new(&datum, &params, Weight::new(vec![-1]), SignedWord::empty());
        b.push(0, LeftCup(0)).unwrap();
        let (c, d) = b.finish().unwrap();
        assert_eq!(c, Rat::one());
        assert_eq!(d.height(), 3);
        assert_eq!(d.codomain().to_string(), "E0 F0");
    }

    #[test]
    fn left_cap_branches_on_h() {
        let datum = a1();
        let params = standard_params(&datum);
        let dom = SignedWord(vec![Letter::down(0), Letter::up(0)]);
        // h = -2 < 0: a single club.
        let mut b = DiagramBuilder::new(&datum, &params, Weight::new(vec![-2]), dom.clone());
        b.push(0, LeftCap(0)).unwrap();
        let (c, d) = b.finish().unwrap();
        assert_eq!(c, Rat::one());
        assert_eq!(d.slices(), &[Slice::new(0, ClubCap(1, 0))]);
        // h = 1 ≥ 0: minus crossing, dot, cap.
        let mut b = DiagramBuilder::new(&datum, &params, Weight::new(vec![1]), dom);
        b.push(0, LeftCap(0)).unwrap();
        let (c, d) = b.finish().unwrap();
        assert_eq!(c, rat(-1, 1));
        assert_eq!(d.height(), 3);
        assert!(d.codomain().is_empty());
    }

    #[test]
    fn bubbles_close_up() {
        let datum = a1();
        let params = standard_params(&datum);
        for h in [-3i64, 0, 3] {
            for r in 0..3 {
                for cw in [true, false] {
                    let mut b = DiagramBuilder::new(
                        &datum,
                        &params,
                        Weight::new(vec![h]),
                        SignedWord::empty(),
                    );
                    b.push_bubble(0, cw, 0, r).unwrap();
                    let (_, d) = b.finish().unwrap();
                    assert!(d.codomain().is_empty(), "h={h} r={r} cw={cw}");
                }
            }
        }
    }
}
