//! The grading on diagrams.
//!
//! Each generator carries an integer degree, depending on its color, the
//! symmetrizer `d_i`, and — for cups, caps, spades and clubs — the pairing
//! `h = ⟨h_i, μ⟩` against the weight `μ` of the region immediately right
//! of the generator. A diagram's degree is the sum over its slices; every
//! term of a homogeneous linear combination has the same degree.
//!
//! The assignment is the unique one (up to rescaling each color) making
//! the defining relations homogeneous, normalized by `deg x = 2 d_i`:
//!
//! | generator              | degree              |
//! |------------------------|---------------------|
//! | dot                    | `2 d_i`             |
//! | `τ_ii`                 | `-2 d_i`            |
//! | `τ_ij`, `i ≠ j`        | `d_i d_ij`          |
//! | rightward cup          | `d_i (1 + h)`       |
//! | rightward cap          | `d_i (1 - h)`       |
//! | `σ'`                   | `0`                 |
//! | `♠_n`                  | `d_i (h - 1 - 2n)`  |
//! | `♣_n`                  | `-d_i (1 + h + 2n)` |
//!
//! The induced degrees of the defined generators are `2 d_i` for the
//! downward dot, the same as `τ` for `τ'`, `0` for `σ`, `d_i (1 - h)` for
//! the leftward cup, and `d_i (1 + h)` for the leftward cap; closed
//! dotted bubbles with `r` dots have degree `2 d_i (1 - h + r)` clockwise
//! and `2 d_i (1 + h + r)` counterclockwise.

use cartan_config::{CartanDatum, Weight};

use crate::diagram::Diagram;
use crate::generator::GeneratorKind::{self, *};
use crate::lincomb::LinComb;

/// Computes degrees of generators, diagrams, and linear combinations.
pub struct DegreeAssignment<'a> {
    datum: &'a CartanDatum,
}

impl<'a> DegreeAssignment<'a> {
    /// The canonical assignment for the given datum.
    pub fn new(datum: &'a CartanDatum) -> Self {
        DegreeAssignment { datum }
    }

    /// The degree of one generator whose right-hand region has weight
    /// `local`.
    pub fn of_generator(&self, gen: GeneratorKind, local: &Weight) -> i64 {
        let d = |i| self.datum.d(i);
        match gen {
            UpDot(i) | DownDot(i) => 2 * d(i),
            UpCross(i, j) | DownCross(i, j) => {
                if i == j {
                    -2 * d(i)
                } else {
                    d(i) * self.datum.d_off(i, j)
                }
            }
            RightCup(i) => d(i) * (1 + local.pairing(i)),
            RightCap(i) => d(i) * (1 - local.pairing(i)),
            InvSide(_, _) | InvSideSame(_) | SideCross(_, _) => 0,
            SpadeCup(n, i) => d(i) * (local.pairing(i) - 1 - 2 * n as i64),
            ClubCap(n, i) => -d(i) * (1 + local.pairing(i) + 2 * n as i64),
            LeftCup(i) => d(i) * (1 - local.pairing(i)),
            LeftCap(i) => d(i) * (1 + local.pairing(i)),
        }
    }

    /// The total degree of a diagram.
    pub fn of_diagram(&self, d: &Diagram) -> i64 {
        d.slices()
            .iter()
            .enumerate()
            .map(|(k, s)| self.of_generator(s.gen, &d.local_weight(k, self.datum)))
            .sum()
    }

    /// The common degree of all terms, `None` for the zero combination or
    /// when the terms disagree (an inhomogeneous combination).
    pub fn of_lincomb(&self, lc: &LinComb) -> Option<i64> {
        let mut degrees = lc.iter().map(|(d, _)| self.of_diagram(d));
        let first = degrees.next()?;
        degrees.all(|x| x == first).then_some(first)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Slice;
    use crate::word::{Letter, SignedWord};
    use cartan_config::{a1, b2, standard_params};

    #[test]
    fn snake_has_degree_zero() {
        let datum = b2();
        for i in 0..2 {
            for h in -3..=3 {
                let base = Weight::new(vec![h, -h]);
                let d = Diagram::new(
                    base,
                    SignedWord(vec![Letter::up(i)]),
                    vec![Slice::new(1, RightCup(i)), Slice::new(0, RightCap(i))],
                    &datum,
                )
                .unwrap();
                let deg = DegreeAssignment::new(&datum);
                assert_eq!(deg.of_diagram(&d), 0, "i={i} h={h}");
            }
        }
    }

    #[test]
    fn bubble_degrees_match_closed_formula() {
        let datum = a1();
        let params = standard_params(&datum);
        let deg = DegreeAssignment::new(&datum);
        for h in [-2i64, 0, 1, 3] {
            for r in 0..4usize {
                for cw in [true, false] {
                    let mut b = crate::builder::DiagramBuilder::new(
                        &datum,
                        &params,
                        Weight::new(vec![h]),
                        SignedWord::empty(),
                    );
                    b.push_bubble(0, cw, 0, r).unwrap();
                    let (_, d) = b.finish().unwrap();
                    let want = if cw {
                        2 * (1 - h + r as i64)
                    } else {
                        2 * (1 + h + r as i64)
                    };
                    assert_eq!(deg.of_diagram(&d), want, "h={h} r={r} cw={cw}");
                }
            }
        }
    }

    #[test]
    fn lowering_preserves_degree() {
        // The induced degree of each defined generator agrees with the sum
        // over its lowered slices.
        let datum = b2();
        let params = standard_params(&datum);
        let deg = DegreeAssignment::new(&datum);
        for h0 in -2..=2 {
            for h1 in -2..=2 {
                let base = Weight::new(vec![h0, h1]);
                let cases: Vec<(SignedWord, usize, GeneratorKind)> = vec![
                    (SignedWord(vec![Letter::down(0)]), 0, DownDot(0)),
                    (
                        SignedWord(vec![Letter::down(1), Letter::down(0)]),
                        0,
                        DownCross(1, 0),
                    ),
                    (
                        SignedWord(vec![Letter::up(0), Letter::down(1)]),
                        0,
                        SideCross(0, 1),
                    ),
                    (SignedWord::empty(), 0, LeftCup(1)),
                    (
                        SignedWord(vec![Letter::down(0), Letter::up(0)]),
                        0,
                        LeftCap(0),
                    ),
                ];
                for (dom, off, gen) in cases {
                    let mut b =
                        crate::builder::DiagramBuilder::new(&datum, &params, base.clone(), dom);
                    let local = b.local_weight(off + gen.arity_in());
                    b.push(off, gen).unwrap();
                    let (_, d) = b.finish().unwrap();
                    assert_eq!(
                        deg.of_diagram(&d),
                        deg.of_generator(gen, &local),
                        "gen={gen} base={h0},{h1}"
                    );
                }
            }
        }
    }

    #[test]
    fn inhomogeneous_sum_has_no_degree() {
        let datum = a1();
        let dot = Diagram::new(
            Weight::new(vec![0]),
            SignedWord(vec![Letter::up(0)]),
            vec![Slice::new(0, UpDot(0))],
            &datum,
        )
        .unwrap();
        let id = Diagram::identity(SignedWord(vec![Letter::up(0)]), Weight::new(vec![0]));
        let deg = DegreeAssignment::new(&datum);
        let mut lc = LinComb::from_diagram(dot);
        lc.insert(cartan_config::rat(1, 1), id).unwrap();
        assert_eq!(deg.of_lincomb(&lc), None);
    }
}
