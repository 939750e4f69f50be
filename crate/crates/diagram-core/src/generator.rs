//! Generators: the local pieces a slice can hold.
//!
//! Eight *primitive* generators are stored in diagrams; the remaining kinds
//! are *macros*, definitional abbreviations that lower to short composites of
//! primitives (see [`crate::builder`]). Each generator occupies a contiguous
//! span of strand positions; its typing is a pair of letter words (what it
//! consumes below, what it produces above).
//!
//! Orientation conventions: an upward strand is `E_i`, a downward strand is
//! `F_i`, and the region to the right of a generator carries its *local
//! weight* `λ`, with `h = ⟨h_i, λ⟩` governing the guarded kinds.

use cartan_config::Idx;

use crate::word::Letter;

/// One generator. See the module docs for conventions.
///
/// The primitive kinds (stored in [`crate::Diagram`] slices):
///
/// * `UpDot(i)` — the dot `x` on an upward `i`-strand, `E_i → E_i`.
/// * `UpCross(i, j)` — the upward crossing `τ_ij`, `E_i E_j → E_j E_i`
///   (`i` is the color entering at the lower left).
/// * `RightCup(i)` — the rightward cup `η`, `1 → F_i E_i` (strand flows
///   left to right through the minimum).
/// * `RightCap(i)` — the rightward cap `ε`, `E_i F_i → 1`.
/// * `InvSide(i, j)` — the leftward crossing `σ'` for distinct colors,
///   `F_i E_j → E_j F_i`, `i ≠ j`.
/// * `InvSideSame(i)` — the leftward crossing `σ'` for equal colors,
///   `F_i E_i → E_i F_i`.
/// * `SpadeCup(n, i)` — the `n`-th spade `♠_n`, `1 → E_i F_i`, defined only
///   where `0 ≤ n < h`.
/// * `ClubCap(n, i)` — the `n`-th club `♣_n`, `F_i E_i → 1`, defined only
///   where `0 ≤ n < -h`.
///
/// The macro kinds (accepted by the builder, never stored):
///
/// * `DownDot(i)` — the dot `x'` on a downward strand, `F_i → F_i`.
/// * `DownCross(i, j)` — the downward crossing `τ'_ij`, `F_i F_j → F_j F_i`.
/// * `SideCross(i, j)` — the rightward crossing `σ`, `E_i F_j → F_j E_i`.
/// * `LeftCup(i)` — the leftward cup `η'`, `1 → E_i F_i`.
/// * `LeftCap(i)` — the leftward cap `ε'`, `F_i E_i → 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorKind {
    /// Dot on an upward strand: `E_i → E_i`.
    UpDot(Idx),
    /// Upward crossing: `E_i E_j → E_j E_i`.
    UpCross(Idx, Idx),
    /// Rightward cup: `1 → F_i E_i`.
    RightCup(Idx),
    /// Rightward cap: `E_i F_i → 1`.
    RightCap(Idx),
    /// Leftward crossing, distinct colors: `F_i E_j → E_j F_i` (`i ≠ j`).
    InvSide(Idx, Idx),
    /// Leftward crossing, equal colors: `F_i E_i → E_i F_i`.
    InvSideSame(Idx),
    /// Spade: `1 → E_i F_i`, guarded by `0 ≤ n < h`.
    SpadeCup(usize, Idx),
    /// Club: `F_i E_i → 1`, guarded by `0 ≤ n < -h`.
    ClubCap(usize, Idx),
    /// Macro: dot on a downward strand, `F_i → F_i`.
    DownDot(Idx),
    /// Macro: downward crossing, `F_i F_j → F_j F_i`.
    DownCross(Idx, Idx),
    /// Macro: rightward crossing, `E_i F_j → F_j E_i`.
    SideCross(Idx, Idx),
    /// Macro: leftward cup, `1 → E_i F_i`.
    LeftCup(Idx),
    /// Macro: leftward cap, `F_i E_i → 1`.
    LeftCap(Idx),
}

pub use GeneratorKind::*;

impl GeneratorKind {
    /// Whether diagrams may store this kind directly.
    pub fn is_primitive(self) -> bool {
        !matches!(
            self,
            DownDot(_) | DownCross(..) | SideCross(..) | LeftCup(_) | LeftCap(_)
        )
    }

    /// The letters consumed at the bottom of the generator, left to right.
    pub fn domain_letters(self) -> Vec<Letter> {
        match self {
            UpDot(i) => vec![Letter::up(i)],
            UpCross(i, j) => vec![Letter::up(i), Letter::up(j)],
            RightCup(_) => vec![],
            RightCap(i) => vec![Letter::up(i), Letter::down(i)],
            InvSide(i, j) => vec![Letter::down(i), Letter::up(j)],
            InvSideSame(i) => vec![Letter::down(i), Letter::up(i)],
            SpadeCup(_, _) => vec![],
            ClubCap(_, i) => vec![Letter::down(i), Letter::up(i)],
            DownDot(i) => vec![Letter::down(i)],
            DownCross(i, j) => vec![Letter::down(i), Letter::down(j)],
            SideCross(i, j) => vec![Letter::up(i), Letter::down(j)],
            LeftCup(_) => vec![],
            LeftCap(i) => vec![Letter::down(i), Letter::up(i)],
        }
    }

    /// The letters produced at the top of the generator, left to right.
    pub fn codomain_letters(self) -> Vec<Letter> {
        match self {
            UpDot(i) => vec![Letter::up(i)],
            UpCross(i, j) => vec![Letter::up(j), Letter::up(i)],
            RightCup(i) => vec![Letter::down(i), Letter::up(i)],
            RightCap(_) => vec![],
            InvSide(i, j) => vec![Letter::up(j), Letter::down(i)],
            InvSideSame(i) => vec![Letter::up(i), Letter::down(i)],
            SpadeCup(_, i) => vec![Letter::up(i), Letter::down(i)],
            ClubCap(_, _) => vec![],
            DownDot(i) => vec![Letter::down(i)],
            DownCross(i, j) => vec![Letter::down(j), Letter::down(i)],
            SideCross(i, j) => vec![Letter::down(j), Letter::up(i)],
            LeftCup(i) => vec![Letter::up(i), Letter::down(i)],
            LeftCap(_) => vec![],
        }
    }

    /// Number of strand positions consumed below.
    pub fn arity_in(self) -> usize {
        match self {
            UpDot(_) | DownDot(_) => 1,
            RightCup(_) | SpadeCup(..) | LeftCup(_) => 0,
            _ => 2,
        }
    }

    /// Number of strand positions produced above.
    pub fn arity_out(self) -> usize {
        match self {
            UpDot(_) | DownDot(_) => 1,
            RightCap(_) | ClubCap(..) | LeftCap(_) => 0,
            _ => 2,
        }
    }
}

impl std::fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            UpDot(i) => write!(f, "x({i})"),
            UpCross(i, j) => write!(f, "tau({i},{j})"),
            RightCup(i) => write!(f, "cup({i})"),
            RightCap(i) => write!(f, "cap({i})"),
            InvSide(i, j) => write!(f, "sigma'({i},{j})"),
            InvSideSame(i) => write!(f, "sigma'({i},{i})"),
            SpadeCup(n, i) => write!(f, "spade{n}({i})"),
            ClubCap(n, i) => write!(f, "club{n}({i})"),
            DownDot(i) => write!(f, "x'({i})"),
            DownCross(i, j) => write!(f, "tau'({i},{j})"),
            SideCross(i, j) => write!(f, "sigma({i},{j})"),
            LeftCup(i) => write!(f, "cup'({i})"),
            LeftCap(i) => write!(f, "cap'({i})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arities_match_letter_counts() {
        let gens = [
            UpDot(0),
            UpCross(0, 1),
            RightCup(0),
            RightCap(0),
            InvSide(0, 1),
            InvSideSame(0),
            SpadeCup(2, 0),
            ClubCap(0, 1),
            DownDot(0),
            DownCross(1, 0),
            SideCross(0, 0),
            LeftCup(1),
            LeftCap(0),
        ];
        for g in gens {
            assert_eq!(g.domain_letters().len(), g.arity_in(), "{g}");
            assert_eq!(g.codomain_letters().len(), g.arity_out(), "{g}");
        }
    }

    #[test]
    fn primitive_split() {
        assert!(UpCross(0, 1).is_primitive());
        assert!(SpadeCup(0, 0).is_primitive());
        assert!(!SideCross(0, 0).is_primitive());
        assert!(!LeftCup(0).is_primitive());
    }
}
