//! Oriented letters and signed words.
//!
//! The horizontal boundary of a diagram is a word in the letters `E_i` and
//! `F_i`: reading a horizontal line left to right, each strand crossing it
//! contributes `E_i` if it is oriented upward at the crossing point and `F_i`
//! if downward. Words compose left to right, and the region to the *right*
//! of all strands carries the base weight, so the letter order here matches
//! the left-to-right order of tensor factors.

use cartan_config::{CartanDatum, Idx, Weight};

/// Orientation of a strand where it meets a horizontal boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dir {
    /// Upward; the letter `E_i`.
    Up,
    /// Downward; the letter `F_i`.
    Down,
}

impl Dir {
    /// The opposite orientation.
    pub fn flipped(self) -> Dir {
        match self {
            Dir::Up => Dir::Down,
            Dir::Down => Dir::Up,
        }
    }
}

/// One oriented, colored boundary point: `E_i` (up) or `F_i` (down).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    /// Orientation at the boundary.
    pub dir: Dir,
    /// Color: an index into the Cartan datum.
    pub idx: Idx,
}

impl Letter {
    /// The letter `E_i`.
    pub fn up(idx: Idx) -> Letter {
        Letter { dir: Dir::Up, idx }
    }

    /// The letter `F_i`.
    pub fn down(idx: Idx) -> Letter {
        Letter { dir: Dir::Down, idx }
    }

    /// Same color, opposite orientation (`E_i ↔ F_i`).
    pub fn flipped(self) -> Letter {
        Letter { dir: self.dir.flipped(), idx: self.idx }
    }

    /// `+1` for `E_i`, `-1` for `F_i`: the sign with which crossing this
    /// strand from right to left changes the region weight by `α_i`.
    pub fn weight_sign(self) -> i64 {
        match self.dir {
            Dir::Up => 1,
            Dir::Down => -1,
        }
    }
}

impl std::fmt::Display for Letter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let c = match self.dir {
            Dir::Up => 'E',
            Dir::Down => 'F',
        };
        write!(f, "{c}{}", self.idx)
    }
}

/// A (possibly empty) word in the letters `E_i`, `F_i`, left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedWord(pub Vec<Letter>);

impl SignedWord {
    /// The empty word.
    pub fn empty() -> SignedWord {
        SignedWord(Vec::new())
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Whether the word is empty.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The letters as a slice.
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Concatenation `self ++ other` (self on the left).
    pub fn concat(&self, other: &SignedWord) -> SignedWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SignedWord(v)
    }

    /// Each letter flipped `E_i ↔ F_i`, order unchanged.
    pub fn flipped(&self) -> SignedWord {
        SignedWord(self.0.iter().map(|l| l.flipped()).collect())
    }

    /// The weight of the region immediately left of position `pos` when the
    /// region right of all letters carries `base`: `base` shifted by `±α_i`
    /// for every letter at positions `≥ pos`.
    pub fn weight_left_of(&self, base: &Weight, pos: usize, datum: &CartanDatum) -> Weight {
        let mut w = base.clone();
        for letter in self.0[pos..].iter().rev() {
            w = w.shift(datum, letter.idx, letter.weight_sign());
        }
        w
    }

    /// The weight of the leftmost region, i.e. left of every letter.
    pub fn weight_left(&self, base: &Weight, datum: &CartanDatum) -> Weight {
        self.weight_left_of(base, 0, datum)
    }
}

impl From<Vec<Letter>> for SignedWord {
    fn from(v: Vec<Letter>) -> SignedWord {
        SignedWord(v)
    }
}

impl std::fmt::Display for SignedWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cartan_config::a2;

    #[test]
    fn weight_left_accumulates_letter_shifts() {
        let datum = a2();
        let base = Weight::zero(2);
        let w = SignedWord(vec![Letter::up(0), Letter::down(1)]);
        // Crossing F_1 right to left subtracts α_1, then E_0 adds α_0.
        let left = w.weight_left(&base, &datum);
        assert_eq!(left.pairings(), &[2 - (-1), -1 - 2]);
        // Left of position 1 only the F_1 letter has been crossed.
        let mid = w.weight_left_of(&base, 1, &datum);
        assert_eq!(mid.pairings(), &[1, -2]);
    }

    #[test]
    fn display_words() {
        let w = SignedWord(vec![Letter::up(0), Letter::down(1)]);
        assert_eq!(w.to_string(), "E0 F1");
        assert_eq!(SignedWord::empty().to_string(), "1");
    }
}
