//! Weights as pairing vectors.

use serde::{Deserialize, Serialize};

use crate::{CartanDatum, Idx};

/// A weight, represented by its pairing vector `i ↦ ⟨h_i, λ⟩`.
///
/// Every relation in the calculus depends on `λ` only through these integers.
/// The optional tag is an opaque client label that distinguishes weights with
/// equal pairings; it does not participate in any arithmetic and is carried
/// through shifts unchanged.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight {
    pairings: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    tag: Option<String>,
}

impl Weight {
    /// A weight from its pairing vector.
    pub fn new(pairings: Vec<i64>) -> Self {
        Weight { pairings, tag: None }
    }

    /// A weight with a distinguishing tag.
    pub fn with_tag(pairings: Vec<i64>, tag: impl Into<String>) -> Self {
        Weight { pairings, tag: Some(tag.into()) }
    }

    /// The zero pairing vector of the given rank.
    pub fn zero(rank: usize) -> Self {
        Weight::new(vec![0; rank])
    }

    /// The pairing `⟨h_i, λ⟩`.
    pub fn pairing(&self, i: Idx) -> i64 {
        self.pairings[i]
    }

    /// The full pairing vector.
    pub fn pairings(&self) -> &[i64] {
        &self.pairings
    }

    /// The tag, if any.
    pub fn tag(&self) -> Option<&str> {
        self.tag.as_deref()
    }

    /// Number of indices this weight is defined over.
    pub fn rank(&self) -> usize {
        self.pairings.len()
    }

    /// The weight `λ ± α_j`: pairing at `i` changes by `±a_ij`.
    pub fn shift(&self, datum: &CartanDatum, j: Idx, sign: i64) -> Weight {
        debug_assert!(sign == 1 || sign == -1);
        debug_assert!(j < datum.rank(), "unknown index {j}");
        debug_assert_eq!(self.pairings.len(), datum.rank());
        let pairings = self
            .pairings
            .iter()
            .enumerate()
            .map(|(i, &p)| p + sign * datum.a(i, j))
            .collect();
        Weight { pairings, tag: self.tag.clone() }
    }

    /// The negated weight `-λ` (the image of `λ` under the involution `T`).
    pub fn negated(&self) -> Weight {
        Weight {
            pairings: self.pairings.iter().map(|p| -p).collect(),
            tag: self.tag.clone(),
        }
    }
}

/// Free-function form of [`Weight::shift`].
pub fn shift(datum: &CartanDatum, w: &Weight, j: Idx, sign: i64) -> Weight {
    w.shift(datum, j, sign)
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.pairings.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")?;
        if let Some(tag) = &self.tag {
            write!(f, "#{tag}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{a1, a2};

    #[test]
    fn a1_down_shift() {
        let datum = a1();
        let w = Weight::new(vec![3]);
        assert_eq!(w.shift(&datum, 0, -1), Weight::new(vec![1]));
    }

    #[test]
    fn a2_up_shift_adds_column() {
        let datum = a2();
        let w = Weight::zero(2);
        assert_eq!(w.shift(&datum, 0, 1), Weight::new(vec![2, -1]));
    }

    #[test]
    fn shifts_invert_and_commute() {
        let datum = a2();
        let w = Weight::with_tag(vec![1, -2], "base");
        assert_eq!(w.shift(&datum, 0, 1).shift(&datum, 0, -1), w);
        assert_eq!(
            w.shift(&datum, 0, 1).shift(&datum, 1, -1),
            w.shift(&datum, 1, -1).shift(&datum, 0, 1)
        );
    }
}
