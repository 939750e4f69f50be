//! The symmetrizable generalized Cartan matrix.

use crate::{config::ConfigError, Idx};

/// A symmetrizable generalized Cartan matrix over a finite ordered index set.
///
/// Houses the entries `a_ij`, the symmetrizers `d_i > 0`, and the derived
/// off-diagonal bounds `d_ij = -a_ij` (for `i ≠ j`) that control how many
/// `s_ij^{pq}` scalars a parameter set may carry.
///
/// Invariants (checked on construction):
/// - `a_ii = 2`; `a_ij ≤ 0` for `i ≠ j`;
/// - `a_ij = 0` if and only if `a_ji = 0`;
/// - `d_i · a_ij = d_j · a_ji` (symmetrizability).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    index_set: Vec<String>,
    a: Vec<Vec<i64>>,
    d: Vec<i64>,
}

impl CartanDatum {
    /// Validate and construct a datum from raw parts.
    pub fn new(index_set: Vec<String>, a: Vec<Vec<i64>>, d: Vec<i64>) -> Result<Self, ConfigError> {
        let n = index_set.len();
        if n == 0 {
            return Err(ConfigError::invariant("index set nonempty", "no indices given"));
        }
        {
            let mut sorted = index_set.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != n {
                return Err(ConfigError::invariant("index symbols distinct", "duplicate index symbol"));
            }
        }
        if a.len() != n || a.iter().any(|row| row.len() != n) {
            return Err(ConfigError::invariant(
                "a is a square matrix over the index set",
                format!("expected {n}x{n} matrix"),
            ));
        }
        if d.len() != n {
            return Err(ConfigError::invariant(
                "one symmetrizer per index",
                format!("expected {n} entries in d"),
            ));
        }
        let datum = CartanDatum { index_set, a, d };
        for i in 0..n {
            if datum.a[i][i] != 2 {
                return Err(ConfigError::invariant(
                    "a_ii = 2",
                    format!("a_{s}{s} = {v}", s = datum.symbol(i), v = datum.a[i][i]),
                ));
            }
            if datum.d[i] <= 0 {
                return Err(ConfigError::invariant(
                    "d_i > 0",
                    format!("d_{} = {}", datum.symbol(i), datum.d[i]),
                ));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if datum.a[i][j] > 0 {
                    return Err(ConfigError::invariant(
                        "a_ij <= 0 for i != j",
                        format!("a_{}{} = {}", datum.symbol(i), datum.symbol(j), datum.a[i][j]),
                    ));
                }
                if (datum.a[i][j] == 0) != (datum.a[j][i] == 0) {
                    return Err(ConfigError::invariant(
                        "a_ij=0 iff a_ji=0",
                        format!("a_{i0}{j0} = {v1} but a_{j0}{i0} = {v2}",
                            i0 = datum.symbol(i), j0 = datum.symbol(j),
                            v1 = datum.a[i][j], v2 = datum.a[j][i]),
                    ));
                }
                if datum.d[i] * datum.a[i][j] != datum.d[j] * datum.a[j][i] {
                    return Err(ConfigError::invariant(
                        "d_i*a_ij = d_j*a_ji",
                        format!("indices {}, {}", datum.symbol(i), datum.symbol(j)),
                    ));
                }
            }
        }
        Ok(datum)
    }

    /// Number of indices.
    pub fn rank(&self) -> usize {
        self.index_set.len()
    }

    /// All indices, `0..rank()`.
    pub fn indices(&self) -> impl Iterator<Item = Idx> + Clone {
        0..self.rank()
    }

    /// The display symbol of index `i`.
    pub fn symbol(&self, i: Idx) -> &str {
        &self.index_set[i]
    }

    /// Look up an index by its display symbol.
    pub fn index_of(&self, symbol: &str) -> Option<Idx> {
        self.index_set.iter().position(|s| s == symbol)
    }

    /// The ordered index symbols.
    pub fn symbols(&self) -> &[String] {
        &self.index_set
    }

    /// Cartan matrix entry `a_ij = ⟨h_i, α_j⟩`.
    pub fn a(&self, i: Idx, j: Idx) -> i64 {
        self.a[i][j]
    }

    /// Symmetrizer `d_i > 0`.
    pub fn d(&self, i: Idx) -> i64 {
        self.d[i]
    }

    /// Off-diagonal bound `d_ij = -a_ij ≥ 0`, defined for `i ≠ j`.
    pub fn d_off(&self, i: Idx, j: Idx) -> i64 {
        debug_assert_ne!(i, j, "d_off is defined for distinct indices only");
        -self.a[i][j]
    }

    /// Raw matrix rows (used by serialization).
    pub(crate) fn a_rows(&self) -> &[Vec<i64>] {
        &self.a
    }

    /// Raw symmetrizer vector (used by serialization).
    pub(crate) fn d_vec(&self) -> &[i64] {
        &self.d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn a2_is_valid() {
        let datum = CartanDatum::new(sym(&["1", "2"]), vec![vec![2, -1], vec![-1, 2]], vec![1, 1]).unwrap();
        assert_eq!(datum.d_off(0, 1), 1);
        assert_eq!(datum.d_off(1, 0), 1);
    }

    #[test]
    fn rejects_asymmetric_zero() {
        let err = CartanDatum::new(sym(&["1", "2"]), vec![vec![2, -1], vec![0, 2]], vec![1, 1]).unwrap_err();
        assert!(err.to_string().contains("a_ij=0 iff a_ji=0"));
    }

    #[test]
    fn rejects_unsymmetrizable() {
        // a_12 = -1, a_21 = -2 needs d = (2, 1); d = (1, 1) must fail.
        let err = CartanDatum::new(sym(&["1", "2"]), vec![vec![2, -1], vec![-2, 2]], vec![1, 1]).unwrap_err();
        assert!(err.to_string().contains("d_i*a_ij = d_j*a_ji"));
    }

    #[test]
    fn rejects_positive_offdiagonal_and_bad_diagonal() {
        assert!(CartanDatum::new(sym(&["1", "2"]), vec![vec![2, 1], vec![1, 2]], vec![1, 1]).is_err());
        assert!(CartanDatum::new(sym(&["1"]), vec![vec![1]], vec![1]).is_err());
    }
}
