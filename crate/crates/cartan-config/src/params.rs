//! The scalar parameters `t_ij` and `s_ij^{pq}`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::{config::ConfigError, CartanDatum, Idx, Rat};

/// The unit and correction scalars parameterizing the calculus.
///
/// - `t_ij` for `i ≠ j` is a nonzero rational, with `t_ij = t_ji` required
///   whenever `d_ij = 0`. The diagonal is served as `t_ii = 1`.
/// - `s_ij^{pq}` for `0 ≤ p < d_ij`, `0 ≤ q < d_ji` is an arbitrary rational,
///   subject to the symmetry `s_ij^{pq} = s_ji^{qp}` (stored once, served
///   symmetrically).
/// - If the homogeneous flag is set, `s_ij^{pq} = 0` unless
///   `p·d_i + q·d_j = d_i·d_ij`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamSet {
    /// `t` for ordered pairs `(i, j)`, `i != j`.
    t: BTreeMap<(Idx, Idx), Rat>,
    /// `s` stored for keys with `i < j` only (plus `(p, q)` position).
    s: BTreeMap<(Idx, Idx, usize, usize), Rat>,
    homogeneous: bool,
}

impl ParamSet {
    /// Validate and construct a parameter set for the given datum.
    ///
    /// `t` must contain every ordered pair of distinct indices; `s` may
    /// mention each unordered pair in either orientation (consistently).
    pub fn new(
        datum: &CartanDatum,
        t: BTreeMap<(Idx, Idx), Rat>,
        s: BTreeMap<(Idx, Idx, usize, usize), Rat>,
        homogeneous: bool,
    ) -> Result<Self, ConfigError> {
        let n = datum.rank();
        let mut t_full = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let tij = t.get(&(i, j)).cloned().ok_or_else(|| {
                    ConfigError::invariant(
                        "t_ij present for all i != j",
                        format!("missing t_{},{}", datum.symbol(i), datum.symbol(j)),
                    )
                })?;
                if tij.is_zero() {
                    return Err(ConfigError::invariant(
                        "t must be a unit",
                        format!("t_{},{} = 0", datum.symbol(i), datum.symbol(j)),
                    ));
                }
                t_full.insert((i, j), tij);
            }
        }
        for &(i, j) in t.keys() {
            if i == j || i >= n || j >= n {
                return Err(ConfigError::invariant(
                    "t keyed by distinct valid indices",
                    format!("bad t key ({i}, {j})"),
                ));
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if datum.d_off(i, j) == 0 && t_full[&(i, j)] != t_full[&(j, i)] {
                    return Err(ConfigError::invariant(
                        "t_ij = t_ji when d_ij = 0",
                        format!("indices {}, {}", datum.symbol(i), datum.symbol(j)),
                    ));
                }
            }
        }

        let mut s_canon: BTreeMap<(Idx, Idx, usize, usize), Rat> = BTreeMap::new();
        for (&(i, j, p, q), v) in &s {
            if i == j || i >= n || j >= n {
                return Err(ConfigError::invariant(
                    "s keyed by distinct valid indices",
                    format!("bad s key ({i}, {j}, {p}, {q})"),
                ));
            }
            if (p as i64) >= datum.d_off(i, j) || (q as i64) >= datum.d_off(j, i) {
                return Err(ConfigError::invariant(
                    "s exponents in range 0 <= p < d_ij, 0 <= q < d_ji",
                    format!(
                        "s_{},{}^({p},{q}) out of range (d_ij={}, d_ji={})",
                        datum.symbol(i),
                        datum.symbol(j),
                        datum.d_off(i, j),
                        datum.d_off(j, i)
                    ),
                ));
            }
            let key = if i < j { (i, j, p, q) } else { (j, i, q, p) };
            if let Some(prev) = s_canon.get(&key) {
                if prev != v {
                    return Err(ConfigError::invariant(
                        "s_ij^pq = s_ji^qp",
                        format!("conflicting values for s at indices {}, {}", datum.symbol(i), datum.symbol(j)),
                    ));
                }
            } else if !v.is_zero() {
                s_canon.insert(key, v.clone());
            }
        }

        let params = ParamSet { t: t_full, s: s_canon, homogeneous };
        if homogeneous {
            for (&(i, j, p, q), v) in &params.s {
                if !v.is_zero()
                    && (p as i64) * datum.d(i) + (q as i64) * datum.d(j) != datum.d(i) * datum.d_off(i, j)
                {
                    return Err(ConfigError::invariant(
                        "homogeneous: s_ij^pq = 0 off the line p*d_i + q*d_j = d_i*d_ij",
                        format!("s_{},{}^({p},{q}) != 0", datum.symbol(i), datum.symbol(j)),
                    ));
                }
            }
        }
        Ok(params)
    }

    /// The unit `t_ij` (with the convention `t_ii = 1`).
    pub fn t(&self, i: Idx, j: Idx) -> Rat {
        if i == j {
            Rat::one()
        } else {
            self.t[&(i, j)].clone()
        }
    }

    /// The scalar `s_ij^{pq}`, served symmetrically; zero when absent.
    pub fn s(&self, i: Idx, j: Idx, p: usize, q: usize) -> Rat {
        let key = if i < j { (i, j, p, q) } else { (j, i, q, p) };
        self.s.get(&key).cloned().unwrap_or_else(Rat::zero)
    }

    /// Whether the parameters are flagged homogeneous.
    pub fn homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// Iterate the stored (canonical-orientation) `s` entries.
    pub fn s_entries(&self) -> impl Iterator<Item = (Idx, Idx, usize, usize, &Rat)> {
        self.s.iter().map(|(&(i, j, p, q), v)| (i, j, p, q, v))
    }

    /// Iterate the stored `t` entries over ordered pairs.
    pub fn t_entries(&self) -> impl Iterator<Item = (Idx, Idx, &Rat)> {
        self.t.iter().map(|(&(i, j), v)| (i, j, v))
    }

    /// The primed parameter set: `'t_ij = t_ji^{-1}` and
    /// `'s_ij^{pq} = t_ij^{-1} · t_ji^{-1} · s_ji^{qp}`.
    ///
    /// This map is an involution.
    pub fn primed(&self, datum: &CartanDatum) -> ParamSet {
        let t = self
            .t
            .iter()
            .map(|(&(i, j), _)| ((i, j), Rat::one() / self.t(j, i)))
            .collect();
        let s = self
            .s
            .iter()
            .map(|(&(i, j, p, q), _)| {
                let v = self.s(j, i, q, p) / (self.t(i, j) * self.t(j, i));
                ((i, j, p, q), v)
            })
            .collect();
        ParamSet::new(datum, t, s, self.homogeneous)
            .expect("priming preserves the parameter invariants")
    }
}

/// Free-function form of [`ParamSet::primed`].
pub fn primed_params(datum: &CartanDatum, params: &ParamSet) -> ParamSet {
    params.primed(datum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{a2, rat, standard_params};

    fn t_map(entries: &[((Idx, Idx), Rat)]) -> BTreeMap<(Idx, Idx), Rat> {
        entries.iter().cloned().collect()
    }

    #[test]
    fn rejects_zero_unit() {
        let datum = a2();
        let err = ParamSet::new(
            &datum,
            t_map(&[((0, 1), rat(0, 1)), ((1, 0), rat(1, 1))]),
            BTreeMap::new(),
            false,
        )
        .unwrap_err();
        assert!(err.to_string().contains("t must be a unit"));
    }

    #[test]
    fn primed_example_values() {
        // t_12 = 2, t_21 = 3 gives 't_12 = 1/3, 't_21 = 1/2; an s entry picks
        // up the factor 1/(t_12 t_21) = 1/6.
        let datum = a2();
        let mut s = BTreeMap::new();
        s.insert((0, 1, 0, 0), rat(5, 1));
        let p = ParamSet::new(
            &datum,
            t_map(&[((0, 1), rat(2, 1)), ((1, 0), rat(3, 1))]),
            s,
            false,
        )
        .unwrap();
        assert_eq!(p.s(1, 0, 0, 0), rat(5, 1));
        let pp = p.primed(&datum);
        assert_eq!(pp.t(0, 1), rat(1, 3));
        assert_eq!(pp.t(1, 0), rat(1, 2));
        assert_eq!(pp.s(0, 1, 0, 0), rat(5, 6));
    }

    #[test]
    fn primed_is_involution() {
        let datum = a2();
        let mut s = BTreeMap::new();
        s.insert((0, 1, 0, 0), rat(-7, 3));
        let p = ParamSet::new(
            &datum,
            t_map(&[((0, 1), rat(2, 5)), ((1, 0), rat(-3, 1))]),
            s,
            false,
        )
        .unwrap();
        assert_eq!(p.primed(&datum).primed(&datum), p);
    }

    #[test]
    fn diagonal_t_is_one() {
        let datum = a2();
        let p = standard_params(&datum);
        assert_eq!(p.t(0, 0), rat(1, 1));
    }
}
