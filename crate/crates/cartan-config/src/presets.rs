//! Standard test data and parameter samplers.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{rat, CartanDatum, ParamSet, Rat};

fn datum(names: &[&str], a: &[&[i64]], d: &[i64]) -> CartanDatum {
    CartanDatum::new(
        names.iter().map(|s| s.to_string()).collect(),
        a.iter().map(|row| row.to_vec()).collect(),
        d.to_vec(),
    )
    .expect("preset datum is valid")
}

/// The rank-1 datum.
pub fn a1() -> CartanDatum {
    datum(&["1"], &[&[2]], &[1])
}

/// Two disconnected rank-1 components (`a_12 = a_21 = 0`).
pub fn a1xa1() -> CartanDatum {
    datum(&["1", "2"], &[&[2, 0], &[0, 2]], &[1, 1])
}

/// The rank-2 simply-laced datum.
pub fn a2() -> CartanDatum {
    datum(&["1", "2"], &[&[2, -1], &[-1, 2]], &[1, 1])
}

/// The rank-2 datum with a double bond (`a_12 = -1`, `a_21 = -2`).
pub fn b2() -> CartanDatum {
    datum(&["1", "2"], &[&[2, -1], &[-2, 2]], &[2, 1])
}

/// The four standard test data, with display names.
pub fn test_data() -> Vec<(&'static str, CartanDatum)> {
    vec![("A1", a1()), ("A1xA1", a1xa1()), ("A2", a2()), ("B2", b2())]
}

/// All `t_ij = 1`, all `s_ij^{pq} = 0`: the simplest homogeneous parameters.
pub fn standard_params(datum: &CartanDatum) -> ParamSet {
    let mut t = BTreeMap::new();
    for i in datum.indices() {
        for j in datum.indices() {
            if i != j {
                t.insert((i, j), rat(1, 1));
            }
        }
    }
    ParamSet::new(datum, t, BTreeMap::new(), true).expect("standard parameters are valid")
}

fn random_nonzero(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let num = rng.gen_range(-5i64..=5);
        let den = rng.gen_range(1i64..=3);
        let q = rat(num, den);
        if !q.is_zero() {
            return q;
        }
    }
}

/// A seeded random homogeneous parameter set for the datum.
///
/// Units are small nonzero rationals (mirrored across an unordered pair when
/// `d_ij = 0`); `s` scalars are sampled only on the homogeneity line
/// `p·d_i + q·d_j = d_i·d_ij` and mirrored so that `s_ij^{pq} = s_ji^{qp}`.
pub fn random_homogeneous_params(datum: &CartanDatum, seed: u64) -> ParamSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = BTreeMap::new();
    for i in datum.indices() {
        for j in datum.indices() {
            if i >= j {
                continue;
            }
            let tij = random_nonzero(&mut rng);
            let tji = if datum.d_off(i, j) == 0 { tij.clone() } else { random_nonzero(&mut rng) };
            t.insert((i, j), tij);
            t.insert((j, i), tji);
        }
    }
    let mut s = BTreeMap::new();
    for i in datum.indices() {
        for j in datum.indices() {
            if i >= j {
                continue;
            }
            for p in 0..datum.d_off(i, j) as usize {
                for q in 0..datum.d_off(j, i) as usize {
                    let on_line = (p as i64) * datum.d(i) + (q as i64) * datum.d(j)
                        == datum.d(i) * datum.d_off(i, j);
                    if on_line {
                        let num = rng.gen_range(-4i64..=4);
                        if num != 0 {
                            s.insert((i, j, p, q), rat(num, 1));
                        }
                    }
                }
            }
        }
    }
    ParamSet::new(datum, t, s, true).expect("sampled parameters are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_validate() {
        for (_, d) in test_data() {
            let p = standard_params(&d);
            assert!(p.homogeneous());
        }
    }

    #[test]
    fn b2_bounds() {
        let d = b2();
        assert_eq!(d.d_off(0, 1), 1);
        assert_eq!(d.d_off(1, 0), 2);
        assert_eq!(d.d(0), 2);
    }

    #[test]
    fn random_params_deterministic_and_valid() {
        for (_, d) in test_data() {
            for seed in 0..20 {
                let p1 = random_homogeneous_params(&d, seed);
                let p2 = random_homogeneous_params(&d, seed);
                assert_eq!(p1, p2);
                // Round-trip through the involution as a smoke test.
                assert_eq!(p1.primed(&d).primed(&d), p1);
            }
        }
    }
}
