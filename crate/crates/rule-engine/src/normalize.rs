//! Bounded normalization and equality modulo a rule set.
//!
//! No termination or confluence is claimed for any rule set: [`normalize`]
//! stops when no rule applies or when its fuel runs out, and reports which,
//! while [`equal_modulo`] turns the two reports into a tri-state verdict.

use crate::apply::apply_at;
use crate::error::EngineError;
use crate::matching::{find_occurrences, Occurrence};
use crate::rule::{RuleContext, RuleSet};
use diagram_core::LinComb;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// How [`normalize`] picks the next step when several rules apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// The first occurrence of the earliest applicable rule in the set.
    LeftmostFirst,
    /// A uniformly random choice among all occurrences of all rules, drawn
    /// from a deterministic stream with this seed.
    Seeded(u64),
}

/// Default step budget; the `KM2CAT_FUEL` environment variable overrides it.
pub fn default_fuel() -> usize {
    std::env::var("KM2CAT_FUEL")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(10_000)
}

fn pick_step(
    x: &LinComb,
    rules: &RuleSet,
    rng: Option<&mut ChaCha8Rng>,
    ctx: &RuleContext<'_>,
) -> Option<(usize, Occurrence)> {
    match rng {
        None => {
            for (k, (rule, dir)) in rules.entries.iter().enumerate() {
                if let Some(occ) = find_occurrences(x, rule, *dir, ctx).into_iter().next() {
                    return Some((k, occ));
                }
            }
            None
        }
        Some(rng) => {
            let mut all = Vec::new();
            for (k, (rule, dir)) in rules.entries.iter().enumerate() {
                for occ in find_occurrences(x, rule, *dir, ctx) {
                    all.push((k, occ));
                }
            }
            if all.is_empty() {
                None
            } else {
                let i = rng.gen_range(0..all.len());
                Some(all.swap_remove(i))
            }
        }
    }
}

/// Rewrites `x` with the oriented rules until none applies or the fuel runs
/// out. Returns the final combination and an `exhausted` flag: `true` means
/// the fuel ran out while some rule still applied, so the result need not be
/// normal; `false` means the result is normal for this rule set.
pub fn normalize(
    x: &LinComb,
    rules: &RuleSet,
    strategy: Strategy,
    fuel: usize,
    ctx: &RuleContext<'_>,
) -> (LinComb, bool) {
    let mut cur = x.clone();
    let mut rng = match strategy {
        Strategy::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        Strategy::LeftmostFirst => None,
    };
    for _ in 0..fuel {
        match pick_step(&cur, rules, rng.as_mut(), ctx) {
            None => return (cur, false),
            Some((k, occ)) => {
                let (rule, dir) = &rules.entries[k];
                cur = apply_at(&cur, rule, &occ, *dir, ctx)
                    .expect("an occurrence just found cannot be stale");
            }
        }
    }
    let normal = pick_step(&cur, rules, rng.as_mut(), ctx).is_none();
    (cur, !normal)
}

/// Tri-state outcome of comparing two combinations modulo a rule set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equivalence {
    /// The normalized forms coincide; the inputs are provably equal.
    Equal,
    /// Both sides reached normal form and the forms differ. For a rule set
    /// that is not known to be confluent this refutes equality only relative
    /// to that rule set.
    UnequalInNormalForm,
    /// Fuel ran out before both sides were normal; no verdict.
    Unknown,
}

/// Normalizes both sides deterministically and compares the results.
///
/// Errors when the two sides do not even share an interface.
pub fn equal_modulo(
    x: &LinComb,
    y: &LinComb,
    rules: &RuleSet,
    fuel: usize,
    ctx: &RuleContext<'_>,
) -> Result<Equivalence, EngineError> {
    if x.interface() != y.interface() {
        return Err(EngineError::InterfaceMismatch {
            left: x.interface().to_string(),
            right: y.interface().to_string(),
        });
    }
    let (nx, ex) = normalize(x, rules, Strategy::LeftmostFirst, fuel, ctx);
    let (ny, ey) = normalize(y, rules, Strategy::LeftmostFirst, fuel, ctx);
    if nx == ny {
        Ok(Equivalence::Equal)
    } else if !ex && !ey {
        Ok(Equivalence::UnequalInNormalForm)
    } else {
        Ok(Equivalence::Unknown)
    }
}
