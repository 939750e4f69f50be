//! The coverage manifest and its audit.
//!
//! The manifest assigns every source anchor of the development exactly one
//! classification: a defining rule, a macro definition, a proof obligation,
//! a prose statement, a generator table, a notation, or a display subsumed
//! by another obligation's proof. The audit checks the manifest is total
//! and internally consistent: anchors are unique, every target it names
//! exists, and conversely every defining rule, macro definition, and
//! obligation is pointed at by at least one anchor — so nothing in the
//! development escapes the checker.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::defining::DEFINING_NAMES;
use crate::error::RegistryError;
use crate::macros::MACRO_IDS;
use crate::obligations::{obligation, obligations};

/// Raw manifest text, embedded so the audit needs no file system.
pub const MANIFEST_JSON: &str = include_str!("manifest.json");

/// Expected number of anchors.
pub const ANCHOR_COUNT: usize = 74;

/// Classification of one anchor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverageClass {
    /// Names a defining rule (targets are defining-rule names).
    DefiningRule,
    /// Names a macro definition (targets are macro ids).
    MacroDef,
    /// Names a fact the checker replays (targets are obligation names).
    Obligation,
    /// Prose statement with no machine artifact.
    Statement,
    /// A table of generating morphisms.
    Generator,
    /// A notational convention.
    Notation,
    /// A display checked inside another obligation's proof.
    CoveredBy,
}

/// One manifest row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageEntry {
    /// Stable anchor name.
    pub anchor: String,
    /// How the anchor is covered.
    pub class: CoverageClass,
    /// The artifacts covering it; meaning depends on `class`.
    pub targets: Vec<String>,
}

/// Tallies from a passing audit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverageReport {
    /// Total anchors in the manifest.
    pub anchors: usize,
    /// Distinct obligations referenced by some anchor.
    pub obligations_covered: usize,
    /// Distinct defining rules referenced by some anchor.
    pub defining_covered: usize,
    /// Distinct macro definitions referenced by some anchor.
    pub macros_covered: usize,
}

/// Parses the embedded manifest.
pub fn manifest() -> Result<Vec<CoverageEntry>, RegistryError> {
    serde_json::from_str(MANIFEST_JSON)
        .map_err(|e| RegistryError::Coverage(format!("manifest parse error: {e}")))
}

fn fail(msg: String) -> RegistryError {
    RegistryError::Coverage(msg)
}

/// Audits the manifest; `Ok` means total, consistent coverage.
pub fn audit_coverage() -> Result<CoverageReport, RegistryError> {
    let entries = manifest()?;
    if entries.len() != ANCHOR_COUNT {
        return Err(fail(format!(
            "expected {ANCHOR_COUNT} anchors, manifest has {}",
            entries.len()
        )));
    }

    let mut seen: BTreeSet<&str> = BTreeSet::new();
    let mut obligations_hit: BTreeSet<&str> = BTreeSet::new();
    let mut defining_hit: BTreeSet<&str> = BTreeSet::new();
    let mut macros_hit: BTreeSet<&str> = BTreeSet::new();

    for e in &entries {
        if !seen.insert(e.anchor.as_str()) {
            return Err(fail(format!("duplicate anchor {:?}", e.anchor)));
        }
        match e.class {
            CoverageClass::DefiningRule => {
                if e.targets.is_empty() {
                    return Err(fail(format!("anchor {:?} names no rule", e.anchor)));
                }
                for t in &e.targets {
                    let t = DEFINING_NAMES
                        .iter()
                        .find(|n| *n == t)
                        .ok_or_else(|| {
                            fail(format!("anchor {:?}: unknown defining rule {t:?}", e.anchor))
                        })?;
                    defining_hit.insert(t);
                }
            }
            CoverageClass::MacroDef => {
                if e.targets.is_empty() {
                    return Err(fail(format!("anchor {:?} names no macro", e.anchor)));
                }
                for t in &e.targets {
                    let t = MACRO_IDS.iter().find(|m| *m == t).ok_or_else(|| {
                        fail(format!("anchor {:?}: unknown macro {t:?}", e.anchor))
                    })?;
                    macros_hit.insert(t);
                }
            }
            CoverageClass::Obligation | CoverageClass::CoveredBy => {
                if e.targets.is_empty() {
                    return Err(fail(format!(
                        "anchor {:?} names no obligation",
                        e.anchor
                    )));
                }
                for t in &e.targets {
                    let ob = obligation(t).ok_or_else(|| {
                        fail(format!("anchor {:?}: unknown obligation {t:?}", e.anchor))
                    })?;
                    obligations_hit.insert(ob.name);
                }
            }
            CoverageClass::Statement | CoverageClass::Generator | CoverageClass::Notation => {
                if !e.targets.is_empty() {
                    return Err(fail(format!(
                        "anchor {:?} carries targets but its class has none",
                        e.anchor
                    )));
                }
            }
        }
    }

    for rule in DEFINING_NAMES {
        if !defining_hit.contains(rule) {
            return Err(fail(format!("defining rule {rule:?} covered by no anchor")));
        }
    }
    for id in MACRO_IDS {
        if !macros_hit.contains(id) {
            return Err(fail(format!("macro {id:?} covered by no anchor")));
        }
    }
    for ob in obligations() {
        if !obligations_hit.contains(ob.name) {
            return Err(fail(format!(
                "obligation {:?} covered by no anchor",
                ob.name
            )));
        }
    }

    Ok(CoverageReport {
        anchors: entries.len(),
        obligations_covered: obligations_hit.len(),
        defining_covered: defining_hit.len(),
        macros_covered: macros_hit.len(),
    })
}

/// The anchors grouped by class, for reporting.
pub fn anchors_by_class() -> Result<BTreeMap<&'static str, Vec<String>>, RegistryError> {
    let mut out: BTreeMap<&'static str, Vec<String>> = BTreeMap::new();
    for e in manifest()? {
        let key = match e.class {
            CoverageClass::DefiningRule => "defining-rule",
            CoverageClass::MacroDef => "macro-def",
            CoverageClass::Obligation => "obligation",
            CoverageClass::Statement => "statement",
            CoverageClass::Generator => "generator",
            CoverageClass::Notation => "notation",
            CoverageClass::CoveredBy => "covered-by",
        };
        out.entry(key).or_default().push(e.anchor);
    }
    Ok(out)
}
