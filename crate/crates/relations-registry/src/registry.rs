//! The gated rule catalog.
//!
//! Every named relation lives here under one of three classes. *Defining*
//! rules are always available for rewriting. *Derived* rules state equations
//! that may be cited only after being admitted, which the proof checker does
//! once it has replayed the corresponding obligation — so a derivation can
//! never silently assume what it is trying to prove. *Macro anchors* are
//! names for definitions rather than equations and never yield a rule.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use rule_engine::{RewriteRule, RuleSet};

use crate::defining::{all_defining, DEFINING_NAMES};
use crate::derived::{all_derived, DERIVED_NAMES};
use crate::error::RegistryError;

/// How a catalog entry may be used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleClass {
    /// Always available: one of the relations imposed on the 2-category.
    Defining,
    /// An equation that must be admitted before it can be cited.
    Derived,
    /// A name for a definition; not an equation, never a rule.
    MacroAnchor,
}

/// Names of the macro-anchor entries: definitions citable by name but not
/// usable as equations.
pub const MACRO_ANCHOR_NAMES: [&str; 3] = ["sigrel", "ig1", "ig2"];

struct CatalogEntry {
    class: RuleClass,
    rule: Option<Arc<RewriteRule>>,
}

/// The catalog of named relations with its admission state.
pub struct Registry {
    catalog: BTreeMap<&'static str, CatalogEntry>,
    admitted: BTreeSet<&'static str>,
}

impl Registry {
    /// The full catalog, with no derived rule admitted yet.
    pub fn new() -> Registry {
        let mut catalog = BTreeMap::new();
        for rule in all_defining() {
            let name = rule.name;
            catalog.insert(
                name,
                CatalogEntry {
                    class: RuleClass::Defining,
                    rule: Some(Arc::new(rule)),
                },
            );
        }
        for rule in all_derived() {
            let name = rule.name;
            catalog.insert(
                name,
                CatalogEntry {
                    class: RuleClass::Derived,
                    rule: Some(Arc::new(rule)),
                },
            );
        }
        for name in MACRO_ANCHOR_NAMES {
            catalog.insert(
                name,
                CatalogEntry {
                    class: RuleClass::MacroAnchor,
                    rule: None,
                },
            );
        }
        debug_assert_eq!(
            catalog.len(),
            DEFINING_NAMES.len() + DERIVED_NAMES.len() + MACRO_ANCHOR_NAMES.len(),
            "catalog names must be distinct"
        );
        Registry {
            catalog,
            admitted: BTreeSet::new(),
        }
    }

    /// All catalog names, sorted.
    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.catalog.keys().copied()
    }

    /// The class of a named entry.
    pub fn classify(&self, name: &str) -> Option<RuleClass> {
        self.catalog.get(name).map(|e| e.class)
    }

    /// Whether a derived rule has been admitted.
    pub fn is_admitted(&self, name: &str) -> bool {
        self.admitted.contains(name)
    }

    /// The rule behind a name, honoring the gate: defining rules always,
    /// derived rules only once admitted.
    pub fn rule(&self, name: &str) -> Result<Arc<RewriteRule>, RegistryError> {
        let entry = self
            .catalog
            .get(name)
            .ok_or_else(|| RegistryError::UnknownRule(name.to_owned()))?;
        match entry.class {
            RuleClass::Defining => Ok(entry.rule.clone().expect("defining rules are present")),
            RuleClass::MacroAnchor => Err(RegistryError::NotAnEquation(name.to_owned())),
            RuleClass::Derived => {
                if self.admitted.contains(name) {
                    Ok(entry.rule.clone().expect("derived rules are present"))
                } else {
                    Err(RegistryError::GatedRule(name.to_owned()))
                }
            }
        }
    }

    /// The rule behind a name regardless of admission, for *stating* the
    /// equation an obligation must prove. Still refuses macro anchors.
    pub fn candidate(&self, name: &str) -> Result<Arc<RewriteRule>, RegistryError> {
        let entry = self
            .catalog
            .get(name)
            .ok_or_else(|| RegistryError::UnknownRule(name.to_owned()))?;
        entry
            .rule
            .clone()
            .ok_or_else(|| RegistryError::NotAnEquation(name.to_owned()))
    }

    /// Marks a derived rule as proven. Admitting twice is fine; admitting a
    /// defining rule is a no-op; anything else is an error.
    pub fn admit(&mut self, name: &str) -> Result<(), RegistryError> {
        let (key, entry) = self
            .catalog
            .get_key_value(name)
            .ok_or_else(|| RegistryError::UnknownRule(name.to_owned()))?;
        match entry.class {
            RuleClass::Defining => Ok(()),
            RuleClass::Derived => {
                self.admitted.insert(key);
                Ok(())
            }
            RuleClass::MacroAnchor => Err(RegistryError::NotDerived(name.to_owned())),
        }
    }

    /// The defining rules as a forward-driven rule set.
    pub fn defining_rules(&self) -> RuleSet {
        RuleSet::forward(
            DEFINING_NAMES
                .iter()
                .map(|n| self.catalog[n].rule.clone().expect("defining rule")),
        )
    }

    /// Defining rules plus every admitted derived rule, forward-driven.
    pub fn admitted_rules(&self) -> RuleSet {
        let mut rules: Vec<Arc<RewriteRule>> = DEFINING_NAMES
            .iter()
            .map(|n| self.catalog[n].rule.clone().expect("defining rule"))
            .collect();
        for name in &self.admitted {
            rules.push(self.catalog[name].rule.clone().expect("derived rule"));
        }
        RuleSet::forward(rules)
    }
}

impl Default for Registry {
    fn default() -> Self {
        Registry::new()
    }
}
