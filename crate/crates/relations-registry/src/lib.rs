//! Single source of truth for the relation calculus: the defining rule set,
//! the macro-definition table, the gated catalog of derived rules, the
//! ordered ledger of proof obligations, the final target relation list, and
//! the coverage manifest tying every anchor of the development to exactly
//! one of those artifacts.

pub mod coverage;
pub mod defining;
pub mod derived;
pub mod error;
pub mod macros;
pub mod obligations;
pub mod recipe;
pub mod registry;

pub use coverage::{
    audit_coverage, manifest, CoverageClass, CoverageEntry, CoverageReport, ANCHOR_COUNT,
};
pub use defining::{all_defining, DEFINING_NAMES};
pub use derived::{all_derived, DERIVED_NAMES};
pub use error::RegistryError;
pub use macros::{expand_bubble, is_macro_id, macro_expand, macro_id, MACRO_IDS};
pub use obligations::{
    admitted_rule_names, kl_target_relations, obligation, obligations, ObligationInfo,
    KL_TARGET_COUNT, KL_TARGET_NAMES, OBLIGATION_COUNT,
};
pub use registry::{Registry, RuleClass, MACRO_ANCHOR_NAMES};
