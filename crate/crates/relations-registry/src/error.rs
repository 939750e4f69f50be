use diagram_core::DiagramError;
use thiserror::Error;

/// Failures surfaced by the registry: unknown names, gate violations, and
/// diagram-level errors bubbling up from expansion.
#[derive(Debug, Error)]
pub enum RegistryError {
    /// The name is not in the catalog at all.
    #[error("unknown rule name `{0}`")]
    UnknownRule(String),

    /// The name is catalogued as a derived rule but its obligation has not
    /// been discharged yet in this registry.
    #[error("derived rule `{0}` is not admitted yet; check its obligation first")]
    GatedRule(String),

    /// The name tags a macro expansion, not an equation usable for rewriting.
    #[error("`{0}` names a macro expansion, not a rewrite rule")]
    NotAnEquation(String),

    /// Admission was requested for something that is not a derived rule.
    #[error("`{0}` is not a derived rule; only derived rules are admitted")]
    NotDerived(String),

    /// The coverage manifest is internally inconsistent.
    #[error("coverage manifest error: {0}")]
    Coverage(String),

    /// An expansion failed to type-check.
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}
