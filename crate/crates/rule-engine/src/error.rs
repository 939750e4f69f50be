//! Error type for the rewriting engine.

use diagram_core::DiagramError;
use thiserror::Error;

/// Everything that can go wrong while matching or rewriting.
#[derive(Debug, Error)]
pub enum EngineError {
    /// The occurrence no longer describes a rectangle of the combination it
    /// is applied to: the term is gone, the levels are out of range, the
    /// selected slices no longer extract by interchange, or the extracted
    /// band no longer equals the matched pattern.
    #[error("stale occurrence: {0}")]
    StaleOccurrence(String),

    /// The two sides of a comparison live in different hom-spaces.
    #[error("interface mismatch between `{left}` and `{right}`")]
    InterfaceMismatch { left: String, right: String },

    /// A rule instance failed to embed back into its context; this indicates
    /// a malformed rule, not a malformed input.
    #[error("rule {rule} produced an invalid replacement: {source}")]
    BadReplacement { rule: String, source: DiagramError },

    /// A structural diagram error surfaced while manipulating combinations.
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}
