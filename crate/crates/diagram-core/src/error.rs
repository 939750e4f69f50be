//! Structured errors for diagram construction and composition.

use thiserror::Error;

use crate::generator::GeneratorKind;

/// Everything that can go wrong while building or combining diagrams.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    /// A slice consumes letters that are not present below it.
    #[error("slice {slice}: generator {gen} expects {expected} at offset {offset} but the word there is {found}")]
    WordMismatch {
        /// Index of the offending slice, from the bottom.
        slice: usize,
        /// The generator stored in the slice.
        gen: GeneratorKind,
        /// Rendered expected letters.
        expected: String,
        /// Offset of the footprint.
        offset: usize,
        /// Rendered letters actually found.
        found: String,
    },

    /// A slice's footprint sticks out past the end of the word below it.
    #[error("slice {slice}: generator {gen} at offset {offset} overflows a word of length {width}")]
    OffsetOutOfRange {
        /// Index of the offending slice, from the bottom.
        slice: usize,
        /// The generator stored in the slice.
        gen: GeneratorKind,
        /// Offset of the footprint.
        offset: usize,
        /// Length of the word below the slice.
        width: usize,
    },

    /// A guarded generator was placed at a weight where it is undefined.
    #[error("slice {slice}: {gen} is undefined at local weight {weight} (needs {requirement})")]
    GuardViolation {
        /// Index of the offending slice, from the bottom.
        slice: usize,
        /// The guarded generator.
        gen: GeneratorKind,
        /// Rendered local weight.
        weight: String,
        /// Human-readable guard, e.g. `0 ≤ 2 < h`.
        requirement: String,
    },

    /// A macro kind appeared where only primitives are allowed.
    #[error("generator {gen} is a macro and cannot be stored in a diagram slice")]
    NotPrimitive {
        /// The offending kind.
        gen: GeneratorKind,
    },

    /// A leftward crossing with equal colors used the two-color kind.
    #[error("InvSide requires distinct colors; use InvSideSame for color {idx}")]
    InvSideEqualColors {
        /// The repeated color.
        idx: usize,
    },

    /// Vertical composition where the interfaces do not line up.
    #[error("vertical composition mismatch: upper domain {upper} vs lower codomain {lower}")]
    VerticalMismatch {
        /// Rendered domain of the upper morphism.
        upper: String,
        /// Rendered codomain of the lower morphism.
        lower: String,
    },

    /// Horizontal composition where the middle region weights differ.
    #[error("horizontal composition mismatch: left factor based at {left_base}, right factor has leftmost region {right_left}")]
    HorizontalMismatch {
        /// Rendered base weight of the left factor.
        left_base: String,
        /// Rendered leftmost region weight of the right factor.
        right_left: String,
    },

    /// Two linear combinations with different interfaces were combined.
    #[error("interface mismatch: {left} vs {right}")]
    InterfaceMismatch {
        /// Rendered interface of the left operand.
        left: String,
        /// Rendered interface of the right operand.
        right: String,
    },

    /// Base weights of different ranks (or different tags) were mixed.
    #[error("base weight mismatch: {left} vs {right}")]
    BaseMismatch {
        /// Rendered left weight.
        left: String,
        /// Rendered right weight.
        right: String,
    },
}
