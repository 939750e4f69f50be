//! Sliced planar string diagrams over exact rational coefficients.
//!
//! A 2-morphism between words in the generating 1-morphisms `E_i` and
//! `F_i` is represented as a ℚ-linear combination of *diagrams*: stacks
//! of slices, each slice one generator at a horizontal offset, read
//! bottom (domain) to top (codomain), with the base weight labelling the
//! region right of every strand. Crossing an upward strand right-to-left
//! adds `α_i` to the region weight; a downward strand subtracts it.
//!
//! The crate provides:
//!
//! * words and letters ([`SignedWord`], [`Letter`], [`Dir`]);
//! * the generator alphabet ([`GeneratorKind`]) — eight primitives (dot,
//!   upward crossing, rightward cup and cap, the two sideways-crossing
//!   inverses, spades and clubs) plus five defined generators (downward
//!   dot and crossing, the other sideways crossing, leftward cup and cap)
//!   that lower to composites of primitives;
//! * validated diagrams ([`Diagram`]) and their canonical form modulo
//!   the interchange law ([`canonical_form`]);
//! * linear combinations ([`LinComb`]) with exact rational coefficients,
//!   vertical and horizontal composition;
//! * the incremental [`DiagramBuilder`], which performs macro lowering;
//! * the contravariant symmetry [`transform_T`] exchanging `E` and `F`;
//! * the grading ([`DegreeAssignment`]).
//!
//! Equality of diagrams is *syntactic on canonical forms*: two stacks
//! are identified exactly when they differ by interchanging the heights
//! of generators acting on disjoint sets of strands. All deeper
//! identifications are relations, applied elsewhere as rewrite rules.

pub mod builder;
pub mod canonical;
pub mod compose;
pub mod degree;
pub mod diagram;
pub mod error;
pub mod generator;
pub mod lincomb;
pub mod transform;
pub mod word;

pub use builder::DiagramBuilder;
pub use canonical::{canonical_form, swap_adjacent};
pub use compose::{diagram_hcomp, diagram_vcomp};
pub use degree::DegreeAssignment;
pub use diagram::{Diagram, Slice};
pub use error::DiagramError;
pub use generator::GeneratorKind;
pub use lincomb::{Interface, LinComb};
pub use transform::{transform_diagram, transform_T};
pub use word::{Dir, Letter, SignedWord};
