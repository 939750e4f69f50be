//! Pattern matching and bounded rewriting for sliced string diagrams.
//!
//! The defining relations of the 2-category are equations between linear
//! combinations of diagrams. This crate turns such equations into oriented
//! rewrite steps:
//!
//! * [`find_occurrences`] locates every rectangle of a combination where one
//!   side of an equation sits, up to the interchange law inside the
//!   rectangle;
//! * [`apply_at`] replaces one such rectangle by the equation's other side,
//!   embedded in the untouched context and with coefficients multiplied
//!   through;
//! * [`normalize`] drives a prioritized list of oriented rules with a step
//!   budget, and [`equal_modulo`] compares two combinations through their
//!   normalized forms, answering with a tri-state [`Equivalence`].
//!
//! Rules are *instance generators* ([`RewriteRule`]): closures producing the
//! fully concrete two sides of an equation for given boundary letters and
//! local weight. Soundness of every step is inherited from the rules being
//! genuine equations; no termination or confluence is assumed anywhere, and
//! operations that search or rewrite are bounded by explicit fuel.

pub mod apply;
pub mod error;
pub mod matching;
pub mod normalize;
pub mod rule;

pub use apply::apply_at;
pub use error::EngineError;
pub use matching::{find_occurrences, Occurrence};
pub use normalize::{default_fuel, equal_modulo, normalize, Equivalence, Strategy};
pub use rule::{ConcreteRule, Direction, InstanceFn, RewriteRule, RuleContext, RuleSet};
