//! Rewrite rules as generators of concrete equation instances.
//!
//! A relation of the calculus is an equation between 2-morphisms, stated for
//! arbitrary strand colors and an arbitrary ambient weight. Instead of a
//! pattern language with metavariables, a [`RewriteRule`] carries a closure
//! that, given the concrete boundary data of a prospective match — the
//! letters entering the bottom of a corridor of `width` adjacent wires, and
//! the weight of the region immediately right of that corridor — produces
//! every fully concrete [`ConcreteRule`] instance of the equation with that
//! boundary. Typing constraints and weight guards are enforced simply by
//! returning no instance. The engine then only ever compares concrete
//! diagrams, so matching stays purely syntactic.

use cartan_config::{CartanDatum, ParamSet, Weight};
use diagram_core::{Diagram, Interface, Letter, LinComb};
use std::sync::Arc;

/// Which way an equation is applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Replace the left-hand diagram by the right-hand combination.
    Forward,
    /// Replace a matched term of the right-hand side by the equation's other
    /// side (introducing the left-hand diagram).
    Backward,
}

/// Ambient data every rule may consult when instantiating.
#[derive(Clone, Copy)]
pub struct RuleContext<'a> {
    /// The Cartan datum fixing colors, pairings and degrees.
    pub datum: &'a CartanDatum,
    /// The coefficient choices entering right-hand sides.
    pub params: &'a ParamSet,
}

/// A fully instantiated equation `lhs = rhs`.
///
/// `lhs` is a single diagram with implicit coefficient `1`; `rhs` is a linear
/// combination over the same interface (possibly zero). Both sides live over
/// the corridor's own boundary: their domain is the corridor's bottom word
/// and their base weight is the weight immediately right of the corridor.
#[derive(Debug, Clone)]
pub struct ConcreteRule {
    /// The distinguished single-diagram side of the equation.
    pub lhs: Diagram,
    /// The combination equal to `lhs`.
    pub rhs: LinComb,
}

impl ConcreteRule {
    /// Both sides share one interface; every rule must uphold this.
    pub fn is_well_formed(&self) -> bool {
        Interface::of(&self.lhs) == *self.rhs.interface()
    }
}

/// The instantiation closure of a rule: boundary letters and local weight in,
/// concrete instances out (in a deterministic order).
pub type InstanceFn =
    Box<dyn Fn(&[Letter], &Weight, &RuleContext<'_>) -> Vec<ConcreteRule> + Send + Sync>;

/// A named equation schema of the calculus.
///
/// A single named relation may comprise component equations whose left-hand
/// sides consume boundaries of different widths (an inverse written as a
/// matrix has entries between different tensor words, including the empty
/// one), so a rule advertises every corridor width it can match.
pub struct RewriteRule {
    /// Stable name used by proof scripts and diagnostics.
    pub name: &'static str,
    /// The distinct numbers of wires entering the bottom of a matchable
    /// corridor, in the order they should be tried.
    pub widths: Vec<usize>,
    /// Produces the concrete instances at a given boundary.
    pub instantiate: InstanceFn,
}

impl RewriteRule {
    /// Convenience constructor for the common single-width case.
    pub fn new<F>(name: &'static str, width: usize, f: F) -> RewriteRule
    where
        F: Fn(&[Letter], &Weight, &RuleContext<'_>) -> Vec<ConcreteRule> + Send + Sync + 'static,
    {
        RewriteRule {
            name,
            widths: vec![width],
            instantiate: Box::new(f),
        }
    }

    /// Constructor for rules whose component equations span several widths.
    /// The closure dispatches on `letters.len()`.
    pub fn with_widths<F>(name: &'static str, widths: Vec<usize>, f: F) -> RewriteRule
    where
        F: Fn(&[Letter], &Weight, &RuleContext<'_>) -> Vec<ConcreteRule> + Send + Sync + 'static,
    {
        debug_assert!(!widths.is_empty(), "a rule must match at least one width");
        RewriteRule {
            name,
            widths,
            instantiate: Box::new(f),
        }
    }

    /// All instances whose left-hand domain is exactly `letters`, read at the
    /// local weight `mu`. Debug builds verify the instances are well formed
    /// and match the requested boundary.
    pub fn instances(
        &self,
        letters: &[Letter],
        mu: &Weight,
        ctx: &RuleContext<'_>,
    ) -> Vec<ConcreteRule> {
        let out = (self.instantiate)(letters, mu, ctx);
        debug_assert!(
            out.iter().all(|inst| {
                inst.is_well_formed()
                    && inst.lhs.domain().letters() == letters
                    && inst.lhs.base() == mu
            }),
            "rule {} produced a malformed instance",
            self.name
        );
        out
    }
}

impl std::fmt::Debug for RewriteRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RewriteRule")
            .field("name", &self.name)
            .field("widths", &self.widths)
            .finish_non_exhaustive()
    }
}

/// An ordered list of oriented rules; the order decides priority during
/// deterministic normalization.
#[derive(Debug, Clone, Default)]
pub struct RuleSet {
    /// Rules together with the direction they are driven in.
    pub entries: Vec<(Arc<RewriteRule>, Direction)>,
}

impl RuleSet {
    /// A rule set from explicit (rule, direction) pairs.
    pub fn new(entries: Vec<(Arc<RewriteRule>, Direction)>) -> RuleSet {
        RuleSet { entries }
    }

    /// A rule set driving every given rule forward.
    pub fn forward(rules: impl IntoIterator<Item = Arc<RewriteRule>>) -> RuleSet {
        RuleSet {
            entries: rules.into_iter().map(|r| (r, Direction::Forward)).collect(),
        }
    }
}
