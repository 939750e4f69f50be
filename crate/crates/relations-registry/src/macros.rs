//! The macro layer: shorthand generators and closed circles, with their
//! expansions into primitive diagrams.
//!
//! Five composite generators (the downward dot and crossing, the rightward
//! crossing, and the leftward cup and cap) plus the dotted-circle shorthands
//! are definitions, not equations: nothing is proved about them here, they
//! simply elaborate. The stable identifiers in [`MACRO_IDS`] name these
//! definitions so the coverage manifest can point at them.

use crate::recipe;
use cartan_config::{CartanDatum, Idx, ParamSet, Weight};
use diagram_core::{
    DiagramBuilder, DiagramError, GeneratorKind, LinComb, SignedWord,
};

/// Stable names for the macro definitions.
pub const MACRO_IDS: [&str; 7] = [
    "sigma",
    "down-dot",
    "down-cross",
    "left-cup",
    "left-cap",
    "bubbles",
    "fake-bubbles",
];

/// Whether `id` names a macro definition.
pub fn is_macro_id(id: &str) -> bool {
    MACRO_IDS.contains(&id)
}

/// The macro definition a generator kind belongs to, if it is a macro.
pub fn macro_id(gen: GeneratorKind) -> Option<&'static str> {
    use GeneratorKind::*;
    match gen {
        SideCross(..) => Some("sigma"),
        DownDot(_) => Some("down-dot"),
        DownCross(..) => Some("down-cross"),
        LeftCup(_) => Some("left-cup"),
        LeftCap(_) => Some("left-cap"),
        _ => None,
    }
}

/// Expands a single generator over its own domain at base weight `mu` into
/// a combination of primitive diagrams.
///
/// Primitive kinds expand to themselves; macro kinds elaborate through
/// their definitions. Errors surface guard failures, such as a spade at a
/// weight where it is undefined.
pub fn macro_expand(
    gen: GeneratorKind,
    datum: &CartanDatum,
    params: &ParamSet,
    mu: &Weight,
) -> Result<LinComb, DiagramError> {
    let mut b = DiagramBuilder::new(
        datum,
        params,
        mu.clone(),
        SignedWord(gen.domain_letters()),
    );
    b.push(0, gen)?;
    b.finish_lincomb()
}

/// The closed dotted circle with `r` dots at region weight `mu`, as a
/// combination of primitive diagrams on the empty boundary.
///
/// Negative `r` selects the shorthand circles fixed by the inversion data;
/// the result is `None` exactly where that shorthand denotes zero.
pub fn expand_bubble(
    datum: &CartanDatum,
    params: &ParamSet,
    mu: &Weight,
    i: Idx,
    clockwise: bool,
    r: i64,
) -> Option<LinComb> {
    let (c, steps) = recipe::bubble_value(datum, mu, i, clockwise, r, 0)?;
    let mut b = DiagramBuilder::new(datum, params, mu.clone(), SignedWord(Vec::new()));
    for (o, g) in steps {
        b.push(o, g).ok()?;
    }
    b.scale(&c);
    b.finish_lincomb().ok()
}
