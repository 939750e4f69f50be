//! The ordered ledger of proof obligations.
//!
//! An obligation is one fact the checker must replay before the derived
//! rule it admits (if any) becomes citable. The table below is in replay
//! order: every dependency of an obligation appears strictly before it, so
//! a linear pass discharges the whole development. Six obligations are pure
//! consistency checks and admit no rule.

/// One entry in the proof ledger.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ObligationInfo {
    /// Stable name, used by proof scripts and reports.
    pub name: &'static str,
    /// The derived rule this obligation unlocks, when there is one.
    pub admits: Option<&'static str>,
    /// Previously discharged obligations whose rules the proof may cite.
    pub depends_on: &'static [&'static str],
    /// What is being checked.
    pub summary: &'static str,
}

/// Number of obligations in the ledger.
pub const OBLIGATION_COUNT: usize = 38;

/// Number of obligations in the final target relation set.
pub const KL_TARGET_COUNT: usize = 17;

static OBLIGATIONS: [ObligationInfo; OBLIGATION_COUNT] = [
    ObligationInfo {
        name: "first",
        admits: Some("first"),
        depends_on: &[],
        summary: "downward dots slide through the rightward cup and cap",
    },
    ObligationInfo {
        name: "rightpitchfork",
        admits: Some("rightpitchfork"),
        depends_on: &[],
        summary: "the sideways crossing absorbs into the rightward cup and cap \
                  as an upward crossing",
    },
    ObligationInfo {
        name: "rtcross",
        admits: Some("rtcross"),
        depends_on: &["first"],
        summary: "dots slide through the sideways crossing with a cap-cup \
                  correction on equal colors",
    },
    ObligationInfo {
        name: "lurking",
        admits: Some("lurking"),
        depends_on: &["rightpitchfork"],
        summary: "the upward crossing slides past a downward strand through two \
                  sideways crossings, with the braid-style correction",
    },
    ObligationInfo {
        name: "qhadown",
        admits: Some("qhadown"),
        depends_on: &["first", "rightpitchfork", "rtcross", "lurking"],
        summary: "the downward dot and crossing satisfy the mirror quiver Hecke \
                  relations with primed parameters",
    },
    ObligationInfo {
        name: "opiso-welldef",
        admits: None,
        depends_on: &["qhadown"],
        summary: "the flip symmetry sending each diagram to its rotation with \
                  primed parameters carries every defining relation to a valid \
                  relation",
    },
    ObligationInfo {
        name: "T-involution",
        admits: None,
        depends_on: &["opiso-welldef"],
        summary: "applying the flip symmetry twice returns every generator to \
                  itself modulo the defining relations",
    },
    ObligationInfo {
        name: "rightpitchfork2",
        admits: Some("rightpitchfork2"),
        depends_on: &["rightpitchfork"],
        summary: "the sideways crossing absorbs into the rightward cup and cap \
                  as a scaled downward crossing",
    },
    ObligationInfo {
        name: "die",
        admits: None,
        depends_on: &[],
        summary: "the overlapping descriptions of the leftward cup and cap \
                  agree: the top spade and club match the plain cup and cap, \
                  and both inversions give the same inverse crossing at \
                  pairing zero",
    },
    ObligationInfo {
        name: "poirot",
        admits: None,
        depends_on: &["first", "opiso-welldef", "T-involution"],
        summary: "the flip symmetry exchanges spades and clubs at the negated \
                  weight",
    },
    ObligationInfo {
        name: "posneg",
        admits: Some("posneg"),
        depends_on: &[],
        summary: "both round trips through the two sideways crossings equal \
                  minus the identity plus the spade or club correction",
    },
    ObligationInfo {
        name: "startb",
        admits: Some("startb"),
        depends_on: &[],
        summary: "at strictly dominant pairing the sideways crossing kills the \
                  leftward cup, dotted caps kill the inverse crossing, and \
                  small clockwise circles are Kronecker deltas",
    },
    ObligationInfo {
        name: "startd",
        admits: Some("startd"),
        depends_on: &[],
        summary: "the mirror family at strictly antidominant pairing, with \
                  counterclockwise circles",
    },
    ObligationInfo {
        name: "doublebubble",
        admits: None,
        depends_on: &["startb", "startd", "poirot"],
        summary: "the two shorthand circle families are exchanged by the flip \
                  symmetry, so either one determines the other",
    },
    ObligationInfo {
        name: "ig3",
        admits: Some("ig3"),
        depends_on: &["startb", "startd", "posneg"],
        summary: "the total degree-t products of opposite circles vanish for \
                  every positive t: the infinite Grassmannian relation",
    },
    ObligationInfo {
        name: "invA",
        admits: Some("invA"),
        depends_on: &["posneg", "startb", "ig3"],
        summary: "each spade expands as a sum of dotted leftward cups against \
                  negatively dotted counterclockwise circles",
    },
    ObligationInfo {
        name: "invB",
        admits: Some("invB"),
        depends_on: &["posneg", "startd", "ig3"],
        summary: "each club expands as a sum of dotted leftward caps against \
                  negatively dotted clockwise circles",
    },
    ObligationInfo {
        name: "yacht-check",
        admits: None,
        depends_on: &["posneg", "startb", "startd", "invA", "invB"],
        summary: "the explicit matrices built from the expanded spades and \
                  clubs are two-sided inverses of the up-down decomposition \
                  matrices",
    },
    ObligationInfo {
        name: "pos",
        admits: Some("pos"),
        depends_on: &["posneg", "invA"],
        summary: "the positively padded round trip written without spades",
    },
    ObligationInfo {
        name: "neg",
        admits: Some("neg"),
        depends_on: &["posneg", "invB"],
        summary: "the negatively padded round trip written without clubs",
    },
    ObligationInfo {
        name: "everything",
        admits: Some("everything"),
        depends_on: &["pos", "neg", "invA", "invB", "startb", "startd"],
        summary: "the sideways crossing against a leftward cap or cup expands \
                  into dotted caps or cups against negatively dotted circles",
    },
    ObligationInfo {
        name: "dog1",
        admits: Some("dog1"),
        depends_on: &["everything", "qhadown"],
        summary: "counterclockwise curls with few downward dots vanish and the \
                  top one straightens",
    },
    ObligationInfo {
        name: "dog1b",
        admits: Some("dog1b"),
        depends_on: &["everything", "qhadown"],
        summary: "clockwise curls with few downward dots vanish and the top \
                  one straightens to minus the identity",
    },
    ObligationInfo {
        name: "one",
        admits: Some("one"),
        depends_on: &["everything", "neg"],
        summary: "at negative pairing the upward crossing under a leftward cap \
                  trades for the inverse sideways crossing",
    },
    ObligationInfo {
        name: "two",
        admits: Some("two"),
        depends_on: &["everything", "pos"],
        summary: "above pairing minus two the upward crossing over a leftward \
                  cup trades for the inverse sideways crossing",
    },
    ObligationInfo {
        name: "quarry",
        admits: Some("quarry"),
        depends_on: &["one", "neg", "startd"],
        summary: "the crossing-decorated leftward cap against the sideways \
                  crossing reduces to a shifted cap with a boundary correction",
    },
    ObligationInfo {
        name: "claude1",
        admits: Some("claude1"),
        depends_on: &["quarry", "one"],
        summary: "the same reduction with an extra sideways crossing attached",
    },
    ObligationInfo {
        name: "claude2",
        admits: Some("claude2"),
        depends_on: &["claude1", "quarry", "two"],
        summary: "the same reduction closed off with a dotted rightward cup",
    },
    ObligationInfo {
        name: "adjfinal",
        admits: Some("adjfinal"),
        depends_on: &[
            "dog1", "dog1b", "one", "two", "quarry", "claude1", "claude2",
            "startb", "startd",
        ],
        summary: "both leftward zig-zags straighten: the leftward cup and cap \
                  are adjoint",
    },
    ObligationInfo {
        name: "huddle",
        admits: Some("huddle"),
        depends_on: &["first", "startb"],
        summary: "at strictly dominant pairing a downward dot crosses the \
                  leftward cup",
    },
    ObligationInfo {
        name: "turn",
        admits: Some("turn"),
        depends_on: &["lurking", "rtcross", "everything", "huddle"],
        summary: "at non-positive pairing the two-color trade holds after \
                  peeling off the left strand with sideways crossings",
    },
    ObligationInfo {
        name: "critical",
        admits: Some("critical"),
        depends_on: &["turn", "lurking", "everything"],
        summary: "in the intermediate pairing range the two-color trade holds \
                  after one sideways crossing",
    },
    ObligationInfo {
        name: "easy1",
        admits: Some("easy1"),
        depends_on: &["turn", "critical", "everything", "lurking"],
        summary: "below the off-diagonal bound the two-color upward crossing \
                  under a leftward cap trades for the inverse sideways \
                  crossing with a scalar",
    },
    ObligationInfo {
        name: "easy2",
        admits: Some("easy2"),
        depends_on: &["easy1", "adjfinal"],
        summary: "from the off-diagonal bound upward, the mirrored trade over \
                  a leftward cup",
    },
    ObligationInfo {
        name: "fourth",
        admits: Some("fourth"),
        depends_on: &["adjfinal", "huddle", "first"],
        summary: "downward dots cross leftward cups and caps at every weight",
    },
    ObligationInfo {
        name: "easyfinal",
        admits: Some("easyfinal"),
        depends_on: &["easy1", "easy2", "adjfinal", "one", "two"],
        summary: "the guard-free two-color trades, valid for all colors and \
                  weights",
    },
    ObligationInfo {
        name: "hardfinal",
        admits: Some("hardfinal"),
        depends_on: &["easyfinal", "adjfinal", "rightpitchfork2", "qhadown"],
        summary: "the downward crossing absorbs into leftward cups and caps \
                  as the inverse sideways crossing",
    },
    ObligationInfo {
        name: "actress",
        admits: Some("actress"),
        depends_on: &["fourth", "easyfinal", "hardfinal", "adjfinal"],
        summary: "the downward dot and crossing equal their rotations built \
                  from leftward cups and caps",
    },
];

/// The obligations in replay order.
pub fn obligations() -> &'static [ObligationInfo] {
    &OBLIGATIONS
}

/// Looks up an obligation by name.
pub fn obligation(name: &str) -> Option<&'static ObligationInfo> {
    OBLIGATIONS.iter().find(|o| o.name == name)
}

/// Names of the obligations in the final target relation set: the downward
/// quiver Hecke relations, the mixed relations, the circle relations, the
/// curl relations, the left adjunction, and cyclicity.
pub const KL_TARGET_NAMES: [&str; KL_TARGET_COUNT] = [
    "qhadown",
    "first",
    "rightpitchfork",
    "rightpitchfork2",
    "rtcross",
    "lurking",
    "startb",
    "startd",
    "ig3",
    "everything",
    "dog1",
    "dog1b",
    "adjfinal",
    "fourth",
    "easyfinal",
    "hardfinal",
    "actress",
];

/// The target relation set as obligations; all must discharge for the main
/// result to hold at the checked weights.
pub fn kl_target_relations() -> Vec<&'static ObligationInfo> {
    KL_TARGET_NAMES
        .iter()
        .map(|n| obligation(n).expect("target names are obligations"))
        .collect()
}

/// The derived-rule names admitted over the whole ledger, in ledger order.
pub fn admitted_rule_names() -> Vec<&'static str> {
    OBLIGATIONS.iter().filter_map(|o| o.admits).collect()
}
