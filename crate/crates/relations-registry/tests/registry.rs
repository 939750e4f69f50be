//! Integration tests for the registry: catalog shape, gating, the
//! obligation ledger, coverage, macro expansion, and the degree oracle over
//! every rule instance on a grid of boundaries and weights.

use cartan_config::{
    random_homogeneous_params, standard_params, test_data, CartanDatum, ParamSet, Weight,
};
use diagram_core::GeneratorKind::{self, *};
use diagram_core::{DegreeAssignment, Dir, Letter};
use relations_registry::{
    admitted_rule_names, all_defining, all_derived, audit_coverage, kl_target_relations,
    macro_expand, obligation, obligations, Registry, RegistryError, RuleClass, DEFINING_NAMES,
    DERIVED_NAMES, KL_TARGET_COUNT, MACRO_ANCHOR_NAMES, MACRO_IDS, OBLIGATION_COUNT,
};
use rule_engine::{RuleContext, RewriteRule};

fn weights_for(datum: &CartanDatum, values: &[i64]) -> Vec<Weight> {
    match datum.rank() {
        1 => values.iter().map(|&h| Weight::new(vec![h])).collect(),
        2 => {
            let mut out = Vec::new();
            for &a in values {
                for &b in values {
                    out.push(Weight::new(vec![a, b]));
                }
            }
            out
        }
        r => panic!("unexpected rank {r}"),
    }
}

fn words_for(datum: &CartanDatum, width: usize) -> Vec<Vec<Letter>> {
    let mut alphabet = Vec::new();
    for i in datum.indices() {
        alphabet.push(Letter::up(i));
        alphabet.push(Letter::down(i));
    }
    let mut out: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..width {
        out = out
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&l| {
                    let mut w2 = w.clone();
                    w2.push(l);
                    w2
                })
            })
            .collect();
    }
    out
}

#[test]
fn catalog_shape() {
    let reg = Registry::new();
    let names: Vec<_> = reg.names().collect();
    assert_eq!(
        names.len(),
        DEFINING_NAMES.len() + DERIVED_NAMES.len() + MACRO_ANCHOR_NAMES.len()
    );
    assert_eq!(names.len(), 42);
    for n in DEFINING_NAMES {
        assert_eq!(reg.classify(n), Some(RuleClass::Defining), "{n}");
    }
    for n in DERIVED_NAMES {
        assert_eq!(reg.classify(n), Some(RuleClass::Derived), "{n}");
    }
    for n in MACRO_ANCHOR_NAMES {
        assert_eq!(reg.classify(n), Some(RuleClass::MacroAnchor), "{n}");
    }
    assert_eq!(reg.classify("nonsense"), None);
    assert_eq!(reg.defining_rules().entries.len(), 7);
}

#[test]
fn gating_and_admission() {
    let mut reg = Registry::new();
    assert!(reg.rule("qha").is_ok(), "defining rules are never gated");
    assert!(matches!(
        reg.rule("pos"),
        Err(RegistryError::GatedRule(n)) if n == "pos"
    ));
    assert!(
        reg.candidate("pos").is_ok(),
        "stating an unproven equation is allowed"
    );
    assert!(matches!(
        reg.rule("sigrel"),
        Err(RegistryError::NotAnEquation(_))
    ));
    assert!(matches!(
        reg.candidate("ig1"),
        Err(RegistryError::NotAnEquation(_))
    ));
    assert!(matches!(
        reg.rule("made-up"),
        Err(RegistryError::UnknownRule(_))
    ));

    assert!(matches!(
        reg.admit("sigrel"),
        Err(RegistryError::NotDerived(_))
    ));
    reg.admit("qha").expect("admitting a defining rule is a no-op");
    assert!(!reg.is_admitted("pos"));
    reg.admit("pos").expect("derived rules are admissible");
    assert!(reg.is_admitted("pos"));
    reg.admit("pos").expect("admission is idempotent");
    assert!(reg.rule("pos").is_ok());
    assert_eq!(reg.admitted_rules().entries.len(), 8);
}

#[test]
fn obligation_ledger_is_consistent() {
    let obs = obligations();
    assert_eq!(obs.len(), OBLIGATION_COUNT);

    // Dependencies strictly precede their dependents.
    for (k, ob) in obs.iter().enumerate() {
        for dep in ob.depends_on {
            let pos = obs
                .iter()
                .position(|o| o.name == *dep)
                .unwrap_or_else(|| panic!("{}: unknown dependency {dep}", ob.name));
            assert!(pos < k, "{} depends on later obligation {dep}", ob.name);
        }
    }

    // Every derived rule is admitted by exactly one obligation.
    let admitted = admitted_rule_names();
    assert_eq!(admitted.len(), DERIVED_NAMES.len());
    let mut sorted = admitted.clone();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(sorted.len(), admitted.len(), "no rule admitted twice");
    for name in DERIVED_NAMES {
        assert!(admitted.contains(&name), "{name} admitted by no obligation");
    }

    // The six pure consistency checks admit nothing.
    let silent: Vec<_> = obs.iter().filter(|o| o.admits.is_none()).collect();
    assert_eq!(
        silent.iter().map(|o| o.name).collect::<Vec<_>>(),
        vec![
            "opiso-welldef",
            "T-involution",
            "die",
            "poirot",
            "doublebubble",
            "yacht-check"
        ]
    );

    // Admitted names match the obligation's own name.
    for ob in obs {
        if let Some(rule) = ob.admits {
            assert_eq!(rule, ob.name);
        }
    }
}

#[test]
fn kl_target_set() {
    let targets = kl_target_relations();
    assert_eq!(targets.len(), KL_TARGET_COUNT);
    let names: Vec<_> = targets.iter().map(|o| o.name).collect();
    assert!(names.contains(&"adjfinal"));
    assert!(names.contains(&"actress"));
    assert!(names.contains(&"qhadown"));
    assert!(names.contains(&"ig3"));
    for t in &targets {
        assert!(obligation(t.name).is_some());
    }
}

#[test]
fn coverage_audit_passes() {
    let report = audit_coverage().expect("coverage audit");
    assert_eq!(report.anchors, 74);
    assert_eq!(report.obligations_covered, OBLIGATION_COUNT);
    assert_eq!(report.defining_covered, DEFINING_NAMES.len());
    assert_eq!(report.macros_covered, MACRO_IDS.len());
}

#[test]
fn macro_expansions_type_check() {
    for (_, datum) in test_data() {
        let params = standard_params(&datum);
        for mu in weights_for(&datum, &[-3, -1, 0, 1, 3]) {
            let mut macros: Vec<GeneratorKind> = Vec::new();
            for i in datum.indices() {
                macros.extend([DownDot(i), LeftCup(i), LeftCap(i)]);
                for j in datum.indices() {
                    macros.extend([DownCross(i, j), SideCross(i, j)]);
                }
            }
            for gen in macros {
                let lc = macro_expand(gen, &datum, &params, &mu)
                    .unwrap_or_else(|e| panic!("{gen} at {mu:?}: {e}"));
                assert!(!lc.is_zero(), "{gen} expansion vanished at {mu:?}");
                let interface = lc.interface();
                assert_eq!(interface.dom.0, gen.domain_letters(), "{gen}");
                assert_eq!(interface.cod.0, gen.codomain_letters(), "{gen}");
                assert_eq!(interface.base, mu, "{gen}");
                for (d, _) in lc.iter() {
                    for s in d.slices() {
                        assert!(
                            s.gen.is_primitive(),
                            "{gen} expansion contains macro {}",
                            s.gen
                        );
                    }
                }
            }
            // Guarded primitives expand exactly where their guard holds.
            for i in datum.indices() {
                let h = mu.pairing(i);
                let spade = macro_expand(SpadeCup(0, i), &datum, &params, &mu);
                assert_eq!(spade.is_ok(), h >= 1, "spade guard at h={h}");
                let club = macro_expand(ClubCap(0, i), &datum, &params, &mu);
                assert_eq!(club.is_ok(), h <= -1, "club guard at h={h}");
            }
        }
    }
}

fn check_rule_degrees(
    rule: &RewriteRule,
    datum: &CartanDatum,
    params: &ParamSet,
    weights: &[Weight],
) -> usize {
    let ctx = RuleContext { datum, params };
    let deg = DegreeAssignment::new(datum);
    let mut seen = 0;
    for &width in &rule.widths {
        for word in words_for(datum, width) {
            for mu in weights {
                for inst in rule.instances(&word, mu, &ctx) {
                    seen += 1;
                    let lhs_deg = deg.of_diagram(&inst.lhs);
                    if inst.rhs.is_zero() {
                        continue;
                    }
                    let rhs_deg = deg.of_lincomb(&inst.rhs);
                    assert_eq!(
                        rhs_deg,
                        Some(lhs_deg),
                        "{}: inhomogeneous instance at {mu:?} over {word:?}",
                        rule.name
                    );
                }
            }
        }
    }
    seen
}

#[test]
fn every_rule_instance_is_degree_homogeneous() {
    let values = [-4, -2, -1, 0, 1, 2, 4];
    for (name, datum) in test_data() {
        let standard = standard_params(&datum);
        let random = random_homogeneous_params(&datum, 0xC0FFEE);
        let weights = weights_for(&datum, &values);
        for params in [&standard, &random] {
            for rule in all_defining().iter().chain(all_derived().iter()) {
                check_rule_degrees(rule, &datum, params, &weights);
            }
        }
        let _ = name;
    }
}

#[test]
fn every_rule_matches_somewhere() {
    let values = [-4, -2, -1, 0, 1, 2, 4];
    let mut matched: std::collections::BTreeSet<&str> = std::collections::BTreeSet::new();
    for (_, datum) in test_data() {
        let params = standard_params(&datum);
        let weights = weights_for(&datum, &values);
        for rule in all_defining().iter().chain(all_derived().iter()) {
            if matched.contains(rule.name) {
                continue;
            }
            if check_rule_degrees(rule, &datum, &params, &weights) > 0 {
                matched.insert(rule.name);
            }
        }
    }
    for rule in all_defining().iter().chain(all_derived().iter()) {
        assert!(
            matched.contains(rule.name),
            "{} has no instance on the whole grid",
            rule.name
        );
    }
}

#[test]
fn now_rule_term_counts() {
    let datum = cartan_config::a2();
    let params = standard_params(&datum);
    let ctx = RuleContext {
        datum: &datum,
        params: &params,
    };
    let now = all_defining()
        .into_iter()
        .find(|r| r.name == "now")
        .unwrap();
    let mu = Weight::new(vec![0, 0]);

    // Same color: the double crossing vanishes.
    let same = now.instances(&[Letter::up(0), Letter::up(0)], &mu, &ctx);
    assert_eq!(same.len(), 1);
    assert!(same[0].rhs.is_zero());

    // Adjacent colors: one dotted term per side.
    let adj = now.instances(&[Letter::up(0), Letter::up(1)], &mu, &ctx);
    assert_eq!(adj.len(), 1);
    assert_eq!(adj[0].rhs.num_terms(), 2);

    // Orthogonal colors: a single scalar term.
    let datum = cartan_config::a1xa1();
    let params = standard_params(&datum);
    let ctx = RuleContext {
        datum: &datum,
        params: &params,
    };
    let orth = now.instances(&[Letter::up(0), Letter::up(1)], &mu, &ctx);
    assert_eq!(orth.len(), 1);
    assert_eq!(orth[0].rhs.num_terms(), 1);
}

#[test]
fn bubble_delta_structure() {
    let datum = cartan_config::a1();
    let params = standard_params(&datum);
    let ctx = RuleContext {
        datum: &datum,
        params: &params,
    };
    let startb = all_derived()
        .into_iter()
        .find(|r| r.name == "startb")
        .unwrap();
    let mu = Weight::new(vec![3]);
    let closed = startb.instances(&[], &mu, &ctx);
    // One crossing-kills-cup equation plus one equation per dotted circle.
    assert_eq!(closed.len(), 4);
    let deltas: Vec<_> = closed.iter().filter(|c| !c.rhs.is_zero()).collect();
    assert_eq!(
        deltas.len(),
        1,
        "exactly the top circle survives as the identity"
    );
    assert_eq!(deltas[0].rhs.num_terms(), 1);

    // Below dominance the family is empty.
    let none = startb.instances(&[], &Weight::new(vec![0]), &ctx);
    assert!(none.is_empty());
}

#[test]
fn posneg_correction_counts() {
    let datum = cartan_config::a1();
    let params = standard_params(&datum);
    let ctx = RuleContext {
        datum: &datum,
        params: &params,
    };
    let posneg = all_derived()
        .into_iter()
        .find(|r| r.name == "posneg")
        .unwrap();
    for h in -3i64..=3 {
        let mu = Weight::new(vec![h]);
        let up_down = posneg.instances(&[Letter::up(0), Letter::down(0)], &mu, &ctx);
        assert_eq!(up_down.len(), 1);
        assert_eq!(
            up_down[0].rhs.num_terms() as i64,
            1 + h.max(0),
            "spade corrections at h={h}"
        );
        let down_up = posneg.instances(&[Letter::down(0), Letter::up(0)], &mu, &ctx);
        assert_eq!(down_up.len(), 1);
        assert_eq!(
            down_up[0].rhs.num_terms() as i64,
            1 + (-h).max(0),
            "club corrections at h={h}"
        );
    }
}
