//! End-to-end exercises of matching, application and normalization with a
//! small set of toy equations. The equations here are deliberately not facts
//! of any particular 2-category: the engine's job is only to apply equations
//! faithfully, so the tests pick sides that make each mechanism observable.

use cartan_config::{a1, a2, rat_int, standard_params, Rat, Weight};
use diagram_core::{Diagram, Dir, GeneratorKind, Interface, Letter, LinComb, SignedWord, Slice};
use num_traits::One;
use rule_engine::{
    apply_at, equal_modulo, find_occurrences, normalize, ConcreteRule, Direction, EngineError,
    Equivalence, RewriteRule, RuleContext, RuleSet, Strategy,
};
use std::sync::Arc;

fn up_word(colors: &[usize]) -> SignedWord {
    SignedWord(colors.iter().map(|&i| Letter::up(i)).collect())
}

/// `x² = 0` on a single upward strand.
fn t_zap() -> Arc<RewriteRule> {
    Arc::new(RewriteRule::new("t-zap", 1, |letters, mu, ctx| {
        let [l] = letters else { return vec![] };
        if l.dir != Dir::Up {
            return vec![];
        }
        let word = SignedWord(vec![*l]);
        let dot = Slice::new(0, GeneratorKind::UpDot(l.idx));
        let lhs = Diagram::new(mu.clone(), word.clone(), vec![dot, dot], ctx.datum)
            .expect("double dot is a valid stack");
        let rhs = LinComb::zero(Interface::new(mu.clone(), word.clone(), word));
        vec![ConcreteRule { lhs, rhs }]
    }))
}

/// `τ ∘ (x ⋆ 1) = (1 ⋆ x) ∘ τ + 1` on two like-colored upward strands.
fn t_split() -> Arc<RewriteRule> {
    Arc::new(RewriteRule::new("t-split", 2, |letters, mu, ctx| {
        let [a, b] = letters else { return vec![] };
        if a.dir != Dir::Up || b.dir != Dir::Up || a.idx != b.idx {
            return vec![];
        }
        let i = a.idx;
        let word = SignedWord(vec![*a, *b]);
        let lhs = Diagram::new(
            mu.clone(),
            word.clone(),
            vec![
                Slice::new(0, GeneratorKind::UpDot(i)),
                Slice::new(0, GeneratorKind::UpCross(i, i)),
            ],
            ctx.datum,
        )
        .expect("dot under crossing is a valid stack");
        let crossed = Diagram::new(
            mu.clone(),
            word.clone(),
            vec![
                Slice::new(0, GeneratorKind::UpCross(i, i)),
                Slice::new(1, GeneratorKind::UpDot(i)),
            ],
            ctx.datum,
        )
        .expect("crossing under dot is a valid stack");
        let mut rhs = LinComb::from_diagram(crossed);
        rhs.insert(Rat::one(), Diagram::identity(word.clone(), mu.clone()))
            .expect("same interface");
        vec![ConcreteRule { lhs, rhs }]
    }))
}

/// A right-bent zigzag on one upward strand equals the straight strand.
fn t_snap() -> Arc<RewriteRule> {
    Arc::new(RewriteRule::new("t-snap", 1, |letters, mu, ctx| {
        let [l] = letters else { return vec![] };
        if l.dir != Dir::Up {
            return vec![];
        }
        let i = l.idx;
        let word = SignedWord(vec![*l]);
        let lhs = Diagram::new(
            mu.clone(),
            word.clone(),
            vec![
                Slice::new(1, GeneratorKind::RightCup(i)),
                Slice::new(0, GeneratorKind::RightCap(i)),
            ],
            ctx.datum,
        )
        .expect("zigzag is a valid stack");
        let rhs = LinComb::identity(word, mu.clone());
        vec![ConcreteRule { lhs, rhs }]
    }))
}

/// `x = x`: a rule that always applies and never changes anything.
fn t_spin() -> Arc<RewriteRule> {
    Arc::new(RewriteRule::new("t-spin", 1, |letters, mu, ctx| {
        let [l] = letters else { return vec![] };
        if l.dir != Dir::Up {
            return vec![];
        }
        let word = SignedWord(vec![*l]);
        let lhs = Diagram::new(
            mu.clone(),
            word.clone(),
            vec![Slice::new(0, GeneratorKind::UpDot(l.idx))],
            ctx.datum,
        )
        .expect("single dot is a valid stack");
        let rhs = LinComb::from_diagram(lhs.clone());
        vec![ConcreteRule { lhs, rhs }]
    }))
}

/// Dots on the outer strands of a width-3 corridor (the middle strand passes
/// through untouched) equal the identity.
fn t_wide() -> Arc<RewriteRule> {
    Arc::new(RewriteRule::new("t-wide", 3, |letters, mu, ctx| {
        let [a, b, c] = letters else { return vec![] };
        if [a, b, c].iter().any(|l| l.dir != Dir::Up) || a.idx != c.idx {
            return vec![];
        }
        let word = SignedWord(vec![*a, *b, *c]);
        let lhs = Diagram::new(
            mu.clone(),
            word.clone(),
            vec![
                Slice::new(0, GeneratorKind::UpDot(a.idx)),
                Slice::new(2, GeneratorKind::UpDot(a.idx)),
            ],
            ctx.datum,
        )
        .expect("two distant dots are a valid stack");
        let rhs = LinComb::identity(word, mu.clone());
        vec![ConcreteRule { lhs, rhs }]
    }))
}

/// A closed loop evaluates to the scalar 2; guarded by `⟨h_i, μ⟩ > 0` and
/// instantiated once per admissible color, exercising width-0 rules.
fn t_circle() -> Arc<RewriteRule> {
    Arc::new(RewriteRule::new("t-circle", 0, |letters, mu, ctx| {
        if !letters.is_empty() {
            return vec![];
        }
        let mut out = Vec::new();
        for i in 0..ctx.datum.rank() {
            if mu.pairing(i) > 0 {
                let lhs = Diagram::new(
                    mu.clone(),
                    SignedWord::default(),
                    vec![
                        Slice::new(0, GeneratorKind::SpadeCup(0, i)),
                        Slice::new(0, GeneratorKind::RightCap(i)),
                    ],
                    ctx.datum,
                )
                .expect("the loop respects the weight guard");
                let rhs = LinComb::from_scaled_diagram(
                    rat_int(2),
                    Diagram::identity(SignedWord::default(), mu.clone()),
                );
                out.push(ConcreteRule { lhs, rhs });
            }
        }
        out
    }))
}

#[test]
fn zap_kills_double_dots() {
    let datum = a1();
    let params = standard_params(&datum);
    let ctx = RuleContext {
        datum: &datum,
        params: &params,
    };
    let word = up_word(&[0]);
    let base = Weight::zero(1);
    let dot = Slice::new(0, GeneratorKind::UpDot(0));
    let x = LinComb::from_diagram(Diagram::new(base, word, vec![dot, dot], &datum).unwrap());
    let rule = t_zap();
    let occs = find_occurrences(&x, &rule, Direction::Forward, &ctx);
    assert_eq!(occs.len(), 1);
    assert_eq!(occs[0].levels, vec![0, 1]);
    let y = apply_at(&x, &rule, &occs[0], Direction::Forward, &ctx).unwrap();
    assert!(y.is_zero());
}

#[test]
fn three_stacked_dots_match_twice() {
    let datum = a1();
    let params = standard_params(&datum);
    let ctx = RuleContext {
        datum: &datum,
        params: &params,
    };
    let dot = Slice::new(0, GeneratorKind::UpDot(0));
    let x = LinComb::from_diagram(
        Diagram::new(Weight::zero(1), up_word(&[0]), vec![dot, dot, dot], &datum).unwrap(),
    );
    let occs = find_occurrences(&x, &t_zap(), Direction::Forward, &ctx);
    let found: Vec<Vec<usize>> = occs.iter().map(|o| o.levels.clone()).collect();
    // A chained stack cannot be pulled apart, so [0, 2] must not appear.
    assert_eq!(found, vec![vec![0, 1], vec![1, 2]]);
}

#[test]
fn matching_is_wire_local() {
    let datum = a1();
    let params = standard_params(&datum);
    let ctx = RuleContext {
        datum: &datum,
        params: &params,
    };
    let x = LinComb::from_diagram(
        Diagram::new(
            Weight::zero(1),
            up_word(&[0, 0]),
            vec![
                Slice::new(0, GeneratorKind::UpDot(0)),
                Slice::new(1, GeneratorKind::UpDot(0)),
            ],
            &datum,
        )
        .unwrap(),
    );
    assert!(find_occurrences(&x, &t_zap(), Direction::Forward, &ctx).is_empty());
}

#[test]
fn interleaved_context_floats_above_the_band() {
    let datum = a2();
    let params = standard_params(&datum);
    let ctx = RuleContext {
        datum: &datum,
        params: &params,
    };
    let word = up_word(&[0, 1, 0]);
    let base = Weight::zero(2);
    // A foreign dot sits level-between the two matched dots but on the
    // untouched middle wire; matching must skip over it.
    let x = LinComb::from_diagram(
        Diagram::new(
            base.clone(),
            word.clone(),
            vec![
                Slice::new(0, GeneratorKind::UpDot(0)),
                Slice::new(1, GeneratorKind::UpDot(1)),
                Slice::new(2, GeneratorKind::UpDot(0)),
            ],
            &datum,
        )
        .unwrap(),
    );
    let rule = t_wide();
    let occs = find_occurrences(&x, &rule, Direction::Forward, &ctx);
    assert_eq!(occs.len(), 1);
    assert_eq!(occs[0].levels, vec![0, 2]);
    let y = apply_at(&x, &rule, &occs[0], Direction::Forward, &ctx).unwrap();
    let expected = LinComb::from_diagram(
        Diagram::new(
            base,
            word,
            vec![Slice::new(1, GeneratorKind::UpDot(1))],
            &datum,
        )
        .unwrap(),
    );
    assert_eq!(y, expected);
}

#[test]
fn forward_then_backward_round_trips() {
    let datum = a1();
    let params = standard_params(&datum);
    let ctx = RuleContext {
        datum: &datum,
        params: &params,
    };
    let word = up_word(&[0, 0]);
    let base = Weight::zero(1);
    let lhs = Diagram::new(
        base.clone(),
        word.clone(),
        vec![
            Slice::new(0, GeneratorKind::UpDot(0)),
            Slice::new(0, GeneratorKind::UpCross(0, 0)),
        ],
        &datum,
    )
    .unwrap();
    let crossed = Diagram::new(
        base,
        word,
        vec![
            Slice::new(0, GeneratorKind::UpCross(0, 0)),
            Slice::new(1, GeneratorKind::UpDot(0)),
        ],
        &datum,
    )
    .unwrap();
    let x = LinComb::from_diagram(lhs);
    let rule = t_split();

    let fwd = find_occurrences(&x, &rule, Direction::Forward, &ctx);
    assert_eq!(fwd.len(), 1);
    let y = apply_at(&x, &rule, &fwd[0], Direction::Forward, &ctx).unwrap();
    assert_eq!(y.num_terms(), 2);

    // Undo at the same position: match the crossed right-hand term.
    let bwd = find_occurrences(&y, &rule, Direction::Backward, &ctx);
    let undo = bwd
        .iter()
        .find(|o| !o.levels.is_empty() && o.term == crossed)
        .expect("the crossed term matches backward");
    let z = apply_at(&y, &rule, undo, Direction::Backward, &ctx).unwrap();
    assert_eq!(z, x);
}

#[test]
fn backward_identity_match_grows_a_zigzag() {
    let datum = a1();
    let params = standard_params(&datum);
    let ctx = RuleContext {
        datum: &datum,
        params: &params,
    };
    let word = up_word(&[0]);
    let base = Weight::zero(1);
    let x = LinComb::identity(word.clone(), base.clone());
    let rule = t_snap();

    let occs = find_occurrences(&x, &rule, Direction::Backward, &ctx);
    assert_eq!(occs.len(), 1);
    assert!(occs[0].levels.is_empty());
    let grown = apply_at(&x, &rule, &occs[0], Direction::Backward, &ctx).unwrap();
    let zigzag = LinComb::from_diagram(
        Diagram::new(
            base,
            word,
            vec![
                Slice::new(1, GeneratorKind::RightCup(0)),
                Slice::new(0, GeneratorKind::RightCap(0)),
            ],
            &datum,
        )
        .unwrap(),
    );
    assert_eq!(grown, zigzag);

    let rules = RuleSet::forward([t_snap()]);
    let (back, exhausted) = normalize(&grown, &rules, Strategy::LeftmostFirst, 10, &ctx);
    assert!(!exhausted);
    assert_eq!(back, x);
}

#[test]
fn normalize_collapses_stacked_zigzags() {
    let datum = a1();
    let params = standard_params(&datum);
    let ctx = RuleContext {
        datum: &datum,
        params: &params,
    };
    let word = up_word(&[0]);
    let base = Weight::zero(1);
    let x = LinComb::from_diagram(
        Diagram::new(
            base.clone(),
            word.clone(),
            vec![
                Slice::new(1, GeneratorKind::RightCup(0)),
                Slice::new(0, GeneratorKind::RightCap(0)),
                Slice::new(1, GeneratorKind::RightCup(0)),
                Slice::new(0, GeneratorKind::RightCap(0)),
            ],
            &datum,
        )
        .unwrap(),
    );
    let rules = RuleSet::forward([t_snap()]);
    let (nf, exhausted) = normalize(&x, &rules, Strategy::LeftmostFirst, 100, &ctx);
    assert!(!exhausted);
    assert_eq!(nf, LinComb::identity(word, base));
}

#[test]
fn fuel_exhaustion_is_reported() {
    let datum = a1();
    let params = standard_params(&datum);
    let ctx = RuleContext {
        datum: &datum,
        params: &params,
    };
    let x = LinComb::from_diagram(
        Diagram::new(
            Weight::zero(1),
            up_word(&[0]),
            vec![Slice::new(0, GeneratorKind::UpDot(0))],
            &datum,
        )
        .unwrap(),
    );
    let rules = RuleSet::forward([t_spin()]);
    let (same, exhausted) = normalize(&x, &rules, Strategy::LeftmostFirst, 7, &ctx);
    assert!(exhausted);
    assert_eq!(same, x);

    // Zero fuel on an already-normal input is not exhaustion.
    let id = LinComb::identity(up_word(&[0]), Weight::zero(1));
    let (nf, exhausted) = normalize(&id, &rules, Strategy::LeftmostFirst, 0, &ctx);
    assert!(!exhausted);
    assert_eq!(nf, id);
}

#[test]
fn seeded_strategies_agree_on_a_confluent_set() {
    let datum = a1();
    let params = standard_params(&datum);
    let ctx = RuleContext {
        datum: &datum,
        params: &params,
    };
    let x = LinComb::from_diagram(
        Diagram::new(
            Weight::zero(1),
            up_word(&[0, 0]),
            vec![
                Slice::new(0, GeneratorKind::UpDot(0)),
                Slice::new(0, GeneratorKind::UpDot(0)),
                Slice::new(1, GeneratorKind::UpDot(0)),
                Slice::new(1, GeneratorKind::UpDot(0)),
            ],
            &datum,
        )
        .unwrap(),
    );
    let rules = RuleSet::forward([t_zap()]);
    let (a, _) = normalize(&x, &rules, Strategy::Seeded(5), 100, &ctx);
    let (a2, _) = normalize(&x, &rules, Strategy::Seeded(5), 100, &ctx);
    let (b, _) = normalize(&x, &rules, Strategy::Seeded(9), 100, &ctx);
    assert_eq!(a, a2);
    assert_eq!(a, b);
    assert!(a.is_zero());
}

#[test]
fn equal_modulo_gives_all_three_verdicts() {
    let datum = a1();
    let params = standard_params(&datum);
    let ctx = RuleContext {
        datum: &datum,
        params: &params,
    };
    let word = up_word(&[0]);
    let base = Weight::zero(1);
    let dot = Slice::new(0, GeneratorKind::UpDot(0));
    let double = LinComb::from_diagram(
        Diagram::new(base.clone(), word.clone(), vec![dot, dot], &datum).unwrap(),
    );
    let single =
        LinComb::from_diagram(Diagram::new(base.clone(), word.clone(), vec![dot], &datum).unwrap());
    let zero = LinComb::zero(double.interface().clone());
    let id = LinComb::identity(word.clone(), base.clone());

    let zap = RuleSet::forward([t_zap()]);
    assert_eq!(
        equal_modulo(&double, &zero, &zap, 100, &ctx).unwrap(),
        Equivalence::Equal
    );

    let none = RuleSet::default();
    assert_eq!(
        equal_modulo(&single, &id, &none, 100, &ctx).unwrap(),
        Equivalence::UnequalInNormalForm
    );

    let spin = RuleSet::forward([t_spin()]);
    assert_eq!(
        equal_modulo(&single, &id, &spin, 100, &ctx).unwrap(),
        Equivalence::Unknown
    );

    let wider = LinComb::identity(up_word(&[0, 0]), base);
    assert!(matches!(
        equal_modulo(&single, &wider, &none, 100, &ctx),
        Err(EngineError::InterfaceMismatch { .. })
    ));
}

#[test]
fn stale_occurrences_are_rejected() {
    let datum = a1();
    let params = standard_params(&datum);
    let ctx = RuleContext {
        datum: &datum,
        params: &params,
    };
    let word = up_word(&[0]);
    let base = Weight::zero(1);
    let dot = Slice::new(0, GeneratorKind::UpDot(0));
    let x = LinComb::from_diagram(Diagram::new(base, word, vec![dot, dot], &datum).unwrap());
    let rule = t_zap();
    let occ = find_occurrences(&x, &rule, Direction::Forward, &ctx)
        .into_iter()
        .next()
        .unwrap();
    let elsewhere = LinComb::zero(x.interface().clone());
    assert!(matches!(
        apply_at(&elsewhere, &rule, &occ, Direction::Forward, &ctx),
        Err(EngineError::StaleOccurrence(_))
    ));
}

#[test]
fn closed_rules_respect_weight_guards() {
    let datum = a1();
    let params = standard_params(&datum);
    let ctx = RuleContext {
        datum: &datum,
        params: &params,
    };
    let rule = t_circle();

    // At ⟨h_0, μ⟩ = 0 the loop cannot even be drawn and no instance exists.
    assert!(rule.instances(&[], &Weight::zero(1), &ctx).is_empty());

    let base = Weight::new(vec![1]);
    let loop_diag = Diagram::new(
        base.clone(),
        SignedWord::default(),
        vec![
            Slice::new(0, GeneratorKind::SpadeCup(0, 0)),
            Slice::new(0, GeneratorKind::RightCap(0)),
        ],
        &datum,
    )
    .unwrap();
    let x = LinComb::from_diagram(loop_diag.clone());
    let occs = find_occurrences(&x, &rule, Direction::Forward, &ctx);
    assert_eq!(occs.len(), 1);
    let y = apply_at(&x, &rule, &occs[0], Direction::Forward, &ctx).unwrap();
    let two =
        LinComb::from_scaled_diagram(rat_int(2), Diagram::identity(SignedWord::default(), base));
    assert_eq!(y, two);

    // Backward from the scalar side re-introduces the loop.
    let bwd = find_occurrences(&two, &rule, Direction::Backward, &ctx);
    assert_eq!(bwd.len(), 1);
    let z = apply_at(&two, &rule, &bwd[0], Direction::Backward, &ctx).unwrap();
    assert_eq!(z, LinComb::from_diagram(loop_diag));
}
