//! The defining relations: the dot/crossing commutation family, the square
//! of the crossing, the braid-style relation, the rightward adjunction, and
//! the component equations of the three two-sided inverses.
//!
//! Each constructor yields a rule whose closure filters boundaries, so the
//! engine may probe any corridor; inadmissible boundaries produce nothing.

use crate::recipe::{dots, instance, one, Steps};
use diagram_core::Dir;
use diagram_core::GeneratorKind::*;
use rule_engine::{ConcreteRule, RewriteRule};

/// Dots slide across the upward crossing at the cost of an identity when the
/// colors agree: one equation per choice of which strand carries the dot.
pub fn qha() -> RewriteRule {
    RewriteRule::new("qha", 2, |letters, mu, ctx| {
        let &[a, b] = letters else {
            return Vec::new();
        };
        if a.dir != Dir::Up || b.dir != Dir::Up {
            return Vec::new();
        }
        let (i, j) = (a.idx, b.idx);
        let mut out = Vec::new();
        // Dot above the crossing on the strand entering bottom-left.
        let mut rhs = vec![(one(), vec![(0, UpDot(i)), (0, UpCross(i, j))])];
        if i == j {
            rhs.push((-one(), Vec::new()));
        }
        out.extend(instance(
            ctx,
            mu,
            letters,
            (one(), vec![(0, UpCross(i, j)), (1, UpDot(i))]),
            rhs,
        ));
        // Dot above the crossing on the strand entering bottom-right.
        let mut rhs = vec![(one(), vec![(1, UpDot(j)), (0, UpCross(i, j))])];
        if i == j {
            rhs.push((one(), Vec::new()));
        }
        out.extend(instance(
            ctx,
            mu,
            letters,
            (one(), vec![(0, UpCross(i, j)), (0, UpDot(j))]),
            rhs,
        ));
        out
    })
}

/// The square of the upward crossing: zero on equal colors, otherwise the
/// dotted-identity polynomial with the chosen coefficients.
pub fn now() -> RewriteRule {
    RewriteRule::new("now", 2, |letters, mu, ctx| {
        let &[a, b] = letters else {
            return Vec::new();
        };
        if a.dir != Dir::Up || b.dir != Dir::Up {
            return Vec::new();
        }
        let (i, j) = (a.idx, b.idx);
        let lhs = (one(), vec![(0, UpCross(i, j)), (0, UpCross(j, i))]);
        let rhs: Vec<(cartan_config::Rat, Steps)> = if i == j {
            Vec::new()
        } else if ctx.datum.d_off(i, j) == 0 {
            vec![(ctx.params.t(i, j), Vec::new())]
        } else {
            let dij = ctx.datum.d_off(i, j) as usize;
            let dji = ctx.datum.d_off(j, i) as usize;
            let mut terms = vec![
                (ctx.params.t(i, j), dots(0, i, dij)),
                (ctx.params.t(j, i), dots(1, j, dji)),
            ];
            for p in 0..dij {
                for q in 0..dji {
                    let s = ctx.params.s(i, j, p, q);
                    if !num_traits::Zero::is_zero(&s) {
                        let mut steps = dots(0, i, p);
                        steps.extend(dots(1, j, q));
                        terms.push((s, steps));
                    }
                }
            }
            terms
        };
        instance(ctx, mu, letters, lhs, rhs).into_iter().collect()
    })
}

/// The braid-style relation for three upward strands, with its correction
/// when the outer colors agree and differ from the middle one.
pub fn qhalast() -> RewriteRule {
    RewriteRule::new("qhalast", 3, |letters, mu, ctx| {
        let &[a, b, c] = letters else {
            return Vec::new();
        };
        if a.dir != Dir::Up || b.dir != Dir::Up || c.dir != Dir::Up {
            return Vec::new();
        }
        let (i, j, k) = (a.idx, b.idx, c.idx);
        let lhs = (
            one(),
            vec![(0, UpCross(i, j)), (1, UpCross(i, k)), (0, UpCross(j, k))],
        );
        let mut rhs = vec![(
            one(),
            vec![(1, UpCross(j, k)), (0, UpCross(i, k)), (1, UpCross(i, j))],
        )];
        if i == k && i != j {
            let dij = ctx.datum.d_off(i, j) as usize;
            let dji = ctx.datum.d_off(j, i) as usize;
            for r in 0..dij {
                let s = dij - 1 - r;
                let mut steps = dots(0, i, r);
                steps.extend(dots(2, i, s));
                rhs.push((ctx.params.t(i, j), steps));
            }
            for p in 0..dij {
                for q in 0..dji {
                    let sval = ctx.params.s(i, j, p, q);
                    if num_traits::Zero::is_zero(&sval) {
                        continue;
                    }
                    for r in 0..p {
                        let s = p - 1 - r;
                        let mut steps = dots(0, i, r);
                        steps.extend(dots(1, j, q));
                        steps.extend(dots(2, i, s));
                        rhs.push((sval.clone(), steps));
                    }
                }
            }
        }
        instance(ctx, mu, letters, lhs, rhs).into_iter().collect()
    })
}

/// The rightward cup and cap are adjoint: both zig-zags straighten.
pub fn rightadj() -> RewriteRule {
    RewriteRule::new("rightadj", 1, |letters, mu, ctx| {
        let &[a] = letters else {
            return Vec::new();
        };
        let i = a.idx;
        let lhs = match a.dir {
            Dir::Up => vec![(1, RightCup(i)), (0, RightCap(i))],
            Dir::Down => vec![(0, RightCup(i)), (1, RightCap(i))],
        };
        instance(ctx, mu, letters, (one(), lhs), vec![(one(), Vec::new())])
            .into_iter()
            .collect()
    })
}

/// On distinct colors the two sideways crossings compose to the identity in
/// both orders.
pub fn inv1_comp() -> RewriteRule {
    RewriteRule::new("inv1-comp", 2, |letters, mu, ctx| {
        let &[a, b] = letters else {
            return Vec::new();
        };
        if a.idx == b.idx {
            return Vec::new();
        }
        let lhs = match (a.dir, b.dir) {
            (Dir::Down, Dir::Up) => vec![
                (0, InvSide(a.idx, b.idx)),
                (0, SideCross(b.idx, a.idx)),
            ],
            (Dir::Up, Dir::Down) => vec![
                (0, SideCross(a.idx, b.idx)),
                (0, InvSide(b.idx, a.idx)),
            ],
            _ => return Vec::new(),
        };
        instance(ctx, mu, letters, (one(), lhs), vec![(one(), Vec::new())])
            .into_iter()
            .collect()
    })
}

/// Component equations of the inverse that pads the sideways crossing with
/// spades on a same-colored pair: the two-strand rows and the closed rows.
pub fn inv2_comp() -> RewriteRule {
    RewriteRule::with_widths("inv2-comp", vec![2, 0], |letters, mu, ctx| {
        let mut out: Vec<ConcreteRule> = Vec::new();
        match letters {
            [a, b] if a.dir == Dir::Up && b.dir == Dir::Down && a.idx == b.idx => {
                let i = a.idx;
                let h = mu.pairing(i);
                // Round trip through the sideways crossings, all weights.
                let mut rhs: Vec<(cartan_config::Rat, Steps)> = vec![(-one(), Vec::new())];
                for n in 0..h.max(0) as usize {
                    let mut steps = dots(0, i, n);
                    steps.push((0, RightCap(i)));
                    steps.push((0, SpadeCup(n, i)));
                    rhs.push((one(), steps));
                }
                out.extend(instance(
                    ctx,
                    mu,
                    letters,
                    (one(), vec![(0, SideCross(i, i)), (0, InvSideSame(i))]),
                    rhs,
                ));
            }
            [a, b] if a.dir == Dir::Down && b.dir == Dir::Up && a.idx == b.idx => {
                let i = a.idx;
                let h = mu.pairing(i);
                // Dotted cap after the inverse sideways crossing vanishes.
                for m in 0..h.max(0) as usize {
                    let mut lhs = vec![(0, InvSideSame(i))];
                    lhs.extend(dots(0, i, m));
                    lhs.push((0, RightCap(i)));
                    out.extend(instance(ctx, mu, letters, (one(), lhs), Vec::new()));
                }
            }
            [] => {
                for i in ctx.datum.indices() {
                    let h = mu.pairing(i);
                    for n in 0..h.max(0) as usize {
                        // A spade capped by the sideways crossing vanishes.
                        out.extend(instance(
                            ctx,
                            mu,
                            letters,
                            (
                                one(),
                                vec![(0, SpadeCup(n, i)), (0, SideCross(i, i))],
                            ),
                            Vec::new(),
                        ));
                        // Spade against dotted cap is a Kronecker delta.
                        for m in 0..h.max(0) as usize {
                            let mut lhs = vec![(0, SpadeCup(n, i))];
                            lhs.extend(dots(0, i, m));
                            lhs.push((0, RightCap(i)));
                            let rhs = if m == n {
                                vec![(one(), Vec::new())]
                            } else {
                                Vec::new()
                            };
                            out.extend(instance(ctx, mu, letters, (one(), lhs), rhs));
                        }
                    }
                }
            }
            _ => {}
        }
        out
    })
}

/// Component equations of the inverse that pads the sideways crossing with
/// clubs on a same-colored pair, mirroring the spade family.
pub fn inv3_comp() -> RewriteRule {
    RewriteRule::with_widths("inv3-comp", vec![2, 0], |letters, mu, ctx| {
        let mut out: Vec<ConcreteRule> = Vec::new();
        match letters {
            [a, b] if a.dir == Dir::Down && b.dir == Dir::Up && a.idx == b.idx => {
                let i = a.idx;
                let h = mu.pairing(i);
                // Round trip in the other order, all weights.
                let mut rhs: Vec<(cartan_config::Rat, Steps)> = vec![(-one(), Vec::new())];
                for n in 0..(-h).max(0) as usize {
                    let mut steps = vec![(0, ClubCap(n, i)), (0, RightCup(i))];
                    steps.extend(dots(1, i, n));
                    rhs.push((one(), steps));
                }
                out.extend(instance(
                    ctx,
                    mu,
                    letters,
                    (one(), vec![(0, InvSideSame(i)), (0, SideCross(i, i))]),
                    rhs,
                ));
            }
            [a, b] if a.dir == Dir::Up && b.dir == Dir::Down && a.idx == b.idx => {
                let i = a.idx;
                let h = mu.pairing(i);
                // The sideways crossing followed by a club vanishes.
                for k in 0..(-h).max(0) as usize {
                    let lhs = vec![(0, SideCross(i, i)), (0, ClubCap(k, i))];
                    out.extend(instance(ctx, mu, letters, (one(), lhs), Vec::new()));
                }
            }
            [] => {
                for i in ctx.datum.indices() {
                    let h = mu.pairing(i);
                    for l in 0..(-h).max(0) as usize {
                        // A dotted cup under the inverse crossing vanishes.
                        let mut lhs = vec![(0, RightCup(i))];
                        lhs.extend(dots(1, i, l));
                        lhs.push((0, InvSideSame(i)));
                        out.extend(instance(ctx, mu, letters, (one(), lhs), Vec::new()));
                        // Dotted cup against a club is a Kronecker delta.
                        for k in 0..(-h).max(0) as usize {
                            let mut lhs = vec![(0, RightCup(i))];
                            lhs.extend(dots(1, i, l));
                            lhs.push((0, ClubCap(k, i)));
                            let rhs = if k == l {
                                vec![(one(), Vec::new())]
                            } else {
                                Vec::new()
                            };
                            out.extend(instance(ctx, mu, letters, (one(), lhs), rhs));
                        }
                    }
                }
            }
            _ => {}
        }
        out
    })
}

/// The seven defining rules in a fixed order.
pub fn all_defining() -> Vec<RewriteRule> {
    vec![
        qha(),
        now(),
        qhalast(),
        rightadj(),
        inv1_comp(),
        inv2_comp(),
        inv3_comp(),
    ]
}

/// Names of the defining rules, in the same order as [`all_defining`].
pub const DEFINING_NAMES: [&str; 7] = [
    "qha",
    "now",
    "qhalast",
    "rightadj",
    "inv1-comp",
    "inv2-comp",
    "inv3-comp",
];
