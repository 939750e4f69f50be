//! Derived rules: equations that are consequences of the defining relations.
//!
//! Every constructor here states an equation only; none of them is usable
//! for rewriting until the registry has admitted it, which the proof checker
//! does after replaying the corresponding proof obligation. The closures
//! filter boundaries and weights, so a rule simply has no instances where
//! its guard fails.

use crate::recipe::{
    bubble_value, dots, down_dots, instance, int, inv_side, one, Steps,
};
use cartan_config::Rat;
use diagram_core::Dir;
use diagram_core::GeneratorKind::*;
use rule_engine::{ConcreteRule, RewriteRule};

/// How many extra dotted circles beyond the forced range each closed-circle
/// reduction offers; bounds instance lists at empty boundaries.
const CIRCLE_SPAN: i64 = 8;

/// Downward dots slide through the rightward cup and cap unchanged.
pub fn first() -> RewriteRule {
    RewriteRule::with_widths("first", vec![0, 2], |letters, mu, ctx| {
        let mut out: Vec<ConcreteRule> = Vec::new();
        match letters {
            [] => {
                for i in ctx.datum.indices() {
                    out.extend(instance(
                        ctx,
                        mu,
                        letters,
                        (one(), vec![(0, RightCup(i)), (0, DownDot(i))]),
                        vec![(one(), vec![(0, RightCup(i)), (1, UpDot(i))])],
                    ));
                }
            }
            [a, b] if a.dir == Dir::Up && b.dir == Dir::Down && a.idx == b.idx => {
                let i = a.idx;
                out.extend(instance(
                    ctx,
                    mu,
                    letters,
                    (one(), vec![(1, DownDot(i)), (0, RightCap(i))]),
                    vec![(one(), vec![(0, UpDot(i)), (0, RightCap(i))])],
                ));
            }
            _ => {}
        }
        out
    })
}

/// The sideways crossing absorbs into the rightward cup and cap as an upward
/// crossing on the other side.
pub fn rightpitchfork() -> RewriteRule {
    RewriteRule::with_widths("rightpitchfork", vec![3, 1], |letters, mu, ctx| {
        let mut out: Vec<ConcreteRule> = Vec::new();
        match letters {
            [a, b, c]
                if a.dir == Dir::Up
                    && b.dir == Dir::Up
                    && c.dir == Dir::Down
                    && a.idx == c.idx =>
            {
                let (i, j) = (a.idx, b.idx);
                out.extend(instance(
                    ctx,
                    mu,
                    letters,
                    (one(), vec![(1, SideCross(j, i)), (0, RightCap(i))]),
                    vec![(one(), vec![(0, UpCross(i, j)), (1, RightCap(i))])],
                ));
            }
            [a] if a.dir == Dir::Up => {
                let j = a.idx;
                for i in ctx.datum.indices() {
                    out.extend(instance(
                        ctx,
                        mu,
                        letters,
                        (one(), vec![(1, RightCup(i)), (0, SideCross(j, i))]),
                        vec![(one(), vec![(0, RightCup(i)), (1, UpCross(i, j))])],
                    ));
                }
            }
            _ => {}
        }
        out
    })
}

/// Dots slide through the sideways crossing, with a cap-cup correction on
/// equal colors: one equation per side carrying the dot.
pub fn rtcross() -> RewriteRule {
    RewriteRule::new("rtcross", 2, |letters, mu, ctx| {
        let &[a, b] = letters else {
            return Vec::new();
        };
        if a.dir != Dir::Up || b.dir != Dir::Down {
            return Vec::new();
        }
        let (i, j) = (a.idx, b.idx);
        let delta = if i == j { int(1) } else { int(0) };
        let cross_terms = |d: Rat| -> Vec<(Rat, Steps)> {
            if num_traits::Zero::is_zero(&d) {
                Vec::new()
            } else {
                vec![(d, vec![(0, RightCap(i)), (0, RightCup(i))])]
            }
        };
        let mut out = Vec::new();
        let mut rhs = vec![(one(), vec![(0, UpDot(i)), (0, SideCross(i, j))])];
        rhs.extend(cross_terms(delta.clone()));
        out.extend(instance(
            ctx,
            mu,
            letters,
            (one(), vec![(0, SideCross(i, j)), (1, UpDot(i))]),
            rhs,
        ));
        let mut rhs = vec![(one(), vec![(1, DownDot(j)), (0, SideCross(i, j))])];
        rhs.extend(cross_terms(delta));
        out.extend(instance(
            ctx,
            mu,
            letters,
            (one(), vec![(0, SideCross(i, j)), (0, DownDot(j))]),
            rhs,
        ));
        out
    })
}

/// The upward crossing slides past a downward strand through two sideways
/// crossings, with the same correction as the braid-style relation.
pub fn lurking() -> RewriteRule {
    RewriteRule::new("lurking", 3, |letters, mu, ctx| {
        let &[a, b, c] = letters else {
            return Vec::new();
        };
        if a.dir != Dir::Up || b.dir != Dir::Up || c.dir != Dir::Down {
            return Vec::new();
        }
        let (j, k, i) = (a.idx, b.idx, c.idx);
        let lhs = (
            one(),
            vec![
                (1, SideCross(k, i)),
                (0, SideCross(j, i)),
                (1, UpCross(j, k)),
            ],
        );
        let mut rhs = vec![(
            one(),
            vec![
                (0, UpCross(j, k)),
                (1, SideCross(j, i)),
                (0, SideCross(k, i)),
            ],
        )];
        if i == k && i != j {
            let dij = ctx.datum.d_off(i, j) as usize;
            let dji = ctx.datum.d_off(j, i) as usize;
            for r in 0..dij {
                let s = dij - 1 - r;
                let mut steps = dots(1, i, s);
                steps.push((1, RightCap(i)));
                steps.push((0, RightCup(i)));
                steps.extend(dots(1, i, r));
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
                        let mut steps = dots(1, i, s);
                        steps.push((1, RightCap(i)));
                        steps.extend(dots(0, j, q));
                        steps.push((0, RightCup(i)));
                        steps.extend(dots(1, i, r));
                        rhs.push((sval.clone(), steps));
                    }
                }
            }
        }
        instance(ctx, mu, letters, lhs, rhs).into_iter().collect()
    })
}

/// The three downward analogues of the upward dot and braid relations, with
/// primed coefficients.
pub fn qhadown() -> RewriteRule {
    RewriteRule::with_widths("qhadown", vec![2, 3], |letters, mu, ctx| {
        let mut out: Vec<ConcreteRule> = Vec::new();
        match letters {
            [a, b] if a.dir == Dir::Down && b.dir == Dir::Down => {
                let (j2, i2) = (a.idx, b.idx);
                // Dot relations, stated on the pair as it enters the crossing.
                let mut rhs = vec![(one(), vec![(0, DownDot(j2)), (0, DownCross(j2, i2))])];
                if i2 == j2 {
                    rhs.push((one(), Vec::new()));
                }
                out.extend(instance(
                    ctx,
                    mu,
                    letters,
                    (one(), vec![(0, DownCross(j2, i2)), (1, DownDot(j2))]),
                    rhs,
                ));
                let mut rhs = vec![(one(), vec![(0, DownCross(j2, i2)), (0, DownDot(i2))])];
                if i2 == j2 {
                    rhs.push((one(), Vec::new()));
                }
                out.extend(instance(
                    ctx,
                    mu,
                    letters,
                    (one(), vec![(1, DownDot(i2)), (0, DownCross(j2, i2))]),
                    rhs,
                ));
                // Square of the downward crossing.
                let (i, j) = (a.idx, b.idx);
                let lhs = (
                    one(),
                    vec![(0, DownCross(i, j)), (0, DownCross(j, i))],
                );
                let tp = |x: usize, y: usize| ctx.params.t(y, x).recip();
                let sp = |p: usize, q: usize| {
                    ctx.params.s(j, i, q, p)
                        / (ctx.params.t(i, j) * ctx.params.t(j, i))
                };
                let rhs: Vec<(Rat, Steps)> = if i == j {
                    Vec::new()
                } else if ctx.datum.d_off(i, j) == 0 {
                    vec![(tp(i, j), Vec::new())]
                } else {
                    let dij = ctx.datum.d_off(i, j) as usize;
                    let dji = ctx.datum.d_off(j, i) as usize;
                    let mut terms = vec![
                        (tp(i, j), down_dots(0, i, dij)),
                        (tp(j, i), down_dots(1, j, dji)),
                    ];
                    for p in 0..dij {
                        for q in 0..dji {
                            let sv = sp(p, q);
                            if !num_traits::Zero::is_zero(&sv) {
                                let mut steps = down_dots(0, i, p);
                                steps.extend(down_dots(1, j, q));
                                terms.push((sv, steps));
                            }
                        }
                    }
                    terms
                };
                out.extend(instance(ctx, mu, letters, lhs, rhs));
            }
            [a, b, c]
                if a.dir == Dir::Down && b.dir == Dir::Down && c.dir == Dir::Down =>
            {
                let (k, j, i) = (a.idx, b.idx, c.idx);
                let lhs = (
                    one(),
                    vec![
                        (1, DownCross(j, i)),
                        (0, DownCross(k, i)),
                        (1, DownCross(k, j)),
                    ],
                );
                let mut rhs = vec![(
                    one(),
                    vec![
                        (0, DownCross(k, j)),
                        (1, DownCross(k, i)),
                        (0, DownCross(j, i)),
                    ],
                )];
                if i == k && i != j {
                    let dij = ctx.datum.d_off(i, j) as usize;
                    let dji = ctx.datum.d_off(j, i) as usize;
                    let tp = ctx.params.t(j, i).recip();
                    for r in 0..dij {
                        let s = dij - 1 - r;
                        let mut steps = down_dots(0, i, r);
                        steps.extend(down_dots(2, i, s));
                        rhs.push((tp.clone(), steps));
                    }
                    for p in 0..dij {
                        for q in 0..dji {
                            let sv = ctx.params.s(j, i, q, p)
                                / (ctx.params.t(i, j) * ctx.params.t(j, i));
                            if num_traits::Zero::is_zero(&sv) {
                                continue;
                            }
                            for r in 0..p {
                                let s = p - 1 - r;
                                let mut steps = down_dots(0, i, r);
                                steps.extend(down_dots(1, j, q));
                                steps.extend(down_dots(2, i, s));
                                rhs.push((sv.clone(), steps));
                            }
                        }
                    }
                }
                out.extend(instance(ctx, mu, letters, lhs, rhs));
            }
            _ => {}
        }
        out
    })
}

/// Round trips through the two sideways crossings on a same-colored pair:
/// minus the identity plus the spade or club correction.
pub fn posneg() -> RewriteRule {
    RewriteRule::new("posneg", 2, |letters, mu, ctx| {
        let mut out: Vec<ConcreteRule> = Vec::new();
        match letters {
            [a, b] if a.dir == Dir::Up && b.dir == Dir::Down && a.idx == b.idx => {
                let i = a.idx;
                let h = mu.pairing(i);
                let mut rhs: Vec<(Rat, Steps)> = vec![(-one(), Vec::new())];
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
                let mut rhs: Vec<(Rat, Steps)> = vec![(-one(), Vec::new())];
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
            _ => {}
        }
        out
    })
}

/// At strictly dominant local pairing: the leftward cup dies under the
/// sideways crossing, dotted caps kill the inverse crossing, and small
/// clockwise circles are Kronecker deltas.
pub fn startb() -> RewriteRule {
    RewriteRule::with_widths("startb", vec![0, 2], |letters, mu, ctx| {
        let mut out: Vec<ConcreteRule> = Vec::new();
        match letters {
            [] => {
                for i in ctx.datum.indices() {
                    let h = mu.pairing(i);
                    if h < 1 {
                        continue;
                    }
                    out.extend(instance(
                        ctx,
                        mu,
                        letters,
                        (one(), vec![(0, LeftCup(i)), (0, SideCross(i, i))]),
                        Vec::new(),
                    ));
                    for n in 0..h as usize {
                        let mut lhs = vec![(0, LeftCup(i))];
                        lhs.extend(dots(0, i, n));
                        lhs.push((0, RightCap(i)));
                        let rhs = if n as i64 == h - 1 {
                            vec![(one(), Vec::new())]
                        } else {
                            Vec::new()
                        };
                        out.extend(instance(ctx, mu, letters, (one(), lhs), rhs));
                    }
                }
            }
            [a, b] if a.dir == Dir::Down && b.dir == Dir::Up && a.idx == b.idx => {
                let i = a.idx;
                let h = mu.pairing(i);
                for n in 0..h.max(0) as usize {
                    let mut lhs = vec![(0, InvSideSame(i))];
                    lhs.extend(dots(0, i, n));
                    lhs.push((0, RightCap(i)));
                    out.extend(instance(ctx, mu, letters, (one(), lhs), Vec::new()));
                }
            }
            _ => {}
        }
        out
    })
}

/// The mirror of the dominant-weight family at strictly antidominant local
/// pairing, with counterclockwise circles.
pub fn startd() -> RewriteRule {
    RewriteRule::with_widths("startd", vec![0, 2], |letters, mu, ctx| {
        let mut out: Vec<ConcreteRule> = Vec::new();
        match letters {
            [] => {
                for i in ctx.datum.indices() {
                    let h = mu.pairing(i);
                    if h > -1 {
                        continue;
                    }
                    for n in 0..(-h) as usize {
                        let mut lhs = vec![(0, RightCup(i))];
                        lhs.extend(dots(1, i, n));
                        lhs.push((0, InvSideSame(i)));
                        out.extend(instance(ctx, mu, letters, (one(), lhs), Vec::new()));
                        let mut lhs = vec![(0, RightCup(i))];
                        lhs.extend(dots(1, i, n));
                        lhs.push((0, LeftCap(i)));
                        let rhs = if n as i64 == -h - 1 {
                            vec![(one(), Vec::new())]
                        } else {
                            Vec::new()
                        };
                        out.extend(instance(ctx, mu, letters, (one(), lhs), rhs));
                    }
                }
            }
            [a, b] if a.dir == Dir::Up && b.dir == Dir::Down && a.idx == b.idx => {
                let i = a.idx;
                let h = mu.pairing(i);
                if h <= -1 {
                    out.extend(instance(
                        ctx,
                        mu,
                        letters,
                        (one(), vec![(0, SideCross(i, i)), (0, LeftCap(i))]),
                        Vec::new(),
                    ));
                }
            }
            _ => {}
        }
        out
    })
}

/// The infinite Grassmannian relation, oriented to eliminate large
/// counterclockwise circles in favor of clockwise ones.
pub fn ig3() -> RewriteRule {
    RewriteRule::new("ig3", 0, |letters, mu, ctx| {
        if !letters.is_empty() {
            return Vec::new();
        }
        let mut out: Vec<ConcreteRule> = Vec::new();
        for i in ctx.datum.indices() {
            let h = mu.pairing(i);
            let start = 0i64.max(-h);
            for m in start..start + CIRCLE_SPAN {
                let mut lhs = vec![(0, RightCup(i))];
                lhs.extend(dots(1, i, m as usize));
                lhs.push((0, LeftCap(i)));
                let mut rhs: Vec<(Rat, Steps)> = Vec::new();
                for s in (-h - 1)..m {
                    let r = m + h - 1 - s;
                    let Some((c_cw, mut steps)) = bubble_value(ctx.datum, mu, i, true, r, 0)
                    else {
                        continue;
                    };
                    let Some((c_ccw, ccw_steps)) =
                        bubble_value(ctx.datum, mu, i, false, s, 0)
                    else {
                        continue;
                    };
                    steps.extend(ccw_steps);
                    rhs.push((-c_cw * c_ccw, steps));
                }
                out.extend(instance(ctx, mu, letters, (one(), lhs), rhs));
            }
        }
        out
    })
}

/// Spades expand into dotted leftward cups against negatively dotted
/// counterclockwise circles.
pub fn inv_a() -> RewriteRule {
    RewriteRule::new("invA", 0, |letters, mu, ctx| {
        if !letters.is_empty() {
            return Vec::new();
        }
        let mut out: Vec<ConcreteRule> = Vec::new();
        for i in ctx.datum.indices() {
            let h = mu.pairing(i);
            for n in 0..h.max(0) as usize {
                let mut rhs: Vec<(Rat, Steps)> = Vec::new();
                for r in 0..=(h - 1 - n as i64).max(0) as usize {
                    let idx = -(n as i64) - (r as i64) - 2;
                    let Some((c, mut steps)) = bubble_value(ctx.datum, mu, i, false, idx, 0)
                    else {
                        continue;
                    };
                    steps.push((0, LeftCup(i)));
                    steps.extend(dots(0, i, r));
                    rhs.push((c, steps));
                }
                out.extend(instance(
                    ctx,
                    mu,
                    letters,
                    (one(), vec![(0, SpadeCup(n, i))]),
                    rhs,
                ));
            }
        }
        out
    })
}

/// Clubs expand into dotted leftward caps against negatively dotted
/// clockwise circles.
pub fn inv_b() -> RewriteRule {
    RewriteRule::new("invB", 2, |letters, mu, ctx| {
        let &[a, b] = letters else {
            return Vec::new();
        };
        if !(a.dir == Dir::Down && b.dir == Dir::Up && a.idx == b.idx) {
            return Vec::new();
        }
        let i = a.idx;
        let h = mu.pairing(i);
        let mut out: Vec<ConcreteRule> = Vec::new();
        for n in 0..(-h).max(0) as usize {
            let mut rhs: Vec<(Rat, Steps)> = Vec::new();
            for r in 0..=(-h - 1 - n as i64).max(0) as usize {
                let idx = -(n as i64) - (r as i64) - 2;
                let Some((c, bub)) = bubble_value(ctx.datum, mu, i, true, idx, 0) else {
                    continue;
                };
                let mut steps = dots(1, i, r);
                steps.push((0, LeftCap(i)));
                steps.extend(bub);
                rhs.push((c, steps));
            }
            out.extend(instance(
                ctx,
                mu,
                letters,
                (one(), vec![(0, ClubCap(n, i))]),
                rhs,
            ));
        }
        out
    })
}

/// The positively padded round trip written without spades: dotted caps and
/// cups against negatively dotted circles, minus the identity.
pub fn pos() -> RewriteRule {
    RewriteRule::new("pos", 2, |letters, mu, ctx| {
        let &[a, b] = letters else {
            return Vec::new();
        };
        if !(a.dir == Dir::Up && b.dir == Dir::Down && a.idx == b.idx) {
            return Vec::new();
        }
        let i = a.idx;
        let h = mu.pairing(i);
        let mut rhs: Vec<(Rat, Steps)> = vec![(-one(), Vec::new())];
        for n in 0..h.max(0) as usize {
            for r in 0..=(h - 1 - n as i64).max(0) as usize {
                let idx = -(n as i64) - (r as i64) - 2;
                let Some((c, bub)) = bubble_value(ctx.datum, mu, i, false, idx, 0) else {
                    continue;
                };
                let mut steps = dots(0, i, n);
                steps.push((0, RightCap(i)));
                steps.extend(bub);
                steps.push((0, LeftCup(i)));
                steps.extend(dots(0, i, r));
                rhs.push((c, steps));
            }
        }
        instance(
            ctx,
            mu,
            letters,
            (one(), vec![(0, SideCross(i, i)), (0, InvSideSame(i))]),
            rhs,
        )
        .into_iter()
        .collect()
    })
}

/// The negatively padded round trip written without clubs.
pub fn neg() -> RewriteRule {
    RewriteRule::new("neg", 2, |letters, mu, ctx| {
        let &[a, b] = letters else {
            return Vec::new();
        };
        if !(a.dir == Dir::Down && b.dir == Dir::Up && a.idx == b.idx) {
            return Vec::new();
        }
        let i = a.idx;
        let h = mu.pairing(i);
        let mut rhs: Vec<(Rat, Steps)> = vec![(-one(), Vec::new())];
        for n in 0..(-h).max(0) as usize {
            for r in 0..=(-h - 1 - n as i64).max(0) as usize {
                let idx = -(n as i64) - (r as i64) - 2;
                let Some((c, bub)) = bubble_value(ctx.datum, mu, i, true, idx, 0) else {
                    continue;
                };
                let mut steps = dots(1, i, r);
                steps.push((0, LeftCap(i)));
                steps.extend(bub);
                steps.push((0, RightCup(i)));
                steps.extend(dots(1, i, n));
                rhs.push((c, steps));
            }
        }
        instance(
            ctx,
            mu,
            letters,
            (one(), vec![(0, InvSideSame(i)), (0, SideCross(i, i))]),
            rhs,
        )
        .into_iter()
        .collect()
    })
}

/// The sideways crossing against a leftward cap or cup expands into dotted
/// caps (resp. cups) against negatively dotted circles.
pub fn everything() -> RewriteRule {
    RewriteRule::with_widths("everything", vec![2, 0], |letters, mu, ctx| {
        let mut out: Vec<ConcreteRule> = Vec::new();
        match letters {
            [a, b] if a.dir == Dir::Up && b.dir == Dir::Down && a.idx == b.idx => {
                let i = a.idx;
                let h = mu.pairing(i);
                let mut rhs: Vec<(Rat, Steps)> = Vec::new();
                if h >= 0 {
                    for n in 0..=h as usize {
                        let Some((c, bub)) =
                            bubble_value(ctx.datum, mu, i, false, -(n as i64) - 1, 0)
                        else {
                            continue;
                        };
                        let mut steps = dots(0, i, n);
                        steps.push((0, RightCap(i)));
                        steps.extend(bub);
                        rhs.push((c, steps));
                    }
                }
                out.extend(instance(
                    ctx,
                    mu,
                    letters,
                    (one(), vec![(0, SideCross(i, i)), (0, LeftCap(i))]),
                    rhs,
                ));
            }
            [] => {
                for i in ctx.datum.indices() {
                    let h = mu.pairing(i);
                    let mut rhs: Vec<(Rat, Steps)> = Vec::new();
                    if h <= 0 {
                        for n in 0..=(-h) as usize {
                            let Some((c, mut steps)) =
                                bubble_value(ctx.datum, mu, i, true, -(n as i64) - 1, 0)
                            else {
                                continue;
                            };
                            steps.push((0, RightCup(i)));
                            steps.extend(dots(1, i, n));
                            rhs.push((-c, steps));
                        }
                    }
                    out.extend(instance(
                        ctx,
                        mu,
                        letters,
                        (one(), vec![(0, LeftCup(i)), (0, SideCross(i, i))]),
                        rhs,
                    ));
                }
            }
            _ => {}
        }
        out
    })
}

/// Counterclockwise curls left of an upward strand with few enough downward
/// dots vanish; the top one straightens to the identity.
pub fn dog1() -> RewriteRule {
    RewriteRule::new("dog1", 1, |letters, mu, ctx| {
        let &[a] = letters else {
            return Vec::new();
        };
        if a.dir != Dir::Up {
            return Vec::new();
        }
        let i = a.idx;
        let h = mu.pairing(i);
        let mut out: Vec<ConcreteRule> = Vec::new();
        for n in 0..=(-h - 2) {
            let mut lhs = vec![(0, RightCup(i))];
            lhs.extend(down_dots(0, i, n as usize));
            lhs.push((1, UpCross(i, i)));
            lhs.push((0, LeftCap(i)));
            let rhs = if n == -h - 2 {
                vec![(one(), Vec::new())]
            } else {
                Vec::new()
            };
            out.extend(instance(ctx, mu, letters, (one(), lhs), rhs));
        }
        out
    })
}

/// Clockwise curls right of an upward strand with few enough downward dots
/// vanish; the top one straightens to minus the identity.
pub fn dog1b() -> RewriteRule {
    RewriteRule::new("dog1b", 1, |letters, mu, ctx| {
        let &[a] = letters else {
            return Vec::new();
        };
        if a.dir != Dir::Up {
            return Vec::new();
        }
        let i = a.idx;
        let h = mu.pairing(i);
        let mut out: Vec<ConcreteRule> = Vec::new();
        for n in 0..=h {
            let mut lhs = vec![(1, LeftCup(i))];
            lhs.extend(down_dots(2, i, n as usize));
            lhs.push((0, UpCross(i, i)));
            lhs.push((1, RightCap(i)));
            let rhs = if n == h {
                vec![(-one(), Vec::new())]
            } else {
                Vec::new()
            };
            out.extend(instance(ctx, mu, letters, (one(), lhs), rhs));
        }
        out
    })
}

/// At negative local pairing the upward crossing under a leftward cap trades
/// for the inverse sideways crossing.
pub fn one_rule() -> RewriteRule {
    RewriteRule::new("one", 3, |letters, mu, ctx| {
        let &[a, b, c] = letters else {
            return Vec::new();
        };
        if !(a.dir == Dir::Down && b.dir == Dir::Up && c.dir == Dir::Up) {
            return Vec::new();
        }
        if a.idx != b.idx || b.idx != c.idx {
            return Vec::new();
        }
        let i = a.idx;
        if mu.pairing(i) >= 0 {
            return Vec::new();
        }
        instance(
            ctx,
            mu,
            letters,
            (one(), vec![(1, UpCross(i, i)), (0, LeftCap(i))]),
            vec![(one(), vec![(0, InvSideSame(i)), (1, LeftCap(i))])],
        )
        .into_iter()
        .collect()
    })
}

/// Above pairing minus two the upward crossing over a leftward cup trades
/// for the inverse sideways crossing.
pub fn two_rule() -> RewriteRule {
    RewriteRule::new("two", 1, |letters, mu, ctx| {
        let &[a] = letters else {
            return Vec::new();
        };
        if a.dir != Dir::Up {
            return Vec::new();
        }
        let i = a.idx;
        if mu.pairing(i) <= -2 {
            return Vec::new();
        }
        instance(
            ctx,
            mu,
            letters,
            (one(), vec![(1, LeftCup(i)), (0, UpCross(i, i))]),
            vec![(one(), vec![(0, LeftCup(i)), (1, InvSideSame(i))])],
        )
        .into_iter()
        .collect()
    })
}

/// A crossing-decorated leftward cap against the sideways crossing, at
/// negative pairing: minus the shifted cap plus a boundary correction.
pub fn quarry() -> RewriteRule {
    RewriteRule::new("quarry", 3, |letters, mu, ctx| {
        let &[a, b, c] = letters else {
            return Vec::new();
        };
        if !(a.dir == Dir::Up && b.dir == Dir::Down && c.dir == Dir::Up) {
            return Vec::new();
        }
        if a.idx != b.idx || b.idx != c.idx {
            return Vec::new();
        }
        let i = a.idx;
        let h = mu.pairing(i);
        if h >= 0 {
            return Vec::new();
        }
        let mut rhs = vec![(one(), vec![(1, LeftCap(i))])];
        if h == -1 {
            rhs.push((-one(), vec![(0, RightCap(i))]));
        }
        instance(
            ctx,
            mu,
            letters,
            (
                -one(),
                vec![
                    (0, SideCross(i, i)),
                    (1, UpCross(i, i)),
                    (0, LeftCap(i)),
                ],
            ),
            rhs,
        )
        .into_iter()
        .collect()
    })
}

/// The same trade with an extra sideways crossing attached on the right
/// pair.
pub fn claude1() -> RewriteRule {
    RewriteRule::new("claude1", 3, |letters, mu, ctx| {
        let &[a, b, c] = letters else {
            return Vec::new();
        };
        if !(a.dir == Dir::Up && b.dir == Dir::Up && c.dir == Dir::Down) {
            return Vec::new();
        }
        if a.idx != b.idx || b.idx != c.idx {
            return Vec::new();
        }
        let i = a.idx;
        let h = mu.pairing(i);
        if h >= 0 {
            return Vec::new();
        }
        let mut rhs = vec![(one(), vec![(1, SideCross(i, i)), (1, LeftCap(i))])];
        if h == -1 {
            rhs.push((-one(), vec![(1, SideCross(i, i)), (0, RightCap(i))]));
        }
        instance(
            ctx,
            mu,
            letters,
            (
                -one(),
                vec![
                    (1, SideCross(i, i)),
                    (0, SideCross(i, i)),
                    (1, UpCross(i, i)),
                    (0, LeftCap(i)),
                ],
            ),
            rhs,
        )
        .into_iter()
        .collect()
    })
}

/// The same trade closed off with a dotted rightward cup on the left pair.
pub fn claude2() -> RewriteRule {
    RewriteRule::new("claude2", 1, |letters, mu, ctx| {
        let &[a] = letters else {
            return Vec::new();
        };
        if a.dir != Dir::Up {
            return Vec::new();
        }
        let i = a.idx;
        let h = mu.pairing(i);
        let mut out: Vec<ConcreteRule> = Vec::new();
        for n in 0..=(-h - 1) {
            let n = n as usize;
            let mut lhs = vec![(1, RightCup(i)), (0, SideCross(i, i))];
            lhs.extend(dots(2, i, n));
            lhs.push((1, UpCross(i, i)));
            lhs.push((0, LeftCap(i)));
            let mut steps = vec![(1, RightCup(i))];
            steps.extend(dots(2, i, n));
            steps.push((1, LeftCap(i)));
            let mut rhs = vec![(one(), steps)];
            if h == -1 {
                rhs.push((-one(), vec![(1, RightCup(i)), (0, RightCap(i))]));
            }
            out.extend(instance(ctx, mu, letters, (-one(), lhs), rhs));
        }
        out
    })
}

/// The leftward cup and cap are adjoint: both leftward zig-zags straighten.
pub fn adjfinal() -> RewriteRule {
    RewriteRule::new("adjfinal", 1, |letters, mu, ctx| {
        let &[a] = letters else {
            return Vec::new();
        };
        let i = a.idx;
        let lhs = match a.dir {
            Dir::Up => vec![(0, LeftCup(i)), (1, LeftCap(i))],
            Dir::Down => vec![(1, LeftCup(i)), (0, LeftCap(i))],
        };
        instance(ctx, mu, letters, (one(), lhs), vec![(one(), Vec::new())])
            .into_iter()
            .collect()
    })
}

/// At strictly dominant pairing a downward dot crosses the leftward cup.
pub fn huddle() -> RewriteRule {
    RewriteRule::new("huddle", 0, |letters, mu, ctx| {
        if !letters.is_empty() {
            return Vec::new();
        }
        let mut out: Vec<ConcreteRule> = Vec::new();
        for i in ctx.datum.indices() {
            if mu.pairing(i) < 1 {
                continue;
            }
            out.extend(instance(
                ctx,
                mu,
                letters,
                (one(), vec![(0, LeftCup(i)), (1, DownDot(i))]),
                vec![(one(), vec![(0, LeftCup(i)), (0, UpDot(i))])],
            ));
        }
        out
    })
}

/// Below the off-diagonal bound, a two-color upward crossing under a
/// leftward cap trades for the inverse sideways crossing with a scalar.
pub fn easy1() -> RewriteRule {
    RewriteRule::new("easy1", 3, |letters, mu, ctx| {
        let &[a, b, c] = letters else {
            return Vec::new();
        };
        if !(a.dir == Dir::Down && b.dir == Dir::Up && c.dir == Dir::Up) {
            return Vec::new();
        }
        if a.idx != c.idx || a.idx == b.idx {
            return Vec::new();
        }
        let (i, j) = (a.idx, b.idx);
        if mu.pairing(i) >= ctx.datum.d_off(i, j) {
            return Vec::new();
        }
        instance(
            ctx,
            mu,
            letters,
            (one(), vec![(1, UpCross(j, i)), (0, LeftCap(i))]),
            vec![(
                ctx.params.t(i, j),
                vec![(0, InvSide(i, j)), (1, LeftCap(i))],
            )],
        )
        .into_iter()
        .collect()
    })
}

/// From the off-diagonal bound upward, the mirrored trade over a leftward
/// cup.
pub fn easy2() -> RewriteRule {
    RewriteRule::new("easy2", 1, |letters, mu, ctx| {
        let &[a] = letters else {
            return Vec::new();
        };
        if a.dir != Dir::Up {
            return Vec::new();
        }
        let j = a.idx;
        let mut out: Vec<ConcreteRule> = Vec::new();
        for i in ctx.datum.indices() {
            if i == j || mu.pairing(i) < ctx.datum.d_off(i, j) {
                continue;
            }
            out.extend(instance(
                ctx,
                mu,
                letters,
                (one(), vec![(1, LeftCup(i)), (0, UpCross(j, i))]),
                vec![(
                    ctx.params.t(i, j),
                    vec![(0, LeftCup(i)), (1, InvSide(i, j))],
                )],
            ));
        }
        out
    })
}

/// At non-positive pairing the two-color trade holds after composing with
/// the sideways crossings that peel off the left strand.
pub fn turn() -> RewriteRule {
    RewriteRule::with_widths("turn", vec![3, 1], |letters, mu, ctx| {
        let mut out: Vec<ConcreteRule> = Vec::new();
        match letters {
            [a, b, c]
                if a.dir == Dir::Up
                    && b.dir == Dir::Up
                    && c.dir == Dir::Down
                    && b.idx == c.idx
                    && a.idx != b.idx =>
            {
                let (j, i) = (a.idx, b.idx);
                if mu.pairing(i) > 0 {
                    return out;
                }
                out.extend(instance(
                    ctx,
                    mu,
                    letters,
                    (
                        one(),
                        vec![
                            (1, SideCross(i, i)),
                            (0, SideCross(j, i)),
                            (1, UpCross(j, i)),
                            (0, LeftCap(i)),
                        ],
                    ),
                    vec![(
                        ctx.params.t(i, j),
                        vec![
                            (1, SideCross(i, i)),
                            (0, SideCross(j, i)),
                            (0, InvSide(i, j)),
                            (1, LeftCap(i)),
                        ],
                    )],
                ));
            }
            [a] if a.dir == Dir::Up => {
                let j = a.idx;
                for i in ctx.datum.indices() {
                    if i == j {
                        continue;
                    }
                    let h = mu.pairing(i);
                    if h > 0 {
                        continue;
                    }
                    for n in 0..(-h).max(0) as usize {
                        let mut lhs = vec![(1, RightCup(i)), (0, SideCross(j, i))];
                        lhs.extend(dots(2, i, n));
                        lhs.push((1, UpCross(j, i)));
                        lhs.push((0, LeftCap(i)));
                        let mut steps = vec![(1, RightCup(i)), (0, SideCross(j, i))];
                        steps.extend(dots(2, i, n));
                        steps.push((0, InvSide(i, j)));
                        steps.push((1, LeftCap(i)));
                        out.extend(instance(
                            ctx,
                            mu,
                            letters,
                            (one(), lhs),
                            vec![(ctx.params.t(i, j), steps)],
                        ));
                    }
                }
            }
            _ => {}
        }
        out
    })
}

/// In the intermediate range the trade holds after one sideways crossing.
pub fn critical() -> RewriteRule {
    RewriteRule::new("critical", 3, |letters, mu, ctx| {
        let &[a, b, c] = letters else {
            return Vec::new();
        };
        if !(a.dir == Dir::Up && b.dir == Dir::Down && c.dir == Dir::Up) {
            return Vec::new();
        }
        if b.idx != c.idx || a.idx == b.idx {
            return Vec::new();
        }
        let (j, i) = (a.idx, b.idx);
        let h = mu.pairing(i);
        if h <= 0 || h >= ctx.datum.d_off(i, j) {
            return Vec::new();
        }
        instance(
            ctx,
            mu,
            letters,
            (
                one(),
                vec![
                    (0, SideCross(j, i)),
                    (1, UpCross(j, i)),
                    (0, LeftCap(i)),
                ],
            ),
            vec![(
                ctx.params.t(i, j),
                vec![
                    (0, SideCross(j, i)),
                    (0, InvSide(i, j)),
                    (1, LeftCap(i)),
                ],
            )],
        )
        .into_iter()
        .collect()
    })
}

/// Downward dots cross leftward cups and caps at every weight.
pub fn fourth() -> RewriteRule {
    RewriteRule::with_widths("fourth", vec![0, 2], |letters, mu, ctx| {
        let mut out: Vec<ConcreteRule> = Vec::new();
        match letters {
            [] => {
                for i in ctx.datum.indices() {
                    out.extend(instance(
                        ctx,
                        mu,
                        letters,
                        (one(), vec![(0, LeftCup(i)), (1, DownDot(i))]),
                        vec![(one(), vec![(0, LeftCup(i)), (0, UpDot(i))])],
                    ));
                }
            }
            [a, b] if a.dir == Dir::Down && b.dir == Dir::Up && a.idx == b.idx => {
                let i = a.idx;
                out.extend(instance(
                    ctx,
                    mu,
                    letters,
                    (one(), vec![(0, DownDot(i)), (0, LeftCap(i))]),
                    vec![(one(), vec![(1, UpDot(i)), (0, LeftCap(i))])],
                ));
            }
            _ => {}
        }
        out
    })
}

/// The guard-free form of the two-color trades, one per side, valid for all
/// colors and all weights.
pub fn easyfinal() -> RewriteRule {
    RewriteRule::with_widths("easyfinal", vec![3, 1], |letters, mu, ctx| {
        let mut out: Vec<ConcreteRule> = Vec::new();
        match letters {
            [a, b, c]
                if a.dir == Dir::Down
                    && b.dir == Dir::Up
                    && c.dir == Dir::Up
                    && a.idx == c.idx =>
            {
                let (i, j) = (a.idx, b.idx);
                out.extend(instance(
                    ctx,
                    mu,
                    letters,
                    (one(), vec![(1, UpCross(j, i)), (0, LeftCap(i))]),
                    vec![(
                        ctx.params.t(i, j),
                        vec![(0, inv_side(i, j)), (1, LeftCap(i))],
                    )],
                ));
            }
            [a] if a.dir == Dir::Up => {
                let j = a.idx;
                for i in ctx.datum.indices() {
                    out.extend(instance(
                        ctx,
                        mu,
                        letters,
                        (one(), vec![(1, LeftCup(i)), (0, UpCross(j, i))]),
                        vec![(
                            ctx.params.t(i, j),
                            vec![(0, LeftCup(i)), (1, inv_side(i, j))],
                        )],
                    ));
                }
            }
            _ => {}
        }
        out
    })
}

/// The downward crossing absorbs into leftward cups and caps as the inverse
/// sideways crossing, with no scalar.
pub fn hardfinal() -> RewriteRule {
    RewriteRule::with_widths("hardfinal", vec![1, 3], |letters, mu, ctx| {
        let mut out: Vec<ConcreteRule> = Vec::new();
        match letters {
            [a] if a.dir == Dir::Down => {
                let j = a.idx;
                for i in ctx.datum.indices() {
                    out.extend(instance(
                        ctx,
                        mu,
                        letters,
                        (one(), vec![(0, LeftCup(i)), (1, DownCross(i, j))]),
                        vec![(one(), vec![(1, LeftCup(i)), (0, inv_side(j, i))])],
                    ));
                }
            }
            [a, b, c]
                if a.dir == Dir::Down
                    && b.dir == Dir::Down
                    && c.dir == Dir::Up
                    && a.idx == c.idx =>
            {
                let (i, j) = (a.idx, b.idx);
                out.extend(instance(
                    ctx,
                    mu,
                    letters,
                    (one(), vec![(0, DownCross(i, j)), (1, LeftCap(i))]),
                    vec![(one(), vec![(1, inv_side(j, i)), (0, LeftCap(i))])],
                ));
            }
            _ => {}
        }
        out
    })
}

/// The sideways crossing absorbs into the rightward cup and cap as a scaled
/// downward crossing.
pub fn rightpitchfork2() -> RewriteRule {
    RewriteRule::with_widths("rightpitchfork2", vec![1, 3], |letters, mu, ctx| {
        let mut out: Vec<ConcreteRule> = Vec::new();
        match letters {
            [a] if a.dir == Dir::Down => {
                let j = a.idx;
                for i in ctx.datum.indices() {
                    out.extend(instance(
                        ctx,
                        mu,
                        letters,
                        (one(), vec![(0, RightCup(i)), (1, SideCross(i, j))]),
                        vec![(
                            ctx.params.t(j, i),
                            vec![(1, RightCup(i)), (0, DownCross(j, i))],
                        )],
                    ));
                }
            }
            [a, b, c]
                if a.dir == Dir::Up
                    && b.dir == Dir::Down
                    && c.dir == Dir::Down
                    && a.idx == c.idx =>
            {
                let (i, j) = (a.idx, b.idx);
                out.extend(instance(
                    ctx,
                    mu,
                    letters,
                    (one(), vec![(0, SideCross(i, j)), (1, RightCap(i))]),
                    vec![(
                        ctx.params.t(j, i),
                        vec![(1, DownCross(j, i)), (0, RightCap(i))],
                    )],
                ));
            }
            _ => {}
        }
        out
    })
}

/// The downward dot and crossing agree with their leftward mates.
pub fn actress() -> RewriteRule {
    RewriteRule::with_widths("actress", vec![1, 2], |letters, mu, ctx| {
        let mut out: Vec<ConcreteRule> = Vec::new();
        match letters {
            [a] if a.dir == Dir::Down => {
                let i = a.idx;
                out.extend(instance(
                    ctx,
                    mu,
                    letters,
                    (one(), vec![(0, DownDot(i))]),
                    vec![(
                        one(),
                        vec![(1, LeftCup(i)), (1, UpDot(i)), (0, LeftCap(i))],
                    )],
                ));
            }
            [a, b] if a.dir == Dir::Down && b.dir == Dir::Down => {
                let (i, j) = (a.idx, b.idx);
                out.extend(instance(
                    ctx,
                    mu,
                    letters,
                    (one(), vec![(0, DownCross(i, j))]),
                    vec![(
                        one(),
                        vec![
                            (2, LeftCup(i)),
                            (1, inv_side(j, i)),
                            (0, LeftCap(i)),
                        ],
                    )],
                ));
                out.extend(instance(
                    ctx,
                    mu,
                    letters,
                    (one(), vec![(0, DownCross(i, j))]),
                    vec![(
                        ctx.params.t(j, i).recip(),
                        vec![
                            (2, LeftCup(i)),
                            (3, LeftCup(j)),
                            (2, UpCross(i, j)),
                            (1, LeftCap(j)),
                            (0, LeftCap(i)),
                        ],
                    )],
                ));
            }
            _ => {}
        }
        out
    })
}

/// All derived rules, in the order their obligations are discharged.
pub fn all_derived() -> Vec<RewriteRule> {
    vec![
        first(),
        rightpitchfork(),
        rtcross(),
        lurking(),
        qhadown(),
        rightpitchfork2(),
        posneg(),
        startb(),
        startd(),
        ig3(),
        inv_a(),
        inv_b(),
        pos(),
        neg(),
        everything(),
        dog1(),
        dog1b(),
        one_rule(),
        two_rule(),
        quarry(),
        claude1(),
        claude2(),
        adjfinal(),
        huddle(),
        turn(),
        critical(),
        easy1(),
        easy2(),
        fourth(),
        easyfinal(),
        hardfinal(),
        actress(),
    ]
}

/// Names of the derived rules, in the same order as [`all_derived`].
pub const DERIVED_NAMES: [&str; 32] = [
    "first",
    "rightpitchfork",
    "rtcross",
    "lurking",
    "qhadown",
    "rightpitchfork2",
    "posneg",
    "startb",
    "startd",
    "ig3",
    "invA",
    "invB",
    "pos",
    "neg",
    "everything",
    "dog1",
    "dog1b",
    "one",
    "two",
    "quarry",
    "claude1",
    "claude2",
    "adjfinal",
    "huddle",
    "turn",
    "critical",
    "easy1",
    "easy2",
    "fourth",
    "easyfinal",
    "hardfinal",
    "actress",
];
