use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::coeff::{quantum_bracket, RatFunc};
use crate::daha::{
    apply_path, conjugation_identity, daha_relations, derived_relations, exprs_equal, oracle_equal, power_sum, q_expr,
    q_m_minus_one, qtilde, qtilde_via, sandwich, skein_relations, sl2_path, tau_apply, theta_power, w_element, Expr,
    Tau, WMode, THETA,
};
use crate::ehall::{alpha, hall_bracket, phi_n, theta_series, theta_series_recursive, EhaElement, Vec2};
use crate::hecke::{full_twist, symmetrizer, HeckeElement, Perm};
use crate::words::{Axis, Element};

use super::{Check, Context, Outcome, Runner, Suite, VerifyConfig};

type Params = BTreeMap<String, Value>;

fn params(v: Value) -> Params {
    match v {
        Value::Object(m) => m.into_iter().collect(),
        _ => Params::new(),
    }
}

fn check(id: String, statement: impl Into<String>, p: Value, run: Runner) -> Check {
    Check { id, statement: statement.into(), params: params(p), run }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn el(text: &str, n: usize) -> Result<Element, String> {
    Element::parse(text, n).map_err(err)
}

/// Oracle comparison of two lazily built skein elements.
fn skein_eq<F>(build: F) -> Runner
where
    F: Fn() -> Result<(Element, Element), String> + Send + Sync + 'static,
{
    Box::new(move |ctx: &Context| {
        let (a, b) = build()?;
        oracle_equal(&a, &b, ctx.conv, &ctx.oracle).map(Outcome::Oracle).map_err(err)
    })
}

/// Oracle comparison of two lazily built expressions at rank `n`.
fn expr_eq<F>(n: usize, build: F) -> Runner
where
    F: Fn() -> Result<(Expr, Expr), String> + Send + Sync + 'static,
{
    Box::new(move |ctx: &Context| {
        let (a, b) = build()?;
        exprs_equal(&a, &b, ctx.conv, n, &ctx.oracle).map(Outcome::Oracle).map_err(err)
    })
}

fn exact<F>(f: F) -> Runner
where
    F: Fn() -> Result<bool, String> + Send + Sync + 'static,
{
    Box::new(move |_: &Context| f().map(Outcome::Exact))
}

pub(crate) fn build(suite: Suite, cfg: &VerifyConfig) -> Vec<Check> {
    let n = cfg.n;
    let m_max = cfg.m_max as i64;
    match suite {
        Suite::DahaRelations => daha_suite(n),
        Suite::PresentationIso => presentation_suite(n),
        Suite::Theta4 => theta4_suite(n),
        Suite::PowerSumCentral => power_sum_suite(n, m_max),
        Suite::PwComparison => pw_suite(n, m_max),
        Suite::HallTransport => hall_suite(n, m_max),
        Suite::Hecke => hecke_suite(),
        Suite::ThetaSeries => theta_series_suite(m_max),
        Suite::NegativeControl => control_suite(n),
        Suite::All => Vec::new(),
    }
}

fn daha_suite(n: usize) -> Vec<Check> {
    daha_relations(n)
        .into_iter()
        .map(|r| {
            let (lhs, rhs) = (r.lhs, r.rhs);
            check(
                format!("daha-relations/{}", r.id),
                r.statement,
                json!({"n": n, "family": r.family}),
                expr_eq(n, move || Ok((lhs.clone(), rhs.clone()))),
            )
        })
        .collect()
}

fn presentation_suite(n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for r in skein_relations(n).into_iter().chain(derived_relations(n)) {
        let (lhs, rhs) = (r.lhs.clone(), r.rhs.clone());
        out.push(check(
            format!("presentation-iso/skein/{}", r.id),
            r.statement,
            json!({"n": n}),
            skein_eq(move || Ok((lhs.clone(), rhs.clone()))),
        ));
    }
    let c = conjugation_identity(n);
    let (lhs, rhs) = (c.lhs, c.rhs);
    out.push(check(
        "presentation-iso/daha/conjugation".into(),
        c.statement,
        json!({"n": n}),
        expr_eq(n, move || Ok((lhs.clone(), rhs.clone()))),
    ));
    for t in [Tau::T1, Tau::T2] {
        for r in skein_relations(n) {
            let (lhs, rhs) = (r.lhs.clone(), r.rhs.clone());
            out.push(check(
                format!("presentation-iso/{t}/{}", r.id),
                format!("{t} preserves {}", r.statement),
                json!({"n": n, "map": t.to_string()}),
                skein_eq(move || Ok((tau_apply(t, &lhs), tau_apply(t, &rhs)))),
            ));
        }
    }
    out
}

fn theta4_suite(n: usize) -> Vec<Check> {
    let mut out = vec![
        check(
            "theta4/theta-x1".into(),
            "theta(x_1) = y_1^-1, theta = tau_1 tau_2^-1 tau_1",
            json!({"n": n}),
            skein_eq(move || Ok((apply_path(&THETA, &el("x1", n)?), el("y1^-1", n)?))),
        ),
        check(
            "theta4/theta4-x1".into(),
            "theta^4(x_1) = [x_1, y_1]^-1 x_1 [x_1, y_1]",
            json!({"n": n}),
            skein_eq(move || {
                let lhs = apply_path(&theta_power(4), &el("x1", n)?);
                let rhs = el("y1 x1 y1^-1 x1^-1 x1 x1 y1 x1^-1 y1^-1", n)?;
                Ok((lhs, rhs))
            }),
        ),
    ];
    let mut zs = vec!["x1".to_string(), "y1".to_string()];
    zs.extend((1..n).map(|i| format!("s{i}")));
    for z in zs {
        out.push(check(
            format!("theta4/conjugation/{z}"),
            "theta^4(Z) = Delta^-2 Z Delta^2",
            json!({"n": n, "Z": z}),
            skein_eq(move || {
                let z = el(&z, n)?;
                let d = full_twist(n);
                let lhs = apply_path(&theta_power(4), &z);
                let rhs = Element::from_word(d.inverse()).mul(&z).map_err(err)?.mul(&Element::from_word(d)).map_err(err)?;
                Ok((lhs, rhs))
            }),
        ));
    }
    out
}

fn power_sum_suite(n: usize, m_max: i64) -> Vec<Check> {
    let mut out = Vec::new();
    for m in 1..=m_max.max(3) as i32 {
        for i in 1..n {
            out.push(check(
                format!("power-sum-central/m{m}/s{i}"),
                "s_i (y_1^m + ... + y_n^m) = (y_1^m + ... + y_n^m) s_i",
                json!({"n": n, "m": m, "i": i}),
                skein_eq(move || {
                    let p = power_sum(Axis::Y, m, n);
                    let s = el(&format!("s{i}"), n)?;
                    Ok((s.mul(&p).map_err(err)?, p.mul(&s).map_err(err)?))
                }),
            ));
        }
    }
    for m in 1..=m_max {
        out.push(check(
            format!("power-sum-central/path-independence/({m},{m})"),
            "Qtilde_x along two paths with the same matrix agree",
            json!({"n": n, "x": [m, m]}),
            skein_eq(move || {
                let path = sl2_path((m, m)).map_err(err)?;
                let mut alt = path.clone();
                alt.extend(theta_power(4));
                Ok((qtilde_via(&path, m as i32, n), qtilde_via(&alt, m as i32, n)))
            }),
        ));
    }
    out
}

fn axes(m: i64) -> [(i64, i64); 4] {
    [(m, 0), (-m, 0), (0, m), (0, -m)]
}

fn pw_suite(n: usize, m_max: i64) -> Vec<Check> {
    let mut out = Vec::new();
    for m in 1..=m_max {
        let mi = m as i32;
        for x in axes(m) {
            let tag = format!("({},{})", x.0, x.1);
            out.push(check(
                format!("pw-comparison/sandwich/{tag}"),
                "(q^m - 1) e_n W_x e_n = (s^m - s^-m) Q_x",
                json!({"n": n, "x": [x.0, x.1]}),
                expr_eq(n, move || {
                    let w = Expr::from_element(&w_element(x, n, WMode::Axis).map_err(err)?);
                    let lhs = sandwich(w, n).scale(&q_m_minus_one(mi));
                    let rhs = q_expr(x, n).map_err(err)?.scale(&quantum_bracket(mi));
                    Ok((lhs, rhs))
                }),
            ));
            out.push(check(
                format!("pw-comparison/axis/{tag}"),
                "(q^m - 1) W_x = (s^m - s^-m) Qtilde_x",
                json!({"n": n, "x": [x.0, x.1]}),
                skein_eq(move || {
                    let lhs = w_element(x, n, WMode::Axis).map_err(err)?.scale(&q_m_minus_one(mi));
                    let rhs = qtilde(x, n).map_err(err)?.scale(&quantum_bracket(mi));
                    Ok((lhs, rhs))
                }),
            ));
        }
    }
    out.push(check(
        "pw-comparison/general/(1,1)".into(),
        "(q - 1) W_x = (s - s^-1) Qtilde_x",
        json!({"n": n, "x": [1, 1]}),
        skein_eq(move || {
            let lhs = w_element((1, 1), n, WMode::General).map_err(err)?.scale(&q_m_minus_one(1));
            let rhs = qtilde((1, 1), n).map_err(err)?.scale(&quantum_bracket(1));
            Ok((lhs, rhs))
        }),
    ));
    out
}

fn u(a: i64, b: i64) -> EhaElement {
    EhaElement::u(Vec2::new(a, b))
}

/// `φ_n(e) = 0`
fn transports_to_zero<F>(n: usize, build: F) -> Runner
where
    F: Fn() -> Result<EhaElement, String> + Send + Sync + 'static,
{
    expr_eq(n, move || Ok((phi_n(&build()?, n).map_err(err)?, Expr::zero())))
}

fn hall_suite(n: usize, m_max: i64) -> Vec<Check> {
    let mut out = vec![
        check(
            "hall-transport/collinear/(1,0),(2,0)".into(),
            "[u_(1,0), u_(2,0)] = 0",
            json!({"n": n}),
            transports_to_zero(n, || Ok(EhaElement::commutator(&u(1, 0), &u(2, 0)))),
        ),
        check(
            "hall-transport/triangle/(1,0),(0,1)".into(),
            "[u_(0,1), u_(1,0)] = eps theta_(1,1) / alpha_1",
            json!({"n": n, "x": [1, 0], "y": [0, 1]}),
            transports_to_zero(n, || {
                let lhs = EhaElement::commutator(&u(0, 1), &u(1, 0));
                let rhs = hall_bracket(Vec2::new(0, 1), Vec2::new(1, 0)).map_err(err)?;
                Ok(lhs.sub(&rhs))
            }),
        ),
    ];
    for m in 1..=m_max {
        out.push(check(
            format!("hall-transport/eha-bracket/m{m}"),
            "[u_(m,0), u_(0,1)] = -u_(m,1)",
            json!({"n": n, "m": m}),
            transports_to_zero(n, move || {
                let lhs = EhaElement::commutator(&u(m, 0), &u(0, 1));
                let rhs = hall_bracket(Vec2::new(m, 0), Vec2::new(0, 1)).map_err(err)?;
                Ok(lhs.sub(&rhs))
            }),
        ));
        out.push(check(
            format!("hall-transport/w-bracket/m{m}"),
            "[W_(m,0), W_(0,1)] = -(s^m - s^-m) W_(m,1)",
            json!({"n": n, "m": m}),
            skein_eq(move || {
                let a = w_element((m, 0), n, WMode::Axis).map_err(err)?;
                let b = w_element((0, 1), n, WMode::Axis).map_err(err)?;
                let c = w_element((m, 1), n, WMode::General).map_err(err)?;
                let lhs = a.commutator(&b).map_err(err)?;
                Ok((lhs, c.scale(&quantum_bracket(m as i32)).neg()))
            }),
        ));
    }
    out
}

/// `Π_{k=1..n} (1 + s^2 + ⋯ + s^{2(k-1)})`
fn poincare(n: usize) -> RatFunc {
    (1..=n).fold(RatFunc::one(), |acc, k| {
        let f = (0..k).fold(RatFunc::zero(), |a, j| a.add(&RatFunc::monomial(2 * j as i32, 0)));
        acc.mul(&f)
    })
}

fn hecke_suite() -> Vec<Check> {
    let mut out = Vec::new();
    for k in 1..=4usize {
        let p = json!({"n": k});
        out.push(check(
            format!("hecke/n{k}/a-squared"),
            "a_n a_n = alpha_n a_n, alpha_n the Poincare polynomial in s^2",
            p.clone(),
            exact(move || {
                let sym = symmetrizer(k);
                let sq = sym.a.mul(&sym.a).map_err(err)?;
                Ok(sq == sym.a.scale(&poincare(k)) && sym.alpha == poincare(k))
            }),
        ));
        out.push(check(
            format!("hecke/n{k}/idempotent"),
            "e_n e_n = e_n",
            p.clone(),
            exact(move || {
                let e = &symmetrizer(k).e;
                Ok(e.mul(e).map_err(err)? == *e)
            }),
        ));
        out.push(check(
            format!("hecke/n{k}/eigen"),
            "s_i e_n = e_n s_i = s e_n",
            p.clone(),
            exact(move || {
                let e = &symmetrizer(k).e;
                let se = e.scale(&RatFunc::s());
                Ok((1..k).all(|i| e.left_mul_generator(i) == se && e.right_mul_generator(i) == se))
            }),
        ));
        out.push(check(
            format!("hecke/n{k}/absorption"),
            "omega_pi a_n = s^l(pi) a_n for every permutation pi",
            p,
            exact(move || {
                let a = &symmetrizer(k).a;
                for pi in Perm::all(k) {
                    let lhs = HeckeElement::basis(pi.clone()).mul(a).map_err(err)?;
                    if lhs != a.scale(&RatFunc::monomial(pi.length() as i32, 0)) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }),
        ));
    }
    out
}

fn theta_series_suite(m_max: i64) -> Vec<Check> {
    let mut out = Vec::new();
    let order = (m_max as usize).max(4);
    for x0 in [Vec2::new(1, 0), Vec2::new(0, 1), Vec2::new(1, 1)] {
        out.push(check(
            format!("theta-series/{x0}/order-1"),
            "theta_x0 = alpha_1 u_x0",
            json!({"x0": [x0.a, x0.b]}),
            exact(move || {
                let th = theta_series(x0, 1).map_err(err)?;
                Ok(th[1] == EhaElement::u(x0).scale(&alpha(1).map_err(err)?))
            }),
        ));
        out.push(check(
            format!("theta-series/{x0}/order-2"),
            "theta_2x0 = alpha_2 u_2x0 + alpha_1^2 / 2 u_x0^2",
            json!({"x0": [x0.a, x0.b]}),
            exact(move || {
                let a1 = alpha(1).map_err(err)?;
                let half = RatFunc::one().div(&RatFunc::from_int(2)).map_err(err)?;
                let ux = EhaElement::u(x0);
                let expected = EhaElement::u(x0.scale(2))
                    .scale(&alpha(2).map_err(err)?)
                    .add(&ux.mul(&ux).scale(&a1.mul(&a1).mul(&half)));
                let direct = theta_series(x0, 2).map_err(err)?;
                let rec = theta_series_recursive(x0, 2).map_err(err)?;
                Ok(direct[2] == expected && rec[2] == expected)
            }),
        ));
        out.push(check(
            format!("theta-series/{x0}/routes"),
            "exponential expansion and log-derivative recursion agree",
            json!({"x0": [x0.a, x0.b], "order": order}),
            exact(move || Ok(theta_series(x0, order).map_err(err)? == theta_series_recursive(x0, order).map_err(err)?)),
        ));
    }
    out
}

fn control_suite(n: usize) -> Vec<Check> {
    vec![
        check(
            "negative-control/x1-y2-commute".into(),
            "x_1 y_2 = y_2 x_1 (false)",
            json!({"n": n}),
            skein_eq(move || {
                let x1 = el("x1", n)?;
                let y2 = el("s1 y1 s1", n)?;
                Ok((x1.mul(&y2).map_err(err)?, y2.mul(&x1).map_err(err)?))
            }),
        ),
        check(
            "negative-control/theta4-trivial".into(),
            "theta^4(x_1) = x_1 (false)",
            json!({"n": n}),
            skein_eq(move || Ok((apply_path(&theta_power(4), &el("x1", n)?), el("x1", n)?))),
        ),
        check(
            "negative-control/triangle-sign".into(),
            "[u_(0,1), u_(1,0)] = -eps theta_(1,1) / alpha_1 (false)",
            json!({"n": n}),
            transports_to_zero(n, || {
                let lhs = EhaElement::commutator(&u(0, 1), &u(1, 0));
                let rhs = hall_bracket(Vec2::new(0, 1), Vec2::new(1, 0)).map_err(err)?;
                Ok(lhs.add(&rhs))
            }),
        ),
    ]
}
