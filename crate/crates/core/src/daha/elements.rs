use crate::coeff::{quantum_bracket, Param, RatFunc};
use crate::hecke::symmetrizer;
use crate::words::{gen_xy, Axis, Element};

use super::auto::{apply_path, gcd, sl2_path, Tau};
use super::expr::Expr;
use super::DahaError;

/// `x_1^m + ⋯ + x_n^m` or `y_1^m + ⋯ + y_n^m`; `m` may be negative.
pub fn power_sum(axis: Axis, m: i32, n: usize) -> Element {
    let mut acc = Element::zero(n);
    for i in 1..=n {
        let w = gen_xy(i, axis, n).expect("index in range").pow(m);
        acc = acc.add(&Element::from_word(w)).expect("same strands");
    }
    acc
}

/// The symmetrizer `e_n` as a skein element.
pub fn symmetrizer_element(n: usize) -> Element {
    symmetrizer(n).e.to_element()
}

fn check(x: (i64, i64), n: usize) -> Result<i32, DahaError> {
    if x == (0, 0) {
        return Err(DahaError::ZeroVector);
    }
    if n < 2 {
        return Err(DahaError::BadRank(n));
    }
    Ok(gcd(x.0, x.1) as i32)
}

/// `Q̃_x`: the path for `x` applied to `y_1^m + ⋯ + y_n^m`.
pub fn qtilde(x: (i64, i64), n: usize) -> Result<Element, DahaError> {
    let m = check(x, n)?;
    Ok(qtilde_via(&sl2_path(x)?, m, n))
}

/// `Q̃` along an explicit path, for comparing paths with the same endpoint.
pub fn qtilde_via(path: &[Tau], m: i32, n: usize) -> Element {
    apply_path(path, &power_sum(Axis::Y, m, n))
}

/// `(Q̃_x, Q_x)` with `Q_x = e_n Q̃_x e_n` expanded.
pub fn q_elements(x: (i64, i64), n: usize) -> Result<(Element, Element), DahaError> {
    let qt = qtilde(x, n)?;
    let e = symmetrizer_element(n);
    let q = e.mul(&qt)?.mul(&e)?;
    Ok((qt, q))
}

/// `e_n Z e_n` in factored form.
pub fn sandwich(z: Expr, n: usize) -> Expr {
    let e = Expr::from_element(&symmetrizer_element(n));
    Expr::prod([e.clone(), z, e])
}

/// `Q_x` in factored form.
pub fn q_expr(x: (i64, i64), n: usize) -> Result<Expr, DahaError> {
    Ok(sandwich(Expr::from_element(&qtilde(x, n)?), n))
}

/// How `W_x` is built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WMode {
    /// Power sums of `x_i^±1` or `y_i^±1`; coordinate axes only.
    Axis,
    /// `{m} / (q^m - 1) · Q̃_x`.
    General,
}

fn c_pow(k: i32) -> RatFunc {
    RatFunc::monomial(0, k)
}

/// `q^m - 1`
pub fn q_m_minus_one(m: i32) -> RatFunc {
    RatFunc::param(Param::Q).pow(m).expect("q is a unit").sub(&RatFunc::one())
}

pub fn w_element(x: (i64, i64), n: usize, mode: WMode) -> Result<Element, DahaError> {
    let m = check(x, n)?;
    let br = quantum_bracket(m);
    let one = RatFunc::one();
    match mode {
        WMode::General => {
            let k = br.div(&q_m_minus_one(m))?;
            Ok(qtilde(x, n)?.scale(&k))
        }
        WMode::Axis => {
            let (axis, sign, den) = match x {
                (a, 0) if a > 0 => (Axis::X, 1, one.sub(&c_pow(2 * m))),
                (a, 0) if a < 0 => (Axis::X, -1, c_pow(-2 * m).sub(&one)),
                (0, b) if b > 0 => (Axis::Y, 1, c_pow(-2 * m).sub(&one)),
                (0, _) => (Axis::Y, -1, one.sub(&c_pow(2 * m))),
                _ => return Err(DahaError::OffAxis(x)),
            };
            Ok(power_sum(axis, sign * m, n).scale(&br.div(&den)?))
        }
    }
}
