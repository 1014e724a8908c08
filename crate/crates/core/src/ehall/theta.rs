use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::coeff::{Param, RatFunc};

use super::{EhaElement, EhallError, Vec2};

/// `α_i = (1 - σ^i)(1 - σ̄^i)(1 - (σσ̄)^-i) / i`
pub fn alpha(i: i32) -> Result<RatFunc, EhallError> {
    if i < 1 {
        return Err(EhallError::BadIndex(i));
    }
    let one = RatFunc::one();
    let sigma = RatFunc::param(Param::Sigma);
    let sigma_bar = RatFunc::param(Param::SigmaBar);
    let f = |x: RatFunc| one.sub(&x);
    let prod = f(sigma.pow(i)?)
        .mul(&f(sigma_bar.pow(i)?))
        .mul(&f(sigma.mul(&sigma_bar).pow(-i)?));
    Ok(prod.mul(&rational(1, i as i64)))
}

fn rational(a: i64, b: i64) -> RatFunc {
    RatFunc::from_rational(BigRational::new(BigInt::from(a), BigInt::from(b)))
}

/// Polynomial in commuting `u_{x0}, u_{2x0}, …`; keys are sorted multisets
/// of multiples.
type CPoly = BTreeMap<Vec<i64>, RatFunc>;

fn cadd(p: &mut CPoly, k: Vec<i64>, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    let slot = p.entry(k.clone()).or_insert_with(RatFunc::zero);
    *slot = slot.add(&c);
    if slot.is_zero() {
        p.remove(&k);
    }
}

fn cmul(a: &CPoly, b: &CPoly) -> CPoly {
    let mut r = CPoly::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            let mut k = [&ka[..], &kb[..]].concat();
            k.sort_unstable();
            cadd(&mut r, k, ca.mul(cb));
        }
    }
    r
}

fn to_eha(p: &CPoly, x0: Vec2) -> EhaElement {
    let mut e = EhaElement::zero();
    for (k, c) in p {
        e.add_term(k.iter().map(|&j| x0.scale(j)).collect(), c);
    }
    e
}

fn check_primitive(x0: Vec2) -> Result<(), EhallError> {
    if x0.is_primitive() {
        Ok(())
    } else {
        Err(EhallError::NotPrimitive(x0))
    }
}

/// `θ_{i x0}` for `i = 0..=order`: coefficients of `z^i` in
/// `exp(Σ_{i≥1} α_i u_{i x0} z^i)`, by summing powers of the exponent.
pub fn theta_series(x0: Vec2, order: usize) -> Result<Vec<EhaElement>, EhallError> {
    check_primitive(x0)?;
    // exponent truncated at z^order, graded by z-degree
    let mut s: Vec<CPoly> = vec![CPoly::new(); order + 1];
    for (i, slot) in s.iter_mut().enumerate().skip(1) {
        cadd(slot, vec![i as i64], alpha(i as i32)?);
    }
    let mut total: Vec<CPoly> = vec![CPoly::new(); order + 1];
    cadd(&mut total[0], Vec::new(), RatFunc::one());
    // power = S^k / k!
    let mut power = total.clone();
    for k in 1..=order {
        let mut next = vec![CPoly::new(); order + 1];
        for (da, pa) in power.iter().enumerate() {
            for (db, pb) in s.iter().enumerate().skip(1) {
                if da + db > order {
                    break;
                }
                for (key, c) in cmul(pa, pb) {
                    cadd(&mut next[da + db], key, c);
                }
            }
        }
        let inv_k = rational(1, k as i64);
        for (d, p) in next.iter_mut().enumerate() {
            for c in p.values_mut() {
                *c = c.mul(&inv_k);
            }
            for (key, c) in p.iter() {
                cadd(&mut total[d], key.clone(), c.clone());
            }
        }
        power = next;
    }
    Ok(total.iter().map(|p| to_eha(p, x0)).collect())
}

/// Same series from the logarithmic derivative:
/// `i θ_i = Σ_{j=1..i} j α_j u_{j x0} θ_{i-j}`.
pub fn theta_series_recursive(x0: Vec2, order: usize) -> Result<Vec<EhaElement>, EhallError> {
    check_primitive(x0)?;
    let mut th: Vec<CPoly> = Vec::with_capacity(order + 1);
    th.push(CPoly::from([(Vec::new(), RatFunc::one())]));
    for i in 1..=order {
        let mut acc = CPoly::new();
        for j in 1..=i {
            let u = CPoly::from([(vec![j as i64], alpha(j as i32)?.scale_int(j as i64))]);
            for (k, c) in cmul(&u, &th[i - j]) {
                cadd(&mut acc, k, c);
            }
        }
        let inv_i = rational(1, i as i64);
        th.push(acc.into_iter().map(|(k, c)| (k, c.mul(&inv_i))).collect());
    }
    Ok(th.iter().map(|p| to_eha(p, x0)).collect())
}

/// `θ_x` for any nonzero `x`, read off the series of its primitive part.
pub fn theta(x: Vec2) -> Result<EhaElement, EhallError> {
    if x.is_zero() {
        return Err(EhallError::ZeroVector);
    }
    let d = x.d() as usize;
    Ok(theta_series(x.primitive(), d)?.swap_remove(d))
}
