//! Bivariate gcd over ℚ by content extraction and a primitive
//! pseudo-remainder sequence in `c` over ℚ[s].

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::bipoly::{grlex, BiPoly, Mono};

/// Dense univariate polynomial in `s`, little-endian, no trailing zeros.
type UPoly = Vec<BigRational>;

fn u_trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn u_is_zero(p: &UPoly) -> bool {
    p.is_empty()
}

fn u_deg(p: &UPoly) -> usize {
    p.len().saturating_sub(1)
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    u_trim(&mut r);
    r
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    if r.len() < b.len() {
        r.resize(b.len(), BigRational::zero());
    }
    for (i, y) in b.iter().enumerate() {
        r[i] -= y;
    }
    u_trim(&mut r);
    r
}

/// Division with remainder over the field ℚ.
fn u_divrem(a: &UPoly, b: &UPoly) -> (UPoly, UPoly) {
    assert!(!u_is_zero(b), "division by zero polynomial");
    let mut rem = a.clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let db = u_deg(b);
    let lb = b[db].clone();
    let mut quo = vec![BigRational::zero(); rem.len() - db];
    while !rem.is_empty() && rem.len() > db {
        let dr = u_deg(&rem);
        let k = dr - db;
        let f = &rem[dr] / &lb;
        for (i, y) in b.iter().enumerate() {
            rem[i + k] -= &f * y;
        }
        quo[k] = f;
        u_trim(&mut rem);
    }
    u_trim(&mut quo);
    (quo, rem)
}

fn u_monic(mut p: UPoly) -> UPoly {
    if let Some(l) = p.last().cloned() {
        for c in p.iter_mut() {
            *c /= &l;
        }
    }
    p
}

fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !u_is_zero(&y) {
        let (_, r) = u_divrem(&x, &y);
        x = y;
        y = r;
    }
    u_monic(x)
}

/// Polynomial in `c` with coefficients in ℚ[s], little-endian in `c`.
type RPoly = Vec<UPoly>;

fn to_rpoly(p: &BiPoly) -> RPoly {
    let mut r: RPoly = vec![Vec::new(); p.degree_c() as usize + 1];
    for (m, c) in p.terms() {
        let row = &mut r[m.1 as usize];
        if row.len() <= m.0 as usize {
            row.resize(m.0 as usize + 1, BigRational::zero());
        }
        row[m.0 as usize] = c.clone();
    }
    r_trim(&mut r);
    r
}

fn from_rpoly(r: &RPoly) -> BiPoly {
    let mut terms = BTreeMap::new();
    for (ec, row) in r.iter().enumerate() {
        for (es, c) in row.iter().enumerate() {
            if !c.is_zero() {
                terms.insert((es as u32, ec as u32), c.clone());
            }
        }
    }
    BiPoly::from_raw(terms)
}

fn r_trim(r: &mut RPoly) {
    while r.last().is_some_and(u_is_zero) {
        r.pop();
    }
}

fn r_content(r: &RPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for row in r {
        if u_is_zero(row) {
            continue;
        }
        g = if u_is_zero(&g) { u_monic(row.clone()) } else { u_gcd(&g, row) };
        if g.len() == 1 {
            break;
        }
    }
    g
}

fn r_div_u(r: &RPoly, d: &UPoly) -> RPoly {
    r.iter()
        .map(|row| {
            let (q, rem) = u_divrem(row, d);
            debug_assert!(u_is_zero(&rem));
            q
        })
        .collect()
}

fn r_primitive(r: &RPoly) -> RPoly {
    let cont = r_content(r);
    if cont.len() == 1 && cont[0].is_one() {
        return r.clone();
    }
    r_div_u(r, &cont)
}

/// Pseudo-remainder of `a` by `b` as polynomials in `c`.
fn r_prem(a: &RPoly, b: &RPoly) -> RPoly {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut rem = a.clone();
    while rem.len() > db {
        let dr = rem.len() - 1;
        let lr = rem[dr].clone();
        let k = dr - db;
        // rem <- lb * rem - lr * c^k * b
        for row in rem.iter_mut() {
            *row = u_mul(row, &lb);
        }
        for (i, row) in b.iter().enumerate() {
            let t = u_mul(&lr, row);
            rem[i + k] = u_sub(&rem[i + k], &t);
        }
        r_trim(&mut rem);
    }
    rem
}

fn is_unit_monomial_gcd(a: &BiPoly, b: &BiPoly) -> Option<BiPoly> {
    // gcd with a single term reduces to the common monomial factor.
    let (mono_side, other) = if a.is_monomial() {
        (a, b)
    } else if b.is_monomial() {
        (b, a)
    } else {
        return None;
    };
    let (m, _) = mono_side.leading().unwrap();
    let (os, oc) = other.min_exponents();
    Some(BiPoly::monomial(BigRational::one(), (m.0.min(os), m.1.min(oc))))
}

pub(crate) fn bipoly_gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    if a.is_zero() && b.is_zero() {
        return BiPoly::zero();
    }
    if a.is_zero() {
        return make_monic(b);
    }
    if b.is_zero() {
        return make_monic(a);
    }
    if let Some(g) = is_unit_monomial_gcd(a, b) {
        return g;
    }
    // Pull out the common monomial factor first; keeps the sequences short.
    let (sa, ca) = a.min_exponents();
    let (sb, cb) = b.min_exponents();
    let common: Mono = (sa.min(sb), ca.min(cb));
    let a = a.unshift((sa, ca));
    let b = b.unshift((sb, cb));

    let (ra, rb) = (to_rpoly(&a), to_rpoly(&b));
    let g_cont = u_gcd(&r_content(&ra), &r_content(&rb));
    let (mut x, mut y) = (r_primitive(&ra), r_primitive(&rb));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    let g_prim = loop {
        if y.len() == 1 {
            // primitive of degree 0 in c: a unit
            break vec![vec![BigRational::one()]];
        }
        let r = r_prem(&x, &y);
        if r.is_empty() {
            break y;
        }
        x = y;
        y = r_primitive(&r);
    };
    let g: RPoly = g_prim.iter().map(|row| u_mul(row, &g_cont)).collect();
    make_monic(&from_rpoly(&g).shift(common))
}

pub(crate) fn make_monic(p: &BiPoly) -> BiPoly {
    match p.leading() {
        None => BiPoly::zero(),
        Some((_, lc)) => {
            let inv = lc.recip();
            p.scale(&inv)
        }
    }
}

pub(crate) fn bipoly_div_exact(a: &BiPoly, b: &BiPoly) -> Option<BiPoly> {
    assert!(!b.is_zero(), "division by zero polynomial");
    if a.is_zero() {
        return Some(BiPoly::zero());
    }
    // Multivariate division by leading terms; exact iff the remainder vanishes.
    let (lm_b, lc_b) = b.leading().map(|(m, c)| (m, c.clone())).unwrap();
    let mut rem = a.clone();
    let mut quo = BiPoly::zero();
    while let Some((lm_r, lc_r)) = rem.leading().map(|(m, c)| (m, c.clone())) {
        if lm_r.0 < lm_b.0 || lm_r.1 < lm_b.1 {
            return None;
        }
        let m = (lm_r.0 - lm_b.0, lm_r.1 - lm_b.1);
        let f = &lc_r / &lc_b;
        let t = BiPoly::monomial(f, m);
        rem = rem.sub(&t.mul(b));
        quo = quo.add(&t);
        debug_assert!(rem.leading().is_none_or(|(l, _)| grlex(&l, &lm_r).is_lt()));
    }
    Some(quo)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn poly(ts: &[((u32, u32), i64)]) -> BiPoly {
        BiPoly::from_terms(ts.iter().map(|(m, c)| (*m, q(*c))))
    }

    #[test]
    fn gcd_of_products_recovers_common_factor() {
        // (s + c)(s - 1) and (s + c)(c^2 + s)
        let f = poly(&[((1, 0), 1), ((0, 1), 1)]);
        let g1 = poly(&[((1, 0), 1), ((0, 0), -1)]);
        let g2 = poly(&[((0, 2), 1), ((1, 0), 1)]);
        let g = f.mul(&g1).gcd(&f.mul(&g2));
        assert_eq!(g, make_monic(&f));
    }

    #[test]
    fn gcd_with_monomial_factor() {
        // s^2 c - c  and  s c
        let a = poly(&[((2, 1), 1), ((0, 1), -1)]);
        let b = poly(&[((1, 1), 1)]);
        assert_eq!(a.gcd(&b), poly(&[((0, 1), 1)]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        let a = poly(&[((2, 0), 1), ((0, 0), -1)]);
        let b = poly(&[((0, 2), 1), ((0, 0), 1)]);
        assert!(a.gcd(&b).is_one());
    }

    #[test]
    fn exact_division_round_trips() {
        let a = poly(&[((3, 1), 2), ((0, 2), -1), ((1, 0), 5)]);
        let b = poly(&[((1, 1), 1), ((0, 0), 3)]);
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&b).unwrap(), a);
        assert!(a.div_exact(&b).is_none());
    }
}
