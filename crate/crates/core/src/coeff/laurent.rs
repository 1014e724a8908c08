use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{BiPoly, RatFunc};

/// Element of ℤ[s^±1, c^±1].
///
/// This is the ring the operator representation actually needs: every
/// generator acts with coefficients that are integer Laurent monomials or
/// binomials in `s` and `c`, so no gcd is ever required on the hot path.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Laurent {
    terms: BTreeMap<(i32, i32), BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(k: BigInt, s: i32, c: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !k.is_zero() {
            terms.insert((s, c), k);
        }
        Self { terms }
    }

    pub fn unit(s: i32, c: i32) -> Self {
        Self::monomial(BigInt::one(), s, c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: (i32, i32), k: &BigInt) {
        if k.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(k.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += k;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, o: &Self) {
        for (m, k) in &o.terms {
            self.add_term(*m, k);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(m, k)| (*m, -k)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (m1, k1) in &self.terms {
            for (m2, k2) in &o.terms {
                r.add_term((m1.0 + m2.0, m1.1 + m2.1), &(k1 * k2));
            }
        }
        r
    }

    pub fn shift(&self, s: i32, c: i32) -> Self {
        Self { terms: self.terms.iter().map(|(m, k)| ((m.0 + s, m.1 + c), k.clone())).collect() }
    }

    /// Integer-coefficient polynomial, reinterpreted as a Laurent element.
    pub fn from_bipoly(p: &BiPoly) -> Self {
        let mut r = Self::zero();
        for (m, c) in p.terms() {
            assert!(c.is_integer(), "from_bipoly needs integer coefficients");
            r.add_term((m.0 as i32, m.1 as i32), c.numer());
        }
        r
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        if self.is_zero() {
            return RatFunc::zero();
        }
        let ms = self.terms.keys().map(|m| m.0).min().unwrap();
        let mc = self.terms.keys().map(|m| m.1).min().unwrap();
        let num = BiPoly::from_terms(self.terms.iter().map(|(m, k)| {
            (((m.0 - ms) as u32, (m.1 - mc) as u32), BigRational::from_integer(k.clone()))
        }));
        num_ratfunc(num).mul(&RatFunc::monomial(ms, mc))
    }

    pub fn eval_mod(&self, point: (u64, u64), p: u64) -> u64 {
        use super::modp;
        let mut acc = 0;
        for (m, k) in &self.terms {
            let v = modp::mul(
                modp::pow_signed(point.0, m.0 as i64, p),
                modp::pow_signed(point.1, m.1 as i64, p),
                p,
            );
            acc = modp::add(acc, modp::mul(v, modp::reduce_int(k, p), p), p);
        }
        acc
    }
}

fn num_ratfunc(p: BiPoly) -> RatFunc {
    RatFunc::from_poly(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_to_ratfunc_uses_monomial_denominator() {
        // s - s^-1
        let mut l = Laurent::unit(1, 0);
        l.add_assign(&Laurent::unit(-1, 0).neg());
        assert_eq!(l.to_ratfunc().to_string(), "(s^2 - 1)/(s)");
    }

    #[test]
    fn mul_and_cancel() {
        let a = Laurent::unit(1, 0).add(&Laurent::unit(-1, 0));
        let b = Laurent::unit(1, 0).add(&Laurent::unit(-1, 0).neg());
        let p = a.mul(&b);
        let mut expect = Laurent::unit(2, 0);
        expect.add_assign(&Laurent::unit(-2, 0).neg());
        assert_eq!(p, expect);
    }
}
