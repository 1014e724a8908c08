use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd;

/// Exponent pair `(e_s, e_c)` of a monomial `s^e_s c^e_c`.
pub type Mono = (u32, u32);

/// Polynomial in `s` and `c` with rational coefficients.
///
/// Terms with a zero coefficient are never stored, so two equal polynomials
/// always have identical term maps.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Mono, BigRational>,
}

/// Graded lexicographic order with `s` before `c`. Larger means "leads".
pub fn grlex(a: &Mono, b: &Mono) -> Ordering {
    (a.0 + a.1)
        .cmp(&(b.0 + b.1))
        .then(a.0.cmp(&b.0))
        .then(a.1.cmp(&b.1))
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, (0, 0))
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(c: BigRational, m: Mono) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn s() -> Self {
        Self::monomial(BigRational::one(), (1, 0))
    }

    pub fn c() -> Self {
        Self::monomial(BigRational::one(), (0, 1))
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, BigRational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    /// Single term (including nonzero constants).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.terms.len() == 1 && self.terms.contains_key(&(0, 0)))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: Mono) -> BigRational {
        self.terms.get(&m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Mono, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Leading monomial and coefficient in graded lex order.
    pub fn leading(&self) -> Option<(Mono, &BigRational)> {
        self.terms
            .iter()
            .max_by(|a, b| grlex(a.0, b.0))
            .map(|(m, c)| (*m, c))
    }

    pub fn degree_s(&self) -> u32 {
        self.terms.keys().map(|m| m.0).max().unwrap_or(0)
    }

    pub fn degree_c(&self) -> u32 {
        self.terms.keys().map(|m| m.1).max().unwrap_or(0)
    }

    /// Smallest exponents of `s` and `c` occurring; `(0, 0)` for zero.
    pub fn min_exponents(&self) -> Mono {
        let ms = self.terms.keys().map(|m| m.0).min().unwrap_or(0);
        let mc = self.terms.keys().map(|m| m.1).min().unwrap_or(0);
        (ms, mc)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    pub fn shift(&self, by: Mono) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| ((m.0 + by.0, m.1 + by.1), c.clone()))
                .collect(),
        }
    }

    /// Divides by the monomial `s^a c^b`. Panics if some term is not divisible.
    pub fn unshift(&self, by: Mono) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    assert!(m.0 >= by.0 && m.1 >= by.1, "monomial does not divide");
                    ((m.0 - by.0, m.1 - by.1), c.clone())
                })
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(*m, c);
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(*m, &-c);
        }
        r
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                r.add_term((m1.0 + m2.0, m1.1 + m2.1), &(c1 * c2));
            }
        }
        r
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Greatest common divisor, normalized so its leading coefficient is 1.
    pub fn gcd(&self, other: &Self) -> Self {
        gcd::bipoly_gcd(self, other)
    }

    /// Exact quotient `self / other`; `None` if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        gcd::bipoly_div_exact(self, other)
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        let mut l = BigInt::one();
        for c in self.terms.values() {
            l = num_integer::Integer::lcm(&l, c.denom());
        }
        l
    }

    pub(crate) fn from_raw(terms: BTreeMap<Mono, BigRational>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Self { terms }
    }

    /// Terms sorted for display: descending graded lex.
    pub fn sorted_terms(&self) -> Vec<(Mono, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c)).collect();
        v.sort_by(|a, b| grlex(&b.0, &a.0));
        v
    }
}

pub(crate) fn fmt_monomial(m: Mono) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("s", m.0 as i64), ("c", m.1 as i64)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub(crate) fn fmt_term(m: Mono, c: &BigRational) -> String {
    let mono = fmt_monomial(m);
    if mono.is_empty() {
        return fmt_rational(c);
    }
    if c.is_one() {
        mono
    } else if (-c).is_one() {
        format!("-{mono}")
    } else {
        format!("{}*{mono}", fmt_rational(c))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            if k == 0 {
                write!(f, "{}", fmt_term(m, c))?;
            } else if c.is_negative() {
                write!(f, " - {}", fmt_term(m, &-c))?;
            } else {
                write!(f, " + {}", fmt_term(m, c))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn display_orders_by_degree_then_s() {
        let p = BiPoly::from_terms([((0, 0), q(-1)), ((2, 0), q(1)), ((1, 1), q(3)), ((0, 2), q(-2))]);
        assert_eq!(p.to_string(), "s^2 + 3*s*c - 2*c^2 - 1");
    }

    #[test]
    fn cancellation_drops_terms() {
        let a = BiPoly::from_terms([((1, 0), q(1)), ((0, 1), q(2))]);
        let b = BiPoly::from_terms([((1, 0), q(1))]);
        assert_eq!(a.sub(&b).sub(&a.sub(&b)), BiPoly::zero());
        assert_eq!(a.sub(&b).num_terms(), 1);
    }

    #[test]
    fn leading_term_uses_grlex() {
        let p = BiPoly::from_terms([((0, 3), q(5)), ((2, 1), q(7)), ((1, 0), q(1))]);
        assert_eq!(p.leading().unwrap().0, (2, 1));
    }
}
