use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::RatFunc;

use super::Vec2;

/// A finite linear combination of words in the generators `u_x`.
///
/// No normal form is applied beyond collecting equal words: two elements
/// that differ only by the defining relations compare unequal here.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EhaElement {
    terms: BTreeMap<Vec<Vec2>, RatFunc>,
}

impl EhaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(RatFunc::one())
    }

    pub fn scalar(c: RatFunc) -> Self {
        Self::term(c, Vec::new())
    }

    /// The generator `u_x`.
    pub fn u(x: Vec2) -> Self {
        Self::term(RatFunc::one(), vec![x])
    }

    pub fn term(c: RatFunc, word: Vec<Vec2>) -> Self {
        let mut e = Self::zero();
        e.add_term(word, &c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Vec2>, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &[Vec2]) -> RatFunc {
        self.terms.get(word).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub(crate) fn add_term(&mut self, word: Vec<Vec2>, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(word).or_insert_with(RatFunc::zero);
        *slot = slot.add(c);
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&RatFunc::from_int(-1))
    }

    pub fn scale(&self, k: &RatFunc) -> Self {
        let mut r = Self::zero();
        for (w, c) in &self.terms {
            r.add_term(w.clone(), &c.mul(k));
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                r.add_term([&w1[..], &w2[..]].concat(), &c1.mul(c2));
            }
        }
        r
    }

    /// `[a, b] = ab - ba`
    pub fn commutator(a: &Self, b: &Self) -> Self {
        a.mul(b).sub(&b.mul(a))
    }
}

impl fmt::Display for EhaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.looks_negative();
            let mag = if neg { c.neg() } else { c.clone() };
            match (k, neg) {
                (0, false) => {}
                (0, true) => write!(f, "- ")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " - ")?,
            }
            let word = w.iter().map(|x| format!("u{x}")).collect::<Vec<_>>().join(" ");
            if w.is_empty() {
                write!(f, "{}", mag.fmt_factor())?;
            } else if mag.is_one() {
                write!(f, "{word}")?;
            } else {
                write!(f, "{} * {word}", mag.fmt_factor())?;
            }
        }
        Ok(())
    }
}
