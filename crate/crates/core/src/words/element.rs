use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::RatFunc;

use super::{Gen, Letter, Word, WordError};

/// Finite ℚ(s, c)-linear combination of words on a fixed number of strands.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element {
    strands: usize,
    terms: BTreeMap<Word, RatFunc>,
}

/// Images of the positive generators under an endomorphism; inverse letters
/// are sent to the inverse word.
pub type Substitution = BTreeMap<Letter, Word>;

impl Element {
    pub fn zero(strands: usize) -> Self {
        Self { strands, terms: BTreeMap::new() }
    }

    pub fn one(strands: usize) -> Self {
        Self::from_word(Word::empty(strands))
    }

    pub fn scalar(c: RatFunc, strands: usize) -> Self {
        Self::term(c, Word::empty(strands))
    }

    pub fn from_word(w: Word) -> Self {
        Self::term(RatFunc::one(), w)
    }

    pub fn term(c: RatFunc, w: Word) -> Self {
        let mut e = Self::zero(w.strands());
        e.add_term(w, &c);
        e
    }

    /// Single generator as an element.
    pub fn gen(g: Gen, strands: usize) -> Result<Self, WordError> {
        Ok(Self::from_word(Word::new(&[g], strands)?))
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> RatFunc {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, w: Word, c: &RatFunc) {
        debug_assert_eq!(w.strands(), self.strands);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check(&self, o: &Self) -> Result<(), WordError> {
        if self.strands != o.strands {
            return Err(WordError::StrandMismatch(self.strands, o.strands));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self, WordError> {
        self.check(o)?;
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c);
        }
        Ok(r)
    }

    pub fn sub(&self, o: &Self) -> Result<Self, WordError> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&RatFunc::from_int(-1))
    }

    pub fn scale(&self, k: &RatFunc) -> Self {
        if k.is_zero() {
            return Self::zero(self.strands);
        }
        Self {
            strands: self.strands,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.mul(k))).collect(),
        }
    }

    /// Bilinear product: concatenate, freely reduce, collect.
    pub fn mul(&self, o: &Self) -> Result<Self, WordError> {
        self.check(o)?;
        let mut r = Self::zero(self.strands);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                r.add_term(w1.concat(w2)?, &c1.mul(c2));
            }
        }
        Ok(r)
    }

    /// `[a, b] = ab - ba`
    pub fn commutator(&self, o: &Self) -> Result<Self, WordError> {
        self.mul(o)?.sub(&o.mul(self)?)
    }

    pub fn pow(&self, e: u32) -> Result<Self, WordError> {
        let mut r = Self::one(self.strands);
        for _ in 0..e {
            r = r.mul(self)?;
        }
        Ok(r)
    }

    /// Multiplicative inverse of a single-term element `k·w`.
    pub fn monomial_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (w, c) = self.terms.iter().next().unwrap();
        Some(Self::term(c.inv().ok()?, w.inverse()))
    }

    /// Applies the endomorphism determined by `images` to every term.
    pub fn substitute(&self, images: &Substitution) -> Result<Self, WordError> {
        let mut r = Self::zero(self.strands);
        for (w, c) in &self.terms {
            let mut letters = Vec::new();
            for g in w.letters() {
                let img = images.get(&g.letter).ok_or(WordError::MissingImage(g.letter))?;
                if img.strands() != self.strands {
                    return Err(WordError::StrandMismatch(self.strands, img.strands()));
                }
                if g.inverse {
                    letters.extend(img.letters().iter().rev().map(|h| h.inv()));
                } else {
                    letters.extend_from_slice(img.letters());
                }
            }
            r.add_term(Word::new(&letters, self.strands)?, c);
        }
        Ok(r)
    }

    /// Parses the rendering produced by `Display`.
    pub fn parse(text: &str, strands: usize) -> Result<Self, WordError> {
        super::parse::parse_element(text, strands)
    }
}

impl fmt::Display for Element {
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
            if w.is_empty() {
                write!(f, "{}", mag.fmt_factor())?;
            } else if mag.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{} * {w}", mag.fmt_factor())?;
            }
        }
        Ok(())
    }
}
