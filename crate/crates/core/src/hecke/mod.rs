//! The finite Hecke algebra `H_n` on the positive permutation braid basis
//! `ω_π`, with the symmetrizer `e_n` and the full twist `Δ²`.
//!
//! Generators follow the skein convention `(σ_i - s)(σ_i + s^-1) = 0`.

mod perm;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::coeff::RatFunc;
use crate::words::{Element, Gen, Word};

pub use perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<u8>),
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
}

/// The positive braid word `ω_π`.
pub fn perm_braid(p: &Perm) -> Word {
    let letters: Vec<Gen> = p.reduced_word().into_iter().map(|i| Gen::sigma(i as u16)).collect();
    Word::new(&letters, p.rank()).expect("reduced word indices are in range")
}

/// Full twist `Δ² = w(σ_2, …, σ_{n-1}) · β_n`, with `w` the full twist on
/// strands `2..n`. Requires `n ≥ 1`.
pub fn full_twist(n: usize) -> Word {
    fn shifted(k: usize, off: u16) -> Vec<Gen> {
        if k <= 1 {
            return Vec::new();
        }
        let mut out = shifted(k - 1, off + 1);
        out.extend((1..k as u16).map(|i| Gen::sigma(off + i)));
        out.extend((1..k as u16).rev().map(|i| Gen::sigma(off + i)));
        out
    }
    Word::new(&shifted(n, 0), n).expect("indices in range")
}

/// Element of `H_n` in the `ω_π` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    rank: usize,
    terms: BTreeMap<Perm, RatFunc>,
}

fn s_minus_inv() -> RatFunc {
    RatFunc::s().sub(&RatFunc::monomial(-1, 0))
}

impl HeckeElement {
    pub fn zero(rank: usize) -> Self {
        Self { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::basis(Perm::identity(rank))
    }

    pub fn basis(p: Perm) -> Self {
        Self::term(RatFunc::one(), p)
    }

    pub fn term(c: RatFunc, p: Perm) -> Self {
        let mut e = Self::zero(p.rank());
        e.add_term(p, &c);
        e
    }

    /// The generator `σ_i = ω_{s_i}`.
    pub fn sigma(i: usize, rank: usize) -> Result<Self, HeckeError> {
        Ok(Self::basis(Perm::simple(i, rank)?))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &Perm) -> RatFunc {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, p: Perm, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&p) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&p);
        } else {
            self.terms.insert(p, sum);
        }
    }

    fn check(&self, o: &Self) -> Result<(), HeckeError> {
        if self.rank != o.rank {
            return Err(HeckeError::RankMismatch(self.rank, o.rank));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self, HeckeError> {
        self.check(o)?;
        let mut r = self.clone();
        for (p, c) in &o.terms {
            r.add_term(p.clone(), c);
        }
        Ok(r)
    }

    pub fn sub(&self, o: &Self) -> Result<Self, HeckeError> {
        self.add(&o.scale(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, k: &RatFunc) -> Self {
        let mut r = Self::zero(self.rank);
        for (p, c) in &self.terms {
            r.add_term(p.clone(), &c.mul(k));
        }
        r
    }

    /// `σ_i · self`
    pub fn left_mul_generator(&self, i: usize) -> Self {
        let k = s_minus_inv();
        let mut r = Self::zero(self.rank);
        for (p, c) in &self.terms {
            r.add_term(p.left_mul_simple(i), c);
            if p.is_left_descent(i) {
                r.add_term(p.clone(), &c.mul(&k));
            }
        }
        r
    }

    /// `self · σ_i`
    pub fn right_mul_generator(&self, i: usize) -> Self {
        let k = s_minus_inv();
        let mut r = Self::zero(self.rank);
        for (p, c) in &self.terms {
            r.add_term(p.right_mul_simple(i), c);
            if p.is_right_descent(i) {
                r.add_term(p.clone(), &c.mul(&k));
            }
        }
        r
    }

    /// Product, straightened by left multiplication along a reduced word of
    /// each basis element of `self`.
    pub fn mul(&self, o: &Self) -> Result<Self, HeckeError> {
        self.check(o)?;
        let mut r = Self::zero(self.rank);
        for (p, c) in &self.terms {
            let mut acc = o.clone();
            for &i in p.reduced_word().iter().rev() {
                acc = acc.left_mul_generator(i);
            }
            r = r.add(&acc.scale(c))?;
        }
        Ok(r)
    }

    /// Same product, straightened by right multiplication along reduced words
    /// of `o`.
    pub fn mul_right(&self, o: &Self) -> Result<Self, HeckeError> {
        self.check(o)?;
        let mut r = Self::zero(self.rank);
        for (p, c) in &o.terms {
            let mut acc = self.clone();
            for &i in &p.reduced_word() {
                acc = acc.right_mul_generator(i);
            }
            r = r.add(&acc.scale(c))?;
        }
        Ok(r)
    }

    /// Braid-word form: `Σ c_π ω_π`.
    pub fn to_element(&self) -> Element {
        let mut r = Element::zero(self.rank);
        for (p, c) in &self.terms {
            r = r.add(&Element::term(c.clone(), perm_braid(p))).expect("same strands");
        }
        r
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (p, c)) in self.terms.iter().enumerate() {
            let neg = c.looks_negative();
            let mag = if neg { c.neg() } else { c.clone() };
            match (k, neg) {
                (0, false) => {}
                (0, true) => write!(f, "- ")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " - ")?,
            }
            if mag.is_one() {
                write!(f, "w{p}")?;
            } else {
                write!(f, "{} * w{p}", mag.fmt_factor())?;
            }
        }
        Ok(())
    }
}

/// `a_n = Σ s^{ℓ(π)} ω_π`, the scalar `α_n` with `a_n² = α_n a_n`, and the
/// idempotent `e_n = a_n / α_n`.
#[derive(Clone, Debug)]
pub struct Symmetrizer {
    pub a: HeckeElement,
    pub alpha: RatFunc,
    pub e: HeckeElement,
}

fn compute_symmetrizer(n: usize) -> Symmetrizer {
    let mut a = HeckeElement::zero(n);
    for p in Perm::all(n) {
        let c = RatFunc::monomial(p.length() as i32, 0);
        a.add_term(p, &c);
    }
    let sq = a.mul(&a).expect("same rank");
    let alpha = sq.coeff(&Perm::identity(n));
    assert!(!alpha.is_zero(), "alpha_n vanished");
    assert_eq!(sq, a.scale(&alpha), "a_n^2 is not a multiple of a_n");
    let e = a.scale(&alpha.inv().expect("nonzero"));
    Symmetrizer { a, alpha, e }
}

/// Memoized per rank.
pub fn symmetrizer(n: usize) -> Arc<Symmetrizer> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Symmetrizer>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&n) {
        return v.clone();
    }
    let v = Arc::new(compute_symmetrizer(n));
    cache.lock().unwrap().entry(n).or_insert(v).clone()
}
