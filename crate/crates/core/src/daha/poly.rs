use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::RatFunc;
use crate::words::parse::{find_top_level_star, split_terms};

use super::rep::Exps;
use super::DahaError;

/// Laurent polynomial in `X_1, …, X_n` with ℚ(s, c) coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    n: usize,
    terms: BTreeMap<Exps, RatFunc>,
}

impl LaurentPoly {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(RatFunc::one(), vec![0; n])
    }

    pub fn monomial(c: RatFunc, e: Exps) -> Self {
        let mut p = Self::zero(e.len());
        p.add_term(e, &c);
        p
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Exps, RatFunc)>) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[i32]) -> RatFunc {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, e: Exps, c: &RatFunc) {
        debug_assert_eq!(e.len(), self.n);
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&e) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, sum);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c);
        }
        r
    }

    pub fn scale(&self, k: &RatFunc) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(e, c)| (e.clone(), c.mul(k))))
    }

    pub fn parse(text: &str, n: usize) -> Result<Self, DahaError> {
        let text = text.trim();
        let mut p = Self::zero(n);
        if text == "0" {
            return Ok(p);
        }
        for (neg, term) in split_terms(text) {
            let term = term.trim();
            let (coeff, mono) = match find_top_level_star(term) {
                Some(k) => (term[..k].trim(), term[k + 3..].trim()),
                None if term.split_whitespace().all(|t| parse_var(t, n).is_ok()) => ("1", term),
                None => (term, "1"),
            };
            let c: RatFunc = coeff.parse().map_err(|e| DahaError::Parse(format!("{e}")))?;
            let c = if neg { c.neg() } else { c };
            let mut e = vec![0; n];
            if mono != "1" {
                for tok in mono.split_whitespace() {
                    let (j, k) = parse_var(tok, n)?;
                    e[j - 1] += k;
                }
            }
            p.add_term(e, &c);
        }
        Ok(p)
    }
}

/// `X3^-2` ↦ `(3, -2)`
fn parse_var(tok: &str, n: usize) -> Result<(usize, i32), DahaError> {
    let bad = || DahaError::Parse(format!("bad monomial token `{tok}`"));
    let body = tok.strip_prefix('X').ok_or_else(bad)?;
    let (idx, pow) = match body.split_once('^') {
        Some((i, p)) => (i, p.parse::<i32>().map_err(|_| bad())?),
        None => (body, 1),
    };
    let j: usize = idx.parse().map_err(|_| bad())?;
    if j == 0 || j > n {
        return Err(bad());
    }
    Ok((j, pow))
}

pub(crate) fn fmt_monomial(e: &[i32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k != 0)
        .map(|(j, &k)| if k == 1 { format!("X{}", j + 1) } else { format!("X{}^{k}", j + 1) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.looks_negative();
            let mag = if neg { c.neg() } else { c.clone() };
            match (k, neg) {
                (0, false) => {}
                (0, true) => write!(f, "- ")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " - ")?,
            }
            let m = fmt_monomial(e);
            if m == "1" {
                write!(f, "{}", mag.fmt_factor())?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{} * {m}", mag.fmt_factor())?;
            }
        }
        Ok(())
    }
}
