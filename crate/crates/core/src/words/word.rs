use std::cmp::Ordering;
use std::fmt;

use super::WordError;

/// Generator of the punctured-torus braid group on `n` strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// `σ_i`, `1 ≤ i ≤ n-1`
    Sigma(u16),
    X,
    Y,
}

/// A letter with exponent `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen {
    pub letter: Letter,
    pub inverse: bool,
}

impl Gen {
    pub const X: Gen = Gen { letter: Letter::X, inverse: false };
    pub const X_INV: Gen = Gen { letter: Letter::X, inverse: true };
    pub const Y: Gen = Gen { letter: Letter::Y, inverse: false };
    pub const Y_INV: Gen = Gen { letter: Letter::Y, inverse: true };

    pub fn sigma(i: u16) -> Gen {
        Gen { letter: Letter::Sigma(i), inverse: false }
    }

    pub fn sigma_inv(i: u16) -> Gen {
        Gen { letter: Letter::Sigma(i), inverse: true }
    }

    pub fn inv(self) -> Gen {
        Gen { letter: self.letter, inverse: !self.inverse }
    }

    pub fn power(self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    fn check(self, strands: usize) -> Result<(), WordError> {
        match self.letter {
            Letter::Sigma(i) if i == 0 || i as usize >= strands => {
                Err(WordError::IndexOutOfRange { index: i as usize, strands })
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.letter {
            Letter::Sigma(i) => write!(f, "s{i}")?,
            Letter::X => write!(f, "x1")?,
            Letter::Y => write!(f, "y1")?,
        }
        if self.inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Gen {
    type Err = WordError;

    fn from_str(tok: &str) -> Result<Self, Self::Err> {
        let bad = || WordError::Parse(format!("bad generator token `{tok}`"));
        let (body, inverse) = match tok.split_once('^') {
            None => (tok, false),
            Some((b, "-1")) => (b, true),
            Some((b, "1")) => (b, false),
            Some(_) => return Err(bad()),
        };
        let letter = match body {
            "x1" => Letter::X,
            "y1" => Letter::Y,
            _ => {
                let idx = body.strip_prefix('s').ok_or_else(bad)?;
                let i: u16 = idx.parse().map_err(|_| bad())?;
                Letter::Sigma(i)
            }
        };
        Ok(Gen { letter, inverse })
    }
}

/// Freely reduced word in the generators, tagged with its strand count.
///
/// Ordered shortlex (length first, then letters), which is the order terms of
/// an [`super::Element`] are printed in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Gen>,
    strands: usize,
}

/// Cancels adjacent inverse pairs until none remain.
pub fn free_reduce(raw: &[Gen]) -> Vec<Gen> {
    let mut out: Vec<Gen> = Vec::with_capacity(raw.len());
    for &g in raw {
        if out.last() == Some(&g.inv()) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    out
}

impl Word {
    pub fn empty(strands: usize) -> Self {
        Self { letters: Vec::new(), strands }
    }

    /// Builds a word from raw letters, checking indices and freely reducing.
    pub fn new(raw: &[Gen], strands: usize) -> Result<Self, WordError> {
        if strands == 0 {
            return Err(WordError::IndexOutOfRange { index: 0, strands });
        }
        for g in raw {
            g.check(strands)?;
        }
        Ok(Self { letters: free_reduce(raw), strands })
    }

    pub fn letters(&self) -> &[Gen] {
        &self.letters
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().map(|g| g.inv()).collect(),
            strands: self.strands,
        }
    }

    pub fn concat(&self, o: &Self) -> Result<Self, WordError> {
        if self.strands != o.strands {
            return Err(WordError::StrandMismatch(self.strands, o.strands));
        }
        let mut out = self.letters.clone();
        for &g in &o.letters {
            if out.last() == Some(&g.inv()) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        Ok(Self { letters: out, strands: self.strands })
    }

    pub fn pow(&self, e: i32) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut r = Word::empty(self.strands);
        for _ in 0..e.unsigned_abs() {
            r = r.concat(&base).unwrap();
        }
        r
    }

    pub fn parse(text: &str, strands: usize) -> Result<Self, WordError> {
        let t = text.trim();
        if t == "1" || t.is_empty() {
            return Ok(Word::empty(strands));
        }
        let gens = t.split_whitespace().map(str::parse).collect::<Result<Vec<Gen>, _>>()?;
        Word::new(&gens, strands)
    }
}

impl Ord for Word {
    fn cmp(&self, o: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&o.letters.len())
            .then_with(|| self.letters.cmp(&o.letters))
            .then(self.strands.cmp(&o.strands))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, g) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
