use std::fmt;

use super::HeckeError;

/// Permutation of `1..=n` in one-line notation.
///
/// Products compose as functions: `(a * b)(j) = a(b(j))`. A braid word
/// `σ_{i_1} ⋯ σ_{i_k}` has permutation `s_{i_1} ∘ ⋯ ∘ s_{i_k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n as u8).collect() }
    }

    pub fn new(images: Vec<u8>) -> Result<Self, HeckeError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(HeckeError::NotAPermutation(images.clone()));
            }
            seen[v] = true;
        }
        Ok(Self { images })
    }

    /// Simple transposition `s_i = (i i+1)`.
    pub fn simple(i: usize, n: usize) -> Result<Self, HeckeError> {
        if i == 0 || i >= n {
            return Err(HeckeError::IndexOutOfRange { index: i, rank: n });
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// `π(j)` for `1 ≤ j ≤ n`.
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1] as usize
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.rank()];
        for (j, &v) in self.images.iter().enumerate() {
            inv[v as usize - 1] = j as u8 + 1;
        }
        Self { images: inv }
    }

    pub fn compose(&self, o: &Self) -> Self {
        Self { images: o.images.iter().map(|&j| self.images[j as usize - 1]).collect() }
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        let v = &self.images;
        (0..v.len()).map(|a| (a + 1..v.len()).filter(|&b| v[a] > v[b]).count()).sum()
    }

    /// `s_i ∘ π`: swaps the values `i` and `i+1`.
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let (a, b) = (i as u8, i as u8 + 1);
        Self {
            images: self
                .images
                .iter()
                .map(|&v| if v == a { b } else if v == b { a } else { v })
                .collect(),
        }
    }

    /// `π ∘ s_i`: swaps positions `i` and `i+1`.
    pub fn right_mul_simple(&self, i: usize) -> Self {
        let mut p = self.clone();
        p.images.swap(i - 1, i);
        p
    }

    /// `ℓ(s_i π) < ℓ(π)`
    pub fn is_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.apply(i) > inv.apply(i + 1)
    }

    /// `ℓ(π s_i) < ℓ(π)`
    pub fn is_right_descent(&self, i: usize) -> bool {
        self.apply(i) > self.apply(i + 1)
    }

    /// Reduced word `[i_1, …, i_k]` with `π = s_{i_1} ⋯ s_{i_k}`, peeling the
    /// smallest left descent each time.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.length());
        let mut p = self.clone();
        while let Some(i) = (1..p.rank()).find(|&i| p.is_left_descent(i)) {
            out.push(i);
            p = p.left_mul_simple(i);
        }
        out
    }

    /// Every permutation of rank `n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        let mut out = vec![Perm { images: cur.clone() }];
        // standard next-permutation step
        loop {
            let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| cur[k] < cur[k + 1]) else {
                return out;
            };
            let l = (k + 1..n).rev().find(|&l| cur[k] < cur[l]).unwrap();
            cur.swap(k, l);
            cur[k + 1..].reverse();
            out.push(Perm { images: cur.clone() });
        }
    }

    /// Longest element `w_0`.
    pub fn longest(n: usize) -> Self {
        Self { images: (1..=n as u8).rev().collect() }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}
