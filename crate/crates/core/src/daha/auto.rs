use std::fmt;

use crate::words::{Element, Letter, Substitution, Word};

use super::DahaError;

/// The Dehn-twist automorphisms and their inverses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tau {
    T1,
    T1Inv,
    T2,
    T2Inv,
}

/// 2×2 integer matrix, row major.
pub type Mat2 = [[i64; 2]; 2];

pub const IDENTITY: Mat2 = [[1, 0], [0, 1]];

pub fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut r = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    r
}

pub fn mat_apply(m: &Mat2, v: (i64, i64)) -> (i64, i64) {
    (m[0][0] * v.0 + m[0][1] * v.1, m[1][0] * v.0 + m[1][1] * v.1)
}

impl Tau {
    pub fn inv(self) -> Tau {
        match self {
            Tau::T1 => Tau::T1Inv,
            Tau::T1Inv => Tau::T1,
            Tau::T2 => Tau::T2Inv,
            Tau::T2Inv => Tau::T2,
        }
    }

    /// Action on homology classes.
    pub fn matrix(self) -> Mat2 {
        match self {
            Tau::T1 => [[1, 1], [0, 1]],
            Tau::T1Inv => [[1, -1], [0, 1]],
            Tau::T2 => [[1, 0], [1, 1]],
            Tau::T2Inv => [[1, 0], [-1, 1]],
        }
    }

    /// Images of `σ_i`, `x_1`, `y_1`.
    pub fn substitution(self, n: usize) -> Substitution {
        let w = |t: &str| Word::parse(t, n).expect("valid image");
        let mut m = Substitution::new();
        for i in 1..n {
            m.insert(Letter::Sigma(i as u16), w(&format!("s{i}")));
        }
        let (x, y) = match self {
            Tau::T1 => ("x1", "y1 x1"),
            Tau::T1Inv => ("x1", "y1 x1^-1"),
            Tau::T2 => ("x1 y1", "y1"),
            Tau::T2Inv => ("x1 y1^-1", "y1"),
        };
        m.insert(Letter::X, w(x));
        m.insert(Letter::Y, w(y));
        m
    }
}

impl fmt::Display for Tau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tau::T1 => "tau1",
            Tau::T1Inv => "tau1^-1",
            Tau::T2 => "tau2",
            Tau::T2Inv => "tau2^-1",
        })
    }
}

pub fn tau_apply(which: Tau, e: &Element) -> Element {
    e.substitute(&which.substitution(e.strands())).expect("every generator has an image")
}

/// Applies `path = [g_1, …, g_k]` as `g_1 ∘ ⋯ ∘ g_k`.
pub fn apply_path(path: &[Tau], e: &Element) -> Element {
    path.iter().rev().fold(e.clone(), |acc, &g| tau_apply(g, &acc))
}

/// Matrix of the composite `g_1 ∘ ⋯ ∘ g_k`.
pub fn path_matrix(path: &[Tau]) -> Mat2 {
    path.iter().fold(IDENTITY, |m, g| mat_mul(&m, &g.matrix()))
}

/// `θ = τ_1 τ_2^-1 τ_1`, acting on homology by a quarter turn.
pub const THETA: [Tau; 3] = [Tau::T1, Tau::T2Inv, Tau::T1];

pub fn theta_power(k: usize) -> Vec<Tau> {
    THETA.iter().copied().cycle().take(3 * k).collect()
}

pub fn gcd(a: i64, b: i64) -> i64 {
    num_integer::Integer::gcd(&a, &b)
}

/// A word in the twists whose matrix sends `(0, m)` to `x`, where
/// `m = gcd(x)`, by Euclidean reduction of the primitive part.
pub fn sl2_path(x: (i64, i64)) -> Result<Vec<Tau>, DahaError> {
    if x == (0, 0) {
        return Err(DahaError::ZeroVector);
    }
    let m = gcd(x.0, x.1);
    let (mut a, mut b) = (x.0 / m, x.1 / m);
    let mut path = Vec::new();
    loop {
        match (a, b) {
            (0, 1) => return Ok(path),
            (0, -1) => {
                path.extend(theta_power(2));
                return Ok(path);
            }
            (1, 0) => {
                path.extend(THETA);
                return Ok(path);
            }
            (-1, 0) => {
                path.extend(THETA.iter().rev().map(|g| g.inv()));
                return Ok(path);
            }
            _ => {}
        }
        // one reduction step `r`; the path records `r^-1`
        let same_sign = (a > 0) == (b > 0);
        let r = if a.abs() >= b.abs() {
            if same_sign {
                Tau::T1Inv
            } else {
                Tau::T1
            }
        } else if same_sign {
            Tau::T2Inv
        } else {
            Tau::T2
        };
        (a, b) = mat_apply(&r.matrix(), (a, b));
        path.push(r.inv());
    }
}
