use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::coeff::CoeffRing;

/// Exponent vector of a monomial `X^e`.
pub type Exps = Vec<i32>;

/// Laurent polynomial in `X_1..X_n` over a coefficient ring.
pub type Poly<E> = BTreeMap<Exps, E>;

pub(crate) fn poly_add_term<R: CoeffRing>(ring: &R, p: &mut Poly<R::Elem>, e: Exps, a: R::Elem) {
    if ring.is_zero(&a) {
        return;
    }
    match p.entry(e) {
        Entry::Vacant(v) => {
            v.insert(a);
        }
        Entry::Occupied(mut o) => {
            ring.add_assign(o.get_mut(), &a);
            if ring.is_zero(o.get()) {
                o.remove();
            }
        }
    }
}

/// One point of the convention space searched by the representation gate.
///
/// With `u = t^{-1/2}` (or `t^{1/2}` when `t_inverted`) and
/// `z = X_i / X_{i+1}`, every variant uses the Demazure–Lusztig operator
/// `T_i f = u^-1 f^{s_i} + (u - u^-1) (f - z f^{s_i}) / (1 - z)`.
/// The flags choose how `Y_1` is assembled from the `T_i` and a twisted
/// cyclic shift.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Convention {
    /// Shift scales by `q^-1` instead of `q`.
    pub q_inverted: bool,
    /// `u = t^{1/2}` instead of `t^{-1/2}`.
    pub t_inverted: bool,
    /// `Y_1` built from `T_i^-1` instead of `T_i`.
    pub t_inverse_in_y: bool,
    /// `ω f = f(x_2, …, x_n, q x_1)` with `Y_1 = ω T_{n-1} ⋯ T_1`, instead of
    /// `ω f = f(q x_n, x_1, …, x_{n-1})` with `Y_1 = T_1 ⋯ T_{n-1} ω`.
    pub shift_backward: bool,
}

impl Convention {
    pub fn all() -> Vec<Convention> {
        (0..16u8)
            .map(|b| Convention {
                q_inverted: b & 1 != 0,
                t_inverted: b & 2 != 0,
                t_inverse_in_y: b & 4 != 0,
                shift_backward: b & 8 != 0,
            })
            .collect()
    }

    /// Power of `s` giving `u`.
    fn u_exp(&self) -> i32 {
        if self.t_inverted {
            1
        } else {
            -1
        }
    }

    /// Power of `c` giving the shift scalar (`q = c^-2`).
    fn q_exp(&self) -> i32 {
        if self.q_inverted {
            2
        } else {
            -2
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q{} t{} Y1={} shift={}",
            if self.q_inverted { "^-1" } else { "" },
            if self.t_inverted { "^-1" } else { "" },
            if self.t_inverse_in_y { "T^-1" } else { "T" },
            if self.shift_backward { "backward" } else { "forward" },
        )
    }
}

/// Primitive operators on Laurent polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Prim {
    T(u16),
    TInv(u16),
    X(u16),
    XInv(u16),
    Omega,
    OmegaInv,
}

impl Prim {
    pub fn inv(self) -> Prim {
        match self {
            Prim::T(i) => Prim::TInv(i),
            Prim::TInv(i) => Prim::T(i),
            Prim::X(j) => Prim::XInv(j),
            Prim::XInv(j) => Prim::X(j),
            Prim::Omega => Prim::OmegaInv,
            Prim::OmegaInv => Prim::Omega,
        }
    }
}

/// Cancels adjacent inverse operators.
pub(crate) fn reduce_prims(raw: &[Prim]) -> Vec<Prim> {
    let mut out: Vec<Prim> = Vec::with_capacity(raw.len());
    for &p in raw {
        if out.last() == Some(&p.inv()) {
            out.pop();
        } else {
            out.push(p);
        }
    }
    out
}

/// DAHA generator `T_i^±1`, `X_j^±1` or `Y_j^±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DahaGen {
    T(u16, bool),
    X(u16, bool),
    Y(u16, bool),
}

impl DahaGen {
    pub fn inv(self) -> DahaGen {
        match self {
            DahaGen::T(i, b) => DahaGen::T(i, !b),
            DahaGen::X(i, b) => DahaGen::X(i, !b),
            DahaGen::Y(i, b) => DahaGen::Y(i, !b),
        }
    }

    /// Smallest rank on which the generator exists.
    pub(crate) fn strands_needed(self) -> usize {
        match self {
            DahaGen::T(i, _) => i as usize + 1,
            DahaGen::X(i, _) | DahaGen::Y(i, _) => i as usize,
        }
    }
}

impl fmt::Display for DahaGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (c, i, inv) = match *self {
            DahaGen::T(i, b) => ('T', i, b),
            DahaGen::X(i, b) => ('X', i, b),
            DahaGen::Y(i, b) => ('Y', i, b),
        };
        write!(f, "{c}{i}{}", if inv { "^-1" } else { "" })
    }
}

/// Expands a DAHA generator into primitive operators, leftmost outermost.
pub fn gen_prims(conv: Convention, n: usize, g: DahaGen) -> Vec<Prim> {
    match g {
        DahaGen::T(i, false) => vec![Prim::T(i)],
        DahaGen::T(i, true) => vec![Prim::TInv(i)],
        DahaGen::X(j, false) => vec![Prim::X(j)],
        DahaGen::X(j, true) => vec![Prim::XInv(j)],
        DahaGen::Y(j, inv) => {
            let y = y_prims(conv, n, j as usize);
            if inv {
                y.iter().rev().map(|p| p.inv()).collect()
            } else {
                y
            }
        }
    }
}

/// `Y_1` per the convention, then `Y_{j+1} = T_j^-1 Y_j T_j^-1`.
fn y_prims(conv: Convention, n: usize, j: usize) -> Vec<Prim> {
    let t = |i: usize| {
        if conv.t_inverse_in_y {
            Prim::TInv(i as u16)
        } else {
            Prim::T(i as u16)
        }
    };
    let mut y: Vec<Prim> = if conv.shift_backward {
        std::iter::once(Prim::Omega).chain((1..n).rev().map(t)).collect()
    } else {
        (1..n).map(t).chain(std::iter::once(Prim::Omega)).collect()
    };
    for i in 1..j {
        let ti = Prim::TInv(i as u16);
        y.insert(0, ti);
        y.push(ti);
    }
    reduce_prims(&y)
}

/// Applies primitive operators with coefficients in `R`.
pub struct RepEval<'r, R: CoeffRing> {
    ring: &'r R,
    conv: Convention,
    u_inv: R::Elem,
    gap: R::Elem,
    neg_gap: R::Elem,
}

impl<'r, R: CoeffRing> RepEval<'r, R> {
    pub fn new(ring: &'r R, conv: Convention) -> Self {
        let ue = conv.u_exp();
        let u = ring.monomial(1, ue, 0);
        let u_inv = ring.monomial(1, -ue, 0);
        let gap = ring.add(&u, &ring.neg(&u_inv));
        let neg_gap = ring.neg(&gap);
        Self { ring, conv, u_inv, gap, neg_gap }
    }

    pub fn ring(&self) -> &R {
        self.ring
    }

    /// `T_i` (or `T_i^-1` when `inverse`) on one monomial, accumulated into `out`.
    fn t_monomial(&self, i: usize, inverse: bool, e: &Exps, a: &R::Elem, out: &mut Poly<R::Elem>) {
        let r = self.ring;
        let (p, q) = (i - 1, i);
        let mut se = e.clone();
        se.swap(p, q);
        poly_add_term(r, out, se.clone(), r.mul(a, &self.u_inv));
        let d = e[p] - e[q];
        let b = r.mul(a, &self.gap);
        let mut push = |j: i32, coeff: &R::Elem| {
            let mut m = se.clone();
            m[p] += j;
            m[q] -= j;
            poly_add_term(r, out, m, coeff.clone());
        };
        if d >= 2 {
            let nb = r.neg(&b);
            for j in 1..d {
                push(j, &nb);
            }
        } else if d <= 0 {
            for j in d..=0 {
                push(j, &b);
            }
        }
        if inverse {
            poly_add_term(r, out, e.clone(), r.mul(a, &self.neg_gap));
        }
    }

    /// Twisted cyclic shift or its inverse on one monomial.
    fn shift_monomial(&self, inverse: bool, e: &Exps) -> (Exps, i32) {
        let n = e.len();
        let qe = self.conv.q_exp();
        let mut m = Vec::with_capacity(n);
        // (forward, inverse) ↦ rotation and the exponent carrying q
        match (self.conv.shift_backward, inverse) {
            (false, false) | (true, true) => {
                m.extend_from_slice(&e[1..]);
                m.push(e[0]);
                let k = if inverse { -e[0] } else { e[0] };
                (m, qe * k)
            }
            (false, true) | (true, false) => {
                m.push(e[n - 1]);
                m.extend_from_slice(&e[..n - 1]);
                let k = if inverse { -e[n - 1] } else { e[n - 1] };
                (m, qe * k)
            }
        }
    }

    pub fn apply(&self, op: Prim, f: &Poly<R::Elem>) -> Poly<R::Elem> {
        let r = self.ring;
        let mut out = Poly::new();
        match op {
            Prim::X(j) | Prim::XInv(j) => {
                let d = if matches!(op, Prim::X(_)) { 1 } else { -1 };
                for (e, a) in f {
                    let mut m = e.clone();
                    m[j as usize - 1] += d;
                    out.insert(m, a.clone());
                }
            }
            Prim::T(i) | Prim::TInv(i) => {
                for (e, a) in f {
                    self.t_monomial(i as usize, matches!(op, Prim::TInv(_)), e, a, &mut out);
                }
            }
            Prim::Omega | Prim::OmegaInv => {
                for (e, a) in f {
                    let (m, ce) = self.shift_monomial(op == Prim::OmegaInv, e);
                    out.insert(m, r.mul_monomial(a, 1, 0, ce));
                }
            }
        }
        out
    }
}
