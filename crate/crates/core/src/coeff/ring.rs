use std::fmt::Debug;

use num_bigint::BigInt;

use super::{modp, CoeffError, Laurent, RatFunc};

/// A commutative ring receiving ℤ[s^±1, c^±1].
///
/// The operator representation is generic over this so the same code runs
/// exactly (over [`LaurentRing`] or [`RatFuncRing`]) and modulo a prime at a
/// sampled point (over [`ModRing`]).
pub trait CoeffRing: Sync {
    type Elem: Clone + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `k · s^a c^b`
    fn monomial(&self, k: i64, a: i32, b: i32) -> Self::Elem;

    fn one(&self) -> Self::Elem {
        self.monomial(1, 0, 0)
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    fn mul_monomial(&self, a: &Self::Elem, k: i64, s: i32, c: i32) -> Self::Elem {
        self.mul(a, &self.monomial(k, s, c))
    }

    /// Image of an integer Laurent polynomial.
    fn embed_laurent(&self, a: &Laurent) -> Self::Elem;
}

/// Exact integer Laurent polynomials in `s`, `c`.
#[derive(Clone, Copy, Debug, Default)]
pub struct LaurentRing;

impl CoeffRing for LaurentRing {
    type Elem = Laurent;

    fn zero(&self) -> Laurent {
        Laurent::zero()
    }
    fn is_zero(&self, a: &Laurent) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Laurent, b: &Laurent) -> Laurent {
        a.add(b)
    }
    fn add_assign(&self, a: &mut Laurent, b: &Laurent) {
        a.add_assign(b);
    }
    fn neg(&self, a: &Laurent) -> Laurent {
        a.neg()
    }
    fn mul(&self, a: &Laurent, b: &Laurent) -> Laurent {
        a.mul(b)
    }
    fn monomial(&self, k: i64, a: i32, b: i32) -> Laurent {
        Laurent::monomial(BigInt::from(k), a, b)
    }
    fn mul_monomial(&self, a: &Laurent, k: i64, s: i32, c: i32) -> Laurent {
        if k == 1 {
            a.shift(s, c)
        } else {
            a.mul(&self.monomial(k, s, c))
        }
    }
    fn embed_laurent(&self, a: &Laurent) -> Laurent {
        a.clone()
    }
}

/// Exact rational functions; slower than [`LaurentRing`] but accepts any
/// ℚ(s, c) coefficients.
#[derive(Clone, Copy, Debug, Default)]
pub struct RatFuncRing;

impl CoeffRing for RatFuncRing {
    type Elem = RatFunc;

    fn zero(&self) -> RatFunc {
        RatFunc::zero()
    }
    fn is_zero(&self, a: &RatFunc) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.add(b)
    }
    fn neg(&self, a: &RatFunc) -> RatFunc {
        a.neg()
    }
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.mul(b)
    }
    fn monomial(&self, k: i64, a: i32, b: i32) -> RatFunc {
        RatFunc::monomial(a, b).scale_int(k)
    }
    fn embed_laurent(&self, a: &Laurent) -> RatFunc {
        a.to_ratfunc()
    }
}

/// ℤ/p with `s`, `c` specialized to fixed nonzero residues.
#[derive(Clone, Copy, Debug)]
pub struct ModRing {
    p: u64,
    s: u64,
    c: u64,
    s_inv: u64,
    c_inv: u64,
}

impl ModRing {
    pub fn new(p: u64, point: (u64, u64)) -> Result<Self, CoeffError> {
        let (s, c) = (point.0 % p, point.1 % p);
        if s == 0 || c == 0 {
            return Err(CoeffError::DenominatorVanishes);
        }
        Ok(Self { p, s, c, s_inv: modp::inv(s, p), c_inv: modp::inv(c, p) })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn point(&self) -> (u64, u64) {
        (self.s, self.c)
    }

    fn power(&self, base: u64, base_inv: u64, e: i32) -> u64 {
        if e >= 0 {
            modp::pow(base, e as u64, self.p)
        } else {
            modp::pow(base_inv, e.unsigned_abs() as u64, self.p)
        }
    }
}

impl CoeffRing for ModRing {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        modp::add(*a, *b, self.p)
    }
    fn neg(&self, a: &u64) -> u64 {
        modp::sub(0, *a, self.p)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        modp::mul(*a, *b, self.p)
    }
    fn monomial(&self, k: i64, a: i32, b: i32) -> u64 {
        let kk = modp::reduce_int(&BigInt::from(k), self.p);
        let v = modp::mul(self.power(self.s, self.s_inv, a), self.power(self.c, self.c_inv, b), self.p);
        modp::mul(kk, v, self.p)
    }
    fn embed_laurent(&self, a: &Laurent) -> u64 {
        a.eval_mod((self.s, self.c), self.p)
    }
}
