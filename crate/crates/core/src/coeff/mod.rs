//! Exact arithmetic in the coefficient field ℚ(s, c).
//!
//! All scalars of the kernel live here. The DAHA parameters embed as
//! `t = s^2`, `t^{1/2} = s`, `q = c^-2`, and the elliptic Hall parameters as
//! `σ = q^-1 = c^2`, `σ̄ = t^-1 = s^-2`.
//!
//! Equality is decided in two tiers: [`RatFunc::eval_mod`] at a few random
//! points refutes cheaply, and comparison of canonical forms gives the
//! verdict.

mod bipoly;
mod gcd;
mod laurent;
pub mod modp;
mod parse;
mod ratfunc;
mod ring;

pub use bipoly::{grlex, BiPoly, Mono};
pub use laurent::Laurent;
pub use ratfunc::{Param, RatFunc};
pub use ring::{CoeffRing, LaurentRing, ModRing, RatFuncRing};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the sample point")]
    DenominatorVanishes,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Rational-function shorthand used across the crate: `s^m - s^-m`.
pub fn quantum_bracket(m: i32) -> RatFunc {
    RatFunc::monomial(m, 0).sub(&RatFunc::monomial(-m, 0))
}
