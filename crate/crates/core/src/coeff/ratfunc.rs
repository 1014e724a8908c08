use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::bipoly::{fmt_term, BiPoly, Mono};
use super::gcd::make_monic;
use super::CoeffError;

/// Element of ℚ(s, c) kept as a reduced fraction.
///
/// The denominator is coprime to the numerator and has leading coefficient 1
/// in graded lex order, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: BiPoly,
    den: BiPoly,
}

/// Named parameters that embed into ℚ(s, c).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Param {
    /// `t = s^2`
    T,
    /// `q = c^-2`
    Q,
    /// `σ = q^-1 = c^2`
    Sigma,
    /// `σ̄ = t^-1 = s^-2`
    SigmaBar,
    /// `t^{1/2} = s`
    THalf,
}

impl FromStr for Param {
    type Err = CoeffError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "t" => Ok(Param::T),
            "q" => Ok(Param::Q),
            "sigma" => Ok(Param::Sigma),
            "sigma_bar" => Ok(Param::SigmaBar),
            "t_half" => Ok(Param::THalf),
            other => Err(CoeffError::Parse(format!("unknown parameter `{other}`"))),
        }
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        Self { num: BiPoly::zero(), den: BiPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(BiPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(BiPoly::from_int(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::from_poly(BiPoly::constant(r))
    }

    pub fn from_poly(p: BiPoly) -> Self {
        Self { num: p, den: BiPoly::one() }
    }

    pub fn s() -> Self {
        Self::from_poly(BiPoly::s())
    }

    pub fn c() -> Self {
        Self::from_poly(BiPoly::c())
    }

    /// `s^a c^b` for any integer exponents.
    pub fn monomial(a: i32, b: i32) -> Self {
        let up = (a.max(0) as u32, b.max(0) as u32);
        let down = ((-a).max(0) as u32, (-b).max(0) as u32);
        Self {
            num: BiPoly::monomial(BigRational::one(), up),
            den: BiPoly::monomial(BigRational::one(), down),
        }
    }

    /// Reduced fraction `num / den`.
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::ZeroDenominator);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: BiPoly, den: BiPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        let lc = den.leading().map(|(_, c)| c.clone()).unwrap();
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.recip();
            Self { num: num.scale(&inv), den: make_monic(&den) }
        }
    }

    pub fn param(p: Param) -> Self {
        match p {
            Param::T => Self::monomial(2, 0),
            Param::Q => Self::monomial(0, -2),
            Param::Sigma => Self::monomial(0, 2),
            Param::SigmaBar => Self::monomial(-2, 0),
            Param::THalf => Self::monomial(1, 0),
        }
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// True when the leading numerator coefficient is negative; used to print
    /// sums as `a - b` rather than `a + -b`.
    pub fn looks_negative(&self) -> bool {
        self.num.leading().is_some_and(|(_, c)| c.is_negative())
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Self::normalize(self.num.add(&o.num), self.den.clone());
        }
        Self::normalize(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Self { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        // Cross-cancel before multiplying; both inputs are already reduced.
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = o.den.div_exact(&g1).unwrap();
        let n2 = o.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        let lc = den.leading().map(|(_, c)| c.clone()).unwrap();
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.recip();
            Self { num: num.scale(&inv), den: make_monic(&den) }
        }
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self, CoeffError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<Self, CoeffError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut r = Self::one();
        for _ in 0..e.unsigned_abs() {
            r = r.mul(&base);
        }
        Ok(r)
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.mul(&Self::from_int(k))
    }

    /// Numerator and denominator scaled by a common integer so both have
    /// integer coefficients.
    pub fn integral_parts(&self) -> (BiPoly, BiPoly) {
        let l = num_integer::Integer::lcm(&self.num.denominator_lcm(), &self.den.denominator_lcm());
        let k = BigRational::from_integer(l);
        (self.num.scale(&k), self.den.scale(&k))
    }

    /// `true` if `self` and `o` agree by cross-multiplication.
    pub fn cross_equal(&self, o: &Self) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }

    /// Value in ℤ/p at `(s, c) = point`.
    pub fn eval_mod(&self, point: (u64, u64), p: u64) -> Result<u64, CoeffError> {
        let n = super::modp::eval_bipoly(&self.num, point, p)?;
        let d = super::modp::eval_bipoly(&self.den, point, p)?;
        if d == 0 {
            return Err(CoeffError::DenominatorVanishes);
        }
        Ok(super::modp::mul(n, super::modp::inv(d, p), p))
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl FromStr for RatFunc {
    type Err = CoeffError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::parse::parse_ratfunc(s)
    }
}

impl RatFunc {
    /// Renders as a factor that can be followed by ` * word`.
    pub fn fmt_factor(&self) -> String {
        if self.den.is_one() && self.num.is_monomial() {
            let (m, c): (Mono, &BigRational) = self.num.leading().unwrap();
            fmt_term(m, c)
        } else if self.den.is_one() {
            format!("({})", self.num)
        } else {
            self.to_string()
        }
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> RatFunc {
        RatFunc::s()
    }
    fn c() -> RatFunc {
        RatFunc::c()
    }
    fn one() -> RatFunc {
        RatFunc::one()
    }

    #[test]
    fn normalize_already_coprime() {
        let r = RatFunc::new(s().mul(&s()).sub(&one()).num().clone(), BiPoly::s()).unwrap();
        assert_eq!(r.to_string(), "(s^2 - 1)/(s)");
    }

    #[test]
    fn normalize_cancels_common_c() {
        // (s^2 c - c) / (s c)
        let num = s().mul(&s()).mul(&c()).sub(&c());
        let den = s().mul(&c());
        let r = RatFunc::new(num.num().clone(), den.num().clone()).unwrap();
        assert_eq!(r.to_string(), "(s^2 - 1)/(s)");
        // multiply back
        assert_eq!(r.mul(&den), num);
    }

    #[test]
    fn zero_numerator_normalizes_to_zero_over_one() {
        let r = RatFunc::new(BiPoly::zero(), s().add(&c()).num().clone()).unwrap();
        assert!(r.is_zero());
        assert!(r.den().is_one());
        assert_eq!(r.to_string(), "0");
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert_eq!(RatFunc::new(BiPoly::one(), BiPoly::zero()), Err(CoeffError::ZeroDenominator));
    }

    #[test]
    fn difference_of_squares() {
        let si = s().inv().unwrap();
        let lhs = s().sub(&si).mul(&s().add(&si));
        let rhs = s().pow(2).unwrap().sub(&s().pow(-2).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_of_s_squared() {
        assert_eq!(s().pow(2).unwrap().inv().unwrap(), RatFunc::monomial(-2, 0));
    }

    #[test]
    fn partial_fraction_sum() {
        let c2 = c().pow(2).unwrap();
        let a = one().sub(&c2).inv().unwrap();
        let b = one().add(&c2).inv().unwrap();
        let expect = RatFunc::from_int(2).div(&one().sub(&c2.pow(2).unwrap())).unwrap();
        let got = a.add(&b);
        assert_eq!(got, expect);
        // clearing denominators: got * (1 - c^4) == 2
        assert_eq!(got.mul(&one().sub(&c().pow(4).unwrap())), RatFunc::from_int(2));
    }

    #[test]
    fn division_by_zero_errors() {
        assert_eq!(s().div(&RatFunc::zero()), Err(CoeffError::DivisionByZero));
        assert_eq!(RatFunc::zero().inv(), Err(CoeffError::DivisionByZero));
    }

    #[test]
    fn params_embed_as_documented() {
        assert_eq!(RatFunc::param(Param::Q), RatFunc::monomial(0, -2));
        assert_eq!(RatFunc::param(Param::Sigma), c().pow(2).unwrap());
        assert_eq!(RatFunc::param(Param::THalf), s());
        assert_eq!(RatFunc::param(Param::SigmaBar), RatFunc::param(Param::T).inv().unwrap());
        assert_eq!(RatFunc::param(Param::Sigma), RatFunc::param(Param::Q).inv().unwrap());
    }

    #[test]
    fn eval_mod_examples() {
        let r = s().pow(2).unwrap().sub(&one()).div(&s()).unwrap();
        assert_eq!(r.eval_mod((2, 3), 7), Ok(5));
        assert_eq!(RatFunc::zero().eval_mod((4, 5), 7), Ok(0));
        assert_eq!(s().inv().unwrap().eval_mod((0, 1), 7), Err(CoeffError::DenominatorVanishes));
    }

    #[test]
    fn denominator_is_monic() {
        let r = one().div(&RatFunc::from_int(2).mul(&s()).sub(&c())).unwrap();
        assert!(r.den().leading().unwrap().1.is_one());
    }
}
