//! Arithmetic in ℤ/p for the modular refutation path.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::{BiPoly, CoeffError};

pub fn add(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + p as u128 - b as u128) % p as u128) as u64
}

pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, b, p);
        }
        b = mul(b, b, p);
        e >>= 1;
    }
    r
}

/// Inverse by Fermat; `a` must be nonzero mod the prime `p`.
pub fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow(a, p - 2, p)
}

/// `a^e` for a signed exponent; `a` must be invertible when `e < 0`.
pub fn pow_signed(a: u64, e: i64, p: u64) -> u64 {
    if e >= 0 {
        pow(a, e as u64, p)
    } else {
        pow(inv(a, p), e.unsigned_abs(), p)
    }
}

pub fn reduce_int(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

pub fn reduce_rational(r: &BigRational, p: u64) -> Result<u64, CoeffError> {
    let d = reduce_int(r.denom(), p);
    if d == 0 {
        return Err(CoeffError::DenominatorVanishes);
    }
    Ok(mul(reduce_int(r.numer(), p), inv(d, p), p))
}

pub fn eval_bipoly(f: &BiPoly, point: (u64, u64), p: u64) -> Result<u64, CoeffError> {
    if f.is_zero() {
        return Ok(0);
    }
    let mut acc = 0;
    for (m, c) in f.terms() {
        let v = mul(pow(point.0, m.0 as u64, p), pow(point.1, m.1 as u64, p), p);
        acc = add(acc, mul(v, reduce_rational(c, p)?, p), p);
    }
    Ok(acc)
}

/// Deterministic Miller-Rabin, exact for all `n < 2^64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let (mut d, mut r) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn is_zero_mod(n: &BigInt, p: u64) -> bool {
    (n % BigInt::from(p)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2_147_483_647));
        assert!(is_prime(1_000_003));
        assert!(!is_prime(1_000_001));
        assert!(!is_prime(1));
    }

    #[test]
    fn inverse_round_trip() {
        let p = 1_000_003;
        for a in [1u64, 2, 12345, 999_999] {
            assert_eq!(mul(a, inv(a, p), p), 1);
        }
        assert_eq!(pow_signed(3, -2, 7), inv(9 % 7, 7));
    }
}
