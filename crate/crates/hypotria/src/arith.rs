//! Exact integer and rational primitives: gcd, integer square root,
//! perfect-square detection, and generator-pair validation.
//!
//! Everything here is exact. Square roots are computed by pure integer Newton
//! iteration — never through floating point — so results stay correct at
//! magnitudes where `f64` would silently round.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

/// Exact rational scalar, always stored reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Greatest common divisor of two non-negative integers, with `gcd(0, 0) = 0`.
pub fn gcd(u: &BigUint, v: &BigUint) -> BigUint {
    u.gcd(v)
}

/// `⌊√n⌋`, by Newton iteration on integers.
///
/// Starts from a power of two at least `√n`, descends monotonically, and
/// finishes with a downward adjustment so the result `r` always satisfies
/// `r² ≤ n < (r + 1)²`.
pub fn integer_sqrt(n: &BigUint) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    // 2^⌈bits/2⌉ ≥ √n, so the iteration approaches the root from above.
    let mut x = BigUint::one() << n.bits().div_ceil(2) as usize;
    loop {
        let y = (&x + n / &x) >> 1;
        if y >= x {
            break;
        }
        x = y;
    }
    while &x * &x > *n {
        x -= BigUint::one();
    }
    x
}

/// Bitmask of the quadratic residues modulo 64; squares can only land on 12
/// of the 64 residues, so one mask probe rejects most non-squares cheaply.
const SQUARE_RESIDUES_MOD_64: u64 = {
    let mut mask = 0u64;
    let mut k = 0u64;
    while k < 64 {
        mask |= 1 << ((k * k) % 64);
        k += 1;
    }
    mask
};

/// True iff `n` is a perfect square.
pub fn is_perfect_square(n: &BigUint) -> bool {
    let low = n.iter_u64_digits().next().unwrap_or(0);
    if (SQUARE_RESIDUES_MOD_64 >> (low & 63)) & 1 == 0 {
        return false;
    }
    let r = integer_sqrt(n);
    &r * &r == *n
}

/// True iff `(m, n)` generates a Pythagorean triple: `m > n ≥ 1`,
/// `gcd(m, n) = 1`, and `m + n` odd (one generator even, one odd).
pub fn is_valid_generator_pair(m: &BigUint, n: &BigUint) -> bool {
    !n.is_zero() && m > n && gcd(m, n).is_one() && (m + n).is_odd()
}

/// The integer `n` as a rational.
pub fn to_rational(n: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n.clone()))
}

/// The non-negative integer value of `r`, if it has one.
pub fn rational_to_biguint(r: &Rational) -> Option<BigUint> {
    if r.is_integer() {
        r.to_integer().to_biguint()
    } else {
        None
    }
}

/// Convenience constructor for small rationals in tests and examples.
///
/// Panics if `denom` is zero.
pub fn frac(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}
