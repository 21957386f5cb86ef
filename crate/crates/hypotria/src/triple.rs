//! The `(d, m, n)` parametrization of Pythagorean triples: construction,
//! recovery from raw sides, and bounded enumeration.
//!
//! Every Pythagorean triple arises, exactly once, as
//! `(d(m² − n²), d·2mn, d(m² + n²))` for a positive scale `d` and a generator
//! pair `m > n ≥ 1` with `gcd(m, n) = 1` and `m + n` odd. The crate fixes one
//! leg order throughout: the leg whose primitive part is odd (`d(m² − n²)`)
//! comes first.

use crate::arith;
use crate::{Error, Result};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use std::fmt;

/// Generator data `(d, m, n)` for the triple
/// `(d(m² − n²), d·2mn, d(m² + n²))`.
///
/// Constructed values are always valid: `d ≥ 1` and `(m, n)` a generator
/// pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TripleParams {
    d: BigUint,
    m: BigUint,
    n: BigUint,
}

impl TripleParams {
    /// Validates and wraps a scale and generator pair.
    pub fn new(
        d: impl Into<BigUint>,
        m: impl Into<BigUint>,
        n: impl Into<BigUint>,
    ) -> Result<Self> {
        let (d, m, n) = (d.into(), m.into(), n.into());
        if d.is_zero() {
            return Err(Error::ZeroScale);
        }
        if !arith::is_valid_generator_pair(&m, &n) {
            return Err(Error::InvalidGeneratorPair { m, n });
        }
        Ok(Self { d, m, n })
    }

    /// Scale factor `d`.
    pub fn d(&self) -> &BigUint {
        &self.d
    }

    /// Larger generator `m`.
    pub fn m(&self) -> &BigUint {
        &self.m
    }

    /// Smaller generator `n`.
    pub fn n(&self) -> &BigUint {
        &self.n
    }

    /// `m² − n²`, the odd primitive leg part.
    pub(crate) fn leg_odd_part(&self) -> BigUint {
        &self.m * &self.m - &self.n * &self.n
    }

    /// `2mn`, the even primitive leg part.
    pub(crate) fn leg_even_part(&self) -> BigUint {
        (&self.m * &self.n) << 1
    }

    /// `m² + n²`, the primitive hypotenuse part.
    pub(crate) fn hyp_part(&self) -> BigUint {
        &self.m * &self.m + &self.n * &self.n
    }

    /// Same generator pair at a different scale.
    pub(crate) fn with_scale(&self, d: BigUint) -> Self {
        debug_assert!(!d.is_zero());
        Self {
            d,
            m: self.m.clone(),
            n: self.n.clone(),
        }
    }

    /// The sides `(d(m² − n²), d·2mn, d(m² + n²))` generated by these
    /// parameters.
    pub fn triple(&self) -> Triple {
        Triple {
            a: &self.d * self.leg_odd_part(),
            b: &self.d * self.leg_even_part(),
            c: &self.d * self.hyp_part(),
        }
    }
}

impl fmt::Display for TripleParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(d = {}, m = {}, n = {})", self.d, self.m, self.n)
    }
}

/// Integer sides of a Pythagorean triangle, in the fixed orientation:
/// `a` is the leg with odd primitive part, `b` the leg with even primitive
/// part, `c` the hypotenuse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triple {
    a: BigUint,
    b: BigUint,
    c: BigUint,
}

impl Triple {
    /// Validates sides against the equation and the fixed leg order.
    ///
    /// Rejects sides that fail `a² + b² = c²` (or contain a zero), and sides
    /// given even-part-first; [`recover_params`] accepts either leg order and
    /// reports the swap instead.
    pub fn new(
        a: impl Into<BigUint>,
        b: impl Into<BigUint>,
        c: impl Into<BigUint>,
    ) -> Result<Self> {
        let (a, b, c) = (a.into(), b.into(), c.into());
        if a.is_zero() || b.is_zero() || &a * &a + &b * &b != &c * &c {
            return Err(Error::NotPythagorean { a, b, c });
        }
        let g = arith::gcd(&a, &b);
        if (&a / &g).is_even() {
            return Err(Error::LegOrder { a, b, c });
        }
        Ok(Self { a, b, c })
    }

    /// Leg with odd primitive part.
    pub fn a(&self) -> &BigUint {
        &self.a
    }

    /// Leg with even primitive part.
    pub fn b(&self) -> &BigUint {
        &self.b
    }

    /// Hypotenuse.
    pub fn c(&self) -> &BigUint {
        &self.c
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Result of [`recover_params`]: the parameters plus whether the input legs
/// had to be swapped into the fixed orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecoveredParams {
    /// Unique parameters generating the normalized triple.
    pub params: TripleParams,
    /// True iff the caller gave the even-part leg first.
    pub legs_swapped: bool,
}

impl RecoveredParams {
    /// The normalized triple the recovered parameters generate.
    pub fn triple(&self) -> Triple {
        self.params.triple()
    }
}

/// Recovers the unique `(d, m, n)` generating the triple with sides
/// `{a, b}` and hypotenuse `c`, accepting the legs in either order.
///
/// `d` is `gcd(a, b)`; on the primitive part, `m²` and `n²` are read off as
/// `(c′ + a′)/2` and `(c′ − a′)/2` once `a′` is the odd leg. Inputs that fail
/// `a² + b² = c²` are rejected, as is (defensively) any input whose primitive
/// part fails the square recovery — which genuine triples never do.
pub fn recover_params(
    a: impl Into<BigUint>,
    b: impl Into<BigUint>,
    c: impl Into<BigUint>,
) -> Result<RecoveredParams> {
    let (a, b, c) = (a.into(), b.into(), c.into());
    if a.is_zero() || b.is_zero() || &a * &a + &b * &b != &c * &c {
        return Err(Error::NotPythagorean { a, b, c });
    }
    let g = arith::gcd(&a, &b);
    let (ap, bp, cp) = (&a / &g, &b / &g, &c / &g);
    let (ap, legs_swapped) = if ap.is_odd() {
        (ap, false)
    } else {
        (bp, true)
    };
    let m_sq = (&cp + &ap) >> 1;
    let n_sq = (&cp - &ap) >> 1;
    let m = arith::integer_sqrt(&m_sq);
    let n = arith::integer_sqrt(&n_sq);
    if &m * &m != m_sq || &n * &n != n_sq || !arith::is_valid_generator_pair(&m, &n) {
        return Err(Error::ParamRecovery { a, b, c });
    }
    Ok(RecoveredParams {
        params: TripleParams { d: g, m, n },
        legs_swapped,
    })
}

/// All parameters whose hypotenuse `d(m² + n²)` is at most `max_c`, in
/// lexicographic `(m, n, d)` order.
pub fn enumerate_params(max_c: u64) -> impl Iterator<Item = TripleParams> {
    (2u64..)
        .take_while(move |m| m.checked_mul(*m).is_some_and(|mm| mm < max_c))
        .flat_map(move |m| {
            (1..m)
                .filter(move |&n| {
                    m.gcd(&n) == 1 && (m + n) % 2 == 1 && m * m + n * n <= max_c
                })
                .flat_map(move |n| {
                    let hyp = m * m + n * n;
                    (1..=max_c / hyp).map(move |d| {
                        TripleParams::new(d, m, n).expect("enumerated pair is valid")
                    })
                })
        })
}

/// Convenience equality helper for tests: parameters as small integers.
#[cfg(test)]
fn params(d: u64, m: u64, n: u64) -> TripleParams {
    TripleParams::new(d, m, n).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::gcd;
    use proptest::prelude::*;

    #[test]
    fn generates_the_classic_triples() {
        assert_eq!(params(1, 2, 1).triple(), Triple::new(3u8, 4u8, 5u8).unwrap());
        assert_eq!(
            params(25, 2, 1).triple(),
            Triple::new(75u8, 100u8, 125u8).unwrap()
        );
        assert_eq!(
            params(289, 4, 1).triple(),
            Triple::new(4335u16, 2312u16, 4913u16).unwrap()
        );
    }

    #[test]
    fn rejects_invalid_parameters() {
        assert_eq!(TripleParams::new(0u8, 2u8, 1u8), Err(Error::ZeroScale));
        assert!(matches!(
            TripleParams::new(1u8, 3u8, 1u8),
            Err(Error::InvalidGeneratorPair { .. })
        ));
        assert!(matches!(
            TripleParams::new(1u8, 4u8, 2u8),
            Err(Error::InvalidGeneratorPair { .. })
        ));
    }

    #[test]
    fn triple_validation_enforces_equation_and_order() {
        assert!(Triple::new(3u8, 4u8, 5u8).is_ok());
        assert!(matches!(
            Triple::new(3u8, 4u8, 6u8),
            Err(Error::NotPythagorean { .. })
        ));
        assert!(matches!(
            Triple::new(0u8, 4u8, 4u8),
            Err(Error::NotPythagorean { .. })
        ));
        assert!(matches!(
            Triple::new(4u8, 3u8, 5u8),
            Err(Error::LegOrder { .. })
        ));
    }

    #[test]
    fn recovers_scaled_triples() {
        let r = recover_params(15u8, 20u8, 25u8).unwrap();
        assert_eq!(r.params, params(5, 2, 1));
        assert!(!r.legs_swapped);

        let r = recover_params(4335u16, 2312u16, 4913u16).unwrap();
        assert_eq!(r.params, params(289, 4, 1));
        assert!(!r.legs_swapped);
    }

    #[test]
    fn recovery_reports_swapped_legs() {
        let r = recover_params(4u8, 3u8, 5u8).unwrap();
        assert_eq!(r.params, params(1, 2, 1));
        assert!(r.legs_swapped);
        assert_eq!(r.triple(), Triple::new(3u8, 4u8, 5u8).unwrap());
    }

    #[test]
    fn recovery_rejects_non_triples() {
        assert!(matches!(
            recover_params(3u8, 4u8, 6u8),
            Err(Error::NotPythagorean { .. })
        ));
        assert!(matches!(
            recover_params(1u8, 1u8, 2u8),
            Err(Error::NotPythagorean { .. })
        ));
    }

    #[test]
    fn enumeration_is_lexicographic_and_bounded() {
        let got: Vec<_> = enumerate_params(15).collect();
        assert_eq!(
            got,
            vec![params(1, 2, 1), params(2, 2, 1), params(3, 2, 1), params(1, 3, 2)]
        );
        assert_eq!(enumerate_params(5).collect::<Vec<_>>(), vec![params(1, 2, 1)]);
        assert_eq!(enumerate_params(4).count(), 0);
    }

    #[test]
    fn scale_equals_gcd_of_generated_legs() {
        for p in enumerate_params(200) {
            let t = p.triple();
            assert_eq!(&gcd(t.a(), t.b()), p.d());
        }
    }

    proptest! {
        #[test]
        fn round_trip_recovery(
            d in 1u64..=50,
            (m, n) in prop::sample::select(crate::test_support::generator_pairs(20)),
        ) {
            let p = params(d, m, n);
            let t = p.triple();
            let r = recover_params(t.a().clone(), t.b().clone(), t.c().clone()).unwrap();
            prop_assert_eq!(r.params, p);
            prop_assert!(!r.legs_swapped);
        }

        #[test]
        fn round_trip_recovery_with_swap(
            d in 1u64..=50,
            (m, n) in prop::sample::select(crate::test_support::generator_pairs(20)),
        ) {
            let p = params(d, m, n);
            let t = p.triple();
            let r = recover_params(t.b().clone(), t.a().clone(), t.c().clone()).unwrap();
            prop_assert_eq!(r.params, p);
            prop_assert!(r.legs_swapped);
        }
    }
}
