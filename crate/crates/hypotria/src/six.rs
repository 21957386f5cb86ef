//! When all six triangles of the figure are Pythagorean at once.
//!
//! Halving the inner rectangle along a diagonal produces two congruent right
//! triangles with legs `x` and `y`; the figure therefore contains six right
//! triangles in total. At the integral cut positions the sub-triangles are
//! already Pythagorean, so all six are iff `x² + y²` is a perfect square.
//!
//! The scan indexes positions so that
//!
//! ```text
//! y = δ(m² − n²),    x = (d − δ)·2mn,    δ = 1, …, d − 1,
//! ```
//!
//! which walks the hypotenuse from the `A` end: the cut realizing this pair
//! splits the hypotenuse into `δ(m² + n²)` at `A` and `(d − δ)(m² + n²)` at
//! `B`. When `x² + y²` is a square the rectangle halves are themselves
//! generated by parameters `(D, M, N)`, recovered from the legs alone:
//! `D = gcd(x, y)` and, with the odd primitive leg `o` and hypotenuse `s/D`,
//! `M² = (s/D + o)/2`, `N² = (s/D − o)/2`. Exactly one of the two legs is
//! the odd one, and the [`LegOrientation`] records which.
//!
//! `x = y` never qualifies: `2x²` is not a perfect square for `x ≥ 1`.

use crate::arith::{gcd, integer_sqrt, is_perfect_square, is_valid_generator_pair};
use crate::triple::TripleParams;
use crate::{Error, Result};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

/// Which rectangle leg carries the odd primitive part of the recovered
/// parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LegOrientation {
    /// `y = D(M² − N²)` and `x = D·2MN`.
    YOdd,
    /// `y = D·2MN` and `x = D(M² − N²)`.
    YEven,
}

impl LegOrientation {
    /// Stable lowercase name used in command output.
    pub fn name(self) -> &'static str {
        match self {
            LegOrientation::YOdd => "y-odd",
            LegOrientation::YEven => "y-even",
        }
    }
}

/// A cut position where all six triangles of the figure are Pythagorean.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SixConfig {
    /// Position index: `y = δ(m² − n²)`, `x = (d − δ)·2mn`.
    pub delta: BigUint,
    /// Horizontal rectangle leg.
    pub x: BigUint,
    /// Vertical rectangle leg.
    pub y: BigUint,
    /// Integer hypotenuse of the rectangle halves: `√(x² + y²)`.
    pub inner_hypotenuse: BigUint,
    /// Parameters `(D, M, N)` generating the rectangle-half triangle.
    pub inner: TripleParams,
    /// Which leg carries the odd primitive part.
    pub orientation: LegOrientation,
}

impl fmt::Display for SixConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "delta = {}: legs ({}, {}), hypotenuse {}, inner {}",
            self.delta, self.x, self.y, self.inner_hypotenuse, self.inner
        )
    }
}

/// One row of the position scan: the rectangle legs at `δ` and, when their
/// squared sum is a perfect square, the full configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaScan {
    /// Position index.
    pub delta: BigUint,
    /// Vertical rectangle leg `δ(m² − n²)`.
    pub y: BigUint,
    /// Horizontal rectangle leg `(d − δ)·2mn`.
    pub x: BigUint,
    /// `x² + y²`.
    pub sum_of_squares: BigUint,
    /// The configuration, when `sum_of_squares` is a perfect square.
    pub config: Option<SixConfig>,
}

/// Scans every cut position of `p`, reporting the rectangle legs and their
/// squared sum at each `δ`, with full configurations at the hits.
pub fn scan_six(p: &TripleParams) -> Vec<DeltaScan> {
    let odd_part = p.leg_odd_part();
    let even_part = p.leg_even_part();
    let mut out = Vec::new();
    let mut delta = BigUint::one();
    while &delta < p.d() {
        let y = &delta * &odd_part;
        let x = (p.d() - &delta) * &even_part;
        let sum_of_squares = &x * &x + &y * &y;
        let config = classify_leg_pair(&x, &y).map(|(inner, orientation)| SixConfig {
            delta: delta.clone(),
            inner_hypotenuse: inner.triple().c().clone(),
            x: x.clone(),
            y: y.clone(),
            inner,
            orientation,
        });
        out.push(DeltaScan {
            delta: delta.clone(),
            y,
            x,
            sum_of_squares,
            config,
        });
        delta += BigUint::one();
    }
    out
}

/// The cut positions of `p` where all six triangles are Pythagorean, in
/// increasing `δ` order.
pub fn find_six_configs(p: &TripleParams) -> Vec<SixConfig> {
    scan_six(p).into_iter().filter_map(|row| row.config).collect()
}

/// Recovers the parameters `(D, M, N)` of the right triangle with legs
/// `x` and `y`, if `x² + y²` is a perfect square.
///
/// Returns `None` for `x = y` (the isosceles diagonal cut, never
/// Pythagorean), for a zero leg, and for non-square sums.
pub fn classify_leg_pair(x: &BigUint, y: &BigUint) -> Option<(TripleParams, LegOrientation)> {
    if x.is_zero() || y.is_zero() || x == y {
        // x = y would need 2x² to be a square; √2 is irrational.
        return None;
    }
    let sum = x * x + y * y;
    if !is_perfect_square(&sum) {
        return None;
    }
    let hyp = integer_sqrt(&sum);
    let scale = gcd(x, y);
    let xp = x / &scale;
    let yp = y / &scale;
    let hp = &hyp / &scale; // scale² divides the sum, so this is exact
    // The primitive legs have opposite parity; exactly one branch applies.
    let (odd_leg, orientation) = if yp.is_odd() {
        (yp, LegOrientation::YOdd)
    } else {
        (xp, LegOrientation::YEven)
    };
    let m_sq = (&hp + &odd_leg) >> 1;
    let n_sq = (&hp - &odd_leg) >> 1;
    let m = integer_sqrt(&m_sq);
    let n = integer_sqrt(&n_sq);
    if &m * &m != m_sq || &n * &n != n_sq || !is_valid_generator_pair(&m, &n) {
        return None; // unreachable for genuine square sums; defensive
    }
    let inner = TripleParams::new(scale, m, n).expect("recovered parameters are valid");
    Some((inner, orientation))
}

/// A member of the constructive family that always produces a six-triangle
/// configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family1Instance {
    /// Outer generator pair `(m, n)`.
    pub outer_gens: (BigUint, BigUint),
    /// Inner generator pair `(M, N)`.
    pub inner_gens: (BigUint, BigUint),
    /// Free scale `K ≥ 1`.
    pub k: BigUint,
    /// Designated position `δ = K·mn(M² − N²)`.
    pub delta: BigUint,
    /// Outer scale `d = K(mn(M² − N²) + MN(m² − n²))`.
    pub d: BigUint,
}

/// Builds the family member for outer pair `(m, n)`, inner pair
/// `(inner_m, inner_n)`, and scale `k`, returning the outer parameters, the
/// instance data, and the six-triangle configuration it realizes.
///
/// Setting `δ = K·mn(M² − N²)` and `d = K(mn(M² − N²) + MN(m² − n²))` makes
/// the rectangle legs `y = D(M² − N²)` and `x = D·2MN` with
/// `D = K·mn(m² − n²)`, so `x² + y² = (D(M² + N²))²` by construction.
pub fn family1_generate(
    m: impl Into<BigUint>,
    n: impl Into<BigUint>,
    inner_m: impl Into<BigUint>,
    inner_n: impl Into<BigUint>,
    k: impl Into<BigUint>,
) -> Result<(TripleParams, Family1Instance, SixConfig)> {
    let (m, n) = (m.into(), n.into());
    let (big_m, big_n) = (inner_m.into(), inner_n.into());
    let k = k.into();
    if !is_valid_generator_pair(&m, &n) {
        return Err(Error::InvalidGeneratorPair { m, n });
    }
    if !is_valid_generator_pair(&big_m, &big_n) {
        return Err(Error::InvalidGeneratorPair {
            m: big_m,
            n: big_n,
        });
    }
    if k.is_zero() {
        return Err(Error::ZeroScale);
    }

    let outer_odd = &m * &m - &n * &n;
    let inner_odd = &big_m * &big_m - &big_n * &big_n;
    let delta = &k * &m * &n * &inner_odd;
    let d = &delta + &k * &big_m * &big_n * &outer_odd;
    let outer = TripleParams::new(d.clone(), m.clone(), n.clone())
        .expect("validated pair with positive scale");

    let scale = &k * &m * &n * &outer_odd;
    let inner = TripleParams::new(scale, big_m.clone(), big_n.clone())
        .expect("validated pair with positive scale");
    let inner_triple = inner.triple();
    let config = SixConfig {
        delta: delta.clone(),
        x: inner_triple.b().clone(),
        y: inner_triple.a().clone(),
        inner_hypotenuse: inner_triple.c().clone(),
        inner,
        orientation: LegOrientation::YOdd,
    };
    debug_assert_eq!(
        &config.x * &config.x + &config.y * &config.y,
        &config.inner_hypotenuse * &config.inner_hypotenuse
    );

    let instance = Family1Instance {
        outer_gens: (m, n),
        inner_gens: (big_m, big_n),
        k,
        delta,
        d,
    };
    Ok((outer, instance, config))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn params(d: u64, m: u64, n: u64) -> TripleParams {
        TripleParams::new(d, m, n).unwrap()
    }

    fn b(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn scan_of_15_20_25_rejects_every_position() {
        let rows = scan_six(&params(5, 2, 1));
        assert_eq!(rows.len(), 4);
        let sums: Vec<BigUint> = rows.iter().map(|r| r.sum_of_squares.clone()).collect();
        assert_eq!(sums, vec![b(265), b(180), b(145), b(160)]);
        assert!(rows.iter().all(|r| r.config.is_none()));
        assert_eq!(rows[0].y, b(3));
        assert_eq!(rows[0].x, b(16));
        assert_eq!(rows[3].y, b(12));
        assert_eq!(rows[3].x, b(4));
        assert!(find_six_configs(&params(5, 2, 1)).is_empty());
    }

    #[test]
    fn no_positions_exist_at_scale_one() {
        assert!(scan_six(&params(1, 2, 1)).is_empty());
        assert!(find_six_configs(&params(1, 2, 1)).is_empty());
    }

    #[test]
    fn configs_of_36_48_60() {
        let configs = find_six_configs(&params(12, 2, 1));
        let at_six = configs.iter().find(|c| c.delta == b(6)).expect("delta 6");
        assert_eq!(at_six.y, b(18));
        assert_eq!(at_six.x, b(24));
        assert_eq!(at_six.inner_hypotenuse, b(30));
        assert_eq!(at_six.inner, params(6, 2, 1));
        assert_eq!(at_six.orientation, LegOrientation::YOdd);
        // δ = 7 also works here: legs (20, 21) with hypotenuse 29.
        let at_seven = configs.iter().find(|c| c.delta == b(7)).expect("delta 7");
        assert_eq!((at_seven.x.clone(), at_seven.y.clone()), (b(20), b(21)));
        assert_eq!(at_seven.inner, params(1, 5, 2));
        assert_eq!(configs.len(), 2);
    }

    #[test]
    fn classifier_examples() {
        let (inner, orientation) = classify_leg_pair(&b(48), &b(90)).unwrap();
        assert_eq!(inner, params(6, 4, 1));
        assert_eq!(orientation, LegOrientation::YOdd);

        let (inner, orientation) = classify_leg_pair(&b(4), &b(3)).unwrap();
        assert_eq!(inner, params(1, 2, 1));
        assert_eq!(orientation, LegOrientation::YOdd);

        let (inner, orientation) = classify_leg_pair(&b(3), &b(4)).unwrap();
        assert_eq!(inner, params(1, 2, 1));
        assert_eq!(orientation, LegOrientation::YEven);

        assert_eq!(classify_leg_pair(&b(16), &b(3)), None);
        assert_eq!(classify_leg_pair(&b(7), &b(7)), None);
        assert_eq!(classify_leg_pair(&b(0), &b(3)), None);
    }

    #[test]
    fn family_instances_match_hand_computation() {
        let (outer, inst, config) = family1_generate(2u8, 1u8, 2u8, 1u8, 1u8).unwrap();
        assert_eq!(outer, params(12, 2, 1));
        assert_eq!(inst.delta, b(6));
        assert_eq!(config.y, b(18));
        assert_eq!(config.x, b(24));
        assert_eq!(config.inner_hypotenuse, b(30));

        let (outer, inst, config) = family1_generate(2u8, 1u8, 4u8, 1u8, 1u8).unwrap();
        assert_eq!(outer, params(42, 2, 1));
        assert_eq!(inst.delta, b(30));
        assert_eq!((config.y.clone(), config.x.clone()), (b(90), b(48)));
        assert_eq!(config.inner_hypotenuse, b(102));

        let (outer, inst, config) = family1_generate(2u8, 1u8, 2u8, 1u8, 3u8).unwrap();
        assert_eq!(outer, params(36, 2, 1));
        assert_eq!(inst.delta, b(18));
        assert_eq!((config.y.clone(), config.x.clone()), (b(54), b(72)));
        assert_eq!(config.inner_hypotenuse, b(90));
    }

    #[test]
    fn family_rejects_bad_inputs() {
        assert!(matches!(
            family1_generate(3u8, 1u8, 2u8, 1u8, 1u8),
            Err(Error::InvalidGeneratorPair { .. })
        ));
        assert!(matches!(
            family1_generate(2u8, 1u8, 4u8, 2u8, 1u8),
            Err(Error::InvalidGeneratorPair { .. })
        ));
        assert_eq!(
            family1_generate(2u8, 1u8, 2u8, 1u8, 0u8),
            Err(Error::ZeroScale)
        );
    }

    #[test]
    fn family_configs_appear_in_the_scan() {
        for (m, n) in [(2u64, 1u64), (3, 2), (4, 1)] {
            for (bm, bn) in [(2u64, 1u64), (3, 2)] {
                for k in 1u64..=2 {
                    let (outer, inst, config) = family1_generate(m, n, bm, bn, k).unwrap();
                    assert!(inst.delta >= b(1) && &inst.delta < outer.d());
                    let found = find_six_configs(&outer);
                    assert!(found.contains(&config));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn classifier_round_trips_generated_legs(
            scale in 1u64..=10,
            (m, n) in prop::sample::select(crate::test_support::generator_pairs(20)),
        ) {
            let inner = params(scale, m, n);
            let t = inner.triple();
            // y carries the odd part.
            let (rec, orientation) = classify_leg_pair(t.b(), t.a()).unwrap();
            prop_assert_eq!(&rec, &inner);
            prop_assert_eq!(orientation, LegOrientation::YOdd);
            // Swapped legs flip the orientation, not the parameters.
            let (rec, orientation) = classify_leg_pair(t.a(), t.b()).unwrap();
            prop_assert_eq!(&rec, &inner);
            prop_assert_eq!(orientation, LegOrientation::YEven);
        }

        #[test]
        fn exactly_one_orientation_fits_each_hit(
            x in 1u64..=400, y in 1u64..=400,
        ) {
            if let Some((inner, orientation)) = classify_leg_pair(&b(x), &b(y)) {
                let t = inner.triple();
                // The primitive legs have opposite parity, so the odd part
                // lands on exactly one of x, y — and the reconstruction must
                // reproduce the pair in the recorded orientation.
                match orientation {
                    LegOrientation::YOdd => {
                        prop_assert_eq!((t.a(), t.b()), (&b(y), &b(x)));
                    }
                    LegOrientation::YEven => {
                        prop_assert_eq!((t.a(), t.b()), (&b(x), &b(y)));
                    }
                }
            }
        }
    }
}
