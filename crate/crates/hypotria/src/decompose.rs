//! Cutting a Pythagorean triangle at a hypotenuse point.
//!
//! For a point `P` splitting the hypotenuse so that `|BP| = t·c` with
//! `0 < t < 1`, the perpendiculars from `P` to the legs produce two
//! sub-triangles similar to the outer one. Similarity fixes every length:
//!
//! ```text
//! x / b  =  (a − y) / a  =  h1 / c  =  t          (sub-triangle at B)
//! y / a  =  (b − x) / b  =  h2 / c  =  1 − t      (sub-triangle at A)
//! ```
//!
//! where `x`, `y` are the perpendicular feet offsets along the horizontal and
//! vertical legs and `h1 = |BP|`, `h2 = |PA|`. All lengths are rational for
//! rational `t` and irrational for irrational `t` — there is no mixed case.
//!
//! On a triple generated by `(d, m, n)`, both sub-triangles are themselves
//! Pythagorean exactly at the `d − 1` positions `h1 = δ(m² + n²)`,
//! `δ = 1, …, d − 1`, where they are the `δ`- and `(d − δ)`-scaled copies of
//! the primitive triangle.

use crate::arith::{rational_to_biguint, to_rational, Rational};
use crate::triple::{Triple, TripleParams};
use crate::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Exact lengths produced by cutting at hypotenuse fraction `t`.
///
/// Field names follow the geometry: `x` and `b_minus_x` split the horizontal
/// leg, `y` and `a_minus_y` the vertical leg, `h1` and `h2` the hypotenuse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Hypotenuse fraction `|BP| / |BA|`, strictly between 0 and 1.
    pub t: Rational,
    /// Horizontal offset of the cut: `x = t·b`.
    pub x: Rational,
    /// Vertical offset of the cut: `y = (1 − t)·a`.
    pub y: Rational,
    /// Remaining vertical piece `a − y = t·a`.
    pub a_minus_y: Rational,
    /// Remaining horizontal piece `b − x = (1 − t)·b`.
    pub b_minus_x: Rational,
    /// Hypotenuse piece at `B`: `h1 = t·c`.
    pub h1: Rational,
    /// Hypotenuse piece at `A`: `h2 = (1 − t)·c`.
    pub h2: Rational,
}

impl Decomposition {
    /// Cuts `tri` at hypotenuse fraction `t`, rejecting `t ≤ 0` and `t ≥ 1`.
    pub fn at_fraction(tri: &Triple, t: &Rational) -> Result<Self> {
        if *t <= Rational::zero() || *t >= Rational::one() {
            return Err(Error::PositionOutOfRange {
                value: t.to_string(),
            });
        }
        let a = to_rational(tri.a());
        let b = to_rational(tri.b());
        let c = to_rational(tri.c());
        let s = Rational::one() - t;
        Ok(Self {
            t: t.clone(),
            x: t * &b,
            y: &s * &a,
            a_minus_y: t * &a,
            b_minus_x: &s * &b,
            h1: t * &c,
            h2: &s * &c,
        })
    }

    /// Cuts `tri` at the point with `|BP| = h1`, rejecting `h1 ≤ 0` and
    /// `h1 ≥ c`.
    pub fn at_h1(tri: &Triple, h1: &Rational) -> Result<Self> {
        let c = to_rational(tri.c());
        if *h1 <= Rational::zero() || *h1 >= c {
            return Err(Error::PositionOutOfRange {
                value: h1.to_string(),
            });
        }
        Self::at_fraction(tri, &(h1 / &c))
    }
}

/// A cut position where all six lengths are integers: the sub-triangles are
/// the `δ`- and `(d − δ)`-scaled copies of the primitive triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralDecomposition {
    /// Scale index of the sub-triangle at `B`, with `1 ≤ δ ≤ d − 1`.
    pub delta: BigUint,
    /// Sub-triangle at `B`: sides `(δ(m² − n²), δ·2mn, δ(m² + n²))`.
    pub sub_bdp: Triple,
    /// Sub-triangle at `A`: sides `((d − δ)(m² − n²), (d − δ)·2mn,
    /// (d − δ)(m² + n²))`.
    pub sub_pea: Triple,
}

impl IntegralDecomposition {
    /// `|BP| = δ(m² + n²)`, the hypotenuse of the sub-triangle at `B`.
    pub fn h1(&self) -> &BigUint {
        self.sub_bdp.c()
    }
}

/// The `d − 1` cut positions of `p` whose six lengths are all integers,
/// in increasing `δ` order. Empty exactly when `d = 1`.
pub fn integral_positions(p: &TripleParams) -> Vec<IntegralDecomposition> {
    let mut out = Vec::new();
    let mut delta = BigUint::one();
    while &delta < p.d() {
        let complement = p.d() - &delta;
        out.push(IntegralDecomposition {
            delta: delta.clone(),
            sub_bdp: p.with_scale(delta.clone()).triple(),
            sub_pea: p.with_scale(complement).triple(),
        });
        delta += BigUint::one();
    }
    out
}

/// How a cut position relates to the integer grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PositionClass {
    /// `t·c = δ(m² + n²)` for an integer `1 ≤ δ ≤ d − 1`; both sub-triangles
    /// are Pythagorean.
    Integral {
        /// The scale index of the sub-triangle at `B`.
        delta: BigUint,
    },
    /// All six lengths are rational but at least one is not an integer;
    /// neither sub-triangle is Pythagorean.
    RationalNonIntegral,
}

/// Classifies the cut of `p`'s triangle at hypotenuse fraction `t`,
/// rejecting out-of-range `t`.
pub fn classify_position(p: &TripleParams, t: &Rational) -> Result<PositionClass> {
    if *t <= Rational::zero() || *t >= Rational::one() {
        return Err(Error::PositionOutOfRange {
            value: t.to_string(),
        });
    }
    let h1 = t * to_rational(p.triple().c());
    match rational_to_biguint(&h1) {
        Some(h) => {
            let hyp_part = p.hyp_part();
            if (&h % &hyp_part).is_zero() {
                Ok(PositionClass::Integral {
                    delta: h / hyp_part,
                })
            } else {
                Ok(PositionClass::RationalNonIntegral)
            }
        }
        None => Ok(PositionClass::RationalNonIntegral),
    }
}
