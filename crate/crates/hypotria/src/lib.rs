//! Exact arithmetic for splitting a Pythagorean triangle at a point of its
//! hypotenuse.
//!
//! Place a right triangle with the right angle at the origin, the vertical leg
//! `a` ending at `B`, the horizontal leg `b` ending at `A`, and hypotenuse
//! `BA` of length `c`. Dropping perpendiculars from a point `P` on the
//! hypotenuse onto both legs cuts the triangle into two smaller right
//! triangles similar to the outer one, plus a rectangle. Every Pythagorean
//! triangle has sides `d(m² − n²)`, `d·2mn`, `d(m² + n²)` for a scale `d ≥ 1`
//! and a generator pair `m > n ≥ 1` that is coprime with `m + n` odd, and in
//! those coordinates the cut admits exact answers:
//!
//! * exactly `d − 1` positions of `P` make both sub-triangles Pythagorean
//!   ([`integral_positions`]);
//! * the midpoint of the hypotenuse works precisely when `d` is even, the
//!   foot of the right-angle bisector precisely when `(m² − n² + 2mn) | d`,
//!   and the foot of the altitude precisely when `(m² + n²)² | d`
//!   ([`analyze_midpoint`], [`analyze_bisector_foot`],
//!   [`analyze_altitude_foot`]);
//! * cutting the rectangle along both diagonals of its halves yields four more
//!   triangles, and all six are simultaneously Pythagorean exactly when a
//!   certain leg pair has a perfect-square sum of squares
//!   ([`find_six_configs`]), with a two-parameter family of constructions
//!   ([`family1_generate`]);
//! * every such statement can be re-checked against an independent
//!   brute-force scan that knows nothing about the formulas
//!   ([`verify_claim`]).
//!
//! All computation is exact: arbitrary-precision integers and reduced
//! rationals, never floating point.
//!
//! ```
//! use hypotria::{analyze_altitude_foot, TripleParams};
//!
//! let p = TripleParams::new(25u32, 2u32, 1u32)?; // the (75, 100, 125) triangle
//! let report = analyze_altitude_foot(&p);
//! assert!(report.all_pythagorean);
//! assert_eq!(report.lengths.h1, hypotria::frac(45, 1));
//! # Ok::<(), hypotria::Error>(())
//! ```

#![forbid(unsafe_code)]

pub mod arith;
pub mod cli;
pub mod decompose;
pub mod oracle;
pub mod six;
pub mod special;
pub mod triple;

pub use arith::{
    frac, gcd, integer_sqrt, is_perfect_square, is_valid_generator_pair, to_rational, Rational,
};
pub use decompose::{
    classify_position, integral_positions, Decomposition, IntegralDecomposition, PositionClass,
};
pub use num_bigint::{BigInt, BigUint};
pub use oracle::{
    brute_force_integral_positions, brute_force_triples, claim_ids, default_bound, verify_claim,
    ClaimSpec, Mismatch, OracleReport, CLAIMS,
};
pub use six::{
    classify_leg_pair, family1_generate, find_six_configs, scan_six, DeltaScan, Family1Instance,
    LegOrientation, SixConfig,
};
pub use special::{
    analyze_altitude_foot, analyze_bisector_foot, analyze_midpoint, LengthSet, PointKind,
    SpecialPointReport,
};
pub use triple::{enumerate_params, recover_params, RecoveredParams, Triple, TripleParams};

/// Errors reported by fallible operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The pair (m, n) does not generate a Pythagorean triple.
    #[error("invalid generator pair (m = {m}, n = {n}): need m > n >= 1, gcd(m, n) = 1, m + n odd")]
    InvalidGeneratorPair {
        /// Rejected larger generator.
        m: BigUint,
        /// Rejected smaller generator.
        n: BigUint,
    },

    /// A scale factor (`d` or `K`) was zero; scales must be positive.
    #[error("scale factor must be a positive integer")]
    ZeroScale,

    /// The given sides do not satisfy a² + b² = c² with positive integers.
    #[error("({a}, {b}, {c}) is not a Pythagorean triple")]
    NotPythagorean {
        /// First given leg.
        a: BigUint,
        /// Second given leg.
        b: BigUint,
        /// Given hypotenuse.
        c: BigUint,
    },

    /// The legs were given in the order opposite to the fixed convention
    /// (the leg whose primitive part is odd comes first).
    #[error(
        "legs ({a}, {b}) are ordered against the odd-part-first convention; \
         use recover_params to normalize"
    )]
    LegOrder {
        /// First given leg (even primitive part).
        a: BigUint,
        /// Second given leg (odd primitive part).
        b: BigUint,
        /// Given hypotenuse.
        c: BigUint,
    },

    /// Generator recovery failed on input that passed the equation check.
    /// Genuine triples always recover, so this indicates corrupted input.
    #[error("({a}, {b}, {c}) does not admit generator recovery")]
    ParamRecovery {
        /// First given leg.
        a: BigUint,
        /// Second given leg.
        b: BigUint,
        /// Given hypotenuse.
        c: BigUint,
    },

    /// A hypotenuse position fell outside the open interval between the
    /// endpoints.
    #[error("position {value} is outside the open range of the hypotenuse")]
    PositionOutOfRange {
        /// Display form of the rejected position.
        value: String,
    },

    /// `verify_claim` was asked for a claim id that is not registered.
    #[error("unknown claim id {id:?}")]
    UnknownClaim {
        /// The unrecognized id.
        id: String,
    },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
