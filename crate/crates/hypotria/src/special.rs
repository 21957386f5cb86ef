//! Three distinguished hypotenuse points and their divisibility criteria.
//!
//! Each analysis cuts the triangle of `(d, m, n)` at one canonical point and
//! decides whether the two sub-triangles are Pythagorean. The answers are
//! divisibility conditions on the scale alone:
//!
//! * **midpoint** — works iff `d` is even; the six congruent halves have
//!   sides `(dmn, d(m² − n²)/2, d(m² + n²)/2)`;
//! * **foot of the right-angle bisector** — the unique point with `x = y`;
//!   works iff `(m² − n² + 2mn) | d`, and the four isosceles triangles inside
//!   the rectangle are never Pythagorean regardless of `d`;
//! * **foot of the altitude from the right angle** — always has all seven
//!   lengths rational (`h = ab/c`, `h1 = a²/c`, `h2 = b²/c`, `x = a²b/c²`,
//!   `y = ab²/c²`, `a − y = a³/c²`, `b − x = b³/c²`); they are all integers
//!   iff `(m² + n²)² | d`.
//!
//! Each report carries the witness quotient `K` when the criterion holds, the
//! exact lengths either way, and the Pythagorean status of the four extra
//! triangles obtained by halving the inner rectangle.

use crate::arith::{to_rational, Rational};
use crate::decompose::Decomposition;
use crate::triple::TripleParams;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

/// Which canonical hypotenuse point an analysis refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointKind {
    /// Midpoint of the hypotenuse.
    Midpoint,
    /// Foot of the bisector of the right angle.
    BisectorFoot,
    /// Foot of the altitude from the right angle.
    AltitudeFoot,
}

impl PointKind {
    /// Stable lowercase name used in command output.
    pub fn name(self) -> &'static str {
        match self {
            PointKind::Midpoint => "midpoint",
            PointKind::BisectorFoot => "bisector",
            PointKind::AltitudeFoot => "altitude",
        }
    }
}

/// The exact cut lengths at a special point. `h`, the altitude from the
/// right angle, is present only for the altitude foot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthSet {
    /// Horizontal offset of the cut.
    pub x: Rational,
    /// Vertical offset of the cut.
    pub y: Rational,
    /// Remaining vertical piece.
    pub a_minus_y: Rational,
    /// Remaining horizontal piece.
    pub b_minus_x: Rational,
    /// Hypotenuse piece at `B`.
    pub h1: Rational,
    /// Hypotenuse piece at `A`.
    pub h2: Rational,
    /// Altitude from the right angle to the hypotenuse (altitude foot only).
    pub h: Option<Rational>,
}

impl LengthSet {
    fn from_decomposition(d: &Decomposition) -> Self {
        Self {
            x: d.x.clone(),
            y: d.y.clone(),
            a_minus_y: d.a_minus_y.clone(),
            b_minus_x: d.b_minus_x.clone(),
            h1: d.h1.clone(),
            h2: d.h2.clone(),
            h: None,
        }
    }
}

/// Outcome of analyzing one special point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialPointReport {
    /// The analyzed point.
    pub point_kind: PointKind,
    /// Whether the two hypotenuse sub-triangles are Pythagorean here.
    pub all_pythagorean: bool,
    /// The quotient `K` witnessing the divisibility criterion, when it holds.
    pub divisibility_witness: Option<BigUint>,
    /// Exact cut lengths at the point.
    pub lengths: LengthSet,
    /// Whether the four triangles from halving the inner rectangle are
    /// Pythagorean. Always false at the bisector foot, where they are
    /// isosceles right triangles with irrational hypotenuses.
    pub inner_four_pythagorean: bool,
    /// Human-readable remarks attached to this analysis.
    pub notes: Vec<String>,
}

/// Analyzes the midpoint of the hypotenuse.
///
/// The cut halves every side, so the sub-triangles are Pythagorean iff
/// `a/2`, `b/2`, `c/2` are integers — that is, iff `d` is even (the
/// primitive parts `m² − n²` and `m² + n²` are odd). The witness is
/// `K = d/2`.
pub fn analyze_midpoint(p: &TripleParams) -> SpecialPointReport {
    let tri = p.triple();
    let half = Rational::new(1.into(), 2.into());
    let dec = Decomposition::at_fraction(&tri, &half).expect("1/2 is interior");
    let even = p.d().is_even();
    let all_pythagorean = even;
    SpecialPointReport {
        point_kind: PointKind::Midpoint,
        all_pythagorean,
        divisibility_witness: even.then(|| p.d() >> 1),
        lengths: LengthSet::from_decomposition(&dec),
        // The six triangles at the midpoint are congruent, so the rectangle
        // halves share the sub-triangles' status.
        inner_four_pythagorean: all_pythagorean,
        notes: Vec::new(),
    }
}

/// Analyzes the foot of the right-angle bisector, the unique cut with
/// `x = y`.
///
/// The foot sits at hypotenuse fraction `t = a/(a + b)`. Both sub-triangles
/// are Pythagorean iff `(m² − n² + 2mn) | d`; with `d = K(m² − n² + 2mn)`
/// the lengths collapse to integers:
///
/// ```text
/// x = y = K·2mn(m² − n²)      a − y = K(m² − n²)²     h1 = K(m⁴ − n⁴)
///                             b − x = K(2mn)²         h2 = K·2mn(m² + n²)
/// ```
///
/// The four rectangle halves are isosceles right triangles with legs
/// `x = y`, hence never Pythagorean: `2x²` is not a perfect square.
pub fn analyze_bisector_foot(p: &TripleParams) -> SpecialPointReport {
    let tri = p.triple();
    let odd_part = p.leg_odd_part();
    let even_part = p.leg_even_part();
    let hyp_part = p.hyp_part();
    let divisor = &odd_part + &even_part; // m² − n² + 2mn, always positive
    let divisible = (p.d() % &divisor).is_zero();

    let (witness, lengths) = if divisible {
        let k = p.d() / &divisor;
        let xy = &k * &even_part * &odd_part;
        let lengths = LengthSet {
            x: to_rational(&xy),
            y: to_rational(&xy),
            a_minus_y: to_rational(&(&k * &odd_part * &odd_part)),
            b_minus_x: to_rational(&(&k * &even_part * &even_part)),
            h1: to_rational(&(&k * &odd_part * &hyp_part)),
            h2: to_rational(&(&k * &even_part * &hyp_part)),
            h: None,
        };
        (Some(k), lengths)
    } else {
        let t = Rational::new(
            BigInt::from(tri.a().clone()),
            BigInt::from(tri.a() + tri.b()),
        );
        let dec = Decomposition::at_fraction(&tri, &t).expect("a/(a+b) is interior");
        debug_assert_eq!(dec.x, dec.y);
        (None, LengthSet::from_decomposition(&dec))
    };

    SpecialPointReport {
        point_kind: PointKind::BisectorFoot,
        all_pythagorean: divisible,
        divisibility_witness: witness,
        lengths,
        inner_four_pythagorean: false,
        notes: vec![
            "the four rectangle halves are isosceles right triangles and are never Pythagorean"
                .to_string(),
        ],
    }
}

/// Analyzes the foot of the altitude from the right angle.
///
/// All seven lengths are rational for every triple; they are all integers —
/// and all six triangles of the figure Pythagorean — iff `(m² + n²)² | d`,
/// with witness `K = d/(m² + n²)²`.
pub fn analyze_altitude_foot(p: &TripleParams) -> SpecialPointReport {
    let tri = p.triple();
    let a = to_rational(tri.a());
    let b = to_rational(tri.b());
    let c = to_rational(tri.c());
    let c_sq = &c * &c;

    let lengths = LengthSet {
        x: &a * &a * &b / &c_sq,
        y: &a * &b * &b / &c_sq,
        a_minus_y: &a * &a * &a / &c_sq,
        b_minus_x: &b * &b * &b / &c_sq,
        h1: &a * &a / &c,
        h2: &b * &b / &c,
        h: Some(&a * &b / &c),
    };

    let hyp_part = p.hyp_part();
    let divisor = &hyp_part * &hyp_part;
    let divisible = (p.d() % &divisor).is_zero();
    let witness = divisible.then(|| p.d() / &divisor);

    let mut notes = Vec::new();
    if tri.a() == &BigUint::from(4335u32)
        && tri.b() == &BigUint::from(2312u32)
        && tri.c() == &BigUint::from(4913u32)
    {
        notes.push(
            "erratum: a - y = 3375 (= 4335 - 960 = a\u{b3}/c\u{b2}); a printed value of 15 \
             circulates for this triangle and contradicts y = 960"
                .to_string(),
        );
        notes.push(
            "erratum: h = 2040 (= 4335\u{b7}2312/4913 = ab/c); a printed value of 1404 \
             circulates for this triangle and contradicts h\u{b2} = h1\u{b7}h2"
                .to_string(),
        );
    }

    SpecialPointReport {
        point_kind: PointKind::AltitudeFoot,
        all_pythagorean: divisible,
        divisibility_witness: witness,
        lengths,
        // All six triangles here are similar with rational ratios, so the
        // rectangle halves are Pythagorean exactly when the sub-triangles are.
        inner_four_pythagorean: divisible,
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::frac;
    use num_traits::One;

    fn params(d: u64, m: u64, n: u64) -> TripleParams {
        TripleParams::new(d, m, n).unwrap()
    }

    fn b(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn midpoint_even_scale_is_pythagorean() {
        let r = analyze_midpoint(&params(2, 2, 1));
        assert!(r.all_pythagorean);
        assert!(r.inner_four_pythagorean);
        assert_eq!(r.divisibility_witness, Some(b(1)));
        assert_eq!(r.lengths.x, frac(4, 1));
        assert_eq!(r.lengths.y, frac(3, 1));
        assert_eq!(r.lengths.h1, frac(5, 1));
        assert_eq!(r.lengths.h2, frac(5, 1));
        assert_eq!(r.lengths.h, None);
    }

    #[test]
    fn midpoint_odd_scale_is_not() {
        let r = analyze_midpoint(&params(1, 2, 1));
        assert!(!r.all_pythagorean);
        assert_eq!(r.divisibility_witness, None);
        assert_eq!(r.lengths.y, frac(3, 2));
        assert_eq!(r.lengths.h1, frac(5, 2));
    }

    #[test]
    fn midpoint_of_20_48_52() {
        let r = analyze_midpoint(&params(4, 3, 2));
        assert!(r.all_pythagorean);
        assert_eq!(r.divisibility_witness, Some(b(2)));
        assert_eq!(r.lengths.x, frac(24, 1));
        assert_eq!(r.lengths.y, frac(10, 1));
        assert_eq!(r.lengths.h1, frac(26, 1));
        assert_eq!(r.lengths.h2, frac(26, 1));
    }

    #[test]
    fn bisector_foot_smallest_working_scale() {
        // m = 2, n = 1 gives divisor 3 + 4 = 7, so d = 7 is the first hit.
        let r = analyze_bisector_foot(&params(7, 2, 1));
        assert!(r.all_pythagorean);
        assert!(!r.inner_four_pythagorean);
        assert_eq!(r.divisibility_witness, Some(b(1)));
        assert_eq!(r.lengths.x, frac(12, 1));
        assert_eq!(r.lengths.y, frac(12, 1));
        assert_eq!(r.lengths.a_minus_y, frac(9, 1));
        assert_eq!(r.lengths.h1, frac(15, 1));
        assert_eq!(r.lengths.b_minus_x, frac(16, 1));
        assert_eq!(r.lengths.h2, frac(20, 1));
    }

    #[test]
    fn bisector_foot_doubled_scale() {
        let r = analyze_bisector_foot(&params(14, 2, 1));
        assert!(r.all_pythagorean);
        assert_eq!(r.divisibility_witness, Some(b(2)));
        assert_eq!(r.lengths.x, frac(24, 1));
        assert_eq!(r.lengths.y, frac(24, 1));
    }

    #[test]
    fn bisector_foot_non_divisible_scale() {
        let r = analyze_bisector_foot(&params(5, 2, 1));
        assert!(!r.all_pythagorean);
        assert_eq!(r.divisibility_witness, None);
        // x = y = ab/(a+b) with a = 15, b = 20.
        assert_eq!(r.lengths.x, frac(60, 7));
        assert_eq!(r.lengths.y, frac(60, 7));
    }

    #[test]
    fn bisector_formulas_match_the_rational_route() {
        for p in crate::triple::enumerate_params(400) {
            let r = analyze_bisector_foot(&p);
            let tri = p.triple();
            let t = Rational::new(
                BigInt::from(tri.a().clone()),
                BigInt::from(tri.a() + tri.b()),
            );
            let dec = Decomposition::at_fraction(&tri, &t).unwrap();
            assert_eq!(r.lengths.x, dec.x);
            assert_eq!(r.lengths.y, dec.y);
            assert_eq!(r.lengths.a_minus_y, dec.a_minus_y);
            assert_eq!(r.lengths.b_minus_x, dec.b_minus_x);
            assert_eq!(r.lengths.h1, dec.h1);
            assert_eq!(r.lengths.h2, dec.h2);
            assert_eq!(r.lengths.x, r.lengths.y);
        }
    }

    #[test]
    fn altitude_foot_of_75_100_125() {
        let r = analyze_altitude_foot(&params(25, 2, 1));
        assert!(r.all_pythagorean);
        assert!(r.inner_four_pythagorean);
        assert_eq!(r.divisibility_witness, Some(b(1)));
        assert_eq!(r.lengths.h, Some(frac(60, 1)));
        assert_eq!(r.lengths.h1, frac(45, 1));
        assert_eq!(r.lengths.h2, frac(80, 1));
        assert_eq!(r.lengths.x, frac(36, 1));
        assert_eq!(r.lengths.y, frac(48, 1));
        assert_eq!(r.lengths.a_minus_y, frac(27, 1));
        assert_eq!(r.lengths.b_minus_x, frac(64, 1));
        assert!(r.notes.is_empty());
    }

    #[test]
    fn altitude_foot_of_3_4_5_is_rational_only() {
        let r = analyze_altitude_foot(&params(1, 2, 1));
        assert!(!r.all_pythagorean);
        assert_eq!(r.divisibility_witness, None);
        assert_eq!(r.lengths.h, Some(frac(12, 5)));
        assert_eq!(r.lengths.h1, frac(9, 5));
        assert_eq!(r.lengths.h2, frac(16, 5));
    }

    #[test]
    fn altitude_foot_of_4335_2312_4913_carries_errata_notes() {
        let r = analyze_altitude_foot(&params(289, 4, 1));
        assert!(r.all_pythagorean);
        assert_eq!(r.divisibility_witness, Some(b(1)));
        assert_eq!(r.lengths.x, frac(1800, 1));
        assert_eq!(r.lengths.h1, frac(3825, 1));
        assert_eq!(r.lengths.y, frac(960, 1));
        assert_eq!(r.lengths.b_minus_x, frac(512, 1));
        assert_eq!(r.lengths.h2, frac(1088, 1));
        assert_eq!(r.lengths.a_minus_y, frac(3375, 1));
        assert_eq!(r.lengths.h, Some(frac(2040, 1)));
        assert_eq!(r.notes.len(), 2);
        assert!(r.notes[0].contains("3375") && r.notes[0].contains("15"));
        assert!(r.notes[1].contains("2040") && r.notes[1].contains("1404"));
    }

    #[test]
    fn altitude_integer_formulas_match_the_rational_route() {
        // When (m² + n²)² | d the lengths also have closed integer forms.
        for (d, m, n) in [(25u64, 2u64, 1u64), (50, 2, 1), (289, 4, 1), (169, 3, 2)] {
            let p = params(d, m, n);
            let r = analyze_altitude_foot(&p);
            let k = r.divisibility_witness.clone().unwrap();
            let odd = p.m() * p.m() - p.n() * p.n();
            let even = (p.m() * p.n()) << 1;
            let hyp = p.m() * p.m() + p.n() * p.n();
            assert_eq!(r.lengths.x, to_rational(&(&k * &odd * &odd * &even)));
            assert_eq!(r.lengths.y, to_rational(&(&k * &odd * &even * &even)));
            assert_eq!(r.lengths.a_minus_y, to_rational(&(&k * &odd * &odd * &odd)));
            assert_eq!(r.lengths.b_minus_x, to_rational(&(&k * &even * &even * &even)));
            assert_eq!(r.lengths.h1, to_rational(&(&k * &hyp * &odd * &odd)));
            assert_eq!(r.lengths.h2, to_rational(&(&k * &hyp * &even * &even)));
            assert_eq!(
                r.lengths.h,
                Some(to_rational(&(&k * &even * &odd * &hyp)))
            );
        }
    }

    #[test]
    fn altitude_rationals_always_satisfy_the_identities() {
        for p in crate::triple::enumerate_params(300) {
            let r = analyze_altitude_foot(&p);
            let h = r.lengths.h.clone().unwrap();
            // h² = h1·h2 and the two right-angle identities.
            assert_eq!(&h * &h, &r.lengths.h1 * &r.lengths.h2);
            assert_eq!(
                &r.lengths.a_minus_y * &r.lengths.a_minus_y + &r.lengths.x * &r.lengths.x,
                &r.lengths.h1 * &r.lengths.h1
            );
            assert_eq!(
                &r.lengths.y * &r.lengths.y + &r.lengths.b_minus_x * &r.lengths.b_minus_x,
                &r.lengths.h2 * &r.lengths.h2
            );
            // And x + (b − x), y + (a − y) restore the legs.
            let tri = p.triple();
            assert_eq!(&r.lengths.x + &r.lengths.b_minus_x, to_rational(tri.b()));
            assert_eq!(&r.lengths.y + &r.lengths.a_minus_y, to_rational(tri.a()));
        }
    }

    #[test]
    fn reports_name_their_points() {
        assert_eq!(PointKind::Midpoint.name(), "midpoint");
        assert_eq!(PointKind::BisectorFoot.name(), "bisector");
        assert_eq!(PointKind::AltitudeFoot.name(), "altitude");
        assert!(analyze_midpoint(&params(1, 2, 1)).divisibility_witness.is_none());
        assert!(Rational::one().is_integer());
    }
}
