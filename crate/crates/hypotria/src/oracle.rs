//! Independent brute-force checks for every structural claim the crate
//! relies on.
//!
//! The scanners here deliberately know nothing about the `(d, m, n)`
//! formulas: triples are found by a double loop over legs, integral cut
//! positions by divisibility of `a·h1` and `b·h1` by `c`, and special-point
//! statuses by direct integrality of the exact rational lengths. Each
//! registered claim compares a formula-driven module against the matching
//! scan over a bounded domain and reports every disagreement with enough
//! data to reproduce it.

use crate::arith::{is_perfect_square, to_rational, Rational};
use crate::decompose::{classify_position, integral_positions, PositionClass};
use crate::six::find_six_configs;
use crate::special::{analyze_altitude_foot, analyze_bisector_foot, analyze_midpoint};
use crate::triple::{enumerate_params, Triple};
use crate::{family1_generate, Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::BTreeSet;

/// A disagreement between a formula-driven module and a brute-force scan,
/// with enough context to reproduce it directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    /// The parameters (or other generating data) being scanned.
    pub params: String,
    /// The position or sub-case within those parameters.
    pub position: String,
    /// What the scan says.
    pub expected: String,
    /// What the module says.
    pub actual: String,
}

/// Outcome of verifying one claim over a bounded domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    /// Registered id of the verified claim.
    pub claim_id: String,
    /// Number of elementary checks performed.
    pub scanned: u64,
    /// Every disagreement found; empty when the claim holds on the domain.
    pub mismatches: Vec<Mismatch>,
}

impl OracleReport {
    /// True iff the scan found no disagreement.
    pub fn confirmed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// A registered claim: id, default scan bound, and what the bound means.
#[derive(Debug, Clone, Copy)]
pub struct ClaimSpec {
    /// Stable id accepted by [`verify_claim`].
    pub id: &'static str,
    /// Bound used when the caller does not supply one.
    pub default_bound: u64,
    /// One-line statement of the claim.
    pub summary: &'static str,
}

/// Every claim [`verify_claim`] knows how to check.
///
/// For most claims the bound caps the hypotenuse `c`; `family1-sound` reads
/// it as the largest scale `K` (generators range up to 8), and
/// `lemma2-coprime` as the largest generator value.
pub const CLAIMS: &[ClaimSpec] = &[
    ClaimSpec {
        id: "eq1-complete",
        default_bound: 500,
        summary: "every Pythagorean triple with c <= bound arises from exactly one (d, m, n)",
    },
    ClaimSpec {
        id: "thm1-dichotomy",
        default_bound: 300,
        summary: "all six cut lengths are integers exactly at the positions h1 = delta(m^2 + n^2)",
    },
    ClaimSpec {
        id: "thm6-count",
        default_bound: 300,
        summary: "each triangle has exactly d - 1 integral cut positions, matching the divisibility scan",
    },
    ClaimSpec {
        id: "thm3-parity",
        default_bound: 2000,
        summary: "the midpoint cut is Pythagorean exactly when d is even",
    },
    ClaimSpec {
        id: "thm4-iff",
        default_bound: 2000,
        summary: "the bisector-foot cut is Pythagorean exactly when (m^2 - n^2 + 2mn) | d",
    },
    ClaimSpec {
        id: "thm5-iff",
        default_bound: 2000,
        summary: "the altitude-foot cut has all-integer lengths exactly when (m^2 + n^2)^2 | d",
    },
    ClaimSpec {
        id: "thm7-grid",
        default_bound: 300,
        summary: "six-triangle hits match the perfect-square scan over the integral positions",
    },
    ClaimSpec {
        id: "family1-sound",
        default_bound: 5,
        summary: "every family member realizes a verified six-triangle configuration (bound = max K)",
    },
    ClaimSpec {
        id: "lemma2-coprime",
        default_bound: 200,
        summary: "primitive parts are pairwise coprime, as are their compound products (bound = max generator)",
    },
];

/// The registered claim ids, in registry order.
pub fn claim_ids() -> Vec<&'static str> {
    CLAIMS.iter().map(|c| c.id).collect()
}

/// The default bound for `id`, if registered.
pub fn default_bound(id: &str) -> Option<u64> {
    CLAIMS.iter().find(|c| c.id == id).map(|c| c.default_bound)
}

/// All Pythagorean triples with hypotenuse at most `max_c`, found by a
/// double loop over legs and normalized odd-primitive-part first.
pub fn brute_force_triples(max_c: u64) -> BTreeSet<(BigUint, BigUint, BigUint)> {
    let mut out = BTreeSet::new();
    for leg1 in 1..=max_c {
        for leg2 in leg1..=max_c {
            let sum = u128::from(leg1) * u128::from(leg1) + u128::from(leg2) * u128::from(leg2);
            let root = isqrt_u128(sum);
            if root * root != sum || root > u128::from(max_c) {
                continue;
            }
            let g = leg1.gcd(&leg2);
            let (a, b) = if (leg1 / g) % 2 == 1 {
                (leg1, leg2)
            } else {
                (leg2, leg1)
            };
            out.insert((BigUint::from(a), BigUint::from(b), BigUint::from(root as u64)));
        }
    }
    out
}

/// The values `h1` in `1..c` where all six cut lengths of `tri` are
/// integers, found purely by divisibility: `c | a·h1` and `c | b·h1`.
pub fn brute_force_integral_positions(tri: &Triple) -> BTreeSet<BigUint> {
    let mut out = BTreeSet::new();
    let mut h1 = BigUint::one();
    while &h1 < tri.c() {
        if (tri.a() * &h1 % tri.c()).is_zero() && (tri.b() * &h1 % tri.c()).is_zero() {
            out.insert(h1.clone());
        }
        h1 += BigUint::one();
    }
    out
}

/// Verifies the registered claim `id` over the domain capped by `bound`,
/// reporting the number of checks and every disagreement.
pub fn verify_claim(id: &str, bound: u64) -> Result<OracleReport> {
    let (scanned, mismatches) = match id {
        "eq1-complete" => check_eq1_complete(bound),
        "thm1-dichotomy" => check_thm1_dichotomy(bound),
        "thm6-count" => check_thm6_count(bound),
        "thm3-parity" => check_thm3_parity(bound),
        "thm4-iff" => check_thm4_iff(bound),
        "thm5-iff" => check_thm5_iff(bound),
        "thm7-grid" => check_thm7_grid(bound),
        "family1-sound" => check_family1_sound(bound),
        "lemma2-coprime" => check_lemma2_coprime(bound),
        _ => {
            return Err(Error::UnknownClaim { id: id.to_string() });
        }
    };
    Ok(OracleReport {
        claim_id: id.to_string(),
        scanned,
        mismatches,
    })
}

fn isqrt_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let bits = 128 - n.leading_zeros();
    let mut x = 1u128 << bits.div_ceil(2);
    loop {
        let y = (x + n / x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

fn mismatch(
    params: impl ToString,
    position: impl Into<String>,
    expected: impl Into<String>,
    actual: impl Into<String>,
) -> Mismatch {
    Mismatch {
        params: params.to_string(),
        position: position.into(),
        expected: expected.into(),
        actual: actual.into(),
    }
}

fn triple_key(t: &Triple) -> (BigUint, BigUint, BigUint) {
    (t.a().clone(), t.b().clone(), t.c().clone())
}

/// Parametric generation against the leg-scan: the two triple sets must be
/// identical, and no two parameters may generate the same triple.
fn check_eq1_complete(bound: u64) -> (u64, Vec<Mismatch>) {
    let mut generated = BTreeSet::new();
    let mut mismatches = Vec::new();
    for p in enumerate_params(bound) {
        let key = triple_key(&p.triple());
        if !generated.insert(key.clone()) {
            mismatches.push(mismatch(
                &p,
                format!("triple ({}, {}, {})", key.0, key.1, key.2),
                "generated once",
                "generated twice",
            ));
        }
    }
    let scanned_set = brute_force_triples(bound);
    for key in generated.difference(&scanned_set) {
        mismatches.push(mismatch(
            "parametric enumeration",
            format!("triple ({}, {}, {})", key.0, key.1, key.2),
            "absent from the leg scan",
            "generated",
        ));
    }
    for key in scanned_set.difference(&generated) {
        mismatches.push(mismatch(
            "leg scan",
            format!("triple ({}, {}, {})", key.0, key.1, key.2),
            "generated by some (d, m, n)",
            "missing from the enumeration",
        ));
    }
    ((generated.len() + scanned_set.len()) as u64, mismatches)
}

/// Per-position dichotomy: the divisibility scan, the classifier, and the
/// `(m² + n²) | h1` criterion must agree at every interior integer `h1`.
fn check_thm1_dichotomy(bound: u64) -> (u64, Vec<Mismatch>) {
    let mut scanned = 0u64;
    let mut mismatches = Vec::new();
    for p in enumerate_params(bound) {
        let tri = p.triple();
        let integral_set = brute_force_integral_positions(&tri);
        let hyp_part = p.m() * p.m() + p.n() * p.n();
        let c = BigInt::from(tri.c().clone());
        let mut h1 = BigUint::one();
        while &h1 < tri.c() {
            scanned += 1;
            let by_scan = integral_set.contains(&h1);
            let by_grid = (&h1 % &hyp_part).is_zero();
            let t = Rational::new(BigInt::from(h1.clone()), c.clone());
            let by_classifier = matches!(
                classify_position(&p, &t).expect("interior position"),
                PositionClass::Integral { .. }
            );
            if by_scan != by_grid || by_scan != by_classifier {
                mismatches.push(mismatch(
                    &p,
                    format!("h1 = {h1}"),
                    format!("divisibility scan: {by_scan}"),
                    format!("grid: {by_grid}, classifier: {by_classifier}"),
                ));
            }
            h1 += BigUint::one();
        }
    }
    (scanned, mismatches)
}

/// Position counting: `integral_positions` must yield exactly `d − 1`
/// entries whose `h1` values match the divisibility scan.
fn check_thm6_count(bound: u64) -> (u64, Vec<Mismatch>) {
    let mut scanned = 0u64;
    let mut mismatches = Vec::new();
    for p in enumerate_params(bound) {
        scanned += 1;
        let tri = p.triple();
        let listed = integral_positions(&p);
        let expected_len = p.d() - BigUint::one();
        if BigUint::from(listed.len()) != expected_len {
            mismatches.push(mismatch(
                &p,
                "position count",
                format!("d - 1 = {expected_len}"),
                listed.len().to_string(),
            ));
        }
        let listed_h1: BTreeSet<BigUint> = listed.iter().map(|ip| ip.h1().clone()).collect();
        let scanned_h1 = brute_force_integral_positions(&tri);
        if listed_h1 != scanned_h1 {
            mismatches.push(mismatch(
                &p,
                "integral h1 set",
                format!("{scanned_h1:?}"),
                format!("{listed_h1:?}"),
            ));
        }
    }
    (scanned, mismatches)
}

/// True iff every rational in `values` is an integer.
fn all_integral(values: &[&Rational]) -> bool {
    values.iter().all(|v| v.is_integer())
}

/// Midpoint parity: the report, direct integrality of the halved sides, and
/// the evenness of `d` must agree.
fn check_thm3_parity(bound: u64) -> (u64, Vec<Mismatch>) {
    let mut scanned = 0u64;
    let mut mismatches = Vec::new();
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    for p in enumerate_params(bound) {
        scanned += 1;
        let tri = p.triple();
        let ha = to_rational(tri.a()) * &half;
        let hb = to_rational(tri.b()) * &half;
        let hc = to_rational(tri.c()) * &half;
        let direct = all_integral(&[&ha, &hb, &hc]) && &ha * &ha + &hb * &hb == &hc * &hc;
        let by_parity = p.d().is_even();
        let report = analyze_midpoint(&p).all_pythagorean;
        if direct != by_parity || direct != report {
            mismatches.push(mismatch(
                &p,
                "midpoint",
                format!("direct integrality: {direct}"),
                format!("parity: {by_parity}, report: {report}"),
            ));
        }
    }
    (scanned, mismatches)
}

/// Bisector-foot criterion: direct integrality of the exact lengths at
/// `t = a/(a + b)` against the `(m² − n² + 2mn) | d` test and the report.
fn check_thm4_iff(bound: u64) -> (u64, Vec<Mismatch>) {
    let mut scanned = 0u64;
    let mut mismatches = Vec::new();
    for p in enumerate_params(bound) {
        scanned += 1;
        let tri = p.triple();
        let a = to_rational(tri.a());
        let b = to_rational(tri.b());
        let c = to_rational(tri.c());
        let a_plus_b = &a + &b;
        let x = &a * &b / &a_plus_b;
        let y = x.clone();
        let a_minus_y = &a * &a / &a_plus_b;
        let b_minus_x = &b * &b / &a_plus_b;
        let h1 = &a * &c / &a_plus_b;
        let h2 = &b * &c / &a_plus_b;
        let direct = all_integral(&[&x, &y, &a_minus_y, &b_minus_x, &h1, &h2])
            && &a_minus_y * &a_minus_y + &x * &x == &h1 * &h1
            && &y * &y + &b_minus_x * &b_minus_x == &h2 * &h2;
        let divisor = p.m() * p.m() - p.n() * p.n() + ((p.m() * p.n()) << 1);
        let remainder: BigUint = p.d() % &divisor;
        let by_divisibility = remainder.is_zero();
        let report = analyze_bisector_foot(&p).all_pythagorean;
        if direct != by_divisibility || direct != report {
            mismatches.push(mismatch(
                &p,
                "bisector foot",
                format!("direct integrality: {direct}"),
                format!("divisibility: {by_divisibility}, report: {report}"),
            ));
        }
    }
    (scanned, mismatches)
}

/// Altitude-foot criterion: direct integrality of the seven exact lengths
/// against the `(m² + n²)² | d` test and the report.
fn check_thm5_iff(bound: u64) -> (u64, Vec<Mismatch>) {
    let mut scanned = 0u64;
    let mut mismatches = Vec::new();
    for p in enumerate_params(bound) {
        scanned += 1;
        let tri = p.triple();
        let a = to_rational(tri.a());
        let b = to_rational(tri.b());
        let c = to_rational(tri.c());
        let c_sq = &c * &c;
        let h = &a * &b / &c;
        let h1 = &a * &a / &c;
        let h2 = &b * &b / &c;
        let x = &a * &a * &b / &c_sq;
        let y = &a * &b * &b / &c_sq;
        let a_minus_y = &a * &a * &a / &c_sq;
        let b_minus_x = &b * &b * &b / &c_sq;
        let direct = all_integral(&[&h, &h1, &h2, &x, &y, &a_minus_y, &b_minus_x])
            && &a_minus_y * &a_minus_y + &x * &x == &h1 * &h1
            && &y * &y + &b_minus_x * &b_minus_x == &h2 * &h2;
        let hyp_part = p.m() * p.m() + p.n() * p.n();
        let divisor = &hyp_part * &hyp_part;
        let by_divisibility = (p.d() % &divisor).is_zero();
        let report = analyze_altitude_foot(&p).all_pythagorean;
        if direct != by_divisibility || direct != report {
            mismatches.push(mismatch(
                &p,
                "altitude foot",
                format!("direct integrality: {direct}"),
                format!("divisibility: {by_divisibility}, report: {report}"),
            ));
        }
    }
    (scanned, mismatches)
}

/// Six-triangle search against a formula-free scan: walk the integral
/// positions found by divisibility, read the rectangle legs off the exact
/// ratios, and keep those with a perfect-square sum of squares. The leg
/// pairs must match the search's configurations exactly.
fn check_thm7_grid(bound: u64) -> (u64, Vec<Mismatch>) {
    let mut scanned = 0u64;
    let mut mismatches = Vec::new();
    for p in enumerate_params(bound) {
        let tri = p.triple();
        let mut by_scan = BTreeSet::new();
        for h1 in brute_force_integral_positions(&tri) {
            scanned += 1;
            let x = tri.b() * &h1 / tri.c();
            let y = tri.a() - tri.a() * &h1 / tri.c();
            if !y.is_zero() && is_perfect_square(&(&x * &x + &y * &y)) {
                by_scan.insert((x, y));
            }
        }
        let configs = find_six_configs(&p);
        let by_search: BTreeSet<(BigUint, BigUint)> = configs
            .iter()
            .map(|cfg| (cfg.x.clone(), cfg.y.clone()))
            .collect();
        if by_search != by_scan {
            mismatches.push(mismatch(
                &p,
                "six-triangle leg pairs",
                format!("{by_scan:?}"),
                format!("{by_search:?}"),
            ));
        }
        for cfg in &configs {
            let inner_triple = cfg.inner.triple();
            let (va, vb) = match cfg.orientation {
                crate::six::LegOrientation::YOdd => (&cfg.y, &cfg.x),
                crate::six::LegOrientation::YEven => (&cfg.x, &cfg.y),
            };
            if inner_triple.a() != va
                || inner_triple.b() != vb
                || inner_triple.c() != &cfg.inner_hypotenuse
                || cfg.delta.is_zero()
                || &cfg.delta >= p.d()
            {
                mismatches.push(mismatch(
                    &p,
                    format!("delta = {}", cfg.delta),
                    "inner parameters reproduce the legs",
                    format!("inner {} for legs ({}, {})", cfg.inner, cfg.x, cfg.y),
                ));
            }
        }
    }
    (scanned, mismatches)
}

/// Family soundness: every instance with `K ≤ bound` and generators up to 8
/// must land inside `find_six_configs` with a genuinely square sum.
fn check_family1_sound(bound: u64) -> (u64, Vec<Mismatch>) {
    let mut scanned = 0u64;
    let mut mismatches = Vec::new();
    let pairs: Vec<(u64, u64)> = (2u64..=8)
        .flat_map(|m| (1..m).map(move |n| (m, n)))
        .filter(|&(m, n)| m.gcd(&n) == 1 && (m + n) % 2 == 1)
        .collect();
    for k in 1..=bound.max(1) {
        for &(m, n) in &pairs {
            for &(bm, bn) in &pairs {
                scanned += 1;
                let (outer, instance, config) =
                    family1_generate(m, n, bm, bn, k).expect("valid family inputs");
                let label = format!(
                    "family (m = {m}, n = {n}, M = {bm}, N = {bn}, K = {k})"
                );
                let sum = &config.x * &config.x + &config.y * &config.y;
                if !is_perfect_square(&sum) {
                    mismatches.push(mismatch(
                        &label,
                        format!("delta = {}", instance.delta),
                        "x^2 + y^2 is a perfect square",
                        format!("{sum} is not"),
                    ));
                }
                if instance.delta.is_zero() || &instance.delta >= outer.d() {
                    mismatches.push(mismatch(
                        &label,
                        format!("delta = {}", instance.delta),
                        format!("1 <= delta <= d - 1 = {}", outer.d() - BigUint::one()),
                        "out of range",
                    ));
                }
                if !find_six_configs(&outer).contains(&config) {
                    mismatches.push(mismatch(
                        &label,
                        format!("delta = {}", instance.delta),
                        "configuration found by the search",
                        "missing",
                    ));
                }
            }
        }
    }
    (scanned, mismatches)
}

/// Coprimality of the primitive parts for every generator pair up to the
/// bound: the three pairwise gcds, and the seven compound products that the
/// integral-length arguments divide through.
fn check_lemma2_coprime(bound: u64) -> (u64, Vec<Mismatch>) {
    let mut scanned = 0u64;
    let mut mismatches = Vec::new();
    let one = BigUint::one();
    for m in 2..=bound {
        for n in 1..m {
            if m.gcd(&n) != 1 || (m + n) % 2 == 0 {
                continue;
            }
            scanned += 1;
            let mb = BigUint::from(m);
            let nb = BigUint::from(n);
            let odd = &mb * &mb - &nb * &nb;
            let even = (&mb * &nb) << 1;
            let hyp = &mb * &mb + &nb * &nb;
            let hyp_sq = &hyp * &hyp;
            let checks: [(&str, BigUint); 10] = [
                ("gcd(m^2+n^2, 2mn)", hyp.gcd(&even)),
                ("gcd(m^2+n^2, m^2-n^2)", hyp.gcd(&odd)),
                ("gcd(m^2-n^2, 2mn)", odd.gcd(&even)),
                ("gcd((m^2+n^2)^2, (m^2-n^2)^3)", hyp_sq.gcd(&(&odd * &odd * &odd))),
                ("gcd((m^2+n^2)^2, (2mn)^2)", hyp_sq.gcd(&(&even * &even))),
                ("gcd(m^2+n^2, (m^2-n^2)^2)", hyp.gcd(&(&odd * &odd))),
                ("gcd(m^2+n^2, (2mn)^2)", hyp.gcd(&(&even * &even))),
                ("gcd(m^2+n^2, 2mn(m^2-n^2))", hyp.gcd(&(&even * &odd))),
                (
                    "gcd((m^2+n^2)^2, (m^2-n^2)^2 * 2mn)",
                    hyp_sq.gcd(&(&odd * &odd * &even)),
                ),
                (
                    "gcd((m^2+n^2)^2, (m^2-n^2) * (2mn)^2)",
                    hyp_sq.gcd(&(&odd * &even * &even)),
                ),
            ];
            for (what, value) in checks {
                if value != one {
                    mismatches.push(mismatch(
                        format!("(m = {m}, n = {n})"),
                        what,
                        "1",
                        value.to_string(),
                    ));
                }
            }
        }
    }
    (scanned, mismatches)
}
