//! Analyze the three distinguished hypotenuse points — the midpoint, the
//! foot of the right-angle bisector, and the foot of the altitude — and
//! show when each produces all-integer lengths.
//!
//! Run with `cargo run --example special_points`.

use hypotria::{
    analyze_altitude_foot, analyze_bisector_foot, analyze_midpoint, SpecialPointReport,
    TripleParams,
};

fn show(report: &SpecialPointReport) {
    let l = &report.lengths;
    println!("  {}:", report.point_kind.name());
    println!("    x = {}, y = {}, a - y = {}, b - x = {}", l.x, l.y, l.a_minus_y, l.b_minus_x);
    print!("    h1 = {}, h2 = {}", l.h1, l.h2);
    match &l.h {
        Some(h) => println!(", h = {h}"),
        None => println!(),
    }
    match &report.divisibility_witness {
        Some(k) => println!("    all integral (witness K = {k})"),
        None => println!("    not all integral"),
    }
    for note in &report.notes {
        println!("    note: {note}");
    }
}

fn main() {
    // Each point has its own divisibility condition on the scale: for the
    // (2, 1) primitive the midpoint needs d even, the bisector foot needs
    // 7 | d, and the altitude foot needs 25 | d. The first three scales
    // below flip exactly one switch each; d = 350 = 2 * 7 * 25 flips all
    // three at once.
    for (d, m, n) in [(2u32, 2u32, 1u32), (7, 2, 1), (25, 2, 1), (350, 2, 1)] {
        let p = TripleParams::new(d, m, n).unwrap();
        println!("{} from {p}", p.triple());
        show(&analyze_midpoint(&p));
        show(&analyze_bisector_foot(&p));
        show(&analyze_altitude_foot(&p));
        println!();
    }

    // The altitude foot of this triangle is a long-standing source of
    // miscopied values; the report carries corrections as notes.
    let p = TripleParams::new(289u32, 4u32, 1u32).unwrap();
    println!("{} from {p}", p.triple());
    show(&analyze_altitude_foot(&p));
}
