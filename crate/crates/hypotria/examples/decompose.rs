//! Cut a right triangle at a point on its hypotenuse and print the six
//! exact lengths the cut produces, at both an integral and a non-integral
//! position.
//!
//! Run with `cargo run --example decompose`.

use hypotria::{
    classify_position, frac, recover_params, Decomposition, PositionClass, Rational,
};

fn show(label: &str, t: &Rational) {
    let rec = recover_params(75u32, 100u32, 125u32).unwrap();
    let tri = rec.triple();
    let dec = Decomposition::at_fraction(&tri, t).unwrap();
    println!("{label}: cut {tri} at t = {t}");
    println!("  legs from the cut point:   x = {}, y = {}", dec.x, dec.y);
    println!("  leg remainders:            a - y = {}, b - x = {}", dec.a_minus_y, dec.b_minus_x);
    println!("  hypotenuse pieces:         h1 = {}, h2 = {}", dec.h1, dec.h2);
    match classify_position(&rec.params, t).unwrap() {
        PositionClass::Integral { delta } => {
            let count = rec.params.d() - 1u32;
            println!("  all six integral (cut {delta} of the {count} integral cuts)");
        }
        PositionClass::RationalNonIntegral => {
            println!("  rational but not all integral");
        }
    }
    println!();
}

fn main() {
    show("integral cut", &frac(9, 25));
    show("generic cut", &frac(1, 3));
}
