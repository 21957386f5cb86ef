//! Enumerate every Pythagorean triple with hypotenuse up to a bound, with
//! the scale-and-generator parameters that produce it.
//!
//! Run with `cargo run --example generate`.

use hypotria::enumerate_params;

fn main() {
    let max_c = 100;
    println!("triples with hypotenuse <= {max_c}, as d * (m^2 - n^2, 2mn, m^2 + n^2):");
    let mut count = 0;
    for p in enumerate_params(max_c) {
        let t = p.triple();
        println!("  {p}  ->  {t}");
        count += 1;
    }
    println!("{count} triples");
}
