//! Build members of the closed-form family of all-six-Pythagorean
//! configurations: two generator pairs and a free scale K determine an
//! outer triple together with a cut position that always works.
//!
//! Run with `cargo run --example family1`.

use hypotria::{family1_generate, find_six_configs};

fn main() {
    for (m, n, inner_m, inner_n, k) in [
        (2u32, 1u32, 2u32, 1u32, 1u32),
        (2, 1, 4, 1, 1),
        (2, 1, 2, 1, 3),
        (3, 2, 2, 1, 1),
    ] {
        let (outer, instance, config) =
            family1_generate(m, n, inner_m, inner_n, k).unwrap();
        let t = outer.triple();
        println!(
            "outer ({m}, {n}) x inner ({inner_m}, {inner_n}) at K = {k}:"
        );
        println!("  outer triple {t} from {outer}");
        println!(
            "  cut at position {} of {}: legs {} and {}, inner hypotenuse {}",
            instance.delta,
            instance.d,
            config.y,
            config.x,
            config.inner_hypotenuse,
        );

        // Every member really does appear in the exhaustive scan.
        assert!(find_six_configs(&outer).contains(&config));
    }
}
