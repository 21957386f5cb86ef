//! Scan every integral cut of a scaled triple for the rare positions where
//! the cut legs themselves close a Pythagorean triple, making all six
//! triangles in the figure Pythagorean at once.
//!
//! Run with `cargo run --example six_configs`.

use hypotria::{find_six_configs, scan_six, TripleParams};

fn main() {
    for (d, m, n) in [(5u32, 2u32, 1u32), (12, 2, 1)] {
        let p = TripleParams::new(d, m, n).unwrap();
        println!("scanning {} from {p}:", p.triple());
        for row in scan_six(&p) {
            match &row.config {
                Some(cfg) => println!(
                    "  position {}: {}^2 + {}^2 = {}^2  -> inner {} ({})",
                    row.delta, cfg.y, cfg.x, cfg.inner_hypotenuse, cfg.inner,
                    cfg.orientation.name(),
                ),
                None => println!(
                    "  position {}: {}^2 + {}^2 = {} is not a square",
                    row.delta, row.y, row.x, row.sum_of_squares,
                ),
            }
        }
        println!();
    }

    // Hits are sparse: survey all scales of the (2, 1) primitive up to 60
    // and print only the scales that admit one.
    println!("scales d <= 60 of (3, 4, 5) with at least one hit:");
    for d in 2u32..=60 {
        let p = TripleParams::new(d, 2u32, 1u32).unwrap();
        let configs = find_six_configs(&p);
        if !configs.is_empty() {
            let deltas: Vec<String> = configs.iter().map(|c| c.delta.to_string()).collect();
            println!("  d = {d}: positions {}", deltas.join(", "));
        }
    }
}
