//! List every hypotenuse cut of a scaled triple where all six lengths are
//! integers. There are always exactly d - 1 of them, and the two
//! sub-triangles are smaller scaled copies of the same primitive triangle.
//!
//! Run with `cargo run --example positions`.

use hypotria::{integral_positions, TripleParams};

fn main() {
    for (d, m, n) in [(5u32, 2u32, 1u32), (4, 3, 2)] {
        let p = TripleParams::new(d, m, n).unwrap();
        let t = p.triple();
        let positions = integral_positions(&p);
        println!("{t} from {p}: {} integral cuts", positions.len());
        for ip in &positions {
            println!(
                "  position {}: |BP| = {}  splits into {} and {}",
                ip.delta,
                ip.h1(),
                ip.sub_bdp,
                ip.sub_pea,
            );
        }
        println!();
    }
}
