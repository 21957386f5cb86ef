//! Check the registered claims against their brute-force oracles at small
//! bounds. Pass a claim id and bound to run one claim harder, e.g.
//! `cargo run --example verify -- thm6-count 300`.

use hypotria::{claim_ids, default_bound, verify_claim, CLAIMS};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match args.as_slice() {
        [] => {
            println!("{:<16} {:>8} {:>9}  result", "claim", "bound", "scanned");
            for spec in CLAIMS {
                // A fraction of each default bound keeps the full sweep quick.
                let bound = (spec.default_bound / 4).max(2);
                let report = verify_claim(spec.id, bound).unwrap();
                let result = if report.confirmed() { "confirmed" } else { "MISMATCH" };
                println!(
                    "{:<16} {:>8} {:>9}  {result}",
                    spec.id, bound, report.scanned
                );
            }
        }
        [id, bound] => {
            let bound: u64 = bound.parse().expect("bound must be an integer");
            let report = verify_claim(id, bound).expect("known claim id");
            println!(
                "{id} at bound {bound}: scanned {}, {}",
                report.scanned,
                if report.confirmed() { "confirmed" } else { "MISMATCH" }
            );
            for m in &report.mismatches {
                println!("  {} [{}]: expected {}, got {}", m.params, m.position, m.expected, m.actual);
            }
        }
        [id] => {
            let bound = default_bound(id).expect("known claim id");
            let report = verify_claim(id, bound).expect("known claim id");
            println!(
                "{id} at default bound {bound}: scanned {}, {}",
                report.scanned,
                if report.confirmed() { "confirmed" } else { "MISMATCH" }
            );
        }
        _ => {
            eprintln!("usage: verify [claim-id [bound]]; claims: {}", claim_ids().join(", "));
            std::process::exit(2);
        }
    }
}
