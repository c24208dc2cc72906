//! Strong spectral property check on stored and constructed witnesses.
//!
//! cargo run --example ssp

use qtwo::numlin::verify_ssp;
use qtwo::witnesses::{catalog_matrix, known_witness};

fn main() {
    let mut cases = Vec::new();
    for name in ["M7_1", "M8_2", "M10_2"] {
        let (m, g) = catalog_matrix(name).unwrap();
        cases.push((name.to_string(), m, g));
    }
    for name in ["K5", "Q3", "H:4", "R10_4"] {
        let w = known_witness(name).unwrap();
        cases.push((name.to_string(), w.matrix, w.graph));
    }
    for (name, m, g) in cases {
        let r = verify_ssp(&m, &g).unwrap();
        println!(
            "{name:>6}: {:?} (unknowns {}, rank {}, sigma_min/sigma_max {:.2e})",
            r.verdict,
            r.unknowns,
            r.rank,
            if r.unknowns > 0 { r.sigma_min / r.sigma_max } else { f64::NAN }
        );
    }
}
