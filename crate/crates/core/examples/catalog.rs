//! Replays the stored matrices: exact squaring, pattern fit, and SSP where recorded.
//!
//! cargo run --example catalog

use qtwo::witnesses::{catalog_matrix, verify_catalog};

fn main() {
    for c in verify_catalog() {
        let residual = c.involution.as_ref().map_or(f64::NAN, |r| r.residual);
        let ssp = c.ssp.as_ref().map_or(String::from("-"), |s| format!("{:?}", s.verdict));
        println!(
            "{:>6} on {:<6} exact={:<5} fits={:<5} residual={residual:.1e} ssp={ssp} {}",
            c.name,
            c.graph,
            c.exact,
            c.fits,
            if c.pass() { "ok" } else { "FAILED" }
        );
    }
    let (m, _) = catalog_matrix("M8_2").unwrap();
    if let Some(e) = m.as_exact() {
        println!("\nM8_2 over Q(sqrt{:?}), scale^2 = {}, first row:", e.field(), e.scale_sq);
        println!("{}", (0..e.n()).map(|j| e.entries.get(0, j).to_string()).collect::<Vec<_>>().join(", "));
    }
}
