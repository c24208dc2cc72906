//! Diameter-2 quartic census on 6 to 10 vertices.
//!
//! cargo run --release --example census -- [out.json]

use qtwo::pipeline::{run_diameter2_census, ClassifyConfig};

fn main() {
    let rep = run_diameter2_census(&ClassifyConfig::default()).expect("census runs");
    for c in &rep.counts {
        println!("n = {:>2}: {:>2} connected, {:>2} diameter 2, {:>2} survivors", c.n, c.connected, c.diameter2, c.survivors);
    }
    println!();
    for r in &rep.survivors {
        let why = match (&r.witness, &r.certificate) {
            (Some(w), _) => w.method.clone(),
            (None, Some(c)) => c.kind().to_string(),
            _ => r.citation.clone().unwrap_or_default(),
        };
        println!("{:>6} {:<12} {:<8} {why}", r.id, r.graph6, r.status.label());
        assert!(r.reverify().is_ok());
    }
    if let Some(p) = std::env::args().nth(1) {
        std::fs::write(&p, serde_json::to_string_pretty(&rep).unwrap()).unwrap();
        println!("\nwrote {p}");
    }
}
