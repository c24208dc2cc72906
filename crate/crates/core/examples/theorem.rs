//! Builds every graph on the degree <= 4 list, attaches a verified witness and
//! checks the claimed isomorphisms.
//!
//! cargo run --release --example theorem -- 12

use qtwo::pipeline::verify_theorem_list;

fn main() {
    let max_candle = std::env::args().nth(1).map_or(8, |a| a.parse().expect("integer"));
    let rep = verify_theorem_list(max_candle).unwrap();
    let mut group = String::new();
    for g in &rep.graphs {
        if g.group != group {
            group = g.group.clone();
            println!("{group}");
        }
        println!(
            "  {:<8} n={:<3} {:<4} {}",
            g.name,
            g.n,
            if g.pass { "ok" } else { "FAIL" },
            g.method.as_deref().or(g.error.as_deref()).unwrap_or("")
        );
    }
    println!("isomorphisms");
    for i in &rep.isomorphisms {
        println!("  {} ~ {}: {}", i.left, i.right, i.holds);
    }
    println!("overall: {}", if rep.pass() { "pass" } else { "FAIL" });
}
