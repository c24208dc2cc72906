//! Counts connected r-regular graphs and prints them as graph6.
//!
//! cargo run --release --example enumerate -- 8 4

use qtwo::graph::{enumerate_regular, to_graph6};

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let n = args.next().unwrap_or(8);
    let r = args.next().unwrap_or(4);
    let mut count = 0;
    for g in enumerate_regular(n, r, true).expect("supported order") {
        println!("{}  diameter {}", to_graph6(&g), g.diameter().unwrap());
        count += 1;
    }
    println!("{count} connected {r}-regular graphs on {n} vertices");
}
