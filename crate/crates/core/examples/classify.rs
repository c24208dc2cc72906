//! Classifies graphs given as names or g6:<graph6> strings and prints the records.
//!
//! cargo run --release --example classify -- R8_4 g6:H{dAMb] R9_2

use qtwo::pipeline::{classify, resolve_graph, ClassifyConfig};

fn main() {
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        inputs = ["R7_1", "R8_4", "R9_1", "R9_3", "C5", "H:6"].map(String::from).to_vec();
    }
    let cfg = ClassifyConfig::default();
    for input in inputs {
        let g = resolve_graph(&input).expect("graph name or g6:<graph6>");
        let rec = classify(&g, input.clone(), &cfg);
        println!("{input}: {}", rec.status.label());
        println!("{}", serde_json::to_string_pretty(&rec).unwrap());
        println!("re-verified: {:?}\n", rec.reverify());
    }
}
