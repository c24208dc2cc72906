//! Numerical search for an involution fitting a named graph.
//!
//! cargo run --release --example search -- R10_3 [trace.jsonl]

use std::time::Instant;

use qtwo::numlin::verify_involution;
use qtwo::search::{find_witness, rounding_probe, write_trace_jsonl, SearchConfig};

fn main() {
    let mut args = std::env::args().skip(1);
    let names: Vec<String> = match args.next() {
        Some(n) => vec![n],
        None => ["C4", "K5", "P3", "C5", "R6_1", "R7_1", "R8_1", "R8_2", "R8_3", "R8_4", "R8_5", "R8_6", "R9_1", "R10_1", "R10_2", "R10_3", "R10_4"]
            .map(String::from)
            .to_vec(),
    };
    let trace_path = args.next();
    let cfg = SearchConfig::default();
    for name in names {
        let g: qtwo::graph::Graph = name.parse().expect("known graph name");
        let t = Instant::now();
        let out = find_witness(&g, &cfg).expect("search runs");
        let secs = t.elapsed().as_secs_f64();
        match &out.witness {
            Some(m) => {
                let probe = rounding_probe(m);
                println!(
                    "{name:>6}: found at restart {} in {secs:.2}s, residual {:.1e}, min |edge| {:.3}, rounding: {}",
                    out.restart.unwrap(),
                    verify_involution(m).residual,
                    out.best_min_edge,
                    probe.note
                );
            }
            None => println!(
                "{name:>6}: nothing after {} restarts in {secs:.2}s, best residual {:.2e}",
                out.restarts_run, out.best_residual
            ),
        }
        if let Some(p) = &trace_path {
            let f = std::fs::File::create(p).expect("trace file");
            write_trace_jsonl(&out.trace, std::io::BufWriter::new(f)).expect("write trace");
        }
    }
}
