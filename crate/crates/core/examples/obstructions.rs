//! Runs the filter chain on a few graphs and re-checks every certificate it emits.
//!
//! cargo run --example obstructions -- [name ...]

use qtwo::obstructions::{run_filter_chain, StageOutcome};

fn main() {
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names = ["P3", "C5", "K3_3", "R9_1", "R9_2", "R12_1", "R12_2", "R12_3", "H:5"].map(String::from).to_vec();
    }
    for name in names {
        let g = qtwo::pipeline::resolve_graph(&name).expect("known graph");
        let report = run_filter_chain(&g);
        print!("{name:>6}:");
        for s in &report.stages {
            let tag = match &s.outcome {
                StageOutcome::Pass => "pass".to_string(),
                StageOutcome::NotApplicable => "n/a".to_string(),
                StageOutcome::Skipped { reason } => format!("skipped ({reason})"),
                StageOutcome::Fail { certificate } => format!("FAIL {}", certificate.kind()),
            };
            print!(" {}={tag}", s.stage.name());
        }
        println!();
        if let Some(c) = &report.fatal {
            println!("        {}", serde_json::to_string(c).unwrap());
            println!("        re-verified: {:?}", c.verify(&g));
        }
    }
}
