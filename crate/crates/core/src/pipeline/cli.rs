//! Command-line front end. Exit codes: 0 success, 1 verification failure or nothing found,
//! 2 usage or input error.

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::graph::{enumerate_regular, parse_graph6, to_graph6, Graph};
use crate::numlin::{matrix_fits_pattern, verify_involution_tol, MatrixDoc, MatrixMeta, INVOLUTION_TOL};
use crate::obstructions::{run_filter_chain, verify_certificate, FilterReport};
use crate::search::{find_witness, rounding_probe, write_trace_jsonl, SearchConfig};
use crate::witnesses::{recognize_and_construct, verify_catalog};

use super::{resolve_graph, run_diameter2_census, verify_theorem_list, CensusReport, ClassificationRecord, ClassifyConfig};

pub const FILTER_SCHEMA: &str = "qtwo.filter/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "qtwo", version, about = "Two-eigenvalue witnesses and obstructions for graph patterns")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Output {
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
}

#[derive(Debug, Args, Clone)]
struct SearchArgs {
    #[arg(long, default_value_t = SearchConfig::default().restarts)]
    restarts: usize,
    #[arg(long, env = "QTWO_SEED", default_value_t = SearchConfig::default().seed)]
    seed: u64,
    /// Residual tolerance for search and verification.
    #[arg(long, default_value_t = SearchConfig::default().residual_tol)]
    tol: f64,
    /// Try to snap float output to exact entries.
    #[arg(long)]
    exact: bool,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig { restarts: self.restarts, seed: self.seed, residual_tol: self.tol, ..SearchConfig::default() }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate r-regular graphs on n vertices as graph6.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        r: usize,
        /// Include disconnected graphs.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Run the obstruction chain over a graph6 stream.
    Filter {
        /// graph6 file, or `-` for stdin.
        #[arg(long, default_value = "-")]
        input: String,
        #[command(flatten)]
        out: Output,
    },
    /// Construct or search for an involution fitting one graph.
    Witness {
        /// Family or catalog name (`R10_3`, `H:7`, `Q4`, `prod:K3:C4`) or `g6:<graph6>`.
        #[arg(long, conflicts_with = "input")]
        graph: Option<String>,
        /// File whose first line is a graph6 string.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Write the search trace as JSONL.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Skip constructions and search directly.
        #[arg(long)]
        search_only: bool,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Re-verify a stored matrix, record, census report or filter output.
    Certify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = INVOLUTION_TOL)]
        tol: f64,
    },
    /// Diameter-2 census of connected 4-regular graphs on 6 to 10 vertices.
    Census {
        #[command(flatten)]
        search: SearchArgs,
        /// Record per-graph timing.
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Construct and verify every graph of the degree <= 4 classification.
    VerifyTheorem {
        /// Largest closed candle to include.
        #[arg(long, default_value_t = 8)]
        max_candle: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Replay the checks on every stored matrix.
    VerifyCatalog {
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FilterLine {
    pub schema: String,
    pub graph6: String,
    pub passed: bool,
    pub report: FilterReport,
}

struct Failure(i32, String);

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure(2, msg.to_string())
}

fn emit(out: &Output, stdout: &mut dyn Write, text: &str) -> Result<(), Failure> {
    let text = if text.ends_with('\n') { text.to_string() } else { format!("{text}\n") };
    match &out.output {
        Some(p) => std::fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(|e| usage(e)),
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn read_lines(input: &str) -> Result<Vec<String>, Failure> {
    let lines: Vec<String> = if input == "-" {
        std::io::stdin().lock().lines().collect::<Result<_, _>>().map_err(usage)?
    } else {
        std::fs::read_to_string(input).map_err(|e| usage(format!("{input}: {e}")))?.lines().map(String::from).collect()
    };
    Ok(lines.into_iter().filter(|l| !l.trim().is_empty()).collect())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run(args: impl IntoIterator<Item = impl Into<OsString> + Clone>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(stderr, "qtwo: {msg}");
            code
        }
    }
}

fn dispatch(cmd: Command, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Gen { n, r, all, out } => {
            let mut text = String::new();
            for g in enumerate_regular(n, r, !all).map_err(usage)? {
                text.push_str(&to_graph6(&g));
                text.push('\n');
            }
            emit(&out, stdout, &text)?;
            Ok(0)
        }
        Command::Filter { input, out } => {
            let mut text = String::new();
            if out.format == Format::Csv {
                text.push_str("graph6,passed,stage,certificate\n");
            }
            for line in read_lines(&input)? {
                let g = parse_graph6(&line).map_err(usage)?;
                let report = run_filter_chain(&g);
                match out.format {
                    Format::Json => {
                        let l = FilterLine { schema: FILTER_SCHEMA.into(), graph6: to_graph6(&g), passed: report.passed(), report };
                        text.push_str(&serde_json::to_string(&l).expect("serializable"));
                        text.push('\n');
                    }
                    Format::Csv => text.push_str(&format!(
                        "{},{},{},{}\n",
                        to_graph6(&g),
                        report.passed(),
                        report.fatal_stage().map_or("", |s| s.name()),
                        report.fatal.as_ref().map_or("", |c| c.kind())
                    )),
                }
            }
            emit(&out, stdout, &text)?;
            Ok(0)
        }
        Command::Witness { graph, input, trace, search_only, search, out } => {
            let g = match (graph, input) {
                (Some(name), None) => resolve_graph(&name).map_err(usage)?,
                (None, Some(p)) => {
                    let lines = read_lines(&p.to_string_lossy())?;
                    parse_graph6(lines.first().ok_or_else(|| usage("empty input"))?).map_err(usage)?
                }
                _ => return Err(usage("give exactly one of --graph or --input")),
            };
            witness(&g, trace, search_only, &search, &out, stdout)
        }
        Command::Certify { input, tol } => certify(&input, tol, stdout),
        Command::Census { search, timing, out } => {
            let cfg = ClassifyConfig { search: Some(search.config()), exact: search.exact, timing };
            cfg.search.as_ref().unwrap().validate().map_err(usage)?;
            let rep = run_diameter2_census(&cfg).map_err(usage)?;
            let ok = rep.survivors.iter().all(|r| r.reverify().is_ok());
            emit(&out, stdout, &match out.format {
                Format::Json => json(&rep),
                Format::Csv => rep.to_csv(),
            })?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::VerifyTheorem { max_candle, out } => {
            let rep = verify_theorem_list(max_candle).map_err(usage)?;
            emit(&out, stdout, &match out.format {
                Format::Json => json(&rep),
                Format::Csv => rep.to_csv(),
            })?;
            Ok(if rep.pass() { 0 } else { 1 })
        }
        Command::VerifyCatalog { out } => {
            let checks = verify_catalog();
            let text = match out.format {
                Format::Json => json(&checks),
                Format::Csv => {
                    let mut s = String::from("name,graph,exact,fits,residual,ssp,pass\n");
                    for c in &checks {
                        s.push_str(&format!(
                            "{},{},{},{},{},{},{}\n",
                            c.name,
                            c.graph,
                            c.exact,
                            c.fits,
                            c.involution.as_ref().map_or(String::new(), |r| format!("{:.1e}", r.residual)),
                            c.ssp.as_ref().map_or(String::new(), |s| format!("{:?}", s.verdict)),
                            c.pass()
                        ));
                    }
                    s
                }
            };
            emit(&out, stdout, &text)?;
            Ok(if checks.iter().all(|c| c.pass()) { 0 } else { 1 })
        }
    }
}

fn witness(
    g: &Graph,
    trace: Option<PathBuf>,
    search_only: bool,
    args: &SearchArgs,
    out: &Output,
    stdout: &mut dyn Write,
) -> Result<i32, Failure> {
    let constructed = if search_only { None } else { recognize_and_construct(g) };
    let (matrix, method) = match constructed {
        Some(w) => (w.matrix, w.method),
        None => {
            let cfg = args.config();
            let res = find_witness(g, &cfg).map_err(usage)?;
            if let Some(p) = &trace {
                let f = std::fs::File::create(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
                write_trace_jsonl(&res.trace, std::io::BufWriter::new(f)).map_err(usage)?;
            }
            match res.witness {
                Some(m) if args.exact => {
                    let p = rounding_probe(&m);
                    (p.matrix, format!("search, rounding probe: {}", p.note))
                }
                Some(m) => (m, format!("search (restart {})", res.restart.unwrap_or(0))),
                None => {
                    return Err(Failure(
                        1,
                        format!("no witness found in {} restarts (best residual {:e})", res.restarts_run, res.best_residual),
                    ))
                }
            }
        }
    };
    let doc = MatrixDoc {
        meta: MatrixMeta {
            name: g.label().map(String::from),
            graph: Some(format!("g6:{}", to_graph6(g))),
            citation: None,
            note: Some(method),
        },
        matrix,
    };
    emit(out, stdout, &doc.to_json().map_err(usage)?)?;
    Ok(0)
}

fn verify_doc(doc: &MatrixDoc, tol: f64) -> Result<(), String> {
    let graph = doc.meta.graph.as_deref().ok_or("matrix has no graph field")?;
    let g = resolve_graph(graph).map_err(|e| e.to_string())?;
    if !matrix_fits_pattern(&doc.matrix, &g).map_err(|e| e.to_string())? {
        return Err("matrix does not fit its graph".into());
    }
    let rep = verify_involution_tol(&doc.matrix, tol);
    if !rep.pass {
        return Err(format!("involution residual {:e} exceeds {tol:e}", rep.residual));
    }
    Ok(())
}

fn certify_value(v: serde_json::Value, tol: f64) -> Result<String, String> {
    let schema = v.get("schema").and_then(|s| s.as_str()).unwrap_or_default().to_string();
    match schema.as_str() {
        crate::numlin::MATRIX_SCHEMA => {
            let doc = MatrixDoc::from_value(v).map_err(|e| e.to_string())?;
            verify_doc(&doc, tol)?;
            Ok("matrix verified".into())
        }
        super::RECORD_SCHEMA => {
            let r: ClassificationRecord = serde_json::from_value(v).map_err(|e| e.to_string())?;
            r.reverify()?;
            Ok(format!("record {} ({}) verified", r.id, r.status.label()))
        }
        super::CENSUS_SCHEMA => {
            let rep: CensusReport = serde_json::from_value(v).map_err(|e| e.to_string())?;
            for r in &rep.survivors {
                r.reverify().map_err(|e| format!("{}: {e}", r.id))?;
            }
            Ok(format!("{} census records verified", rep.survivors.len()))
        }
        FILTER_SCHEMA => {
            let l: FilterLine = serde_json::from_value(v).map_err(|e| e.to_string())?;
            let g = parse_graph6(&l.graph6).map_err(|e| e.to_string())?;
            match &l.report.fatal {
                Some(c) => verify_certificate(c, &g).map(|_| format!("{} certificate verified", c.kind())),
                None => Ok("no certificate to verify".into()),
            }
        }
        other => Err(format!("unrecognized schema `{other}`")),
    }
}

fn certify(input: &PathBuf, tol: f64, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let text = std::fs::read_to_string(input).map_err(|e| usage(format!("{}: {e}", input.display())))?;
    let values: Vec<serde_json::Value> = match serde_json::from_str(&text) {
        Ok(v) => vec![v],
        Err(_) => text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(serde_json::from_str)
            .collect::<Result<_, _>>()
            .map_err(|e| usage(format!("not JSON or JSONL: {e}")))?,
    };
    let mut ok = true;
    for v in values {
        match certify_value(v, tol) {
            Ok(msg) => writeln!(stdout, "ok: {msg}").map_err(usage)?,
            Err(msg) => {
                ok = false;
                writeln!(stdout, "FAIL: {msg}").map_err(usage)?;
            }
        }
    }
    Ok(if ok { 0 } else { 1 })
}
