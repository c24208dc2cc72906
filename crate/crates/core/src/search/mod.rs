//! Numerical search for involutions with a prescribed pattern.
//!
//! A failed search only means nothing was found; it says nothing about `q(G)`.

mod objective;
mod optimize;
mod rounding;

pub use objective::{gradient, involution_defect, jacobian, max_defect, objective, residuals, FreeEntries, Penalty};
pub use rounding::{rounding_probe, RoundingProbe, ROUNDING_TOL};

use std::io::Write;

use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::numlin::SymMatrix;
use optimize::{lbfgs, levenberg_marquardt, Limits, Step};

pub const MAX_SEARCH_ORDER: usize = 64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SearchError {
    #[error("invalid search config: {0}")]
    InvalidConfig(String),
    #[error("graph on {0} vertices exceeds the search limit")]
    TooLarge(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("start matrix has order {found}, graph has {expected}")]
    StartDimension { expected: usize, found: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum StepRule {
    LevenbergMarquardt,
    Lbfgs { memory: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchConfig {
    pub restarts: usize,
    pub max_iters: usize,
    pub seed: u64,
    pub residual_tol: f64,
    pub edge_floor: f64,
    /// Starting penalty weight μ; multiplied by 10 every third restart, returning to the
    /// starting value after four levels.
    pub penalty_weight: f64,
    /// Edge magnitude below which the penalty is active.
    pub penalty_eps: f64,
    pub step_rule: StepRule,
    /// Start from the pattern-masked `2P − I` for a random rank-`k` projector `P`.
    pub target_split: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            restarts: 64,
            max_iters: 2000,
            seed: 0x0071_7477_6f00,
            residual_tol: 1e-10,
            edge_floor: 0.05,
            penalty_weight: 0.01,
            penalty_eps: 0.0625,
            step_rule: StepRule::LevenbergMarquardt,
            target_split: None,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<(), SearchError> {
        let bad = |s: &str| Err(SearchError::InvalidConfig(s.to_string()));
        if self.restarts == 0 || self.max_iters == 0 {
            return bad("restarts and maxIters must be positive");
        }
        if !(self.residual_tol > 0.0 && self.residual_tol < self.edge_floor) {
            return bad("need 0 < residualTol < edgeFloor");
        }
        if !(self.penalty_weight >= 0.0 && self.penalty_eps > 0.0) {
            return bad("penalty weight must be non-negative and eps positive");
        }
        if let StepRule::Lbfgs { memory: 0 } = self.step_rule {
            return bad("L-BFGS memory must be positive");
        }
        Ok(())
    }

    fn penalty(&self, restart: usize) -> Penalty {
        Penalty { weight: self.penalty_weight * 10f64.powi(((restart / 3) % 4) as i32), eps: self.penalty_eps }
    }
}

/// One accepted step.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TracePoint {
    pub restart: usize,
    pub iteration: usize,
    pub objective: f64,
    pub residual: f64,
    pub min_edge: f64,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    /// The verified involution, if a restart succeeded.
    pub witness: Option<SymMatrix>,
    pub restart: Option<usize>,
    pub restarts_run: usize,
    /// Smallest `max |M² − I|` seen at the end of a restart.
    pub best_residual: f64,
    pub best_min_edge: f64,
    pub best: SymMatrix,
    pub trace: Vec<TracePoint>,
}

impl SearchOutcome {
    pub fn found(&self) -> bool {
        self.witness.is_some()
    }
}

pub fn write_trace_jsonl(trace: &[TracePoint], mut out: impl Write) -> std::io::Result<()> {
    for p in trace {
        serde_json::to_writer(&mut out, p)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

struct RestartResult {
    x: Vec<f64>,
    residual: f64,
    min_edge: f64,
    success: bool,
    trace: Vec<TracePoint>,
}

fn min_edge(free: &FreeEntries, x: &[f64]) -> f64 {
    free.edge_values(x).iter().fold(f64::INFINITY, |a, v| a.min(v.abs()))
}

fn random_start(free: &FreeEntries, cfg: &SearchConfig, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let n = free.n;
    if let Some(k) = cfg.target_split.filter(|&k| k <= n) {
        let a = DMatrix::from_fn(n, k.max(1), |_, _| rng.sample::<f64, _>(StandardNormal));
        let q = a.qr().q();
        let q = q.columns(0, k);
        let m = 2.0 * &q * q.transpose() - DMatrix::identity(n, n);
        return free.from_matrix(&m);
    }
    let mut x: Vec<f64> = (0..n).map(|_| rng.random_range(-0.5..=0.5)).collect();
    x.extend((0..free.edges.len()).map(|_| rng.sample::<f64, _>(StandardNormal)));
    let norm = SymmetricEigen::new(free.to_matrix(&x)).eigenvalues.amax();
    if norm > 0.0 {
        for v in &mut x {
            *v /= norm;
        }
    }
    x
}

fn run_restart(free: &FreeEntries, cfg: &SearchConfig, restart: usize, start: Option<&[f64]>) -> RestartResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(restart as u64);
    let mut x = match start {
        Some(s) => s.to_vec(),
        None => random_start(free, cfg, &mut rng),
    };
    let pen = cfg.penalty(restart);
    let limits = Limits { max_iters: cfg.max_iters, target: (cfg.residual_tol * 1e-3).powi(2) };
    let mut trace: Vec<TracePoint> = Vec::new();
    let last_iter = std::cell::Cell::new(0);
    let mut record = |s: Step, x: &[f64]| {
        last_iter.set(s.iteration);
        trace.push(TracePoint {
            restart,
            iteration: s.iteration,
            objective: s.objective,
            residual: max_defect(&free.to_matrix(x)),
            min_edge: min_edge(free, x),
        })
    };
    match cfg.step_rule {
        StepRule::LevenbergMarquardt => {
            levenberg_marquardt(free, &mut x, pen, &limits, &mut record);
        }
        StepRule::Lbfgs { memory } => {
            let f = lbfgs(free, &mut x, pen, &limits, memory, &mut record);
            if f < 1e-6 {
                let offset = last_iter.get();
                levenberg_marquardt(free, &mut x, pen, &Limits { max_iters: 100, ..limits }, |s, x| {
                    record(Step { iteration: offset + s.iteration, ..s }, x)
                });
            }
        }
    }
    let residual = max_defect(&free.to_matrix(&x));
    let me = min_edge(free, &x);
    RestartResult {
        success: residual <= cfg.residual_tol && me >= cfg.edge_floor,
        x,
        residual,
        min_edge: me,
        trace,
    }
}

fn check_graph(g: &Graph) -> Result<(), SearchError> {
    if g.order() > MAX_SEARCH_ORDER {
        return Err(SearchError::TooLarge(g.order()));
    }
    if !g.is_connected() {
        return Err(SearchError::Disconnected);
    }
    Ok(())
}

/// Multi-start search for an involution fitting `g`.
pub fn find_witness(g: &Graph, cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    search(g, cfg, None)
}

/// Like [`find_witness`], but restart 0 starts from `start` (restricted to the pattern, with
/// edge entries below the penalty threshold raised to it).
pub fn find_witness_from(g: &Graph, start: &SymMatrix, cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    if start.n() != g.order() {
        return Err(SearchError::StartDimension { expected: g.order(), found: start.n() });
    }
    let free = FreeEntries::new(g);
    let mut x = free.from_matrix(&start.to_dmatrix());
    for v in &mut x[free.n..] {
        if v.abs() < cfg.penalty_eps {
            *v = if *v < 0.0 { -cfg.penalty_eps } else { cfg.penalty_eps };
        }
    }
    search(g, cfg, Some(x))
}

fn search(g: &Graph, cfg: &SearchConfig, start: Option<Vec<f64>>) -> Result<SearchOutcome, SearchError> {
    cfg.validate()?;
    check_graph(g)?;
    let free = FreeEntries::new(g);
    let chunk = rayon::current_num_threads().max(1);
    let mut trace = Vec::new();
    let mut best: Option<RestartResult> = None;
    let mut run = 0;
    let mut r0 = 0;
    while r0 < cfg.restarts {
        let r1 = (r0 + chunk).min(cfg.restarts);
        let results: Vec<RestartResult> = (r0..r1)
            .into_par_iter()
            .map(|r| run_restart(&free, cfg, r, if r == 0 { start.as_deref() } else { None }))
            .collect();
        for res in results {
            run += 1;
            trace.extend(res.trace.iter().cloned());
            let success = res.success;
            if best.as_ref().is_none_or(|b| (res.success, -res.residual) > (b.success, -b.residual)) {
                best = Some(res);
            }
            if success {
                let b = best.take().unwrap();
                let m = SymMatrix::from_dmatrix(&free.to_matrix(&b.x));
                return Ok(SearchOutcome {
                    witness: Some(m.clone()),
                    restart: Some(run - 1),
                    restarts_run: run,
                    best_residual: b.residual,
                    best_min_edge: b.min_edge,
                    best: m,
                    trace,
                });
            }
        }
        r0 = r1;
    }
    let b = best.expect("at least one restart");
    Ok(SearchOutcome {
        witness: None,
        restart: None,
        restarts_run: run,
        best_residual: b.residual,
        best_min_edge: b.min_edge,
        best: SymMatrix::from_dmatrix(&free.to_matrix(&b.x)),
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{catalog_graph, complete, cycle, path};
    use crate::numlin::{matrix_fits_pattern, verify_involution};

    fn quick() -> SearchConfig {
        SearchConfig { restarts: 8, ..SearchConfig::default() }
    }

    #[test]
    fn config_validation() {
        assert!(SearchConfig::default().validate().is_ok());
        let bad = SearchConfig { residual_tol: 0.1, ..SearchConfig::default() };
        assert!(bad.validate().is_err());
        assert!(find_witness(&path(3), &bad).is_err());
    }

    #[test]
    fn small_successes() {
        for g in [cycle(4).unwrap(), complete(5), complete(2)] {
            let out = find_witness(&g, &quick()).unwrap();
            let m = out.witness.expect("witness");
            assert!(verify_involution(&m).pass);
            assert!(matrix_fits_pattern(&m, &g).unwrap());
        }
    }

    #[test]
    fn path_fails() {
        let out = find_witness(&path(3), &quick()).unwrap();
        assert!(!out.found());
        assert!(out.best_residual > 1e-3);
    }

    #[test]
    fn deterministic_and_monotone() {
        let g = catalog_graph("R8_6").unwrap();
        let a = find_witness(&g, &quick()).unwrap();
        let b = find_witness(&g, &quick()).unwrap();
        assert_eq!(a.trace, b.trace);
        assert_eq!(a.restart, b.restart);
        for w in a.trace.windows(2) {
            if w[0].restart == w[1].restart {
                assert!(w[1].objective <= w[0].objective);
            }
        }
    }

    #[test]
    fn lbfgs_rule() {
        let cfg = SearchConfig { step_rule: StepRule::Lbfgs { memory: 8 }, max_iters: 4000, ..quick() };
        let out = find_witness(&complete(4), &cfg).unwrap();
        assert!(out.found());
    }

    #[test]
    fn split_start() {
        let cfg = SearchConfig { target_split: Some(3), ..quick() };
        let out = find_witness(&catalog_graph("R6_1").unwrap(), &cfg).unwrap();
        assert!(out.found());
    }
}
