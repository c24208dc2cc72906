//! Local minimizers for the penalized objective. Both only ever accept steps that lower it.

use nalgebra::DVector;

use super::objective::{jacobian, objective, residuals, gradient, FreeEntries, Penalty};

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Step {
    pub iteration: usize,
    pub objective: f64,
}

/// Stops once the objective is below `target` or progress stalls.
pub(crate) struct Limits {
    pub max_iters: usize,
    pub target: f64,
}

pub(crate) fn levenberg_marquardt(
    free: &FreeEntries,
    x: &mut Vec<f64>,
    pen: Penalty,
    limits: &Limits,
    mut on_step: impl FnMut(Step, &[f64]),
) -> f64 {
    let p = free.len();
    let mut f = objective(free, x, pen);
    let mut lambda = 1e-3;
    let mut stall = 0usize;
    for it in 0..limits.max_iters {
        if f <= limits.target {
            break;
        }
        let r = residuals(free, x, pen);
        let j = jacobian(free, x, pen);
        let jt = j.transpose();
        let jtj = &jt * &j;
        let g = &jt * &r;
        let mut accepted = false;
        for _ in 0..30 {
            let mut a = jtj.clone();
            for d in 0..p {
                a[(d, d)] += lambda * (jtj[(d, d)] + 1e-9);
            }
            let Some(step) = a.cholesky().map(|c| c.solve(&(-&g))) else {
                lambda *= 4.0;
                continue;
            };
            let trial: Vec<f64> = x.iter().zip(step.iter()).map(|(a, b)| a + b).collect();
            let ft = objective(free, &trial, pen);
            if ft.is_finite() && ft < f {
                stall = if f - ft < 1e-12 * f.max(1e-300) { stall + 1 } else { 0 };
                *x = trial;
                f = ft;
                lambda = (lambda / 3.0).max(1e-15);
                accepted = true;
                break;
            }
            lambda *= 4.0;
            if lambda > 1e16 {
                break;
            }
        }
        if !accepted || stall > 25 {
            break;
        }
        on_step(Step { iteration: it + 1, objective: f }, x);
    }
    f
}

/// Limited-memory BFGS with Armijo backtracking.
pub(crate) fn lbfgs(
    free: &FreeEntries,
    x: &mut Vec<f64>,
    pen: Penalty,
    limits: &Limits,
    memory: usize,
    mut on_step: impl FnMut(Step, &[f64]),
) -> f64 {
    let mut f = objective(free, x, pen);
    let mut g = DVector::from_vec(gradient(free, x, pen));
    let mut hist: Vec<(DVector<f64>, DVector<f64>, f64)> = Vec::new();
    for it in 0..limits.max_iters {
        if f <= limits.target || g.norm() < 1e-300 {
            break;
        }
        // two-loop recursion
        let mut q = g.clone();
        let mut alphas = Vec::with_capacity(hist.len());
        for (s, y, rho) in hist.iter().rev() {
            let a = rho * s.dot(&q);
            q -= y * a;
            alphas.push(a);
        }
        if let Some((s, y, _)) = hist.last() {
            q *= s.dot(y) / y.dot(y);
        }
        for ((s, y, rho), a) in hist.iter().zip(alphas.into_iter().rev()) {
            let b = rho * y.dot(&q);
            q += s * (a - b);
        }
        let mut dir = -q;
        if dir.dot(&g) >= 0.0 {
            dir = -g.clone();
            hist.clear();
        }
        let slope = dir.dot(&g);
        let mut t = 1.0;
        let xv = DVector::from_column_slice(x);
        let mut next = None;
        for _ in 0..60 {
            let trial = &xv + &dir * t;
            let ft = objective(free, trial.as_slice(), pen);
            if ft.is_finite() && ft <= f + 1e-4 * t * slope && ft < f {
                next = Some((trial, ft));
                break;
            }
            t *= 0.5;
        }
        let Some((xn, fnew)) = next else { break };
        let gn = DVector::from_vec(gradient(free, xn.as_slice(), pen));
        let s = &xn - &xv;
        let y = &gn - &g;
        let sy = s.dot(&y);
        if sy > 1e-16 {
            hist.push((s, y, 1.0 / sy));
            if hist.len() > memory {
                hist.remove(0);
            }
        }
        x.copy_from_slice(xn.as_slice());
        f = fnew;
        g = gn;
        on_step(Step { iteration: it + 1, objective: f }, x);
    }
    f
}

