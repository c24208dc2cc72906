#![allow(dead_code)]

pub mod oracle;

use nalgebra::DMatrix;
use qtwo::graph::{candle, Graph};
use qtwo::numlin::{CrossBlock, SymMatrix};
use qtwo::witnesses::{bipartite_lift, known_witness, product_lift, transport, BipartiteForm};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Relabels a graph and its witness together.
pub fn relabel(g: &Graph, m: &SymMatrix, perm: &[usize]) -> (Graph, SymMatrix) {
    let iso = qtwo::graph::Isomorphism { map: perm.to_vec() };
    (g.relabel(perm), transport(m, &iso))
}

/// Product of `count` Givens rotations with random angles: an orthogonal matrix whose zero
/// pattern depends on which coordinate pairs were touched.
pub fn givens_product(m: usize, count: usize, rng: &mut ChaCha8Rng) -> DMatrix<f64> {
    let mut q = DMatrix::identity(m, m);
    for _ in 0..count {
        let i = rng.random_range(0..m);
        let mut j = rng.random_range(0..m - 1);
        if j >= i {
            j += 1;
        }
        let t: f64 = rng.random_range(0.2..1.3);
        let (c, s) = (t.cos(), t.sin());
        let (ri, rj) = (q.row(i).clone_owned(), q.row(j).clone_owned());
        q.set_row(i, &(&ri * c - &rj * s));
        q.set_row(j, &(&ri * s + &rj * c));
    }
    q
}

/// Seeded graphs that carry a verified involution: relabeled candles, product lifts of
/// constructed witnesses, and bipartite lifts of random sparse orthogonal matrices.
pub fn witness_graphs(seed: u64, count: usize) -> Vec<(String, Graph, SymMatrix)> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    for k in 3..=10 {
        let g = candle(k).unwrap();
        let m = SymMatrix::Exact(qtwo::witnesses::candle_witness(k).unwrap());
        let p = random_perm(g.order(), &mut rng);
        let (g, m) = relabel(&g, &m, &p);
        out.push((format!("H{k}"), g, m));
    }
    let bases = ["K3", "K4", "K5", "C4", "K3_3", "R6_1", "R8_2", "R8_3", "R8_4", "R8_6", "R10_3", "R10_4", "R8_5"];
    for name in bases {
        let w = known_witness(name).unwrap();
        let m = product_lift(&w.matrix).unwrap();
        let g = m.support();
        let p = random_perm(g.order(), &mut rng);
        let (g, m) = relabel(&g, &m, &p);
        out.push((format!("{name} x K2"), g, m));
    }
    while out.len() < count {
        let m = rng.random_range(3..=8);
        let rotations = rng.random_range(2 * m..=4 * m);
        let q = givens_product(m, rotations, &mut rng);
        let form = if rng.random::<bool>() { BipartiteForm::ZeroDiag } else { BipartiteForm::HalfIdentity };
        let lifted = bipartite_lift(&CrossBlock::Float(q), form).unwrap();
        let g = lifted.support();
        if !g.is_connected() {
            continue;
        }
        let p = random_perm(g.order(), &mut rng);
        let (g, mat) = relabel(&g, &lifted, &p);
        out.push((format!("bipartite lift {}", out.len()), g, mat));
    }
    out
}
