use qtwo::graph::{catalog_graph, cycle, is_isomorphic};
use qtwo::pipeline::diameter2_survivors;
use qtwo::numlin::verify_involution;
use qtwo::obstructions::run_filter_chain;
use qtwo::search::{find_witness, rounding_probe, SearchConfig};
use qtwo::witnesses::catalog_matrix;

fn quick() -> SearchConfig {
    SearchConfig { restarts: 16, ..SearchConfig::default() }
}

#[test]
fn never_contradicts_a_certificate() {
    let mut graphs: Vec<_> = ["R9_1", "R9_2", "R12_1", "R12_2"].iter().map(|n| catalog_graph(n).unwrap()).collect();
    graphs.push(cycle(5).unwrap());
    for g in graphs {
        assert!(!run_filter_chain(&g).passed());
        let out = find_witness(&g, &quick()).unwrap();
        assert!(out.witness.is_none(), "{:?}", g.label());
        assert!(out.best_residual > 1e-6);
    }
}

#[test]
fn same_seed_same_answer() {
    let g = catalog_graph("R8_3").unwrap();
    let a = find_witness(&g, &quick()).unwrap();
    let b = find_witness(&g, &quick()).unwrap();
    assert_eq!(a.restart, b.restart);
    assert_eq!(a.witness.unwrap().to_packed_f64().upper(), b.witness.unwrap().to_packed_f64().upper());
}

fn jitter(m: &qtwo::numlin::SymMatrix) -> qtwo::numlin::SymMatrix {
    let mut d = m.to_dmatrix();
    for i in 0..d.nrows() {
        for j in i..d.ncols() {
            if d[(i, j)] != 0.0 {
                d[(i, j)] += 1e-9 * ((i * 7 + j) % 5) as f64;
                d[(j, i)] = d[(i, j)];
            }
        }
    }
    qtwo::numlin::SymMatrix::from_dmatrix(&d)
}

#[test]
fn rounding_recovers_catalog_entries() {
    for name in ["M7_1", "M8_2", "M8_3", "M8_4c", "M8_6", "M10_2", "M14_1", "H3"] {
        let (m, _) = catalog_matrix(name).unwrap();
        let p = rounding_probe(&jitter(&m));
        assert!(p.exact, "{name}: {}", p.note);
        assert_eq!(verify_involution(&p.matrix).exact, Some(true));
        assert!((p.matrix.to_dmatrix() - m.to_dmatrix()).amax() < 1e-12);
    }
}

#[test]
fn rounding_leaves_inexact_input_alone() {
    let (m, _) = catalog_matrix("M8_2").unwrap();
    let mut d = m.to_dmatrix();
    d[(0, 1)] += 1e-3;
    d[(1, 0)] += 1e-3;
    let noisy = qtwo::numlin::SymMatrix::from_dmatrix(&d);
    let p = rounding_probe(&noisy);
    assert!(!p.exact);
    assert_eq!(p.matrix.to_dmatrix(), noisy.to_dmatrix());
}

#[test]
fn nine_vertex_survivors() {
    let (_, survivors) = diameter2_survivors(9).unwrap();
    assert_eq!(survivors.len(), 3);
    let named: Vec<_> = ["R9_1", "R9_2", "R9_3"].iter().map(|n| catalog_graph(n).unwrap()).collect();
    for g in &named {
        assert_eq!(survivors.iter().filter(|s| is_isomorphic(s, g).is_some()).count(), 1);
    }
    // labeling constraints on the stored R9_2
    let g = &named[1];
    let e = |u: usize, v: usize| (u - 1, v - 1);
    for (u, v) in [e(6, 7), e(2, 6), e(3, 7)] {
        assert!(g.has_edge(u, v));
        assert_eq!(g.common_neighbor_count(u, v), 0);
    }
    let (a, b) = e(1, 2);
    assert!(g.has_edge(a, b));
    let (a, b) = e(1, 3);
    assert!(g.has_edge(a, b));
    let (a, b) = e(2, 3);
    assert_eq!(g.common_neighbors(a, b), vec![0]);
}
