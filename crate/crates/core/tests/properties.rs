mod common;

use proptest::prelude::*;
use qtwo::graph::{candle, cartesian_product, catalog_graph, complete, cycle, parse_graph6, to_graph6, Graph};
use qtwo::numlin::{eigenvalue_clusters, matrix_fits_pattern, verify_involution, CrossBlock, SymMatrix, EIGEN_TOL};
use qtwo::obstructions::{
    bipartite_twin_obstruction_all, parity_obstruction_all, run_filter_chain, verify_certificate, Certificate, TwinOutcome,
};
use qtwo::pipeline::{classify, ClassifyConfig, Status};
use qtwo::witnesses::{bipartite_lift, kronecker_3ev, product_lift, BipartiteForm};

use common::{givens_product, random_perm, rng, witness_graphs};

#[test]
fn constructed_witnesses_pass_every_filter() {
    for (name, g, m) in witness_graphs(11, 120) {
        assert!(matrix_fits_pattern(&m, &g).unwrap(), "{name}");
        assert!(verify_involution(&m).pass, "{name}");
        let rep = run_filter_chain(&g);
        assert!(rep.passed(), "{name}: {:?}", rep.fatal);
        assert!(parity_obstruction_all(&g).is_empty(), "{name}");
        assert!(!matches!(bipartite_twin_obstruction_all(&g), TwinOutcome::Found(_)), "{name}");
    }
}

#[test]
fn bipartite_lifts_of_random_orthogonal_blocks() {
    let mut r = rng(21);
    for trial in 0..1000 {
        let m = 2 + trial % 7;
        let q = givens_product(m, 3 * m, &mut r);
        for form in [BipartiteForm::ZeroDiag, BipartiteForm::HalfIdentity] {
            let lifted = bipartite_lift(&CrossBlock::Float(q.clone()), form).unwrap();
            assert!(verify_involution(&lifted).pass, "trial {trial}");
        }
    }
}

#[test]
fn product_lift_keeps_float_residual_small() {
    for (name, _, m) in witness_graphs(5, 40).into_iter().skip(8) {
        let f = m.to_float();
        let before = verify_involution(&f).residual;
        let after = verify_involution(&product_lift(&f).unwrap()).residual;
        assert!(after <= 2.0 * before.max(f64::EPSILON), "{name}: {before:e} -> {after:e}");
    }
}

#[test]
fn kronecker_multiplicities() {
    for m in 2..=5 {
        for n in 2..=5 {
            let k = SymMatrix::Exact(kronecker_3ev(m, n).unwrap());
            let g = cartesian_product(&complete(m), &complete(n));
            assert!(matrix_fits_pattern(&k, &g).unwrap());
            let clusters = eigenvalue_clusters(&k, EIGEN_TOL).unwrap();
            let expect = [(-2.0, 1), (0.0, m + n - 2), (2.0, (m - 1) * (n - 1))];
            assert_eq!(clusters.len(), 3);
            for ((v, mult), (ev, em)) in clusters.iter().zip(expect) {
                assert!((v - ev).abs() < 1e-9);
                assert_eq!(*mult, em, "({m}, {n})");
            }
        }
    }
}

#[test]
fn certificates_survive_serialization_and_reject_other_graphs() {
    let cases = ["R9_1", "R9_2", "R12_1", "R12_2", "R7_2"];
    for name in cases {
        let g = catalog_graph(name).unwrap();
        let Some(cert) = run_filter_chain(&g).fatal else {
            assert_eq!(name, "R7_2");
            continue;
        };
        let text = serde_json::to_string(&cert).unwrap();
        let back: Certificate = serde_json::from_str(&text).unwrap();
        verify_certificate(&back, &g).unwrap();
        assert!(verify_certificate(&back, &candle(g.order() / 2).unwrap()).is_err(), "{name}");
    }
    let c5 = cycle(5).unwrap();
    let cert = run_filter_chain(&c5).fatal.unwrap();
    assert!(matches!(cert, Certificate::EdgeBound { edges: 5, required: 7, .. }));
    assert!(qtwo::obstructions::check_unique_path2(&c5).is_some());
}

#[test]
fn census_survivor_set_ignores_order() {
    let cfg = ClassifyConfig { search: None, ..ClassifyConfig::default() };
    let mut graphs: Vec<Graph> = Vec::new();
    for n in 6..=10 {
        graphs.extend(qtwo::pipeline::diameter2_survivors(n).unwrap().1);
    }
    let label = |gs: &[Graph]| {
        let mut v: Vec<(String, Status)> = gs
            .iter()
            .map(|g| {
                let r = classify(g, "x", &cfg);
                (r.catalog_match.map(|m| m.name).unwrap_or_default(), r.status)
            })
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    };
    let base = label(&graphs);
    let mut r = rng(8);
    for _ in 0..3 {
        let mut shuffled: Vec<Graph> = graphs.clone();
        use rand::seq::SliceRandom;
        shuffled.shuffle(&mut r);
        let shuffled: Vec<Graph> = shuffled.iter().map(|g| g.relabel(&random_perm(g.order(), &mut r))).collect();
        assert_eq!(label(&shuffled), base);
    }
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (3usize..14).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        g.add_edge(i, j).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn filter_verdict_is_relabeling_invariant(g in arb_graph(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let h = g.relabel(&random_perm(g.order(), &mut r));
        let (a, b) = (run_filter_chain(&g), run_filter_chain(&h));
        prop_assert_eq!(a.fatal_stage(), b.fatal_stage());
        if let Some(c) = &b.fatal {
            prop_assert!(verify_certificate(c, &h).is_ok());
        }
    }

    #[test]
    fn graph6_round_trip(g in arb_graph()) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }
}
