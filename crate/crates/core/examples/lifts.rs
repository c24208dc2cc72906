//! Builds witnesses on larger graphs from smaller ones: products with K2, vertex
//! duplication, bipartite lifts and transport along an isomorphism.
//!
//! cargo run --release --example lifts

use qtwo::graph::{cartesian_product, catalog_graph, complete, complete_bipartite, hypercube, is_isomorphic, jdup};
use qtwo::numlin::{matrix_fits_pattern, verify_involution, SymMatrix};
use qtwo::witnesses::{
    bipartite_lift, complete_involution, jdup_lift, product_lift, transport, zero_diagonal_orthogonal_5, BipartiteForm,
};

fn report(label: &str, m: &SymMatrix, g: &qtwo::graph::Graph) {
    let r = verify_involution(m);
    println!(
        "{label:<34} n={:<3} fits={:<5} exact={:?} residual={:.1e}",
        g.order(),
        matrix_fits_pattern(m, g).unwrap(),
        r.exact,
        r.residual
    );
}

fn main() {
    // K4 -> K4 x K2 -> K4 x Q2
    let mut m = SymMatrix::Exact(complete_involution(4));
    let mut g = complete(4);
    report("K4", &m, &g);
    for step in 1..=2 {
        m = product_lift(&m).unwrap();
        g = cartesian_product(&g, &complete(2));
        report(&format!("K4 x Q{step}"), &m, &g);
    }

    // Q3 duplicated at two antipodal vertices, then moved onto the stored R10_3 labels
    let q3 = hypercube(3).unwrap();
    let w = qtwo::witnesses::family_witness(&qtwo::graph::Family::parse("Q3").unwrap()).unwrap().matrix;
    let (m1, g1) = (jdup_lift(&w, 0).unwrap(), jdup(&q3, 0).unwrap());
    report("jdup(Q3, 0)", &m1, &g1);
    let (m2, g2) = (jdup_lift(&m1, 7).unwrap(), jdup(&g1, 7).unwrap());
    report("jdup(jdup(Q3, 0), 7)", &m2, &g2);
    let r10_3 = catalog_graph("R10_3").unwrap();
    let iso = is_isomorphic(&g2, &r10_3).expect("same graph up to labels");
    report("transported onto R10_3", &transport(&m2, &iso), &r10_3);

    // orthogonal 5x5 block with zero diagonal -> K55 minus a perfect matching
    let block = zero_diagonal_orthogonal_5();
    let lifted = bipartite_lift(&block, BipartiteForm::ZeroDiag).unwrap();
    let mut k55 = complete_bipartite(5, 5);
    for i in 0..5 {
        k55.remove_edge(i, 5 + i).unwrap();
    }
    report("K55 minus a perfect matching", &lifted, &k55);
}
