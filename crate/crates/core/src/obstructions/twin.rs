//! Twin-row obstruction for bipartite patterns with equal parts.
//!
//! Writing an involution as `[[C, B], [Bᵀ, D]]` with `C`, `D` diagonal, `BBᵀ = I − C²` is
//! diagonal, so the rows of `B` are pairwise orthogonal. If `u`, `v` share the neighborhood
//! `S` and a third row `w` meets `S` in exactly `{a, b}`, orthogonality of `w` to both rows
//! fixes the ratio `B_ub / B_ua = B_vb / B_va`. When such links connect all of `S`, the two
//! rows are proportional and cannot be orthogonal.

use super::certificate::Certificate;
use crate::graph::Graph;

/// Result of the twin test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwinOutcome {
    /// Graph is not bipartite or its parts differ in size.
    NotApplicable,
    None,
    Found(Vec<Certificate>),
}

fn spanning_links(g: &Graph, side: &[bool], u: usize, v: usize, support: &[usize]) -> Option<Vec<(usize, usize, usize)>> {
    let mut candidates = Vec::new();
    for w in 0..g.order() {
        if w == u || w == v || side[w] != side[u] {
            continue;
        }
        let meet: Vec<usize> = g.neighbors(w).filter(|x| support.contains(x)).collect();
        if meet.len() == 2 {
            candidates.push((w, meet[0], meet[1]));
        }
    }
    // grow a spanning tree of the support from its first vertex
    let mut reached = vec![support[0]];
    let mut links = Vec::new();
    let mut grew = true;
    while grew && reached.len() < support.len() {
        grew = false;
        for &(w, a, b) in &candidates {
            let (ra, rb) = (reached.contains(&a), reached.contains(&b));
            if ra != rb {
                reached.push(if ra { b } else { a });
                links.push((w, a, b));
                grew = true;
            }
        }
    }
    (reached.len() == support.len()).then_some(links)
}

pub fn bipartite_twin_obstruction_all(g: &Graph) -> TwinOutcome {
    let Some(side) = g.bipartition() else {
        return TwinOutcome::NotApplicable;
    };
    if 2 * side.iter().filter(|&&s| !s).count() != g.order() {
        return TwinOutcome::NotApplicable;
    }
    let mut found = Vec::new();
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if side[u] != side[v] || g.row(u) != g.row(v) || g.degree(u) == 0 {
                continue;
            }
            let support: Vec<usize> = g.neighbors(u).collect();
            if let Some(links) = spanning_links(g, &side, u, v, &support) {
                found.push(Certificate::BipartiteTwin { u, v, support, links });
            }
        }
    }
    if found.is_empty() {
        TwinOutcome::None
    } else {
        TwinOutcome::Found(found)
    }
}

/// First certificate in vertex-pair order, if any.
pub fn bipartite_twin_obstruction(g: &Graph) -> TwinOutcome {
    match bipartite_twin_obstruction_all(g) {
        TwinOutcome::Found(mut v) => TwinOutcome::Found(vec![v.remove(0)]),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{candle, catalog_graph, complete, hypercube};

    fn certs(outcome: TwinOutcome) -> Vec<Certificate> {
        match outcome {
            TwinOutcome::Found(v) => v,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn fires_on_r12_1_and_r12_2() {
        let g = catalog_graph("R12_1").unwrap();
        let all = certs(bipartite_twin_obstruction_all(&g));
        for c in &all {
            c.verify(&g).unwrap();
        }
        // twins 10 and 12 on {2, 4, 6, 8}
        assert!(all.iter().any(|c| matches!(c, Certificate::BipartiteTwin { u: 9, v: 11, support, .. } if *support == vec![1, 3, 5, 7])));

        let g = catalog_graph("R12_2").unwrap();
        let all = certs(bipartite_twin_obstruction_all(&g));
        for c in &all {
            c.verify(&g).unwrap();
        }
        assert!(all.iter().any(|c| matches!(c, Certificate::BipartiteTwin { u: 2, v: 3, support, .. } if *support == vec![0, 5, 8, 9])));
    }

    #[test]
    fn silent_elsewhere() {
        for name in ["R12_3", "R14_1"] {
            assert_eq!(bipartite_twin_obstruction(&catalog_graph(name).unwrap()), TwinOutcome::None, "{name}");
        }
        assert_eq!(bipartite_twin_obstruction(&hypercube(4).unwrap()), TwinOutcome::None);
        assert_eq!(bipartite_twin_obstruction(&complete(3)), TwinOutcome::NotApplicable);
        for k in 3..=10 {
            assert_ne!(
                std::mem::discriminant(&bipartite_twin_obstruction(&candle(k).unwrap())),
                std::mem::discriminant(&TwinOutcome::Found(vec![])),
                "k = {k}"
            );
        }
    }

    #[test]
    fn verifier_rejects_tampering() {
        let g = catalog_graph("R12_1").unwrap();
        let mut c = certs(bipartite_twin_obstruction(&g)).remove(0);
        if let Certificate::BipartiteTwin { links, .. } = &mut c {
            links.pop();
        }
        assert!(c.verify(&g).is_err());
    }
}
