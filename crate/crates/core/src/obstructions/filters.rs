//! Counting filters: unique 2-paths, edge bound, independence bound.

use super::certificate::{required_edges, Certificate};
use crate::graph::{maximum_independent_set, Graph, GraphError};

/// Fails on the first non-adjacent pair `x < y` (lexicographic) with exactly one common neighbor.
pub fn check_unique_path2(g: &Graph) -> Option<Certificate> {
    let n = g.order();
    for x in 0..n {
        for y in x + 1..n {
            if !g.has_edge(x, y) && g.common_neighbor_count(x, y) == 1 {
                let u = g.common_neighbors(x, y)[0];
                return Some(Certificate::UniquePath { x, u, y });
            }
        }
    }
    None
}

pub fn check_edge_bound(g: &Graph) -> Option<Certificate> {
    let n = g.order();
    let edges = g.edge_count();
    let required = required_edges(n);
    (edges < required).then_some(Certificate::EdgeBound { n, edges, required })
}

/// Fails when the independence number exceeds `⌊n/2⌋`.
pub fn check_independence_bound(g: &Graph) -> Result<Option<Certificate>, GraphError> {
    let set = maximum_independent_set(g)?;
    let bound = g.order() / 2;
    Ok((set.len() > bound).then_some(Certificate::IndependenceBound { set, bound }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{candle, complete, complete_bipartite, cycle};
    use rand::{Rng, SeedableRng};

    #[test]
    fn unique_path_examples() {
        assert_eq!(
            check_unique_path2(&cycle(5).unwrap()),
            Some(Certificate::UniquePath { x: 0, u: 1, y: 2 })
        );
        assert_eq!(check_unique_path2(&complete(4)), None);
        assert_eq!(check_unique_path2(&candle(8).unwrap()), None);
    }

    #[test]
    fn unique_path_matches_brute_force() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.random_range(2..16);
            let p = rng.random_range(0.1..0.9);
            let mut g = Graph::empty(n);
            let mut a = vec![vec![0u32; n]; n];
            for j in 1..n {
                for i in 0..j {
                    if rng.random::<f64>() < p {
                        g.add_edge(i, j).unwrap();
                        a[i][j] = 1;
                        a[j][i] = 1;
                    }
                }
            }
            // A² by triple loop
            let mut brute = false;
            for i in 0..n {
                for j in i + 1..n {
                    let c: u32 = (0..n).map(|k| a[i][k] * a[k][j]).sum();
                    if a[i][j] == 0 && c == 1 {
                        brute = true;
                    }
                }
            }
            let cert = check_unique_path2(&g);
            assert_eq!(cert.is_some(), brute);
            if let Some(c) = cert {
                c.verify(&g).unwrap();
            }
        }
    }

    #[test]
    fn edge_bound_examples() {
        let petersen = Graph::from_edges(
            10,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (5, 7), (7, 9), (6, 9), (6, 8), (5, 8)],
        )
        .unwrap();
        let c = check_edge_bound(&petersen).unwrap();
        assert_eq!(c, Certificate::EdgeBound { n: 10, edges: 15, required: 16 });
        c.verify(&petersen).unwrap();
        assert_eq!(check_edge_bound(&candle(6).unwrap()), None);
        for n in (7..20).step_by(2) {
            assert_eq!(check_edge_bound(&crate::graph::circulant(n, &[1, 2]).unwrap()), None);
        }
    }

    #[test]
    fn independence_examples() {
        let star = complete_bipartite(1, 4);
        let c = check_independence_bound(&star).unwrap().unwrap();
        c.verify(&star).unwrap();
        assert_eq!(check_independence_bound(&candle(6).unwrap()).unwrap(), None);
        assert_eq!(check_independence_bound(&complete(5)).unwrap(), None);
    }
}
