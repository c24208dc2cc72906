//! Graph operations: Cartesian product, joined duplication and edge contraction.

use super::{Graph, GraphError};

/// `G □ H`; vertex `(g, h)` gets index `g * |V(H)| + h`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.order(), h.order());
    let mut p = Graph::empty(ng * nh);
    for a in 0..ng {
        for (x, y) in h.edges() {
            p.add_edge(a * nh + x, a * nh + y).unwrap();
        }
    }
    for (a, b) in g.edges() {
        for x in 0..nh {
            p.add_edge(a * nh + x, b * nh + x).unwrap();
        }
    }
    p
}

/// Joined duplication of `v`: a new vertex `n` adjacent to `v` and to every neighbor of `v`.
pub fn jdup(g: &Graph, v: usize) -> Result<Graph, GraphError> {
    let n = g.order();
    if v >= n {
        return Err(GraphError::VertexOutOfRange { vertex: v, n });
    }
    let mut out = Graph::from_edges(n + 1, &g.edges().collect::<Vec<_>>())?;
    out.add_edge(v, n)?;
    for w in g.neighbors(v) {
        out.add_edge(w, n)?;
    }
    Ok(out)
}

/// Contracts edge `{a, b}`. The merged vertex keeps the smaller index and vertices above
/// the larger endpoint shift down by one.
pub fn contract_edge(g: &Graph, (a, b): (usize, usize)) -> Result<Graph, GraphError> {
    if a >= g.order() || b >= g.order() || !g.has_edge(a, b) {
        return Err(GraphError::NotAnEdge(a, b));
    }
    let (keep, gone) = (a.min(b), a.max(b));
    let map = |v: usize| match v {
        v if v == gone => keep,
        v if v > gone => v - 1,
        v => v,
    };
    let mut out = Graph::empty(g.order() - 1);
    for (u, v) in g.edges() {
        let (x, y) = (map(u), map(v));
        if x != y && !out.has_edge(x, y) {
            out.add_edge(x, y)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{catalog_graph, complete, cycle, hypercube, is_isomorphic};

    #[test]
    fn small_products() {
        let k2 = complete(2);
        assert!(is_isomorphic(&cartesian_product(&k2, &k2), &cycle(4).unwrap()).is_some());
        let p = cartesian_product(&complete(3), &cycle(4).unwrap());
        assert_eq!(p.order(), 12);
        assert_eq!(p.regularity(), Some(4));
    }

    #[test]
    fn jdup_and_contract_basics() {
        assert_eq!(jdup(&complete(2), 1).unwrap(), complete(3));
        assert_eq!(contract_edge(&complete(3), (0, 2)).unwrap(), complete(2));
        assert!(contract_edge(&cycle(4).unwrap(), (0, 2)).is_err());
        assert!(jdup(&complete(2), 2).is_err());
    }

    #[test]
    fn r10_3_from_cube() {
        let q3 = hypercube(3).unwrap();
        let twice = jdup(&jdup(&q3, 0).unwrap(), 7).unwrap();
        let r = catalog_graph("R10_3").unwrap();
        assert!(is_isomorphic(&twice, &r).is_some());
        // contract {1,2}, then {6,7} (which became {5,6} after the first contraction)
        let c = contract_edge(&contract_edge(&r, (0, 1)).unwrap(), (4, 5)).unwrap();
        assert!(is_isomorphic(&c, &q3).is_some());
    }

    #[test]
    fn r8_4_contraction_round_trip() {
        let r = catalog_graph("R8_4").unwrap();
        let c = contract_edge(&r, (6, 7)).unwrap();
        assert_eq!(c.order(), 7);
        assert_eq!(jdup(&c, 6).unwrap(), r);
    }
}
