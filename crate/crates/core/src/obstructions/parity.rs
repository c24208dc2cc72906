//! Diagonal parity propagation.
//!
//! For a symmetric involution `M` fitting `G`, an edge `uv` gives
//! `0 = [M²]_uv = m_uv (d_u + d_v) + Σ_{w ∈ N(u) ∩ N(v)} m_uw m_wv`. A triangle-free edge
//! therefore forces `d_u = −d_v`, and an edge with a single common neighbor `w` whose
//! diagonal sum is forced to zero would need `m_uw m_wv = 0`, which the pattern forbids.

use std::collections::VecDeque;

use super::certificate::{Certificate, ParityForcing};
use crate::graph::Graph;

/// Union-find over vertices, tracking the sign relating each vertex to its root.
struct SignedUnionFind {
    parent: Vec<usize>,
    /// `d_v = sign[v] · d_parent` with sign encoded as parity (0: +, 1: −).
    parity: Vec<u8>,
    /// Root carries a relation `d = −d`, i.e. every diagonal in the class is zero.
    zero: Vec<bool>,
}

impl SignedUnionFind {
    fn new(n: usize) -> Self {
        SignedUnionFind { parent: (0..n).collect(), parity: vec![0; n], zero: vec![false; n] }
    }

    fn find(&mut self, v: usize) -> (usize, u8) {
        if self.parent[v] == v {
            return (v, 0);
        }
        let (root, p) = self.find(self.parent[v]);
        self.parity[v] ^= p;
        self.parent[v] = root;
        (root, self.parity[v])
    }

    /// Records `d_a = −d_b`.
    fn relate_opposite(&mut self, a: usize, b: usize) {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            if pa == pb {
                self.zero[ra] = true;
            }
            return;
        }
        self.parent[rb] = ra;
        self.parity[rb] = pa ^ pb ^ 1;
        self.zero[ra] |= self.zero[rb];
    }

    /// Whether `d_a + d_b = 0` is forced.
    fn sum_forced_zero(&mut self, a: usize, b: usize) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        (ra == rb && pa != pb) || (self.zero[ra] && self.zero[rb])
    }
}

fn triangle_free(g: &Graph, a: usize, b: usize) -> bool {
    g.has_edge(a, b) && g.common_neighbor_count(a, b) == 0
}

/// Shortest walk along triangle-free edges from `from` to `to` with an odd number of edges.
fn odd_walk(g: &Graph, from: usize, to: usize) -> Option<Vec<usize>> {
    let n = g.order();
    let mut prev: Vec<[Option<usize>; 2]> = vec![[None; 2]; n];
    let mut seen = vec![[false; 2]; n];
    seen[from][0] = true;
    let mut queue = VecDeque::from([(from, 0usize)]);
    while let Some((v, p)) = queue.pop_front() {
        if v == to && p == 1 {
            let mut walk = vec![to];
            let (mut cur, mut par) = (to, 1);
            while let Some(back) = prev[cur][par] {
                walk.push(back);
                cur = back;
                par ^= 1;
                if cur == from && par == 0 {
                    break;
                }
            }
            walk.reverse();
            return Some(walk);
        }
        for w in g.neighbors(v) {
            if triangle_free(g, v, w) && !seen[w][p ^ 1] {
                seen[w][p ^ 1] = true;
                prev[w][p ^ 1] = Some(v);
                queue.push_back((w, p ^ 1));
            }
        }
    }
    None
}

fn forcing_chain(g: &Graph, u: usize, v: usize) -> Option<ParityForcing> {
    if let Some(walk) = odd_walk(g, u, v) {
        return Some(ParityForcing::Opposite { walk });
    }
    Some(ParityForcing::BothZero { walk_u: odd_walk(g, u, u)?, walk_v: odd_walk(g, v, v)? })
}

/// All firing edges, in lexicographic edge order.
pub fn parity_obstruction_all(g: &Graph) -> Vec<Certificate> {
    let mut uf = SignedUnionFind::new(g.order());
    for (a, b) in g.edges() {
        if triangle_free(g, a, b) {
            uf.relate_opposite(a, b);
        }
    }
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if g.common_neighbor_count(u, v) != 1 || !uf.sum_forced_zero(u, v) {
            continue;
        }
        let w = g.common_neighbors(u, v)[0];
        let chain = forcing_chain(g, u, v).expect("forced relation has a walk");
        out.push(Certificate::ParityContradiction { u, v, w, chain });
    }
    out
}

/// The first firing edge in lexicographic order, if any.
pub fn parity_obstruction(g: &Graph) -> Option<Certificate> {
    parity_obstruction_all(g).into_iter().next()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{catalog_graph, complete, cycle};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    #[test]
    fn r9_1_fires_on_1_4() {
        let g = catalog_graph("R9_1").unwrap();
        let c = parity_obstruction(&g).unwrap();
        c.verify(&g).unwrap();
        match c {
            Certificate::ParityContradiction { u, v, w, chain } => {
                assert_eq!((u, v, w), (0, 3, 6));
                // 1-2-3-4 along the 9-cycle
                assert_eq!(chain, ParityForcing::Opposite { walk: vec![0, 1, 2, 3] });
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn r9_2_fires_on_2_3() {
        let g = catalog_graph("R9_2").unwrap();
        let all = parity_obstruction_all(&g);
        let hit = all
            .iter()
            .find(|c| matches!(c, Certificate::ParityContradiction { u: 1, v: 2, .. }))
            .expect("edge {2,3} fires");
        hit.verify(&g).unwrap();
        let Certificate::ParityContradiction { w, chain, .. } = hit else { unreachable!() };
        assert_eq!(*w, 0);
        assert_eq!(*chain, ParityForcing::Opposite { walk: vec![1, 5, 6, 2] });
    }

    #[test]
    fn silent_on_k4_and_odd_cycles() {
        assert_eq!(parity_obstruction(&complete(4)), None);
        // every cycle edge is triangle-free but no edge has a unique common neighbor
        assert_eq!(parity_obstruction(&cycle(7).unwrap()), None);
    }

    #[test]
    fn invariant_under_relabeling() {
        let g = catalog_graph("R9_1").unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(91);
        for _ in 0..50 {
            let mut perm: Vec<usize> = (0..9).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm);
            let c = parity_obstruction(&h).expect("fires after relabeling");
            c.verify(&h).unwrap();
        }
    }
}
