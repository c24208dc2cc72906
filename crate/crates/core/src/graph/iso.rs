//! Isomorphism testing by joint color refinement with individualization and backtracking.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::Graph;

/// Vertex bijection `map[v]` from the first graph to the second.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Isomorphism {
    pub map: Vec<usize>,
}

impl Isomorphism {
    pub fn inverse(&self) -> Isomorphism {
        let mut inv = vec![0; self.map.len()];
        for (v, &w) in self.map.iter().enumerate() {
            inv[w] = v;
        }
        Isomorphism { map: inv }
    }

    /// True iff the bijection maps edges to edges and non-edges to non-edges.
    pub fn verify(&self, g: &Graph, h: &Graph) -> bool {
        let n = g.order();
        if h.order() != n || self.map.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &w in &self.map {
            if w >= n || std::mem::replace(&mut seen[w], true) {
                return false;
            }
        }
        (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == h.has_edge(self.map[u], self.map[v])))
    }
}

/// Disjoint union of the two graphs as adjacency lists, so both are refined with shared colors.
struct Joint {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Joint {
    fn new(g: &Graph, h: &Graph) -> Self {
        let n = g.order();
        let mut adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
        adj.extend((0..n).map(|v| h.neighbors(v).map(|w| w + n).collect()));
        Joint { n, adj }
    }

    /// Refines to the coarsest equitable coloring; `None` if the two sides diverge.
    fn refine(&self, colors: &mut Vec<usize>) -> Option<()> {
        let mut classes = count_classes(colors);
        loop {
            let sigs: Vec<(usize, Vec<usize>)> = (0..2 * self.n)
                .map(|v| {
                    let mut nb: Vec<usize> = self.adj[v].iter().map(|&w| colors[w]).collect();
                    nb.sort_unstable();
                    (colors[v], nb)
                })
                .collect();
            let mut rank: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
            for s in &sigs {
                rank.insert(s, 0);
            }
            for (i, r) in rank.values_mut().enumerate() {
                *r = i;
            }
            let next: Vec<usize> = sigs.iter().map(|s| rank[s]).collect();
            *colors = next;
            if !self.balanced(colors) {
                return None;
            }
            let now = count_classes(colors);
            if now == classes {
                return Some(());
            }
            classes = now;
        }
    }

    fn balanced(&self, colors: &[usize]) -> bool {
        let mut tally = vec![0isize; 2 * self.n + 1];
        for &c in &colors[..self.n] {
            tally[c] += 1;
        }
        for &c in &colors[self.n..] {
            tally[c] -= 1;
        }
        tally.iter().all(|&t| t == 0)
    }

    fn search(&self, g: &Graph, h: &Graph, mut colors: Vec<usize>) -> Option<Vec<usize>> {
        self.refine(&mut colors)?;
        let n = self.n;
        // smallest non-singleton cell
        let mut size = vec![0usize; 2 * n + 1];
        for &c in &colors[..n] {
            size[c] += 1;
        }
        let target = (0..n)
            .filter(|&v| size[colors[v]] > 1)
            .min_by_key(|&v| (size[colors[v]], colors[v]));
        let Some(v) = target else {
            let mut map = vec![0; n];
            let mut by_color = vec![usize::MAX; 2 * n + 1];
            for w in 0..n {
                by_color[colors[n + w]] = w;
            }
            for u in 0..n {
                map[u] = by_color[colors[u]];
            }
            let iso = Isomorphism { map };
            return iso.verify(g, h).then_some(iso.map);
        };
        let fresh = 2 * n;
        for w in (0..n).filter(|&w| colors[n + w] == colors[v]) {
            let mut next = colors.clone();
            next[v] = fresh;
            next[n + w] = fresh;
            if let Some(map) = self.search(g, h, next) {
                return Some(map);
            }
        }
        None
    }
}

fn count_classes(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Returns a vertex bijection `G -> H` preserving adjacency, or `None`.
///
/// Deterministic for fixed inputs.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Option<Isomorphism> {
    let n = g.order();
    if h.order() != n || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    let initial: Vec<usize> = dg.iter().chain(dh.iter()).copied().collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    if n == 0 {
        return Some(Isomorphism { map: vec![] });
    }
    let joint = Joint::new(g, h);
    joint.search(g, h, initial).map(|map| Isomorphism { map })
}
