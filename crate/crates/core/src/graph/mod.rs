//! Simple undirected graphs stored as per-vertex neighbor bitsets, plus the
//! constructions, traversals and search routines the rest of the crate needs.

mod distance;
mod enumerate;
mod families;
mod graph6;
mod independence;
mod iso;
mod ops;

pub use distance::{distance_partition, DistancePartition};
pub use enumerate::{enumerate_regular, RegularGraphs, MAX_INTERNAL_ORDER};
pub use families::{
    build_named, candle, candle_section, catalog_graph, circulant, complete, complete_bipartite,
    cycle, hypercube, path, CatalogEntry, Family, CATALOG_NAMES,
};
pub use graph6::{parse_graph6, to_graph6};
pub use independence::{independence_number, maximum_independent_set};
pub use iso::{is_isomorphic, Isomorphism};
pub use ops::{cartesian_product, contract_edge, jdup};

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("n = {n} exceeds the supported limit {limit}")]
    TooLarge { n: usize, limit: usize },
}

const WORD: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD).max(1)
}

/// Simple undirected graph on vertices `0..n`.
///
/// Equality and hashing ignore the optional label.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    label: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("label", &self.label)
            .field("edges", &edges)
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
            label: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from 1-based edge labels.
    pub fn from_one_based(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u == 0 || v == 0 {
                return Err(GraphError::VertexOutOfRange { vertex: 0, n });
            }
            g.add_edge(u - 1, v - 1)?;
        }
        Ok(g)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn set_label(&mut self, label: Option<String>) {
        self.label = label;
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    fn check(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.set_bit(u, v, true);
        self.set_bit(v, u, true);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check(u)?;
        self.check(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        self.set_bit(u, v, false);
        self.set_bit(v, u, false);
        Ok(())
    }

    #[inline]
    fn set_bit(&mut self, row: usize, col: usize, on: bool) {
        let w = &mut self.adj[row * self.words + col / WORD];
        let mask = 1u64 << (col % WORD);
        if on {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.adj[u * self.words + v / WORD] >> (v % WORD)) & 1 == 1
    }

    /// Neighbor bitset of `v` as little-endian 64-bit words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    /// Neighbor set of `v` as a single word; only valid for graphs with at most 64 vertices.
    #[inline]
    pub fn row_word(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.adj[v * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Edges with 1-based endpoints.
    pub fn edges_one_based(&self) -> Vec<(usize, usize)> {
        self.edges().map(|(u, v)| (u + 1, v + 1)).collect()
    }

    /// Common degree if the graph is regular.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.degrees();
        match d.first() {
            None => Some(0),
            Some(&first) => d.iter().all(|&x| x == first).then_some(first),
        }
    }

    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        let row: Vec<u64> = self.row(u).iter().zip(self.row(v)).map(|(a, b)| a & b).collect();
        bits(&row).collect()
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        if source >= self.n {
            return dist;
        }
        dist[source] = Some(0);
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Diameter of a connected graph, `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.n {
            for d in self.bfs_distances(v) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Two-coloring of a connected bipartite graph; the class of vertex 0 is `false`.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for w in self.neighbors(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            stack.push(w);
                        }
                        Some(sw) if sw == su => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap_or(false)).collect())
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_bit(perm[u], perm[v], true);
            g.set_bit(perm[v], perm[u], true);
        }
        g.label = self.label.clone();
        g
    }

    /// Adjacency matrix as 0/1 rows.
    pub fn adjacency_rows(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| self.has_edge(u, v) as u8).collect())
            .collect()
    }
}

/// Iterates set bit positions of a little-endian word slice.
pub(crate) fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * WORD + b)
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_queries() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degrees(), vec![1, 2, 2, 1]);
        assert!(g.has_edge(2, 1));
        assert!(!g.has_edge(0, 3));
        assert_eq!(g.diameter(), Some(3));
        assert_eq!(g.regularity(), None);
        assert_eq!(g.common_neighbors(0, 2), vec![1]);
    }

    #[test]
    fn rejects_loops_and_range() {
        let mut g = Graph::empty(3);
        assert_eq!(g.add_edge(1, 1), Err(GraphError::SelfLoop(1)));
        assert!(matches!(g.add_edge(0, 3), Err(GraphError::VertexOutOfRange { .. })));
    }

    #[test]
    fn wide_graphs_use_several_words() {
        let n = 130;
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        assert_eq!(g.regularity(), Some(2));
        assert_eq!(g.neighbors(129).collect::<Vec<_>>(), vec![0, 128]);
        assert_eq!(g.diameter(), Some(65));
    }

    #[test]
    fn disconnected_has_no_diameter() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.diameter(), None);
    }
}
