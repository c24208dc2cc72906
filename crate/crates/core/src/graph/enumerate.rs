//! Orderly generation of regular graphs.
//!
//! A labeled graph is canonical when its column-order upper-triangle bit string
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...` is lexicographically maximal over all relabelings.
//! The prefix of a canonical string on the first `k` vertices is itself canonical, so graphs
//! are grown one vertex at a time and every non-canonical prefix is discarded. Each
//! isomorphism class is produced exactly once, in a fixed order.

use super::{Graph, GraphError};

/// Largest order handled by the internal generator.
pub const MAX_INTERNAL_ORDER: usize = 12;

struct Frame {
    masks: Vec<u32>,
    next: usize,
}

/// Iterator over one representative per isomorphism class of `r`-regular graphs.
pub struct RegularGraphs {
    n: usize,
    r: usize,
    connected_only: bool,
    rows: [u32; MAX_INTERNAL_ORDER],
    stack: Vec<Frame>,
    started: bool,
}

/// Streams the `r`-regular graphs on `n` vertices up to isomorphism.
pub fn enumerate_regular(n: usize, r: usize, connected_only: bool) -> Result<RegularGraphs, GraphError> {
    if n > MAX_INTERNAL_ORDER {
        return Err(GraphError::TooLarge { n, limit: MAX_INTERNAL_ORDER });
    }
    if n == 0 || r >= n {
        return Err(GraphError::Parameter(format!("need 0 <= r < n, got n = {n}, r = {r}")));
    }
    if n * r % 2 != 0 {
        return Err(GraphError::Parameter(format!("n * r must be even, got n = {n}, r = {r}")));
    }
    Ok(RegularGraphs {
        n,
        r,
        connected_only,
        rows: [0; MAX_INTERNAL_ORDER],
        stack: Vec::new(),
        started: false,
    })
}

impl RegularGraphs {
    fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// Candidate neighbor sets for vertex `k` among `0..k`.
    fn masks_for(&self, k: usize) -> Vec<u32> {
        let open: u32 = (0..k).filter(|&v| self.degree(v) < self.r).map(|v| 1u32 << v).sum();
        let mut out = Vec::new();
        // submasks of `open` in decreasing order
        let mut s = open;
        loop {
            if s.count_ones() as usize <= self.r {
                out.push(s);
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & open;
        }
        out
    }

    fn attach(&mut self, k: usize, mask: u32) {
        self.rows[k] = mask;
        for v in 0..k {
            if mask >> v & 1 == 1 {
                self.rows[v] |= 1 << k;
            }
        }
    }

    fn detach(&mut self, k: usize) {
        let mask = self.rows[k];
        for v in 0..k {
            if mask >> v & 1 == 1 {
                self.rows[v] &= !(1 << k);
            }
        }
        self.rows[k] = 0;
    }

    /// Degree feasibility of the prefix on `0..=k`.
    fn feasible(&self, k: usize) -> bool {
        let m = self.n - 1 - k;
        let mut total = 0;
        for v in 0..=k {
            let d = self.degree(v);
            if d > self.r || self.r - d > m {
                return false;
            }
            total += self.r - d;
        }
        let cap = self.r * m;
        if total > cap || (cap - total) % 2 != 0 || cap - total > m * m.saturating_sub(1) {
            return false;
        }
        !(self.connected_only && m > 0 && self.has_closed_component(k))
    }

    /// True if some component of the prefix already has all degrees equal to `r`.
    fn has_closed_component(&self, k: usize) -> bool {
        let all: u32 = if k + 1 == 32 { u32::MAX } else { (1 << (k + 1)) - 1 };
        let mut seen = 0u32;
        for start in 0..=k {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u32 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.rows[v] & all & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            seen |= comp;
            let mut bits = comp;
            let mut closed = true;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if self.degree(v) < self.r {
                    closed = false;
                    break;
                }
            }
            if closed {
                return true;
            }
        }
        false
    }

    fn graph(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for v in 0..self.n {
            for w in v + 1..self.n {
                if self.rows[v] >> w & 1 == 1 {
                    g.add_edge(v, w).unwrap();
                }
            }
        }
        g
    }
}

/// Column `j` of the string under `perm`, read as an integer with `x(perm[0], perm[j])` most
/// significant.
#[inline]
fn column(rows: &[u32], perm: &[usize], w: usize) -> u32 {
    let j = perm.len();
    let mut c = 0u32;
    for (i, &p) in perm.iter().enumerate() {
        c |= (rows[p] >> w & 1) << (j - 1 - i);
    }
    c
}

/// True if the identity labeling of the first `size` vertices is lexicographically maximal.
fn is_canonical(rows: &[u32], size: usize) -> bool {
    let ident: Vec<usize> = (0..size).collect();
    let cols: Vec<u32> = (0..size).map(|j| column(rows, &ident[..j], j)).collect();
    let mut perm = Vec::with_capacity(size);
    for first in 0..size {
        perm.push(first);
        if beats(rows, size, &cols, &mut perm, 1u32 << first) {
            return false;
        }
        perm.pop();
    }
    true
}

/// Searches for a completion of `perm` whose string exceeds the identity string.
fn beats(rows: &[u32], size: usize, cols: &[u32], perm: &mut Vec<usize>, used: u32) -> bool {
    let j = perm.len();
    if j == size {
        return false;
    }
    for w in 0..size {
        if used >> w & 1 == 1 {
            continue;
        }
        let c = column(rows, perm, w);
        if c > cols[j] {
            return true;
        }
        if c == cols[j] {
            perm.push(w);
            let found = beats(rows, size, cols, perm, used | 1 << w);
            perm.pop();
            if found {
                return true;
            }
        }
    }
    false
}

impl Iterator for RegularGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if !self.started {
            self.started = true;
            if self.n == 1 {
                return (self.r == 0).then(|| Graph::empty(1));
            }
            let masks = self.masks_for(1);
            self.stack.push(Frame { masks, next: 0 });
        }
        loop {
            let k = self.stack.len();
            let frame = self.stack.last_mut()?;
            if frame.next == frame.masks.len() {
                self.stack.pop();
                if k > 1 {
                    self.detach(k - 1);
                }
                continue;
            }
            let mask = frame.masks[frame.next];
            frame.next += 1;
            self.attach(k, mask);
            if !self.feasible(k) || !is_canonical(&self.rows, k + 1) {
                self.detach(k);
                continue;
            }
            if k + 1 == self.n {
                let g = self.graph();
                self.detach(k);
                return Some(g);
            }
            let masks = self.masks_for(k + 1);
            self.stack.push(Frame { masks, next: 0 });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, is_isomorphic, ops::cartesian_product};

    fn count(n: usize, r: usize, conn: bool) -> usize {
        enumerate_regular(n, r, conn).unwrap().count()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(5, 4, true), 1);
        assert_eq!(enumerate_regular(5, 4, true).unwrap().next().unwrap(), complete(5));
        assert_eq!(count(6, 4, true), 1);
        assert_eq!(count(7, 4, true), 2);
        assert_eq!(count(8, 4, true), 6);
        assert_eq!(count(4, 3, true), 1);
        assert_eq!(count(8, 3, true), 5);
        assert_eq!(count(10, 3, true), 19);
        assert_eq!(count(8, 2, true), 1);
        assert_eq!(count(8, 2, false), 3); // C8, C5+C3, C4+C4
    }

    #[test]
    fn cubic_on_six() {
        let gs: Vec<Graph> = enumerate_regular(6, 3, true).unwrap().collect();
        assert_eq!(gs.len(), 2);
        let prism = cartesian_product(&complete(3), &complete(2));
        let k33 = complete_bipartite(3, 3);
        assert!(gs.iter().any(|g| is_isomorphic(g, &prism).is_some()));
        assert!(gs.iter().any(|g| is_isomorphic(g, &k33).is_some()));
        assert!(gs.iter().all(|g| g.regularity() == Some(3) && g.is_connected()));
        let _ = cycle(3);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(enumerate_regular(7, 3, true).is_err());
        assert!(enumerate_regular(13, 4, true).is_err());
        assert!(enumerate_regular(4, 4, true).is_err());
    }

    #[test]
    fn deterministic_order() {
        let a: Vec<Graph> = enumerate_regular(9, 4, true).unwrap().collect();
        let b: Vec<Graph> = enumerate_regular(9, 4, true).unwrap().collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 16);
    }
}
