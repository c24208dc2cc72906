//! Exact maximum independent set by bitset branch and bound (n <= 64).

use super::{Graph, GraphError};

pub const MAX_ORDER: usize = 64;

struct Solver<'a> {
    rows: &'a [u64],
    best: u64,
    best_size: u32,
}

impl Solver<'_> {
    fn grow(&mut self, chosen: u64, mut cand: u64) {
        let mut chosen = chosen;
        // vertices with at most one candidate neighbor can always be taken
        loop {
            let mut took = false;
            let mut scan = cand;
            while scan != 0 {
                let v = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                if cand >> v & 1 == 0 {
                    continue;
                }
                if (self.rows[v] & cand).count_ones() <= 1 {
                    chosen |= 1 << v;
                    cand &= !(1u64 << v) & !self.rows[v];
                    took = true;
                }
            }
            if !took {
                break;
            }
        }
        let size = chosen.count_ones();
        if cand == 0 {
            if size > self.best_size {
                self.best_size = size;
                self.best = chosen;
            }
            return;
        }
        if size + cand.count_ones() <= self.best_size {
            return;
        }
        // branch on the candidate with the most candidate neighbors
        let mut pick = 0;
        let mut deg = 0;
        let mut scan = cand;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let d = (self.rows[v] & cand).count_ones();
            if d > deg {
                deg = d;
                pick = v;
            }
        }
        let bit = 1u64 << pick;
        self.grow(chosen | bit, cand & !bit & !self.rows[pick]);
        self.grow(chosen, cand & !bit);
    }
}

/// A maximum independent set, ascending.
pub fn maximum_independent_set(g: &Graph) -> Result<Vec<usize>, GraphError> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(GraphError::TooLarge { n, limit: MAX_ORDER });
    }
    if n == 0 {
        return Ok(vec![]);
    }
    let rows: Vec<u64> = (0..n).map(|v| g.row_word(v)).collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut s = Solver { rows: &rows, best: 0, best_size: 0 };
    s.grow(0, all);
    Ok((0..n).filter(|&v| s.best >> v & 1 == 1).collect())
}

pub fn independence_number(g: &Graph) -> Result<usize, GraphError> {
    maximum_independent_set(g).map(|s| s.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{candle, complete, complete_bipartite, cycle, hypercube};
    use rand::{Rng, SeedableRng};

    #[test]
    fn known_values() {
        assert_eq!(independence_number(&complete(5)).unwrap(), 1);
        assert_eq!(independence_number(&complete_bipartite(3, 3)).unwrap(), 3);
        assert_eq!(independence_number(&cycle(7).unwrap()).unwrap(), 3);
        assert_eq!(independence_number(&hypercube(4).unwrap()).unwrap(), 8);
        for k in 3..=16 {
            let expect = if k % 2 == 0 { k } else { k - 1 };
            assert_eq!(independence_number(&candle(k).unwrap()).unwrap(), expect, "k = {k}");
        }
        assert!(independence_number(&Graph::empty(65)).is_err());
    }

    #[test]
    fn matches_exhaustive_search() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..200 {
            let n = rng.random_range(1..=14);
            let mut g = Graph::empty(n);
            for j in 1..n {
                for i in 0..j {
                    if rng.random::<f64>() < 0.3 {
                        g.add_edge(i, j).unwrap();
                    }
                }
            }
            let set = maximum_independent_set(&g).unwrap();
            for (a, &u) in set.iter().enumerate() {
                for &v in &set[a + 1..] {
                    assert!(!g.has_edge(u, v));
                }
            }
            let brute = (0u32..1 << n)
                .filter(|&m| g.edges().all(|(u, v)| m >> u & 1 == 0 || m >> v & 1 == 0))
                .map(|m| m.count_ones() as usize)
                .max()
                .unwrap();
            assert_eq!(set.len(), brute);
        }
    }
}
