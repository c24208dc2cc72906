//! Distance partitions (BFS level structure from a root).

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistancePartition {
    pub origin: usize,
    /// `levels[i]` lists the vertices at distance `i`, ascending.
    pub levels: Vec<Vec<usize>>,
    /// Number of neighbors one level closer to the origin (0 for the origin).
    pub pred_count: Vec<usize>,
    pub eccentricity: usize,
}

impl DistancePartition {
    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// Distance of `v` from the origin.
    pub fn level_of(&self, v: usize) -> Option<usize> {
        self.levels.iter().position(|l| l.contains(&v))
    }

    /// Vertices with no neighbor one level further out.
    pub fn terminal_vertices(&self, g: &Graph) -> Vec<usize> {
        let mut level = vec![0; g.order()];
        for (i, l) in self.levels.iter().enumerate() {
            for &v in l {
                level[v] = i;
            }
        }
        (0..g.order())
            .filter(|&v| g.neighbors(v).all(|w| level[w] <= level[v]))
            .collect()
    }
}

pub fn distance_partition(g: &Graph, origin: usize) -> Result<DistancePartition, GraphError> {
    if origin >= g.order() {
        return Err(GraphError::VertexOutOfRange { vertex: origin, n: g.order() });
    }
    let dist = g.bfs_distances(origin);
    let dist: Vec<usize> = dist
        .into_iter()
        .collect::<Option<_>>()
        .ok_or(GraphError::Disconnected)?;
    let ecc = dist.iter().copied().max().unwrap_or(0);
    let mut levels = vec![Vec::new(); ecc + 1];
    for (v, &d) in dist.iter().enumerate() {
        levels[d].push(v);
    }
    let pred_count = (0..g.order())
        .map(|v| g.neighbors(v).filter(|&w| dist[w] + 1 == dist[v]).count())
        .collect();
    Ok(DistancePartition { origin, levels, pred_count, eccentricity: ecc })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{candle, cycle, hypercube};
    use rand::{Rng, SeedableRng};

    #[test]
    fn cube_and_cycle_levels() {
        let q4 = hypercube(4).unwrap();
        for v in [0, 5, 15] {
            assert_eq!(distance_partition(&q4, v).unwrap().level_sizes(), vec![1, 4, 6, 4, 1]);
        }
        let c6 = cycle(6).unwrap();
        let p = distance_partition(&c6, 2).unwrap();
        assert_eq!(p.level_sizes(), vec![1, 2, 2, 1]);
        assert_eq!(p.eccentricity, 3);
        assert_eq!(p.terminal_vertices(&c6), vec![5]);
    }

    #[test]
    fn candle_predecessors() {
        let h = candle(10).unwrap();
        let p = distance_partition(&h, 0).unwrap();
        for l in &p.levels[2..] {
            for &v in l {
                assert!(p.pred_count[v] >= 2, "vertex {v}");
            }
        }
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(distance_partition(&g, 0), Err(GraphError::Disconnected));
    }

    #[test]
    fn levels_match_pairwise_distances() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut done = 0;
        while done < 200 {
            let n = rng.random_range(2..20);
            let p = rng.random_range(0.15..0.6);
            let mut g = Graph::empty(n);
            for j in 1..n {
                for i in 0..j {
                    if rng.random::<f64>() < p {
                        g.add_edge(i, j).unwrap();
                    }
                }
            }
            if !g.is_connected() {
                continue;
            }
            done += 1;
            let root = rng.random_range(0..n);
            let part = distance_partition(&g, root).unwrap();
            // Floyd-Warshall oracle
            let inf = usize::MAX / 4;
            let mut d = vec![vec![inf; n]; n];
            for (i, row) in d.iter_mut().enumerate() {
                row[i] = 0;
            }
            for (u, v) in g.edges() {
                d[u][v] = 1;
                d[v][u] = 1;
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        if d[i][k] + d[k][j] < d[i][j] {
                            d[i][j] = d[i][k] + d[k][j];
                        }
                    }
                }
            }
            for (lvl, vs) in part.levels.iter().enumerate() {
                for &v in vs {
                    assert_eq!(d[root][v], lvl);
                }
            }
            assert_eq!(part.level_sizes().iter().sum::<usize>(), n);
        }
    }
}
