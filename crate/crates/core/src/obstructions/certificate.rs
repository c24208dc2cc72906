//! Nonexistence certificates and their independent verifier.

use serde::{Deserialize, Serialize};

use crate::graph::{independence_number, Graph};

/// How a parity certificate shows `d_u + d_v = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "forcing", rename_all = "snake_case")]
pub enum ParityForcing {
    /// An odd-length walk from `u` to `v` along triangle-free edges gives `d_u = −d_v`.
    Opposite { walk: Vec<usize> },
    /// Odd closed walks along triangle-free edges give `d_u = 0` and `d_v = 0`.
    BothZero { walk_u: Vec<usize>, walk_v: Vec<usize> },
}

/// Evidence that no symmetric involution fits a graph. Vertices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Certificate {
    /// `x`, `y` non-adjacent with `u` as their only common neighbor.
    UniquePath { x: usize, u: usize, y: usize },
    /// Fewer edges than the lower bound `required`.
    EdgeBound { n: usize, edges: usize, required: usize },
    /// An independent set larger than `bound = ⌊n/2⌋`.
    IndependenceBound { set: Vec<usize>, bound: usize },
    /// Edge `{u, v}` with unique common neighbor `w` while `d_u + d_v = 0` is forced, so
    /// `[M²]_uv = m_uw m_wv` would have to vanish.
    ParityContradiction { u: usize, v: usize, w: usize, chain: ParityForcing },
    /// Twins `u`, `v` with common neighborhood `support`; each link `(w, a, b)` is a
    /// same-side vertex meeting `support` exactly in `{a, b}`, and the links connect `support`.
    BipartiteTwin { u: usize, v: usize, support: Vec<usize>, links: Vec<(usize, usize, usize)> },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::UniquePath { .. } => "UniquePath",
            Certificate::EdgeBound { .. } => "EdgeBound",
            Certificate::IndependenceBound { .. } => "IndependenceBound",
            Certificate::ParityContradiction { .. } => "ParityContradiction",
            Certificate::BipartiteTwin { .. } => "BipartiteTwin",
        }
    }

    /// Re-checks the certificate against `g` from scratch.
    pub fn verify(&self, g: &Graph) -> Result<(), String> {
        verify_certificate(self, g)
    }
}

/// Edge lower bound for graphs with a symmetric involution: `2n − 4`, or `2n − 3` for odd `n`.
pub fn required_edges(n: usize) -> usize {
    if n % 2 == 1 {
        (2 * n).saturating_sub(3)
    } else {
        (2 * n).saturating_sub(4)
    }
}

fn in_range(g: &Graph, vs: &[usize]) -> Result<(), String> {
    match vs.iter().find(|&&v| v >= g.order()) {
        Some(v) => Err(format!("vertex {v} out of range")),
        None => Ok(()),
    }
}

fn check_walk(g: &Graph, walk: &[usize], from: usize, to: usize) -> Result<(), String> {
    in_range(g, walk)?;
    if walk.first() != Some(&from) || walk.last() != Some(&to) {
        return Err(format!("walk does not run from {from} to {to}"));
    }
    if walk.len() % 2 != 0 {
        return Err("walk has even length".into());
    }
    for p in walk.windows(2) {
        if !g.has_edge(p[0], p[1]) {
            return Err(format!("{{{}, {}}} is not an edge", p[0], p[1]));
        }
        if g.common_neighbor_count(p[0], p[1]) != 0 {
            return Err(format!("edge {{{}, {}}} lies in a triangle", p[0], p[1]));
        }
    }
    Ok(())
}

pub fn verify_certificate(cert: &Certificate, g: &Graph) -> Result<(), String> {
    match cert {
        Certificate::UniquePath { x, u, y } => {
            in_range(g, &[*x, *u, *y])?;
            if x == y || g.has_edge(*x, *y) {
                return Err("endpoints are adjacent or equal".into());
            }
            if g.common_neighbors(*x, *y) != vec![*u] {
                return Err(format!("{u} is not the unique common neighbor"));
            }
            Ok(())
        }
        Certificate::EdgeBound { n, edges, required } => {
            if *n != g.order() || *edges != g.edge_count() || *required != required_edges(*n) {
                return Err("counts do not match the graph".into());
            }
            if edges >= required {
                return Err("edge count meets the bound".into());
            }
            Ok(())
        }
        Certificate::IndependenceBound { set, bound } => {
            in_range(g, set)?;
            if *bound != g.order() / 2 || set.len() <= *bound {
                return Err("set is not larger than ⌊n/2⌋".into());
            }
            let mut sorted = set.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != set.len() {
                return Err("repeated vertex".into());
            }
            for (i, &a) in set.iter().enumerate() {
                if set[i + 1..].iter().any(|&b| g.has_edge(a, b)) {
                    return Err("set is not independent".into());
                }
            }
            // cross-check against the exact solver when available
            if let Ok(alpha) = independence_number(g) {
                if alpha < set.len() {
                    return Err("set larger than the independence number".into());
                }
            }
            Ok(())
        }
        Certificate::ParityContradiction { u, v, w, chain } => {
            in_range(g, &[*u, *v, *w])?;
            if !g.has_edge(*u, *v) {
                return Err("{u, v} is not an edge".into());
            }
            if g.common_neighbors(*u, *v) != vec![*w] {
                return Err(format!("{w} is not the unique common neighbor of the edge"));
            }
            match chain {
                ParityForcing::Opposite { walk } => check_walk(g, walk, *u, *v),
                ParityForcing::BothZero { walk_u, walk_v } => {
                    check_walk(g, walk_u, *u, *u)?;
                    check_walk(g, walk_v, *v, *v)
                }
            }
        }
        Certificate::BipartiteTwin { u, v, support, links } => {
            in_range(g, &[*u, *v])?;
            in_range(g, support)?;
            let side = g.bipartition().ok_or("graph is not bipartite")?;
            let left = side.iter().filter(|&&s| !s).count();
            if 2 * left != g.order() {
                return Err("parts have different sizes".into());
            }
            if u == v || side[*u] != side[*v] {
                return Err("twins are not distinct vertices of one part".into());
            }
            let mut nu: Vec<usize> = g.neighbors(*u).collect();
            let nv: Vec<usize> = g.neighbors(*v).collect();
            let mut s = support.clone();
            s.sort_unstable();
            nu.sort_unstable();
            if nu != nv || nu != s || s.is_empty() {
                return Err("twins do not share the stated neighborhood".into());
            }
            // links must connect every support vertex
            let mut reached = vec![s[0]];
            let mut changed = true;
            for &(w, a, b) in links {
                in_range(g, &[w, a, b])?;
                if w == *u || w == *v || side[w] != side[*u] {
                    return Err(format!("link vertex {w} is not another vertex of the twins' part"));
                }
                let meet: Vec<usize> = g.neighbors(w).filter(|x| s.contains(x)).collect();
                let mut ab = vec![a, b];
                ab.sort_unstable();
                if meet != ab {
                    return Err(format!("vertex {w} does not meet the support exactly in {{{a}, {b}}}"));
                }
            }
            while changed {
                changed = false;
                for &(_, a, b) in links {
                    let (ra, rb) = (reached.contains(&a), reached.contains(&b));
                    if ra != rb {
                        reached.push(if ra { b } else { a });
                        changed = true;
                    }
                }
            }
            if reached.len() != s.len() {
                return Err("links do not connect the support".into());
            }
            Ok(())
        }
    }
}
