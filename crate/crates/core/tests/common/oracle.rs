#![allow(dead_code)]

//! Brute-force oracle for the orderly generator: every labeled connected r-regular graph on n
//! vertices, reduced to a canonical string by trying all relabelings.

use std::collections::BTreeSet;

use qtwo::graph::{enumerate_regular, Graph};

/// Labeled r-regular graphs on `n` vertices as adjacency matrices.
pub fn labeled_regular(n: usize, r: usize) -> Vec<Vec<Vec<bool>>> {
    fn rec(adj: &mut Vec<Vec<bool>>, deg: &mut Vec<usize>, v: usize, next: usize, r: usize, out: &mut Vec<Vec<Vec<bool>>>) {
        let n = adj.len();
        if v == n {
            out.push(adj.clone());
            return;
        }
        if deg[v] == r {
            rec(adj, deg, v + 1, v + 2, r, out);
            return;
        }
        for w in next..n {
            if deg[w] < r && n - w >= r - deg[v] {
                adj[v][w] = true;
                adj[w][v] = true;
                deg[v] += 1;
                deg[w] += 1;
                rec(adj, deg, v, w + 1, r, out);
                deg[v] -= 1;
                deg[w] -= 1;
                adj[v][w] = false;
                adj[w][v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![vec![false; n]; n], &mut vec![0; n], 0, 1, r, &mut out);
    out
}

pub fn connected(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for w in 0..n {
            if adj[u][w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Lexicographically smallest upper-triangle bit string over all permutations, built one
/// vertex at a time and pruned as soon as a prefix is already larger than the best.
pub fn canonical(adj: &[Vec<bool>]) -> Vec<bool> {
    let n = adj.len();
    let mut best: Option<Vec<bool>> = None;
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut bits = Vec::new();
    fn go(
        adj: &[Vec<bool>],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        bits: &mut Vec<bool>,
        best: &mut Option<Vec<bool>>,
    ) {
        let n = adj.len();
        if perm.len() == n {
            if best.as_ref().is_none_or(|b| &bits[..] < &b[..]) {
                *best = Some(bits.clone());
            }
            return;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            let len = bits.len();
            for &u in perm.iter() {
                bits.push(adj[u][v]);
            }
            let pruned = best.as_ref().is_some_and(|b| bits[..] > b[..bits.len()]);
            if !pruned {
                used[v] = true;
                perm.push(v);
                go(adj, perm, used, bits, best);
                perm.pop();
                used[v] = false;
            }
            bits.truncate(len);
        }
    }
    go(adj, &mut perm, &mut used, &mut bits, &mut best);
    best.unwrap()
}

pub fn graph_to_adj(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.order()).map(|u| (0..g.order()).map(|v| g.has_edge(u, v)).collect()).collect()
}

/// Asserts that the generator yields one graph per isomorphism class of the brute force.
pub fn check(n: usize, r: usize) {
    let oracle: BTreeSet<Vec<bool>> =
        labeled_regular(n, r).iter().filter(|a| connected(a)).map(|a| canonical(a)).collect();
    let generated: Vec<Vec<bool>> =
        enumerate_regular(n, r, true).unwrap().map(|g| canonical(&graph_to_adj(&g))).collect();
    let distinct: BTreeSet<Vec<bool>> = generated.iter().cloned().collect();
    assert_eq!(distinct.len(), generated.len(), "duplicate isomorphism classes for n = {n}, r = {r}");
    assert_eq!(distinct, oracle, "n = {n}, r = {r}");
}

