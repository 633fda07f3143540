//! Seeded random graph generators.

use std::collections::HashSet;

use rand::Rng;

use crate::graph::Graph;
use crate::search::seeded_rng;

/// Erdős–Rényi `G(n, p)`: every pair is an edge independently with
/// probability `p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = seeded_rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated ids are in range")
}

/// First connected `G(n, p)` sample among seeds `seed, seed + 1, ...`,
/// trying at most `attempts` of them.
pub fn gnp_connected(n: usize, p: f64, seed: u64, attempts: usize) -> Option<Graph> {
    (0..attempts as u64)
        .map(|i| gnp(n, p, seed.wrapping_add(i)))
        .find(Graph::is_connected)
}

/// Uniform `G(n, m)`: `m` distinct edges drawn without replacement.
pub fn gnm(n: usize, m: usize, seed: u64) -> Graph {
    let max_edges = n * n.saturating_sub(1) / 2;
    let m = m.min(max_edges);
    let mut rng = seeded_rng(seed);
    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let key = (u.min(v), u.max(v));
        if seen.insert(key) {
            edges.push(key);
        }
    }
    Graph::from_edges(n, &edges).expect("generated ids are in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gnm_has_exact_edge_count() {
        let g = gnm(100, 400, 5);
        assert_eq!((g.node_count(), g.edge_count()), (100, 400));
        assert_eq!(gnm(4, 100, 0).edge_count(), 6);
    }

    #[test]
    fn seeds_reproduce() {
        assert_eq!(gnp(30, 0.2, 9), gnp(30, 0.2, 9));
        assert_ne!(gnp(30, 0.2, 9), gnp(30, 0.2, 10));
        let g = gnp_connected(20, 0.3, 0, 100).unwrap();
        assert!(g.is_connected());
    }
}
