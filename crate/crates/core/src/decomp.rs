//! Core decomposition by bucket-queue peeling, maximal k-core extraction and
//! the size-aware upper bound on achievable core numbers.

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeSet};

/// Per-node coreness of a graph together with the cumulative core sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorenessTable {
    coreness: Vec<usize>,
    degeneracy: usize,
    size_at_or_above: Vec<usize>,
}

impl CorenessTable {
    pub fn coreness(&self, v: usize) -> usize {
        self.coreness[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.coreness
    }

    pub fn node_count(&self) -> usize {
        self.coreness.len()
    }

    pub fn degeneracy(&self) -> usize {
        self.degeneracy
    }

    /// Number of nodes whose coreness is at least `k`.
    pub fn size_at_or_above(&self, k: usize) -> usize {
        self.size_at_or_above.get(k).copied().unwrap_or(0)
    }

    /// A node of maximum coreness; the smallest such id.
    pub fn densest_node(&self) -> Option<usize> {
        self.coreness.iter().position(|&c| c == self.degeneracy)
    }
}

/// Coreness of every node in O(n + m).
///
/// Nodes are bucketed by current degree and peeled from the lowest
/// non-empty bucket; moving a neighbor down one bucket is a swap inside the
/// degree-sorted order array.
pub fn core_decompose(g: &Graph) -> CorenessTable {
    let n = g.node_count();
    if n == 0 {
        return CorenessTable {
            coreness: Vec::new(),
            degeneracy: 0,
            size_at_or_above: vec![0],
        };
    }

    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max_degree = degree.iter().copied().max().unwrap_or(0);

    // bin_start[d] is the first slot in `order` holding a node of degree d
    let mut bin_start = vec![0usize; max_degree + 2];
    for &d in &degree {
        bin_start[d + 1] += 1;
    }
    for d in 1..bin_start.len() {
        bin_start[d] += bin_start[d - 1];
    }
    let mut order = vec![0usize; n];
    let mut position = vec![0usize; n];
    let mut fill = bin_start.clone();
    for v in 0..n {
        let slot = fill[degree[v]];
        order[slot] = v;
        position[v] = slot;
        fill[degree[v]] += 1;
    }

    for i in 0..n {
        let v = order[i];
        for &u in g.neighbors(v) {
            if degree[u] > degree[v] {
                let du = degree[u];
                let first = bin_start[du];
                let w = order[first];
                if w != u {
                    order.swap(first, position[u]);
                    position[w] = position[u];
                    position[u] = first;
                }
                bin_start[du] += 1;
                degree[u] -= 1;
            }
        }
    }

    let coreness = degree;
    let degeneracy = coreness.iter().copied().max().unwrap_or(0);
    let mut size_at_or_above = vec![0usize; degeneracy + 2];
    for &c in &coreness {
        size_at_or_above[c] += 1;
    }
    for k in (0..=degeneracy).rev() {
        size_at_or_above[k] += size_at_or_above[k + 1];
    }
    size_at_or_above.truncate(degeneracy + 1);

    CorenessTable {
        coreness,
        degeneracy,
        size_at_or_above,
    }
}

/// Connected components of the subgraph induced by `{v : coreness(v) >= k}`,
/// listed by smallest member. Empty when `k` exceeds the degeneracy.
pub fn maximal_k_cores(g: &Graph, ct: &CorenessTable, k: usize) -> Vec<NodeSet> {
    if k > ct.degeneracy() {
        return Vec::new();
    }
    let n = g.node_count();
    let mut seen = vec![false; n];
    let mut cores = Vec::new();
    let mut stack = Vec::new();
    for start in 0..n {
        if seen[start] || ct.coreness(start) < k {
            continue;
        }
        seen[start] = true;
        stack.push(start);
        let mut members = Vec::new();
        while let Some(v) = stack.pop() {
            members.push(v);
            for &u in g.neighbors(v) {
                if !seen[u] && ct.coreness(u) >= k {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        cores.push(NodeSet::from_unsorted(members));
    }
    cores
}

/// How the upper bound on a size-`t` solution's core number is read off the
/// decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BoundMode {
    /// Largest k with at least t nodes of coreness >= k, across components.
    #[default]
    Total,
    /// Largest k for which a single connected maximal k-core has >= t nodes.
    LargestComponent,
}

/// Largest `k` such that at least `t` nodes have coreness `>= k`.
///
/// Every t-node subgraph with minimum degree k sits inside the maximal
/// k-core, so nothing of size t can beat this value.
pub fn upper_bound_k(ct: &CorenessTable, t: usize) -> Result<usize> {
    let n = ct.node_count();
    if t == 0 || t > n {
        return Err(Error::SizeOutOfRange { t, n });
    }
    Ok((0..=ct.degeneracy())
        .rev()
        .find(|&k| ct.size_at_or_above(k) >= t)
        .unwrap_or(0))
}

/// Largest `k` whose maximal k-core has a connected component with at least
/// `t` nodes. Never exceeds [`upper_bound_k`].
pub fn upper_bound_k_component(g: &Graph, ct: &CorenessTable, t: usize) -> Result<usize> {
    let n = ct.node_count();
    if t == 0 || t > n {
        return Err(Error::SizeOutOfRange { t, n });
    }
    // add nodes by decreasing coreness, merging with already-present neighbors
    let mut by_level: Vec<Vec<usize>> = vec![Vec::new(); ct.degeneracy() + 1];
    for v in 0..n {
        by_level[ct.coreness(v)].push(v);
    }
    let mut dsu = Dsu::new(n);
    let mut present = vec![false; n];
    let mut largest = 0;
    for k in (0..=ct.degeneracy()).rev() {
        for &v in &by_level[k] {
            present[v] = true;
            largest = largest.max(1);
            for &u in g.neighbors(v) {
                if present[u] {
                    largest = largest.max(dsu.union(u, v));
                }
            }
        }
        if largest >= t {
            return Ok(k);
        }
    }
    Ok(0)
}

/// Dispatches on [`BoundMode`].
pub fn upper_bound(g: &Graph, ct: &CorenessTable, t: usize, mode: BoundMode) -> Result<usize> {
    match mode {
        BoundMode::Total => upper_bound_k(ct, t),
        BoundMode::LargestComponent => upper_bound_k_component(g, ct, t),
    }
}

struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`, returning the merged size.
    fn union(&mut self, a: usize, b: usize) -> usize {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return self.size[ra];
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.size[ra]
    }
}
