//! Immutable undirected simple graphs in compressed adjacency form, plus
//! edge-list ingestion and the small set of traversal utilities every other
//! module leans on.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;
use std::io::BufRead;

use crate::error::{Error, Result};

/// Undirected simple graph with dense internal ids `0..n`.
///
/// Neighbor lists are sorted and duplicate free. Each internal id keeps the
/// label it had in the source file so results can be reported in the
/// caller's id space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    labels: Vec<String>,
    edge_count: usize,
    connected: bool,
}

impl Graph {
    /// Builds a graph on `n` nodes labelled `"0".."n-1"`. Self-loops are
    /// dropped and repeated or reversed edges merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::build(labels, edges.iter().copied())
    }

    fn build(labels: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = labels.len();
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (u, v) in edges {
            for node in [u, v] {
                if node >= n {
                    return Err(Error::InvalidNode { node, n });
                }
            }
            if u == v {
                continue;
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }

        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            targets.extend_from_slice(list);
            offsets.push(targets.len());
        }
        drop(adjacency);

        let mut graph = Graph {
            edge_count: targets.len() / 2,
            offsets,
            targets,
            labels,
            connected: false,
        };
        graph.connected = n > 0 && graph.bfs_order(0).len() == n;
        Ok(graph)
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.node_count()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.node_count()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// Iterates every edge once as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.node_count()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Nodes reachable from `source` in breadth-first order, visiting
    /// neighbors in ascending id order.
    pub fn bfs_order(&self, source: usize) -> Vec<usize> {
        let mut seen = vec![false; self.node_count()];
        let mut order = vec![source];
        seen[source] = true;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    order.push(u);
                }
            }
        }
        order
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.node_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut component = Vec::new();
            while let Some(v) = queue.pop_front() {
                component.push(v);
                for &u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    /// The subgraph induced by the largest connected component, with ids
    /// re-densified in their original relative order. Ties go to the
    /// component holding the smallest id.
    pub fn largest_component(&self) -> Graph {
        if self.connected {
            return self.clone();
        }
        let keep =
            self.connected_components()
                .into_iter()
                .fold(Vec::new(), |best, c| if c.len() > best.len() { c } else { best });
        self.induced(&keep)
    }

    /// Induced subgraph on a sorted node list, renumbered densely.
    fn induced(&self, keep: &[usize]) -> Graph {
        let mut remap = vec![usize::MAX; self.node_count()];
        for (new, &old) in keep.iter().enumerate() {
            remap[old] = new;
        }
        let labels = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let edges: Vec<(usize, usize)> = keep
            .iter()
            .flat_map(|&u| {
                let remap = &remap;
                self.neighbors(u)
                    .iter()
                    .filter(move |&&v| u < v && remap[v] != usize::MAX)
                    .map(move |&v| (remap[u], remap[v]))
            })
            .collect();
        Self::build(labels, edges).expect("remapped ids are in range")
    }

    /// Serializes as a plain edge list using the original labels, one
    /// `u v` pair per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{} {}", self.labels[u], self.labels[v]);
        }
        out
    }
}

/// Reads a SNAP/KONECT style edge list.
///
/// Lines starting with `#` or `%` and blank lines are skipped. Every other
/// line must hold exactly two whitespace separated endpoint tokens; tokens
/// are treated as opaque labels. With `restrict_to_lcc` the result is the
/// largest connected component only.
pub fn parse_edge_list<R: BufRead>(reader: R, restrict_to_lcc: bool) -> Result<Graph> {
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    let mut intern = |token: &str| -> usize {
        if let Some(&id) = ids.get(token) {
            return id;
        }
        let id = labels.len();
        labels.push(token.to_owned());
        ids.insert(token.to_owned(), id);
        id
    };

    for (index, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: index + 1,
                message: format!("expected 2 endpoint tokens, found {}", tokens.len()),
            });
        }
        let u = intern(tokens[0]);
        let v = intern(tokens[1]);
        edges.push((u, v));
    }

    let graph = Graph::build(labels, edges)?;
    if graph.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(if restrict_to_lcc {
        graph.largest_component()
    } else {
        graph
    })
}

/// A set of node ids of one graph, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct NodeSet {
    members: Vec<usize>,
}

impl NodeSet {
    /// Validates `members` against a graph with `n` nodes. Order does not
    /// matter; duplicates are rejected.
    pub fn new(mut members: Vec<usize>, n: usize) -> Result<Self> {
        members.sort_unstable();
        if let Some(&node) = members.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidNode { node, n });
        }
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Contract("node set contains duplicates".into()));
        }
        Ok(NodeSet { members })
    }

    /// Caller guarantees `members` is sorted, duplicate free and in range.
    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        NodeSet { members }
    }

    pub(crate) fn from_unsorted(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        Self::from_sorted(members)
    }

    pub fn all(g: &Graph) -> Self {
        NodeSet {
            members: (0..g.node_count()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.members
    }

    /// Original file labels of the members.
    pub fn labels<'g>(&self, g: &'g Graph) -> Vec<&'g str> {
        self.iter().map(|v| g.label(v)).collect()
    }
}

fn check_members(g: &Graph, s: &NodeSet) -> Result<()> {
    match s.members.last() {
        Some(&last) if last >= g.node_count() => Err(Error::InvalidNode {
            node: last,
            n: g.node_count(),
        }),
        _ => Ok(()),
    }
}

/// Degree of each member of `s` inside `G[s]`, in member order.
pub fn induced_degrees(g: &Graph, s: &NodeSet) -> Result<Vec<usize>> {
    check_members(g, s)?;
    Ok(s.iter()
        .map(|v| g.neighbors(v).iter().filter(|&&u| s.contains(u)).count())
        .collect())
}

/// Core number of the induced subgraph `G[s]`, i.e. its minimum internal
/// degree.
pub fn induced_min_degree(g: &Graph, s: &NodeSet) -> Result<usize> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(induced_degrees(g, s)?.into_iter().min().unwrap_or(0))
}

/// The first `t` nodes met by a breadth-first search from `seed`.
pub fn bfs_connected_subset(g: &Graph, seed: usize, t: usize) -> Result<NodeSet> {
    let n = g.node_count();
    if seed >= n {
        return Err(Error::InvalidNode { node: seed, n });
    }
    if t == 0 || t > n {
        return Err(Error::SizeOutOfRange { t, n });
    }
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(t);
    order.push(seed);
    seen[seed] = true;
    let mut head = 0;
    'outer: while order.len() < t && head < order.len() {
        let v = order[head];
        head += 1;
        for &u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                order.push(u);
                if order.len() == t {
                    break 'outer;
                }
            }
        }
    }
    if order.len() < t {
        return Err(Error::Disconnected);
    }
    Ok(NodeSet::from_unsorted(order))
}
