//! Local views of a node subset: an induced CSR with dense local ids, and a
//! mutable working set over it that supports k-core cascades with rollback
//! and cheap detection of the components a deletion leaves behind.

use crate::graph::{Graph, NodeSet};

/// The subgraph induced by a sorted node list, with local ids `0..len`
/// assigned in global id order.
pub(crate) struct LocalGraph {
    nodes: Vec<usize>,
    offsets: Vec<usize>,
    adjacency: Vec<usize>,
}

impl LocalGraph {
    pub(crate) fn induced(g: &Graph, members: &[usize]) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        let mut offsets = Vec::with_capacity(members.len() + 1);
        let mut adjacency = Vec::new();
        offsets.push(0);
        for &v in members {
            adjacency.extend(g.neighbors(v).iter().filter_map(|u| members.binary_search(u).ok()));
            offsets.push(adjacency.len());
        }
        LocalGraph {
            nodes: members.to_vec(),
            offsets,
            adjacency,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.nodes.len()
    }

    #[inline]
    pub(crate) fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[self.offsets[i]..self.offsets[i + 1]]
    }

    pub(crate) fn degree(&self, i: usize) -> usize {
        self.offsets[i + 1] - self.offsets[i]
    }

    /// Global ids of a set of local ids, as a `NodeSet`.
    pub(crate) fn to_global(&self, mut local: Vec<usize>) -> NodeSet {
        local.sort_unstable();
        NodeSet::from_sorted(local.into_iter().map(|i| self.nodes[i]).collect())
    }
}

/// Components of the maximal k-core of `G[members]`, as global node sets,
/// listed by smallest member.
pub(crate) fn k_core_components_within(g: &Graph, members: &[usize], k: usize) -> Vec<NodeSet> {
    let local = LocalGraph::induced(g, members);
    let mut ws = WorkingSet::new(&local);
    ws.peel_below(k);
    ws.components().into_iter().map(|c| local.to_global(c)).collect()
}

/// Result of deleting a node and everything its loss drags below degree k.
pub(crate) struct Cascade {
    pub removed: Vec<usize>,
    /// Set when the survivors fell under the size floor and the cascade was
    /// cut short; the working set is then only partially peeled.
    pub aborted: bool,
}

/// Components left after a deletion from a connected working set. Every
/// component except `main` is listed explicitly.
pub(crate) struct Split {
    pub detached: Vec<Vec<usize>>,
    pub main_size: usize,
}

/// Mutable alive/degree bookkeeping over a [`LocalGraph`].
pub(crate) struct WorkingSet<'a> {
    graph: &'a LocalGraph,
    alive: Vec<bool>,
    degree: Vec<usize>,
    members: Vec<usize>,
    position: Vec<usize>,
    stamp: Vec<u32>,
    owner: Vec<usize>,
    epoch: u32,
    scratch: SplitScratch,
}

const NONE: usize = usize::MAX;

/// Buffers for [`WorkingSet::split`], kept between calls. Search `i`
/// owns `queues[i]`, whose consumed prefix ends at `heads[i]`; merged
/// searches form a union-find forest whose roots chain their members
/// through `next`.
#[derive(Default)]
struct SplitScratch {
    sources: Vec<usize>,
    queues: Vec<Vec<usize>>,
    heads: Vec<usize>,
    parent: Vec<usize>,
    pending: Vec<usize>,
    size: Vec<usize>,
    next: Vec<usize>,
    tail: Vec<usize>,
}

impl SplitScratch {
    fn reset(&mut self, s: usize) {
        if self.queues.len() < s {
            self.queues.resize_with(s, Vec::new);
        }
        for (q, &b) in self.queues.iter_mut().zip(&self.sources) {
            q.clear();
            q.push(b);
        }
        self.heads.clear();
        self.heads.resize(s, 0);
        self.parent.clear();
        self.parent.extend(0..s);
        self.pending.clear();
        self.pending.resize(s, 1);
        self.size.clear();
        self.size.resize(s, 1);
        self.next.clear();
        self.next.resize(s, NONE);
        self.tail.clear();
        self.tail.extend(0..s);
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the groups of `a` and `b`; false if already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        let (big, small) = if self.size[a] >= self.size[b] { (a, b) } else { (b, a) };
        self.parent[small] = big;
        self.pending[big] += self.pending[small];
        self.size[big] += self.size[small];
        let t = self.tail[big];
        self.next[t] = small;
        self.tail[big] = self.tail[small];
        true
    }
}

impl<'a> WorkingSet<'a> {
    pub(crate) fn new(graph: &'a LocalGraph) -> Self {
        let n = graph.len();
        WorkingSet {
            graph,
            alive: vec![true; n],
            degree: (0..n).map(|i| graph.degree(i)).collect(),
            members: (0..n).collect(),
            position: (0..n).collect(),
            stamp: vec![0; n],
            owner: vec![0; n],
            epoch: 0,
            scratch: SplitScratch::default(),
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.members.len()
    }

    pub(crate) fn degree(&self, i: usize) -> usize {
        self.degree[i]
    }

    /// Alive local ids in internal order (not sorted).
    pub(crate) fn members(&self) -> &[usize] {
        &self.members
    }

    pub(crate) fn min_degree(&self) -> Option<usize> {
        self.members.iter().map(|&i| self.degree[i]).min()
    }

    fn detach(&mut self, i: usize) {
        let p = self.position[i];
        let last = *self.members.last().expect("detaching from empty set");
        self.members.swap_remove(p);
        if last != i {
            self.position[last] = p;
        }
        self.alive[i] = false;
    }

    fn attach(&mut self, i: usize) {
        self.alive[i] = true;
        self.position[i] = self.members.len();
        self.members.push(i);
    }

    /// Deletes `i` and updates the degrees of its alive neighbors.
    pub(crate) fn remove(&mut self, i: usize) {
        self.detach(i);
        for &u in self.graph.neighbors(i) {
            if self.alive[u] {
                self.degree[u] -= 1;
            }
        }
    }

    /// Whether deleting `i` keeps every remaining node at degree >= k.
    pub(crate) fn removal_keeps_k_core(&self, i: usize, k: usize) -> bool {
        self.graph
            .neighbors(i)
            .iter()
            .all(|&u| !self.alive[u] || self.degree[u] > k)
    }

    /// Removes every node whose degree is below `k`, repeatedly.
    pub(crate) fn peel_below(&mut self, k: usize) {
        let mut queue: Vec<usize> = self.members.iter().copied().filter(|&i| self.degree[i] < k).collect();
        let mut queued = vec![false; self.graph.len()];
        for &i in &queue {
            queued[i] = true;
        }
        while let Some(i) = queue.pop() {
            self.detach(i);
            for &u in self.graph.neighbors(i) {
                if self.alive[u] {
                    self.degree[u] -= 1;
                    if self.degree[u] < k && !queued[u] {
                        queued[u] = true;
                        queue.push(u);
                    }
                }
            }
        }
    }

    /// Deletes `v` and then every node whose degree drops below `k`. Stops
    /// early once fewer than `floor` nodes survive or a node flagged in
    /// `doomed` is deleted. Assumes all alive nodes start at degree >= k.
    pub(crate) fn cascade(&mut self, v: usize, k: usize, floor: usize, doomed: &[bool]) -> Cascade {
        let mut removed = Vec::new();
        let mut queue = vec![v];
        while let Some(i) = queue.pop() {
            self.detach(i);
            removed.push(i);
            for &u in self.graph.neighbors(i) {
                if self.alive[u] {
                    // degree only falls during a cascade, so this fires once
                    if self.degree[u] == k {
                        queue.push(u);
                    }
                    self.degree[u] -= 1;
                }
            }
            if self.members.len() < floor || doomed[i] {
                // queued nodes are still alive; they are restored untouched
                return Cascade { removed, aborted: true };
            }
        }
        Cascade {
            removed,
            aborted: false,
        }
    }

    /// Undoes a cascade.
    pub(crate) fn restore(&mut self, removed: &[usize]) {
        for &i in removed.iter().rev() {
            for &u in self.graph.neighbors(i) {
                if self.alive[u] {
                    self.degree[u] += 1;
                }
            }
            self.attach(i);
        }
    }

    /// Alive neighbors of a removed batch.
    pub(crate) fn boundary(&self, removed: &[usize]) -> Vec<usize> {
        removed
            .iter()
            .flat_map(|&i| self.graph.neighbors(i).iter().copied())
            .filter(|&u| self.alive[u])
            .collect()
    }

    fn next_epoch(&mut self) -> u32 {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        self.epoch
    }

    /// Components of the alive set after a deletion whose surviving
    /// neighbors are `boundary`, assuming the set was connected before.
    ///
    /// Every component touches the boundary, so one breadth-first search is
    /// grown from each boundary node in lockstep. Searches that meet are
    /// merged; a merged group that runs dry is a finished component. Once a
    /// single live group remains it is the rest of the set, so the cost is
    /// bounded by the smaller pieces plus the work needed to join the rest.
    pub(crate) fn split(&mut self, boundary: &[usize]) -> Split {
        let epoch = self.next_epoch();
        let mut sc = std::mem::take(&mut self.scratch);
        sc.sources.clear();
        for &b in boundary {
            if self.alive[b] && self.stamp[b] != epoch {
                self.stamp[b] = epoch;
                self.owner[b] = sc.sources.len();
                sc.sources.push(b);
            }
        }
        let alive_count = self.members.len();
        let s = sc.sources.len();
        let mut detached: Vec<Vec<usize>> = Vec::new();
        if s > 1 {
            sc.reset(s);
            self.grow_lockstep(&mut sc, epoch, &mut detached);
        }
        self.scratch = sc;
        let detached_total: usize = detached.iter().map(Vec::len).sum();
        Split {
            detached,
            main_size: alive_count - detached_total,
        }
    }

    fn grow_lockstep(&mut self, sc: &mut SplitScratch, epoch: u32, detached: &mut Vec<Vec<usize>>) {
        let s = sc.sources.len();
        let mut live_groups = s;
        loop {
            let mut progressed = false;
            for i in 0..s {
                if sc.heads[i] == sc.queues[i].len() {
                    continue;
                }
                let x = sc.queues[i][sc.heads[i]];
                sc.heads[i] += 1;
                progressed = true;
                let root = sc.find(i);
                sc.pending[root] -= 1;
                for &y in self.graph.neighbors(x) {
                    if !self.alive[y] {
                        continue;
                    }
                    if self.stamp[y] != epoch {
                        self.stamp[y] = epoch;
                        self.owner[y] = i;
                        sc.queues[i].push(y);
                        let root = sc.find(i);
                        sc.pending[root] += 1;
                    } else if sc.union(self.owner[y], i) {
                        live_groups -= 1;
                        if live_groups == 1 {
                            return;
                        }
                    }
                }
                let root = sc.find(i);
                if sc.pending[root] == 0 {
                    let mut component = Vec::new();
                    let mut j = root;
                    while j != NONE {
                        component.extend_from_slice(&sc.queues[j]);
                        j = sc.next[j];
                    }
                    detached.push(component);
                    live_groups -= 1;
                    if live_groups == 1 {
                        return;
                    }
                }
            }
            if !progressed {
                return;
            }
        }
    }

    /// Alive nodes outside the detached components of `split`.
    pub(crate) fn main_of(&mut self, split: &Split) -> Vec<usize> {
        let epoch = self.next_epoch();
        for c in &split.detached {
            for &i in c {
                self.stamp[i] = epoch;
            }
        }
        self.members
            .iter()
            .copied()
            .filter(|&i| self.stamp[i] != epoch)
            .collect()
    }

    /// Drops every alive node not in `keep`. `keep` must be a union of
    /// components of the alive set, so surviving degrees are unaffected.
    pub(crate) fn retain(&mut self, keep: &[usize]) {
        let epoch = self.next_epoch();
        for &i in keep {
            self.stamp[i] = epoch;
        }
        let doomed: Vec<usize> = self
            .members
            .iter()
            .copied()
            .filter(|&i| self.stamp[i] != epoch)
            .collect();
        for i in doomed {
            self.detach(i);
        }
    }

    /// Connected components of the alive set, each sorted, listed by
    /// smallest local id.
    pub(crate) fn components(&mut self) -> Vec<Vec<usize>> {
        let epoch = self.next_epoch();
        let mut order = self.members.clone();
        order.sort_unstable();
        let mut components = Vec::new();
        for start in order {
            if self.stamp[start] == epoch {
                continue;
            }
            self.stamp[start] = epoch;
            let mut component = vec![start];
            let mut head = 0;
            while head < component.len() {
                let x = component[head];
                head += 1;
                for &y in self.graph.neighbors(x) {
                    if self.alive[y] && self.stamp[y] != epoch {
                        self.stamp[y] = epoch;
                        component.push(y);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }
}
