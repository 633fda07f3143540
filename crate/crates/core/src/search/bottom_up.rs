//! Bottom-up strategy: find small k-cores inside random `t`-subsets of the
//! maximal k-cores, then grow them one node at a time.

use std::collections::{HashMap, HashSet};

use rand::seq::{index, SliceRandom};
use rand::Rng;

use super::{search_levels, CandidateOrder, GrowthRule, StrategyParams};
use crate::decomp::{maximal_k_cores, CorenessTable};
use crate::error::{Error, Result};
use crate::graph::{induced_min_degree, Graph, NodeSet};
use crate::local::k_core_components_within;

/// Small k-core candidates.
///
/// Maximal k-core components with at most `t` nodes are emitted as they
/// are. Larger components lose `|H| - t` uniformly random nodes and the
/// components of the maximal k-core of what remains are emitted instead, so
/// every candidate has at most `t` nodes. The list may be empty.
pub fn get_kcore_bu<R: Rng + ?Sized>(g: &Graph, ct: &CorenessTable, k: usize, t: usize, rng: &mut R) -> Vec<NodeSet> {
    let mut out = Vec::new();
    for h in maximal_k_cores(g, ct, k) {
        if h.len() <= t {
            out.push(h);
            continue;
        }
        let mut kept: Vec<usize> = index::sample(rng, h.len(), t)
            .into_iter()
            .map(|i| h.members()[i])
            .collect();
        kept.sort_unstable();
        out.extend(k_core_components_within(g, &kept, k));
    }
    out
}

/// Outside nodes adjacent to the growing set, bucketed by how many
/// neighbors they have inside it.
struct Frontier {
    k: usize,
    inside_count: HashMap<usize, usize>,
    buckets: Vec<Vec<usize>>,
    slot: HashMap<usize, usize>,
    eligible: Vec<usize>,
    eligible_slot: HashMap<usize, usize>,
    top: usize,
}

impl Frontier {
    fn new(k: usize) -> Self {
        Frontier {
            k,
            inside_count: HashMap::new(),
            buckets: vec![Vec::new()],
            slot: HashMap::new(),
            eligible: Vec::new(),
            eligible_slot: HashMap::new(),
            top: 0,
        }
    }

    fn take_from_bucket(&mut self, v: usize, count: usize) {
        let s = self.slot.remove(&v).expect("frontier node has a slot");
        let bucket = &mut self.buckets[count];
        bucket.swap_remove(s);
        if let Some(&moved) = bucket.get(s) {
            self.slot.insert(moved, s);
        }
    }

    fn take_from_eligible(&mut self, v: usize) {
        if let Some(s) = self.eligible_slot.remove(&v) {
            self.eligible.swap_remove(s);
            if let Some(&moved) = self.eligible.get(s) {
                self.eligible_slot.insert(moved, s);
            }
        }
    }

    /// Records one more inside neighbor for outside node `v`.
    fn bump(&mut self, v: usize) {
        let count = self.inside_count.entry(v).or_insert(0);
        let old = *count;
        *count += 1;
        let new = old + 1;
        if old > 0 {
            self.take_from_bucket(v, old);
        }
        if self.buckets.len() <= new {
            self.buckets.resize_with(new + 1, Vec::new);
        }
        self.slot.insert(v, self.buckets[new].len());
        self.buckets[new].push(v);
        self.top = self.top.max(new);
        if new == self.k.max(1) && !self.eligible_slot.contains_key(&v) {
            self.eligible_slot.insert(v, self.eligible.len());
            self.eligible.push(v);
        }
    }

    /// Forgets `v`, which has just joined the set.
    fn remove(&mut self, v: usize) {
        if let Some(count) = self.inside_count.remove(&v) {
            self.take_from_bucket(v, count);
            self.take_from_eligible(v);
        }
    }

    fn pick<R: Rng + ?Sized>(&mut self, rule: GrowthRule, rng: &mut R) -> Option<usize> {
        match rule {
            GrowthRule::MaxInNeighbors => {
                while self.top > 0 && self.buckets[self.top].is_empty() {
                    self.top -= 1;
                }
                if self.top == 0 || self.top < self.k {
                    return None;
                }
                self.buckets[self.top].choose(rng).copied()
            }
            GrowthRule::RandomEligible => self.eligible.choose(rng).copied(),
        }
    }
}

/// Grows the k-core `h` to exactly `t` nodes by repeatedly adding an
/// outside node with at least `k` neighbors in the current set, chosen by
/// `rule`. Returns `None` when no such node is left before reaching `t`.
///
/// Each addition keeps the minimum degree at `k` or above: the new node
/// brings `k` inside neighbors and existing nodes only gain edges.
pub fn size_refinement_bu<R: Rng + ?Sized>(
    g: &Graph,
    h: &NodeSet,
    k: usize,
    t: usize,
    rule: GrowthRule,
    rng: &mut R,
) -> Result<Option<NodeSet>> {
    if h.is_empty() || h.len() > t || t > g.node_count() {
        return Err(Error::Contract(format!(
            "bottom-up refinement needs 1 <= |h| <= t <= n, got |h| = {}, t = {t}",
            h.len()
        )));
    }
    if induced_min_degree(g, h)? < k {
        return Err(Error::Contract(format!("input set is not a {k}-core")));
    }

    let mut members: Vec<usize> = h.members().to_vec();
    let mut inside: HashSet<usize> = members.iter().copied().collect();
    let mut frontier = Frontier::new(k);
    for &v in &members {
        for &u in g.neighbors(v) {
            if !inside.contains(&u) {
                frontier.bump(u);
            }
        }
    }

    while members.len() < t {
        let Some(v) = frontier.pick(rule, rng) else {
            return Ok(None);
        };
        frontier.remove(v);
        inside.insert(v);
        members.push(v);
        for &u in g.neighbors(v) {
            if !inside.contains(&u) {
                frontier.bump(u);
            }
        }
    }
    Ok(Some(NodeSet::from_unsorted(members)))
}

pub(crate) fn search<R: Rng + ?Sized>(
    g: &Graph,
    ct: &CorenessTable,
    upper: usize,
    t: usize,
    params: &StrategyParams,
    rng: &mut R,
) -> Result<Option<NodeSet>> {
    for k in search_levels(upper, t) {
        for _ in 0..params.max_restarts_per_k {
            let mut candidates = get_kcore_bu(g, ct, k, t, rng);
            match params.bu_candidate_order {
                CandidateOrder::LargestFirst => candidates.sort_by_key(|c| std::cmp::Reverse(c.len())),
                CandidateOrder::Random => candidates.shuffle(rng),
            }
            for h in &candidates {
                if h.len() == t {
                    return Ok(Some(h.clone()));
                }
                if let Some(found) = size_refinement_bu(g, h, k, t, params.bu_growth_rule, rng)? {
                    return Ok(Some(found));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::core_decompose;
    use crate::fixtures;
    use crate::search::seeded_rng;

    #[test]
    fn candidates_from_clique() {
        let k5 = fixtures::clique(5);
        let ct = core_decompose(&k5);
        let mut rng = seeded_rng(0);
        assert_eq!(get_kcore_bu(&k5, &ct, 4, 5, &mut rng), [NodeSet::all(&k5)]);
        for seed in 0..10 {
            let out = get_kcore_bu(&k5, &ct, 3, 4, &mut seeded_rng(seed));
            assert_eq!(out.len(), 1);
            assert_eq!(out[0].len(), 4);
        }
    }

    #[test]
    fn octahedron_yields_nothing_at_three() {
        let g = fixtures::octahedron();
        let ct = core_decompose(&g);
        for seed in 0..30 {
            assert!(get_kcore_bu(&g, &ct, 3, 4, &mut seeded_rng(seed)).is_empty());
        }
    }

    #[test]
    fn growth() {
        let k5 = fixtures::clique(5);
        let h = NodeSet::new(vec![0, 1, 2, 3], 5).unwrap();
        let out = size_refinement_bu(&k5, &h, 3, 5, GrowthRule::MaxInNeighbors, &mut seeded_rng(0)).unwrap();
        assert_eq!(out, Some(NodeSet::all(&k5)));

        let two = fixtures::disjoint_union(&fixtures::clique(4), &fixtures::clique(4));
        let out = size_refinement_bu(&two, &h, 3, 5, GrowthRule::MaxInNeighbors, &mut seeded_rng(0)).unwrap();
        assert_eq!(out, None);

        // K4 plus node 4 wired to 0, 1, 2
        let g = Graph::from_edges(
            5,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 0), (4, 1), (4, 2)],
        )
        .unwrap();
        for rule in [GrowthRule::MaxInNeighbors, GrowthRule::RandomEligible] {
            let out = size_refinement_bu(&g, &h, 3, 5, rule, &mut seeded_rng(9))
                .unwrap()
                .unwrap();
            assert_eq!(out.members(), [0, 1, 2, 3, 4]);
            assert_eq!(induced_min_degree(&g, &out).unwrap(), 3);
        }
    }

    #[test]
    fn growth_preconditions() {
        let g = fixtures::k4_pendant();
        let mut rng = seeded_rng(0);
        let k4 = NodeSet::new(vec![0, 1, 2, 3], 6).unwrap();
        assert!(size_refinement_bu(&g, &k4, 3, 3, GrowthRule::MaxInNeighbors, &mut rng).is_err());
        assert!(size_refinement_bu(&g, &k4, 4, 5, GrowthRule::MaxInNeighbors, &mut rng).is_err());
        assert_eq!(
            size_refinement_bu(&g, &k4, 3, 4, GrowthRule::MaxInNeighbors, &mut rng).unwrap(),
            Some(k4)
        );
    }

    #[test]
    fn growth_never_breaks_the_core() {
        for seed in 0..30 {
            let g = crate::generate::gnp(50, 0.2, seed).largest_component();
            let ct = core_decompose(&g);
            let k = 2;
            let t = g.node_count() / 2;
            let mut rng = seeded_rng(seed);
            for h in get_kcore_bu(&g, &ct, k, t, &mut rng) {
                let mut current = h.clone();
                // grow one node at a time and check the core after each step
                while current.len() < t {
                    match size_refinement_bu(&g, &current, k, current.len() + 1, GrowthRule::MaxInNeighbors, &mut rng)
                        .unwrap()
                    {
                        Some(next) => {
                            assert!(induced_min_degree(&g, &next).unwrap() >= k);
                            current = next;
                        }
                        None => break,
                    }
                }
            }
        }
    }
}
