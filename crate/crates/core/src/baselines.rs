//! Comparison baselines sharing the search result contract.
//!
//! * Critical: random single-node deletions from the maximal k-cores,
//!   accepted only when the k-core survives, until the set reaches `t` or
//!   no single deletion is possible.
//! * S-greedy: greedy growth from a maximum-coreness node. This is a
//!   reconstruction adapted to a fixed target size; results carry
//!   [`Algorithm::SGreedy`], whose `is_reconstruction()` is true.

use std::collections::{BinaryHeap, HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::clock::Stopwatch;
use crate::decomp::{core_decompose, upper_bound, BoundMode, CorenessTable};
use crate::error::Result;
use crate::graph::{Graph, NodeSet};
use crate::local::{LocalGraph, WorkingSet};
use crate::search::{bfs_fallback, check_instance, get_kcore_td, search_levels, seeded_rng, Algorithm, SearchResult};

pub fn critical_search(g: &Graph, t: usize, seed: u64) -> Result<SearchResult> {
    let ct = core_decompose(g);
    critical_search_with(g, &ct, t, BoundMode::Total, seed)
}

pub fn critical_search_with(
    g: &Graph,
    ct: &CorenessTable,
    t: usize,
    mode: BoundMode,
    seed: u64,
) -> Result<SearchResult> {
    check_instance(g, ct, t)?;
    let clock = Stopwatch::start();
    let mut rng = seeded_rng(seed);
    let upper = upper_bound(g, ct, t, mode)?;

    let mut found = None;
    if t == 1 {
        found = ct.densest_node().map(|v| NodeSet::from_unsorted(vec![v]));
    }
    'levels: for k in search_levels(upper, t) {
        for h in get_kcore_td(g, ct, k, t) {
            if h.len() == t {
                found = Some(h);
                break 'levels;
            }
            if let Some(s) = shrink_until_critical(g, &h, k, t, &mut rng) {
                found = Some(s);
                break 'levels;
            }
        }
    }

    let (nodes, fallback) = match found {
        Some(nodes) => (nodes, false),
        None => (bfs_fallback(g, ct, t)?, true),
    };
    let elapsed = clock.elapsed();
    SearchResult::assemble(g, nodes, t, upper, Algorithm::Critical, fallback, elapsed, seed)
}

/// Deletes uniformly drawn members of the k-core `h` (draws may repeat)
/// whenever the deletion leaves a k-core. Gives up once every current member
/// has been drawn and rejected since the last accepted deletion.
fn shrink_until_critical<R: Rng + ?Sized>(g: &Graph, h: &NodeSet, k: usize, t: usize, rng: &mut R) -> Option<NodeSet> {
    let local = LocalGraph::induced(g, h.members());
    let mut ws = WorkingSet::new(&local);
    let mut rejected_in = vec![0u32; local.len()];
    let mut round = 1u32;
    let mut rejected = 0usize;

    while ws.len() > t {
        let v = *ws.members().choose(rng)?;
        if rejected_in[v] == round {
            continue;
        }
        if ws.removal_keeps_k_core(v, k) {
            ws.remove(v);
            debug_assert!(ws.min_degree().is_some_and(|d| d >= k));
            round += 1;
            rejected = 0;
        } else {
            rejected_in[v] = round;
            rejected += 1;
            if rejected == ws.len() {
                return None;
            }
        }
    }
    Some(local.to_global(ws.members().to_vec()))
}

pub fn s_greedy_search(g: &Graph, t: usize, seed: u64) -> Result<SearchResult> {
    let ct = core_decompose(g);
    s_greedy_search_with(g, &ct, t, BoundMode::Total, seed)
}

/// Grows a connected set from a random maximum-coreness node, each step
/// adding the frontier node with the most edges into the set, then the
/// higher coreness, then a random tie-break.
pub fn s_greedy_search_with(
    g: &Graph,
    ct: &CorenessTable,
    t: usize,
    mode: BoundMode,
    seed: u64,
) -> Result<SearchResult> {
    check_instance(g, ct, t)?;
    let clock = Stopwatch::start();
    let mut rng = seeded_rng(seed);
    let upper = upper_bound(g, ct, t, mode)?;

    let densest: Vec<usize> = (0..g.node_count())
        .filter(|&v| ct.coreness(v) == ct.degeneracy())
        .collect();
    let start = *densest.choose(&mut rng).expect("non-empty graph has a densest node");

    let mut members = vec![start];
    let mut inside: HashSet<usize> = HashSet::from([start]);
    let mut links: HashMap<usize, usize> = HashMap::new();
    // (links into the set, coreness, random tie-break, node); an entry is
    // stale once the node's link count has moved past it
    let mut heap: BinaryHeap<(usize, usize, u64, usize)> = BinaryHeap::new();
    let mut absorb =
        |v: usize, inside: &HashSet<usize>, heap: &mut BinaryHeap<_>, links: &mut HashMap<usize, usize>| {
            for &u in g.neighbors(v) {
                if !inside.contains(&u) {
                    let count = links.entry(u).or_insert(0);
                    *count += 1;
                    heap.push((*count, ct.coreness(u), rng.gen::<u64>(), u));
                }
            }
        };
    absorb(start, &inside, &mut heap, &mut links);

    while members.len() < t {
        let Some((count, _, _, v)) = heap.pop() else {
            break;
        };
        if inside.contains(&v) || links.get(&v) != Some(&count) {
            continue;
        }
        inside.insert(v);
        members.push(v);
        absorb(v, &inside, &mut heap, &mut links);
    }

    let elapsed = clock.elapsed();
    SearchResult::assemble(
        g,
        NodeSet::from_unsorted(members),
        t,
        upper,
        Algorithm::SGreedy,
        false,
        elapsed,
        seed,
    )
}
