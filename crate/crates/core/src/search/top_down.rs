//! Top-down strategy: take maximal k-cores larger than `t` and delete nodes
//! from them, keeping only the k-core that survives each deletion.

use rand::Rng;

use super::{search_levels, RemovalOrder, StrategyParams};
use crate::decomp::{maximal_k_cores, CorenessTable};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeSet};
use crate::local::{LocalGraph, WorkingSet};

/// Maximal k-core components with at least `t` nodes, largest first.
pub fn get_kcore_td(g: &Graph, ct: &CorenessTable, k: usize, t: usize) -> Vec<NodeSet> {
    let mut cores: Vec<NodeSet> = maximal_k_cores(g, ct, k).into_iter().filter(|c| c.len() >= t).collect();
    cores.sort_by_key(|c| std::cmp::Reverse(c.len()));
    cores
}

/// Shrinks the k-core `h` to exactly `t` nodes while keeping minimum
/// degree `k`, or reports failure with `None`.
///
/// Nodes are tried one at a time in `order`. Deleting a node also deletes
/// everything that falls below degree `k` as a consequence. If a surviving
/// component has exactly `t` nodes it is returned; if the largest survivor
/// still exceeds `t` it replaces `h` and a fresh pass starts over the
/// remaining nodes. A full pass without progress means `h` cannot lose any
/// single node without dropping under `t`, and the refinement fails.
///
/// A disconnected `h` is first reduced to its largest component.
///
/// A node whose deletion failed stays failed for the rest of the call: the
/// set only shrinks, and any deletion whose cascade reaches such a node
/// leaves a subset of what that node's deletion left. Cascades therefore
/// stop as soon as they touch one.
pub fn size_refinement_td<R: Rng + ?Sized>(
    g: &Graph,
    h: &NodeSet,
    k: usize,
    t: usize,
    order: RemovalOrder,
    rng: &mut R,
) -> Result<Option<NodeSet>> {
    if let Some(&last) = h.members().last() {
        if last >= g.node_count() {
            return Err(Error::InvalidNode {
                node: last,
                n: g.node_count(),
            });
        }
    }
    if t == 0 || h.len() <= t {
        return Err(Error::Contract(format!(
            "top-down refinement needs 1 <= t < |h|, got t = {t}, |h| = {}",
            h.len()
        )));
    }
    let local = LocalGraph::induced(g, h.members());
    let mut ws = WorkingSet::new(&local);
    if ws.min_degree().unwrap_or(0) < k {
        return Err(Error::Contract(format!("input set is not a {k}-core")));
    }

    let components = ws.components();
    if components.len() > 1 {
        if let Some(c) = components.iter().find(|c| c.len() == t) {
            return Ok(Some(local.to_global(c.clone())));
        }
        let largest = components
            .iter()
            .fold(&components[0], |a, c| if c.len() > a.len() { c } else { a });
        if largest.len() < t {
            return Ok(None);
        }
        let keep = largest.clone();
        ws.retain(&keep);
    }

    let mut failed = vec![false; local.len()];
    loop {
        let mut pool = initial_pool(&ws, order);
        let mut shrunk = false;
        while let Some(v) = next_candidate(&mut pool, order, rng) {
            if failed[v] {
                continue;
            }
            let cascade = ws.cascade(v, k, t, &failed);
            if cascade.aborted {
                ws.restore(&cascade.removed);
                failed[v] = true;
                continue;
            }
            let boundary = ws.boundary(&cascade.removed);
            let split = ws.split(&boundary);

            if split.main_size == t {
                return Ok(Some(local.to_global(ws.main_of(&split))));
            }
            if let Some(c) = split.detached.iter().find(|c| c.len() == t) {
                return Ok(Some(local.to_global(c.clone())));
            }
            let biggest_detached = split.detached.iter().max_by_key(|c| c.len());
            let detached_size = biggest_detached.map_or(0, Vec::len);
            if split.main_size > t && split.main_size >= detached_size {
                if !split.detached.is_empty() {
                    let main = ws.main_of(&split);
                    ws.retain(&main);
                }
                shrunk = true;
                break;
            }
            if detached_size > t {
                let keep = biggest_detached.cloned().unwrap_or_default();
                ws.retain(&keep);
                shrunk = true;
                break;
            }
            ws.restore(&cascade.removed);
            failed[v] = true;
        }
        if !shrunk {
            return Ok(None);
        }
    }
}

/// Nodes to try in the next pass. For the random order the pool is drawn
/// from lazily, which yields a uniform permutation without shuffling the
/// whole set up front.
fn initial_pool(ws: &WorkingSet, order: RemovalOrder) -> Vec<usize> {
    let mut pool = ws.members().to_vec();
    if order == RemovalOrder::LowestDegreeFirst {
        // popped from the back
        pool.sort_unstable_by_key(|&a| std::cmp::Reverse((ws.degree(a), a)));
    }
    pool
}

fn next_candidate<R: Rng + ?Sized>(pool: &mut Vec<usize>, order: RemovalOrder, rng: &mut R) -> Option<usize> {
    match order {
        RemovalOrder::LowestDegreeFirst => pool.pop(),
        RemovalOrder::Random => {
            if pool.is_empty() {
                None
            } else {
                let i = rng.gen_range(0..pool.len());
                Some(pool.swap_remove(i))
            }
        }
    }
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
        let candidates = get_kcore_td(g, ct, k, t);
        for _ in 0..params.max_restarts_per_k {
            for h in &candidates {
                if h.len() == t {
                    return Ok(Some(h.clone()));
                }
                if let Some(found) = size_refinement_td(g, h, k, t, params.td_removal_order, rng)? {
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
    use crate::graph::induced_min_degree;
    use crate::search::seeded_rng;

    #[test]
    fn candidates() {
        let k5 = fixtures::clique(5);
        let ct = core_decompose(&k5);
        assert_eq!(get_kcore_td(&k5, &ct, 3, 4), [NodeSet::all(&k5)]);

        let triangles = fixtures::disjoint_union(&fixtures::clique(3), &fixtures::clique(3));
        let ct = core_decompose(&triangles);
        assert!(get_kcore_td(&triangles, &ct, 2, 4).is_empty());

        let g = fixtures::k4_pendant();
        let ct = core_decompose(&g);
        assert_eq!(
            get_kcore_td(&g, &ct, 2, 4),
            [NodeSet::new(vec![0, 1, 2, 3], 6).unwrap()]
        );
    }

    #[test]
    fn clique_peeling() {
        for (n, k, t) in [(5, 3, 4), (6, 4, 5)] {
            let g = fixtures::clique(n);
            for seed in 0..10 {
                let out = size_refinement_td(&g, &NodeSet::all(&g), k, t, RemovalOrder::Random, &mut seeded_rng(seed))
                    .unwrap()
                    .expect("clique minus a node is a smaller clique");
                assert_eq!(out.len(), t);
                assert_eq!(induced_min_degree(&g, &out).unwrap(), t - 1);
            }
        }
    }

    #[test]
    fn octahedron_cannot_reach_four() {
        let g = fixtures::octahedron();
        for order in [RemovalOrder::Random, RemovalOrder::LowestDegreeFirst] {
            for seed in 0..10 {
                let out = size_refinement_td(&g, &NodeSet::all(&g), 3, 4, order, &mut seeded_rng(seed)).unwrap();
                assert_eq!(out, None);
            }
        }
    }

    #[test]
    fn contract_errors() {
        let g = fixtures::k4_pendant();
        let mut rng = seeded_rng(0);
        // not a 2-core: nodes 4 and 5 hang off the clique
        assert!(matches!(
            size_refinement_td(&g, &NodeSet::all(&g), 2, 4, RemovalOrder::Random, &mut rng),
            Err(Error::Contract(_))
        ));
        let k4 = NodeSet::new(vec![0, 1, 2, 3], 6).unwrap();
        assert!(size_refinement_td(&g, &k4, 3, 4, RemovalOrder::Random, &mut rng).is_err());
    }

    #[test]
    fn disconnected_input_keeps_exact_component() {
        let g = fixtures::disjoint_union(&fixtures::clique(4), &fixtures::clique(5));
        let out = size_refinement_td(&g, &NodeSet::all(&g), 3, 4, RemovalOrder::Random, &mut seeded_rng(3))
            .unwrap()
            .unwrap();
        assert_eq!(out.members(), [0, 1, 2, 3]);
    }

    #[test]
    fn output_is_exact_size_k_core() {
        for seed in 0..20 {
            let g = crate::generate::gnp(40, 0.3, seed).largest_component();
            let ct = core_decompose(&g);
            let k = ct.degeneracy().saturating_sub(2).max(2);
            for h in get_kcore_td(&g, &ct, k, 10) {
                if h.len() == 10 {
                    continue;
                }
                if let Some(out) =
                    size_refinement_td(&g, &h, k, 10, RemovalOrder::Random, &mut seeded_rng(seed)).unwrap()
                {
                    assert_eq!(out.len(), 10);
                    assert!(induced_min_degree(&g, &out).unwrap() >= k);
                    assert!(out.iter().all(|v| h.contains(v)));
                }
            }
        }
    }
}
