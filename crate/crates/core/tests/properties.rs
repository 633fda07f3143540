//! Invariants checked on random graphs against independent brute-force
//! references written here, not in the library.

use proptest::prelude::*;

use spcs_core::graph::induced_degrees;
use spcs_core::{
    bfs_connected_subset, core_decompose, critical_search, exact_spcs, induced_min_degree, maximal_k_cores,
    parse_edge_list, s_greedy_search, tsize_kcore, upper_bound_k, upper_bound_k_component, Graph, NodeSet,
    StrategyParams,
};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..=n * 3).prop_map(move |edges| Graph::from_edges(n, &edges).unwrap())
    })
}

fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(max_n)
        .prop_map(|g| g.largest_component())
        .prop_filter("needs an edge", |g| g.node_count() >= 2)
}

/// Coreness by definition: the largest k whose iterated-deletion k-core
/// still contains the node.
fn naive_coreness(g: &Graph) -> Vec<usize> {
    let n = g.node_count();
    let mut coreness = vec![0; n];
    for k in 1..=n {
        let mut alive = vec![true; n];
        loop {
            let doomed: Vec<usize> = (0..n)
                .filter(|&v| alive[v] && g.neighbors(v).iter().filter(|&&u| alive[u]).count() < k)
                .collect();
            if doomed.is_empty() {
                break;
            }
            doomed.into_iter().for_each(|v| alive[v] = false);
        }
        if !alive.contains(&true) {
            break;
        }
        for v in 0..n {
            if alive[v] {
                coreness[v] = k;
            }
        }
    }
    coreness
}

fn is_connected_subset(g: &Graph, s: &NodeSet) -> bool {
    let Some(start) = s.iter().next() else { return true };
    let mut seen = vec![start];
    let mut head = 0;
    while head < seen.len() {
        let v = seen[head];
        head += 1;
        for &u in g.neighbors(v) {
            if s.contains(u) && !seen.contains(&u) {
                seen.push(u);
            }
        }
    }
    seen.len() == s.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graphs_are_symmetric_and_simple(g in arb_graph(30)) {
        let mut total = 0;
        for v in 0..g.node_count() {
            let nb = g.neighbors(v);
            prop_assert!(nb.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(!nb.contains(&v));
            for &u in nb {
                prop_assert!(g.has_edge(u, v));
            }
            total += nb.len();
        }
        prop_assert_eq!(total, 2 * g.edge_count());
        prop_assert_eq!(induced_min_degree(&g, &NodeSet::all(&g)).unwrap(), g.min_degree());
    }

    #[test]
    fn edge_list_reparses(g in arb_connected(30)) {
        let again = parse_edge_list(g.to_edge_list().as_bytes(), true).unwrap();
        prop_assert_eq!(again.node_count(), g.node_count());
        prop_assert_eq!(again.edge_count(), g.edge_count());
        let mut d1: Vec<usize> = (0..g.node_count()).map(|v| g.degree(v)).collect();
        let mut d2: Vec<usize> = (0..again.node_count()).map(|v| again.degree(v)).collect();
        d1.sort_unstable();
        d2.sort_unstable();
        prop_assert_eq!(d1, d2);
    }

    #[test]
    fn decomposition_matches_definition(g in arb_graph(40)) {
        let ct = core_decompose(&g);
        prop_assert_eq!(ct.as_slice(), &naive_coreness(&g)[..]);
        for v in 0..g.node_count() {
            prop_assert!(ct.coreness(v) <= g.degree(v));
        }
        prop_assert_eq!(ct.size_at_or_above(0), g.node_count());
        for k in 1..=ct.degeneracy() {
            prop_assert!(ct.size_at_or_above(k) <= ct.size_at_or_above(k - 1));
        }
    }

    #[test]
    fn maximal_cores_are_nested_k_cores(g in arb_graph(40)) {
        let ct = core_decompose(&g);
        let covered: usize = maximal_k_cores(&g, &ct, 0).iter().map(NodeSet::len).sum();
        prop_assert_eq!(covered, g.node_count());
        let mut previous: Option<Vec<usize>> = None;
        for k in (0..=ct.degeneracy()).rev() {
            let cores = maximal_k_cores(&g, &ct, k);
            for c in &cores {
                prop_assert!(induced_degrees(&g, c).unwrap().iter().all(|&d| d >= k));
                prop_assert!(is_connected_subset(&g, c));
            }
            let mut all: Vec<usize> = cores.iter().flat_map(|c| c.iter()).collect();
            all.sort_unstable();
            if let Some(inner) = &previous {
                prop_assert!(inner.iter().all(|v| all.binary_search(v).is_ok()));
            }
            previous = Some(all);
        }
    }

    #[test]
    fn bound_dominates_the_optimum(g in arb_graph(11)) {
        let ct = core_decompose(&g);
        for t in 1..=g.node_count() {
            let (best, witness) = exact_spcs(&g, t).unwrap();
            prop_assert_eq!(induced_min_degree(&g, &witness).unwrap(), best);
            let bound = upper_bound_k(&ct, t).unwrap();
            prop_assert!(best <= bound);
            prop_assert!(upper_bound_k_component(&g, &ct, t).unwrap() <= bound);
        }
    }

    #[test]
    fn bfs_prefix_is_connected(g in arb_connected(30), seed in any::<prop::sample::Index>(), t in any::<prop::sample::Index>()) {
        let n = g.node_count();
        let t = t.index(n) + 1;
        let s = bfs_connected_subset(&g, seed.index(n), t).unwrap();
        prop_assert_eq!(s.len(), t);
        prop_assert!(is_connected_subset(&g, &s));
        if t >= 2 {
            prop_assert!(induced_min_degree(&g, &s).unwrap() >= 1);
        }
    }

    #[test]
    fn every_algorithm_returns_t_nodes(g in arb_connected(40), t in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let t = t.index(g.node_count()) + 1;
        let ct = core_decompose(&g);
        let bound = upper_bound_k(&ct, t).unwrap();
        let results = [
            tsize_kcore(&g, t, &StrategyParams::top_down(), seed).unwrap(),
            tsize_kcore(&g, t, &StrategyParams::bottom_up(), seed).unwrap(),
            critical_search(&g, t, seed).unwrap(),
            s_greedy_search(&g, t, seed).unwrap(),
        ];
        for r in results {
            prop_assert_eq!(r.nodes.len(), t);
            prop_assert_eq!(r.core_number, induced_min_degree(&g, &r.nodes).unwrap());
            prop_assert!(r.core_number <= bound);
            prop_assert_eq!(r.upper_bound, bound);
            prop_assert_eq!(r.optimal, r.core_number == bound);
        }
    }

    #[test]
    fn heuristics_never_beat_the_oracle(g in arb_connected(11), seed in any::<u64>()) {
        for t in 1..=g.node_count() {
            let (best, _) = exact_spcs(&g, t).unwrap();
            for params in [StrategyParams::top_down(), StrategyParams::bottom_up()] {
                prop_assert!(tsize_kcore(&g, t, &params, seed).unwrap().core_number <= best);
            }
            prop_assert!(critical_search(&g, t, seed).unwrap().core_number <= best);
            prop_assert!(s_greedy_search(&g, t, seed).unwrap().core_number <= best);
        }
    }

    #[test]
    fn same_seed_same_answer(g in arb_connected(40), t in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let t = t.index(g.node_count()) + 1;
        for params in [StrategyParams::top_down(), StrategyParams::bottom_up()] {
            let a = tsize_kcore(&g, t, &params, seed).unwrap();
            let b = tsize_kcore(&g, t, &params, seed).unwrap();
            prop_assert_eq!(a.nodes, b.nodes);
        }
    }
}

/// When the maximal k̄-core is one clique and the optimum meets k̄, clique
/// peeling cannot miss it.
#[test]
fn top_down_is_exact_when_the_top_core_is_a_clique() {
    let mut checked = 0;
    for seed in 0..400u64 {
        let g = spcs_core::generate::gnp(10, 0.45, seed).largest_component();
        let n = g.node_count();
        if n < 3 {
            continue;
        }
        let ct = core_decompose(&g);
        for t in 2..=n {
            let bound = upper_bound_k(&ct, t).unwrap();
            let (best, _) = exact_spcs(&g, t).unwrap();
            let cores = maximal_k_cores(&g, &ct, bound);
            let single_clique = cores.len() == 1 && cores[0].len() == bound + 1;
            if best != bound || !single_clique {
                continue;
            }
            checked += 1;
            let top = (0..200)
                .map(|s| tsize_kcore(&g, t, &StrategyParams::top_down(), s).unwrap().core_number)
                .max()
                .unwrap();
            assert_eq!(top, best, "seed {seed}, t {t}");
        }
    }
    assert!(checked > 0);
}
