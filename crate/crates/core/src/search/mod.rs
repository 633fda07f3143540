//! Size-prescribed k-core search.
//!
//! [`tsize_kcore`] walks k downward from the upper bound. At each level a
//! strategy proposes k-core candidates and then resizes them toward exactly
//! `t` nodes: the top-down strategy starts from the maximal k-cores and peels
//! nodes away, the bottom-up strategy starts from k-cores found inside random
//! `t`-subsets and grows them. When every level fails a breadth-first
//! connected set of size `t` is returned instead, so a result always exists
//! on a connected graph.

pub mod bottom_up;
pub mod top_down;

use std::time::Duration;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::clock::Stopwatch;
use crate::decomp::{core_decompose, upper_bound, BoundMode, CorenessTable};
use crate::error::{Error, Result};
use crate::graph::{bfs_connected_subset, induced_min_degree, Graph, NodeSet};

pub use bottom_up::{get_kcore_bu, size_refinement_bu};
pub use top_down::{get_kcore_td, size_refinement_td};

/// Random source used by every search; one per run, seeded from a `u64`.
pub type SearchRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SearchRng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    TopDown,
    BottomUp,
}

/// Order in which bottom-up candidates are grown.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CandidateOrder {
    #[default]
    LargestFirst,
    Random,
}

/// Which eligible outside node the bottom-up refinement adds next.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GrowthRule {
    /// Most neighbors inside the current set, ties uniformly at random.
    #[default]
    MaxInNeighbors,
    /// Uniform over all eligible nodes.
    RandomEligible,
}

/// Order in which the top-down refinement tries deleting nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RemovalOrder {
    #[default]
    Random,
    /// Smallest current induced degree first, ties by id.
    LowestDegreeFirst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrategyParams {
    pub strategy: Strategy,
    pub bu_candidate_order: CandidateOrder,
    pub bu_growth_rule: GrowthRule,
    pub td_removal_order: RemovalOrder,
    /// Full candidate/refinement rounds attempted at each k before moving on.
    pub max_restarts_per_k: usize,
    pub bound_mode: BoundMode,
}

impl Default for StrategyParams {
    fn default() -> Self {
        StrategyParams {
            strategy: Strategy::TopDown,
            bu_candidate_order: CandidateOrder::default(),
            bu_growth_rule: GrowthRule::default(),
            td_removal_order: RemovalOrder::default(),
            max_restarts_per_k: 1,
            bound_mode: BoundMode::default(),
        }
    }
}

impl StrategyParams {
    pub fn top_down() -> Self {
        Self::default()
    }

    pub fn bottom_up() -> Self {
        StrategyParams {
            strategy: Strategy::BottomUp,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_restarts_per_k == 0 {
            return Err(Error::Contract("max_restarts_per_k must be at least 1".into()));
        }
        Ok(())
    }
}

/// Every search routine this crate can run, as reported in results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    TopDown,
    BottomUp,
    Critical,
    /// Greedy growth baseline. This is a reconstruction of a greedy
    /// minimum-k-core heuristic adapted to a fixed size, not a port of a
    /// published implementation.
    SGreedy,
    Oracle,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::TopDown => "td",
            Algorithm::BottomUp => "bu",
            Algorithm::Critical => "critical",
            Algorithm::SGreedy => "sgreedy",
            Algorithm::Oracle => "oracle",
        }
    }

    /// True for baselines whose behavior was reconstructed rather than taken
    /// from a reference description.
    pub fn is_reconstruction(self) -> bool {
        matches!(self, Algorithm::SGreedy)
    }
}

impl From<Strategy> for Algorithm {
    fn from(s: Strategy) -> Self {
        match s {
            Strategy::TopDown => Algorithm::TopDown,
            Strategy::BottomUp => Algorithm::BottomUp,
        }
    }
}

/// Outcome of one search run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub nodes: NodeSet,
    /// Minimum degree of `G[nodes]`, recomputed from the graph.
    pub core_number: usize,
    pub upper_bound: usize,
    /// `core_number` reaches `upper_bound`, which certifies optimality.
    pub optimal: bool,
    pub algorithm: Algorithm,
    /// True when no level produced a k-core and the BFS set was returned.
    pub fallback: bool,
    pub elapsed: Duration,
    pub seed: u64,
}

impl SearchResult {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn assemble(
        g: &Graph,
        nodes: NodeSet,
        t: usize,
        upper_bound: usize,
        algorithm: Algorithm,
        fallback: bool,
        elapsed: Duration,
        seed: u64,
    ) -> Result<Self> {
        if nodes.len() != t {
            return Err(Error::Contract(format!(
                "{} produced {} nodes instead of {t}",
                algorithm.name(),
                nodes.len()
            )));
        }
        let core_number = induced_min_degree(g, &nodes)?;
        Ok(SearchResult {
            nodes,
            core_number,
            upper_bound,
            optimal: core_number >= upper_bound,
            algorithm,
            fallback,
            elapsed,
            seed,
        })
    }
}

/// Checks the shared preconditions of every search entry point.
pub(crate) fn check_instance(g: &Graph, ct: &CorenessTable, t: usize) -> Result<()> {
    let n = g.node_count();
    if ct.node_count() != n {
        return Err(Error::Contract("coreness table belongs to another graph".into()));
    }
    if t == 0 || t > n {
        return Err(Error::SizeOutOfRange { t, n });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Core levels worth searching, highest first. A t-node subgraph has
/// minimum degree at most t - 1, so levels above that are skipped.
pub(crate) fn search_levels(upper: usize, t: usize) -> impl Iterator<Item = usize> {
    (2..=upper.min(t.saturating_sub(1))).rev()
}

/// BFS set grown from a node of maximum coreness.
pub(crate) fn bfs_fallback(g: &Graph, ct: &CorenessTable, t: usize) -> Result<NodeSet> {
    let seed = ct.densest_node().ok_or(Error::EmptyGraph)?;
    bfs_connected_subset(g, seed, t)
}

/// Runs the search with the strategy in `params`, decomposing `g` first.
pub fn tsize_kcore(g: &Graph, t: usize, params: &StrategyParams, seed: u64) -> Result<SearchResult> {
    let ct = core_decompose(g);
    tsize_kcore_with(g, &ct, t, params, seed)
}

/// As [`tsize_kcore`], reusing a decomposition of `g`. The reported
/// elapsed time excludes the decomposition.
pub fn tsize_kcore_with(
    g: &Graph,
    ct: &CorenessTable,
    t: usize,
    params: &StrategyParams,
    seed: u64,
) -> Result<SearchResult> {
    params.validate()?;
    check_instance(g, ct, t)?;
    let clock = Stopwatch::start();
    let mut rng = seeded_rng(seed);
    let upper = upper_bound(g, ct, t, params.bound_mode)?;

    let found = if t == 1 {
        ct.densest_node().map(|v| NodeSet::from_sorted(vec![v]))
    } else {
        match params.strategy {
            Strategy::TopDown => top_down::search(g, ct, upper, t, params, &mut rng)?,
            Strategy::BottomUp => bottom_up::search(g, ct, upper, t, params, &mut rng)?,
        }
    };
    let (nodes, fallback) = match found {
        Some(nodes) => (nodes, false),
        None => (bfs_fallback(g, ct, t)?, true),
    };
    let elapsed = clock.elapsed();
    SearchResult::assemble(g, nodes, t, upper, params.strategy.into(), fallback, elapsed, seed)
}
