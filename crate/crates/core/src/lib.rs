//! Size-prescribed k-core search.
//!
//! Given a connected graph and a target size `t`, find `t` nodes whose
//! induced subgraph has the largest possible minimum degree. The crate
//! provides the graph type and edge-list reader, linear-time core
//! decomposition with the matching upper bound, the top-down and bottom-up
//! search strategies, two baselines and an exhaustive oracle for tiny
//! inputs.
//!
//! ```
//! use spcs_core::{fixtures, tsize_kcore, StrategyParams};
//!
//! let g = fixtures::k4_pendant();
//! let result = tsize_kcore(&g, 4, &StrategyParams::top_down(), 0).unwrap();
//! assert_eq!(result.core_number, 3);
//! assert!(result.optimal);
//! ```

mod clock;
mod local;

pub mod baselines;
pub mod decomp;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod search;

pub use baselines::{critical_search, critical_search_with, s_greedy_search, s_greedy_search_with};
pub use decomp::{
    core_decompose, maximal_k_cores, upper_bound, upper_bound_k, upper_bound_k_component, BoundMode, CorenessTable,
};
pub use error::{Error, Result};
pub use graph::{bfs_connected_subset, induced_min_degree, parse_edge_list, Graph, NodeSet};
pub use oracle::{exact_spcs, exact_spcs_with_budget, oracle_search_with};
pub use search::{
    tsize_kcore, tsize_kcore_with, Algorithm, CandidateOrder, GrowthRule, RemovalOrder, SearchResult, Strategy,
    StrategyParams,
};
