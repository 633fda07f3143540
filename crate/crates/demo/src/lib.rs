//! Browser bindings: load a graph, look for a `t`-node subgraph with high
//! minimum degree, and sweep `t` to see how the best core number falls.
//!
//! [`Session`] does the work and is usable from Rust; [`DemoGraph`] wraps it
//! for JavaScript and hands results over as JSON strings.

use serde::Serialize;
use spcs_core::{
    core_decompose, critical_search_with, generate, oracle::DEFAULT_BUDGET, oracle_search_with, parse_edge_list,
    s_greedy_search_with, tsize_kcore_with, upper_bound_k, BoundMode, CorenessTable, Graph, SearchResult,
    StrategyParams,
};
use wasm_bindgen::prelude::*;

/// Most nodes the demo will lay out and search.
pub const MAX_NODES: usize = 2000;

#[derive(Debug, Serialize)]
pub struct Overview {
    pub n: usize,
    pub m: usize,
    pub labels: Vec<String>,
    pub edges: Vec<(usize, usize)>,
    pub coreness: Vec<usize>,
    pub degeneracy: usize,
}

#[derive(Debug, Serialize)]
pub struct Found {
    pub algorithm: &'static str,
    pub t: usize,
    pub nodes: Vec<usize>,
    pub core_number: usize,
    pub upper_bound: usize,
    pub optimal: bool,
    pub fallback: bool,
    pub reconstruction: bool,
}

#[derive(Debug, Serialize)]
pub struct SweepPoint {
    pub t: usize,
    pub upper_bound: usize,
    pub core_number: usize,
}

pub struct Session {
    graph: Graph,
    coreness: CorenessTable,
}

impl Session {
    /// Parses an edge list and keeps its largest component.
    pub fn parse(text: &str) -> Result<Self, String> {
        let graph = parse_edge_list(text.as_bytes(), true).map_err(|e| e.to_string())?;
        Self::from_graph(graph)
    }

    /// A connected `G(n, p)` sample; falls back to the largest component.
    pub fn random(n: usize, p: f64, seed: u64) -> Result<Self, String> {
        if !(2..=MAX_NODES).contains(&n) {
            return Err(format!("node count must be between 2 and {MAX_NODES}"));
        }
        let graph =
            generate::gnp_connected(n, p, seed, 20).unwrap_or_else(|| generate::gnp(n, p, seed).largest_component());
        if graph.edge_count() == 0 {
            return Err("sample has no edges; raise p".into());
        }
        Self::from_graph(graph)
    }

    fn from_graph(graph: Graph) -> Result<Self, String> {
        if graph.node_count() > MAX_NODES {
            return Err(format!(
                "{} nodes is more than the demo handles ({MAX_NODES})",
                graph.node_count()
            ));
        }
        let coreness = core_decompose(&graph);
        Ok(Self { graph, coreness })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn overview(&self) -> Overview {
        Overview {
            n: self.graph.node_count(),
            m: self.graph.edge_count(),
            labels: self.graph.labels().to_vec(),
            edges: self.graph.edges().collect(),
            coreness: self.coreness.as_slice().to_vec(),
            degeneracy: self.coreness.degeneracy(),
        }
    }

    fn run(&self, algorithm: &str, t: usize, seed: u64) -> Result<SearchResult, String> {
        let (g, ct) = (&self.graph, &self.coreness);
        let result = match algorithm {
            "td" => tsize_kcore_with(g, ct, t, &StrategyParams::top_down(), seed),
            "bu" => tsize_kcore_with(g, ct, t, &StrategyParams::bottom_up(), seed),
            "critical" => critical_search_with(g, ct, t, BoundMode::Total, seed),
            "sgreedy" => s_greedy_search_with(g, ct, t, BoundMode::Total, seed),
            "oracle" => oracle_search_with(g, ct, t, BoundMode::Total, DEFAULT_BUDGET, seed),
            other => return Err(format!("unknown algorithm {other:?}")),
        };
        result.map_err(|e| e.to_string())
    }

    pub fn search(&self, algorithm: &str, t: usize, seed: u64) -> Result<Found, String> {
        let r = self.run(algorithm, t, seed)?;
        Ok(Found {
            algorithm: r.algorithm.name(),
            t,
            nodes: r.nodes.members().to_vec(),
            core_number: r.core_number,
            upper_bound: r.upper_bound,
            optimal: r.optimal,
            fallback: r.fallback,
            reconstruction: r.algorithm.is_reconstruction(),
        })
    }

    /// Best core number over `runs` seeds at up to `points` evenly spaced
    /// sizes, next to the upper bound at each size.
    pub fn sweep(&self, algorithm: &str, runs: u64, points: usize) -> Result<Vec<SweepPoint>, String> {
        let n = self.graph.node_count();
        let step = n.div_ceil(points.max(1)).max(1);
        let mut sizes: Vec<usize> = (1..=n).step_by(step).collect();
        if sizes.last() != Some(&n) {
            sizes.push(n);
        }
        sizes
            .into_iter()
            .map(|t| {
                let mut best = 0;
                for seed in 0..runs.max(1) {
                    best = best.max(self.run(algorithm, t, seed)?.core_number);
                }
                let upper_bound = upper_bound_k(&self.coreness, t).map_err(|e| e.to_string())?;
                Ok(SweepPoint {
                    t,
                    upper_bound,
                    core_number: best,
                })
            })
            .collect()
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

#[wasm_bindgen]
pub struct DemoGraph {
    session: Session,
}

#[wasm_bindgen]
impl DemoGraph {
    #[wasm_bindgen(js_name = fromEdgeList)]
    pub fn from_edge_list(text: &str) -> Result<DemoGraph, JsError> {
        Session::parse(text)
            .map(|session| DemoGraph { session })
            .map_err(|e| JsError::new(&e))
    }

    pub fn random(n: usize, p: f64, seed: u64) -> Result<DemoGraph, JsError> {
        Session::random(n, p, seed)
            .map(|session| DemoGraph { session })
            .map_err(|e| JsError::new(&e))
    }

    /// Nodes, edges and coreness as JSON.
    pub fn overview(&self) -> String {
        to_json(&self.session.overview())
    }

    #[wasm_bindgen(js_name = edgeList)]
    pub fn edge_list(&self) -> String {
        self.session.graph().to_edge_list()
    }

    pub fn search(&self, algorithm: &str, t: usize, seed: u64) -> Result<String, JsError> {
        self.session
            .search(algorithm, t, seed)
            .map(|f| to_json(&f))
            .map_err(|e| JsError::new(&e))
    }

    pub fn sweep(&self, algorithm: &str, runs: u64, points: usize) -> Result<String, JsError> {
        self.session
            .sweep(algorithm, runs, points)
            .map(|s| to_json(&s))
            .map_err(|e| JsError::new(&e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PENDANT: &str = "a b\na c\na d\nb c\nb d\nc d\nd e\ne f\n";

    #[test]
    fn overview_reports_coreness() {
        let s = Session::parse(PENDANT).unwrap();
        let o = s.overview();
        assert_eq!((o.n, o.m, o.degeneracy), (6, 8, 3));
        assert_eq!(o.coreness, [3, 3, 3, 3, 1, 1]);
        assert!(to_json(&o).contains("\"labels\":[\"a\""));
    }

    #[test]
    fn search_finds_the_clique() {
        let s = Session::parse(PENDANT).unwrap();
        for alg in ["td", "bu", "critical", "sgreedy", "oracle"] {
            let f = s.search(alg, 4, 1).unwrap();
            assert_eq!(f.nodes, [0, 1, 2, 3], "{alg}");
            assert!(f.optimal);
            assert_eq!(f.reconstruction, alg == "sgreedy");
        }
        assert!(s.search("nope", 4, 1).is_err());
        assert!(s.search("td", 7, 1).is_err());
    }

    #[test]
    fn sweep_stays_under_the_bound() {
        let s = Session::random(40, 0.2, 3).unwrap();
        let n = s.graph().node_count();
        let curve = s.sweep("td", 3, 10).unwrap();
        assert_eq!(curve.first().unwrap().t, 1);
        assert_eq!(curve.last().unwrap().t, n);
        assert!(curve.iter().all(|p| p.core_number <= p.upper_bound));
        assert!(curve.windows(2).all(|w| w[0].upper_bound >= w[1].upper_bound));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Session::parse("").is_err());
        assert!(Session::random(1, 0.5, 0).is_err());
        assert!(Session::random(MAX_NODES + 1, 0.5, 0).is_err());
    }
}
