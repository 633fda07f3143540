//! Repeated, seeded runs of one search algorithm on one graph, written out
//! as CSV rows plus a summary row.

mod error;

use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use rayon::prelude::*;
use spcs_core::oracle::DEFAULT_BUDGET;
use spcs_core::{
    core_decompose, critical_search_with, oracle_search_with, parse_edge_list, s_greedy_search_with, tsize_kcore_with,
    upper_bound, Algorithm, CorenessTable, Graph, SearchResult, Strategy, StrategyParams,
};

pub use error::BenchError;

pub const CSV_HEADER: [&str; 12] = [
    "dataset",
    "algorithm",
    "n",
    "m",
    "t",
    "rep",
    "seed",
    "core_number",
    "upper_bound",
    "optimal",
    "elapsed_ms",
    "decomp_ms",
];

/// Target size, either absolute or as a share of the node count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TSpec {
    Absolute(usize),
    Fraction(f64),
}

impl TSpec {
    /// Fractions are rounded half up and clamped to `[1, n]`.
    pub fn resolve(self, n: usize) -> Result<usize, BenchError> {
        match self {
            TSpec::Absolute(t) if (1..=n).contains(&t) => Ok(t),
            TSpec::Absolute(t) => Err(BenchError::Config(format!("t = {t} outside [1, {n}]"))),
            TSpec::Fraction(f) if f > 0.0 && f <= 1.0 => {
                let t = (f * n as f64 + 0.5).floor() as usize;
                Ok(t.clamp(1, n))
            }
            TSpec::Fraction(f) => Err(BenchError::Config(format!("fraction {f} outside (0, 1]"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub input_path: PathBuf,
    pub algorithm: Algorithm,
    pub t_spec: TSpec,
    pub repetitions: usize,
    pub base_seed: u64,
    pub lcc: bool,
    pub output_path: Option<PathBuf>,
    pub strategy_params: StrategyParams,
    pub oracle_budget: u128,
    /// Worker threads for the repetitions; 1 runs them in sequence.
    pub jobs: usize,
}

impl ExperimentConfig {
    pub fn new(input_path: impl Into<PathBuf>, algorithm: Algorithm, t_spec: TSpec) -> Self {
        Self {
            input_path: input_path.into(),
            algorithm,
            t_spec,
            repetitions: 200,
            base_seed: 0,
            lcc: true,
            output_path: None,
            strategy_params: StrategyParams::default(),
            oracle_budget: DEFAULT_BUDGET,
            jobs: 1,
        }
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        if self.repetitions == 0 {
            return Err(BenchError::Config("repetitions must be at least 1".into()));
        }
        if self.jobs == 0 {
            return Err(BenchError::Config("jobs must be at least 1".into()));
        }
        self.strategy_params
            .validate()
            .map_err(|e| BenchError::Config(e.to_string()))
    }

    fn dataset_name(&self) -> String {
        self.input_path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| self.input_path.display().to_string())
    }
}

/// Column label for an algorithm; the greedy baseline is marked as a
/// reconstruction wherever it appears.
pub fn algorithm_label(alg: Algorithm) -> &'static str {
    match alg {
        Algorithm::SGreedy => "sgreedy-reconstruction",
        other => other.name(),
    }
}

#[derive(Debug, Clone)]
pub struct RunRow {
    pub rep: usize,
    pub result: SearchResult,
}

impl RunRow {
    pub fn elapsed_ms(&self) -> f64 {
        millis(self.result.elapsed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Summary {
    pub mean_core_number: f64,
    pub fraction_optimal: f64,
    pub mean_elapsed_ms: f64,
}

impl Summary {
    fn of(rows: &[RunRow]) -> Self {
        let count = rows.len() as f64;
        let mean = |f: &dyn Fn(&RunRow) -> f64| rows.iter().map(f).sum::<f64>() / count;
        Self {
            mean_core_number: mean(&|r| r.result.core_number as f64),
            fraction_optimal: mean(&|r| if r.result.optimal { 1.0 } else { 0.0 }),
            mean_elapsed_ms: mean(&|r| r.elapsed_ms()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Experiment {
    pub dataset: String,
    pub algorithm: Algorithm,
    pub graph: Graph,
    pub t: usize,
    pub upper_bound: usize,
    pub decomp_elapsed: Duration,
    pub rows: Vec<RunRow>,
    pub summary: Summary,
}

pub fn load_graph(path: &Path, lcc: bool) -> Result<Graph, BenchError> {
    let shown = path.display().to_string();
    let file = File::open(path).map_err(|source| BenchError::Io {
        path: shown.clone(),
        source,
    })?;
    parse_edge_list(BufReader::new(file), lcc).map_err(|source| match source {
        spcs_core::Error::Io(source) => BenchError::Io { path: shown, source },
        source => BenchError::Parse { path: shown, source },
    })
}

/// Loads and decomposes the graph once, then runs every repetition with
/// seeds `base_seed, base_seed + 1, ...`.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Experiment, BenchError> {
    config.validate()?;
    let graph = load_graph(&config.input_path, config.lcc)?;
    run_on_graph(config, config.dataset_name(), graph)
}

/// As [`run_experiment`] on an already loaded graph.
pub fn run_on_graph(config: &ExperimentConfig, dataset: String, graph: Graph) -> Result<Experiment, BenchError> {
    config.validate()?;
    let t = config.t_spec.resolve(graph.node_count())?;

    let start = std::time::Instant::now();
    let ct = core_decompose(&graph);
    let decomp_elapsed = start.elapsed();

    let mut params = config.strategy_params;
    match config.algorithm {
        Algorithm::TopDown => params.strategy = Strategy::TopDown,
        Algorithm::BottomUp => params.strategy = Strategy::BottomUp,
        _ => {}
    }
    let bound = upper_bound(&graph, &ct, t, params.bound_mode).map_err(BenchError::from_search)?;

    let run = |rep: usize| -> Result<RunRow, BenchError> {
        let seed = config.base_seed.wrapping_add(rep as u64);
        let result = run_once(&graph, &ct, t, config.algorithm, &params, config.oracle_budget, seed)
            .map_err(BenchError::from_search)?;
        Ok(RunRow { rep, result })
    };

    let rows: Vec<RunRow> = if config.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| BenchError::Config(e.to_string()))?;
        pool.install(|| {
            (0..config.repetitions)
                .into_par_iter()
                .map(run)
                .collect::<Result<_, _>>()
        })?
    } else {
        (0..config.repetitions).map(run).collect::<Result<_, _>>()?
    };

    let summary = Summary::of(&rows);
    Ok(Experiment {
        dataset,
        algorithm: config.algorithm,
        graph,
        t,
        upper_bound: bound,
        decomp_elapsed,
        rows,
        summary,
    })
}

pub fn run_once(
    g: &Graph,
    ct: &CorenessTable,
    t: usize,
    algorithm: Algorithm,
    params: &StrategyParams,
    budget: u128,
    seed: u64,
) -> spcs_core::Result<SearchResult> {
    match algorithm {
        Algorithm::TopDown | Algorithm::BottomUp => tsize_kcore_with(g, ct, t, params, seed),
        Algorithm::Critical => critical_search_with(g, ct, t, params.bound_mode, seed),
        Algorithm::SGreedy => s_greedy_search_with(g, ct, t, params.bound_mode, seed),
        Algorithm::Oracle => oracle_search_with(g, ct, t, params.bound_mode, budget, seed),
    }
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1000.0
}

impl Experiment {
    /// Header, one row per repetition, then the summary row.
    pub fn write_csv<W: Write>(&self, out: W) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(CSV_HEADER)?;
        let label = algorithm_label(self.algorithm);
        let (n, m) = (self.graph.node_count().to_string(), self.graph.edge_count().to_string());
        let t = self.t.to_string();
        let decomp = millis(self.decomp_elapsed).to_string();
        for row in &self.rows {
            let r = &row.result;
            w.write_record([
                self.dataset.as_str(),
                label,
                &n,
                &m,
                &t,
                &row.rep.to_string(),
                &r.seed.to_string(),
                &r.core_number.to_string(),
                &r.upper_bound.to_string(),
                if r.optimal { "true" } else { "false" },
                &row.elapsed_ms().to_string(),
                &decomp,
            ])?;
        }
        let s = &self.summary;
        w.write_record([
            self.dataset.as_str(),
            label,
            &n,
            &m,
            &t,
            "summary",
            "",
            &s.mean_core_number.to_string(),
            &self.upper_bound.to_string(),
            &s.fraction_optimal.to_string(),
            &s.mean_elapsed_ms.to_string(),
            &decomp,
        ])?;
        w.flush()
    }

    /// One line per repetition: `rep` followed by the node labels.
    pub fn write_nodes<W: Write>(&self, mut out: W) -> io::Result<()> {
        for row in &self.rows {
            write!(out, "{}", row.rep)?;
            for label in row.result.nodes.labels(&self.graph) {
                write!(out, " {label}")?;
            }
            writeln!(out)?;
        }
        out.flush()
    }
}
