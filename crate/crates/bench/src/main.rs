use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, ValueEnum};
use spcs_bench::{run_experiment, BenchError, ExperimentConfig, TSpec};
use spcs_core::oracle::DEFAULT_BUDGET;
use spcs_core::{Algorithm, BoundMode, CandidateOrder, GrowthRule, RemovalOrder, StrategyParams};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Algo {
    Td,
    Bu,
    Critical,
    Sgreedy,
    Oracle,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Growth {
    Max,
    Random,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TdOrder {
    Random,
    Lowdeg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BuOrder {
    Largest,
    Random,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Bound {
    Total,
    Component,
}

/// Run a size-prescribed k-core search repeatedly and write one CSV row per run.
#[derive(Debug, Parser)]
#[command(name = "spcs-bench", version)]
#[command(group(ArgGroup::new("size").required(true).args(["t", "t_frac"])))]
struct Cli {
    /// Whitespace-separated edge list, one edge per line.
    #[arg(long, value_name = "PATH")]
    input: PathBuf,

    #[arg(long, value_enum)]
    algo: Algo,

    /// Target size in nodes.
    #[arg(long, value_name = "INT")]
    t: Option<usize>,

    /// Target size as a fraction of the node count, rounded half up.
    #[arg(long, value_name = "FLOAT")]
    t_frac: Option<f64>,

    #[arg(long, default_value_t = 200)]
    reps: usize,

    /// Seed of the first repetition; later ones count up from it.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Keep every component instead of only the largest one.
    #[arg(long)]
    no_lcc: bool,

    /// CSV destination; stdout when omitted.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Candidate rounds tried at each k before moving down.
    #[arg(long, default_value_t = 1)]
    restarts: usize,

    #[arg(long, value_enum, default_value = "max")]
    bu_growth: Growth,

    #[arg(long, value_enum, default_value = "random")]
    td_order: TdOrder,

    #[arg(long, value_enum, default_value = "largest")]
    bu_order: BuOrder,

    /// How the upper bound on the core number is computed.
    #[arg(long, value_enum, default_value = "total")]
    bound: Bound,

    /// Worker threads for the repetitions.
    #[arg(long, default_value_t = 1)]
    jobs: usize,

    /// Subset limit for the exhaustive oracle.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,

    /// Also write each run's node labels to this file.
    #[arg(long, value_name = "PATH")]
    dump_nodes: Option<PathBuf>,
}

impl Cli {
    fn config(&self) -> ExperimentConfig {
        let algorithm = match self.algo {
            Algo::Td => Algorithm::TopDown,
            Algo::Bu => Algorithm::BottomUp,
            Algo::Critical => Algorithm::Critical,
            Algo::Sgreedy => Algorithm::SGreedy,
            Algo::Oracle => Algorithm::Oracle,
        };
        let t_spec = match (self.t, self.t_frac) {
            (Some(t), _) => TSpec::Absolute(t),
            (None, Some(f)) => TSpec::Fraction(f),
            (None, None) => unreachable!("clap requires one of --t and --t-frac"),
        };
        let strategy_params = StrategyParams {
            bu_candidate_order: match self.bu_order {
                BuOrder::Largest => CandidateOrder::LargestFirst,
                BuOrder::Random => CandidateOrder::Random,
            },
            bu_growth_rule: match self.bu_growth {
                Growth::Max => GrowthRule::MaxInNeighbors,
                Growth::Random => GrowthRule::RandomEligible,
            },
            td_removal_order: match self.td_order {
                TdOrder::Random => RemovalOrder::Random,
                TdOrder::Lowdeg => RemovalOrder::LowestDegreeFirst,
            },
            max_restarts_per_k: self.restarts,
            bound_mode: match self.bound {
                Bound::Total => BoundMode::Total,
                Bound::Component => BoundMode::LargestComponent,
            },
            ..StrategyParams::default()
        };
        ExperimentConfig {
            input_path: self.input.clone(),
            algorithm,
            t_spec,
            repetitions: self.reps,
            base_seed: self.seed,
            lcc: !self.no_lcc,
            output_path: self.out.clone(),
            strategy_params,
            oracle_budget: self.budget,
            jobs: self.jobs,
        }
    }
}

fn create(path: &PathBuf) -> Result<BufWriter<File>, BenchError> {
    File::create(path).map(BufWriter::new).map_err(|source| BenchError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn run(cli: &Cli) -> Result<(), BenchError> {
    let config = cli.config();
    if config.algorithm.is_reconstruction() {
        eprintln!("note: sgreedy is a reconstructed greedy baseline, not a published implementation");
    }
    let experiment = run_experiment(&config)?;

    let io_err = |path: &str| {
        let path = path.to_string();
        move |source| BenchError::Io { path, source }
    };
    match &config.output_path {
        Some(path) => experiment
            .write_csv(create(path)?)
            .map_err(io_err(&path.display().to_string()))?,
        None => experiment.write_csv(io::stdout().lock()).map_err(io_err("stdout"))?,
    }
    if let Some(path) = &cli.dump_nodes {
        experiment
            .write_nodes(create(path)?)
            .map_err(io_err(&path.display().to_string()))?;
    }

    let s = &experiment.summary;
    let _ = writeln!(
        io::stderr(),
        "{} on {} (n={}, m={}, t={}, bound={}): mean core {:.3}, optimal {:.1}%, mean {:.3} ms",
        config.algorithm.name(),
        experiment.dataset,
        experiment.graph.node_count(),
        experiment.graph.edge_count(),
        experiment.t,
        experiment.upper_bound,
        s.mean_core_number,
        s.fraction_optimal * 100.0,
        s.mean_elapsed_ms,
    );
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
