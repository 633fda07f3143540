//! Acceptance suite. Prints one PASS/FAIL/SKIP line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Reference values come from brute-force helpers defined here, never from
//! the library under test.

use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use spcs_bench::{run_on_graph, ExperimentConfig, TSpec};
use spcs_core::generate::{gnm, gnp};
use spcs_core::search::seeded_rng;
use spcs_core::{
    core_decompose, critical_search_with, exact_spcs, fixtures, parse_edge_list, s_greedy_search_with,
    tsize_kcore_with, upper_bound_k, Algorithm, BoundMode, Graph, SearchResult, StrategyParams,
};

enum Verdict {
    Pass(String),
    Fail(String),
    Skip(String),
}

type Criterion = (&'static str, fn() -> Verdict);

fn verdict(ok: bool, detail: String) -> Verdict {
    if ok {
        Verdict::Pass(detail)
    } else {
        Verdict::Fail(detail)
    }
}

fn min_internal_degree(g: &Graph, nodes: &[usize]) -> usize {
    nodes
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|u| nodes.contains(u)).count())
        .min()
        .unwrap_or(0)
}

fn naive_coreness(g: &Graph) -> Vec<usize> {
    let n = g.node_count();
    let mut coreness = vec![0; n];
    for k in 1..=n {
        let mut alive = vec![true; n];
        let mut changed = true;
        while changed {
            changed = false;
            for v in 0..n {
                if alive[v] && g.neighbors(v).iter().filter(|&&u| alive[u]).count() < k {
                    alive[v] = false;
                    changed = true;
                }
            }
        }
        if !alive.contains(&true) {
            break;
        }
        (0..n).filter(|&v| alive[v]).for_each(|v| coreness[v] = k);
    }
    coreness
}

fn naive_bound(coreness: &[usize], t: usize) -> usize {
    (0..=coreness.len())
        .take_while(|&k| coreness.iter().filter(|&&c| c >= k).count() >= t)
        .last()
        .unwrap_or(0)
}

/// Best induced minimum degree over all `t`-subsets, by bitmask.
fn brute_force_best(g: &Graph, t: usize) -> usize {
    let n = g.node_count();
    assert!(n <= 20);
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0, |m, &u| m | 1 << u))
        .collect();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != t {
            continue;
        }
        let worst = (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .map(|v| (adj[v] & mask).count_ones() as usize)
            .min()
            .unwrap_or(0);
        best = best.max(worst);
    }
    best
}

fn connected_gnp(rng: &mut impl Rng, sizes: std::ops::RangeInclusive<usize>, ps: &[f64]) -> Graph {
    loop {
        let n = rng.gen_range(sizes.clone());
        let p = *ps.choose(rng).unwrap();
        let g = gnp(n, p, rng.gen());
        if g.is_connected() {
            return g;
        }
    }
}

fn all_algorithms(g: &Graph, t: usize, seed: u64) -> Vec<SearchResult> {
    let ct = core_decompose(g);
    vec![
        tsize_kcore_with(g, &ct, t, &StrategyParams::top_down(), seed).unwrap(),
        tsize_kcore_with(g, &ct, t, &StrategyParams::bottom_up(), seed).unwrap(),
        critical_search_with(g, &ct, t, BoundMode::Total, seed).unwrap(),
        s_greedy_search_with(g, &ct, t, BoundMode::Total, seed).unwrap(),
    ]
}

fn feasibility() -> Verdict {
    let mut rng = seeded_rng(1);
    let mut violations = Vec::new();
    for instance in 0..1000 {
        let g = connected_gnp(&mut rng, 5..=60, &[0.1, 0.3, 0.5]);
        let t = rng.gen_range(1..=g.node_count());
        let bound = naive_bound(&naive_coreness(&g), t);
        for r in all_algorithms(&g, t, rng.gen()) {
            let nodes = r.nodes.members();
            let core = min_internal_degree(&g, nodes);
            if nodes.len() != t || core != r.core_number || core > bound {
                violations.push(format!(
                    "#{instance} {} size {} core {core} bound {bound}",
                    r.algorithm.name(),
                    nodes.len()
                ));
            }
        }
    }
    verdict(
        violations.is_empty(),
        format!(
            "{} violations over 1000 graphs x 4 algorithms {:?}",
            violations.len(),
            violations.first()
        ),
    )
}

fn decomposition() -> Verdict {
    let mut rng = seeded_rng(2);
    let mut mismatches = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=50);
        let g = gnp(n, rng.gen_range(0.02..0.5), rng.gen());
        if core_decompose(&g).as_slice() != naive_coreness(&g) {
            mismatches += 1;
        }
    }
    verdict(mismatches == 0, format!("{mismatches} of 200 graphs disagree"))
}

fn bound_soundness() -> Verdict {
    let mut rng = seeded_rng(3);
    let mut bad = 0;
    let mut checks = 0;
    for _ in 0..200 {
        let n = rng.gen_range(2..=12);
        let g = gnp(n, rng.gen_range(0.1..0.9), rng.gen());
        let ct = core_decompose(&g);
        for t in 1..=n {
            let best = brute_force_best(&g, t);
            let (oracle, _) = exact_spcs(&g, t).unwrap();
            checks += 1;
            if oracle != best || best > upper_bound_k(&ct, t).unwrap() {
                bad += 1;
            }
        }
    }
    verdict(bad == 0, format!("{bad} violations over {checks} (graph, t) pairs"))
}

fn majority_optimality() -> Verdict {
    let mut rng = seeded_rng(4);
    let mut hits = 0;
    for _ in 0..100 {
        let g = connected_gnp(&mut rng, 8..=12, &[0.3, 0.5, 0.7]);
        let n = g.node_count();
        let t = rng.gen_range(3..=n - 1);
        let best = brute_force_best(&g, t);
        let ct = core_decompose(&g);
        let top = (0..200)
            .map(|seed| {
                tsize_kcore_with(&g, &ct, t, &StrategyParams::top_down(), seed)
                    .unwrap()
                    .core_number
            })
            .max()
            .unwrap();
        hits += usize::from(top == best);
    }
    verdict(
        hits > 50,
        format!("best-of-200 top-down optimal on {hits}/100 instances (need > 50)"),
    )
}

fn fixed_constructions() -> Verdict {
    let cases = [
        ("k4-pendant", fixtures::k4_pendant(), 4, 3),
        ("K5", fixtures::clique(5), 3, 2),
        ("K6", fixtures::clique(6), 5, 4),
        ("octahedron", fixtures::octahedron(), 4, 2),
    ];
    let mut failures = Vec::new();
    for (name, g, t, expected) in cases {
        assert_eq!(brute_force_best(&g, t), expected, "{name} reference");
        let ct = core_decompose(&g);
        for params in [StrategyParams::top_down(), StrategyParams::bottom_up()] {
            for seed in 0..50 {
                let r = tsize_kcore_with(&g, &ct, t, &params, seed).unwrap();
                if r.core_number != expected || min_internal_degree(&g, r.nodes.members()) != expected {
                    failures.push(format!("{name} {:?} seed {seed}", params.strategy));
                }
            }
        }
    }
    verdict(
        failures.is_empty(),
        format!("{} failing runs of 400 {:?}", failures.len(), failures.first()),
    )
}

fn efficiency() -> Verdict {
    let g = gnm(20_000, 200_000, 6).largest_component();
    let mean_ms = |alg: Algorithm| {
        let config = ExperimentConfig {
            repetitions: 20,
            ..ExperimentConfig::new("er", alg, TSpec::Fraction(0.1))
        };
        let exp = run_on_graph(&config, "er".into(), g.clone()).unwrap();
        assert!(exp.rows.iter().all(|r| r.result.nodes.len() == exp.t));
        (
            exp.summary.mean_elapsed_ms,
            exp.summary.mean_core_number,
            exp.upper_bound,
        )
    };
    let (bu, bu_core, bound) = mean_ms(Algorithm::BottomUp);
    let (td, td_core, _) = mean_ms(Algorithm::TopDown);
    let (cr, cr_core, _) = mean_ms(Algorithm::Critical);
    verdict(
        bu < td && bu < cr,
        format!(
            "n={} m={} bound={bound}; mean ms bu {bu:.2} (core {bu_core}) td {td:.2} (core {td_core}) critical {cr:.2} (core {cr_core})",
            g.node_count(),
            g.edge_count()
        ),
    )
}

fn harness_lines(csv: &str) -> Vec<String> {
    csv.lines()
        .map(|line| {
            let mut fields: Vec<&str> = line.split(',').collect();
            fields.truncate(10);
            fields.join(",")
        })
        .collect()
}

fn determinism() -> Verdict {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("graph.txt");
    std::fs::write(&input, gnm(400, 3000, 7).to_edge_list()).unwrap();
    let mut problems = Vec::new();
    for algo in ["td", "bu", "critical", "sgreedy"] {
        let mut outputs = Vec::new();
        for attempt in 0..2 {
            let out = dir.path().join(format!("{algo}-{attempt}.csv"));
            let nodes = dir.path().join(format!("{algo}-{attempt}.nodes"));
            let status = Command::new(env!("CARGO_BIN_EXE_spcs-bench"))
                .args([
                    "--algo", algo, "--t-frac", "0.2", "--reps", "10", "--seed", "42", "--input",
                ])
                .arg(&input)
                .arg("--out")
                .arg(&out)
                .arg("--dump-nodes")
                .arg(&nodes)
                .output()
                .unwrap();
            if !status.status.success() {
                problems.push(format!("{algo} exited with {}", status.status));
            }
            let csv = std::fs::read_to_string(&out).unwrap_or_default();
            outputs.push((harness_lines(&csv), std::fs::read_to_string(&nodes).unwrap_or_default()));
        }
        if outputs[0] != outputs[1] || outputs[0].0.len() != 12 {
            problems.push(format!("{algo} differs between invocations"));
        }
    }
    verdict(
        problems.is_empty(),
        format!("4 algorithms x 2 invocations x 10 reps {problems:?}"),
    )
}

fn arenas_path() -> Option<PathBuf> {
    if let Some(p) = std::env::var_os("SPCS_ARENAS_PATH") {
        return Some(PathBuf::from(p));
    }
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..");
    [
        "data/arenas-email.txt",
        "data/out.arenas-email",
        "data/arenas-email/out.arenas-email",
        "data/email.txt",
    ]
    .iter()
    .map(|rel| root.join(rel))
    .find(|p| p.is_file())
}

fn arenas_ingestion() -> Verdict {
    let Some(path) = arenas_path() else {
        return Verdict::Skip("dataset not found; set SPCS_ARENAS_PATH or place it under data/".into());
    };
    let file = std::io::BufReader::new(std::fs::File::open(&path).unwrap());
    match parse_edge_list(file, true) {
        Ok(g) => verdict(
            g.node_count() == 1133 && g.edge_count() == 5451,
            format!(
                "{}: n={} m={} (expected 1133, 5451)",
                path.display(),
                g.node_count(),
                g.edge_count()
            ),
        ),
        Err(e) => Verdict::Fail(format!("{}: {e}", path.display())),
    }
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("feasibility of every algorithm", feasibility),
        ("decomposition matches iterated deletion", decomposition),
        ("upper bound dominates the optimum", bound_soundness),
        ("top-down optimal on most small instances", majority_optimality),
        ("exact on fixed constructions", fixed_constructions),
        ("bottom-up fastest on a large random graph", efficiency),
        ("harness runs are reproducible", determinism),
        ("arenas-email ingestion", arenas_ingestion),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (tag, detail) = match check() {
            Verdict::Pass(d) => ("PASS", d),
            Verdict::Fail(d) => {
                failed += 1;
                ("FAIL", d)
            }
            Verdict::Skip(d) => ("SKIP", d),
        };
        println!(
            "{tag} [{}] {name}: {detail} ({:.1}s)",
            i + 1,
            start.elapsed().as_secs_f64()
        );
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
