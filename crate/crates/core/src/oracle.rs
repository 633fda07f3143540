//! Exhaustive solver for tiny instances. Enumerates every t-subset in
//! lexicographic order and keeps the first one with the best minimum
//! internal degree. Refuses outright when the subset count exceeds the
//! budget instead of approximating.

use crate::clock::Stopwatch;
use crate::decomp::{upper_bound, BoundMode, CorenessTable};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeSet};
use crate::search::{check_instance, Algorithm, SearchResult};

pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Best achievable core number over all size-`t` subsets and the
/// lexicographically smallest subset reaching it.
pub fn exact_spcs(g: &Graph, t: usize) -> Result<(usize, NodeSet)> {
    exact_spcs_with_budget(g, t, DEFAULT_BUDGET)
}

pub fn exact_spcs_with_budget(g: &Graph, t: usize, budget: u128) -> Result<(usize, NodeSet)> {
    let n = g.node_count();
    if t == 0 || t > n {
        return Err(Error::SizeOutOfRange { t, n });
    }
    let subsets = binomial(n, t);
    if subsets > budget {
        return Err(Error::BudgetExceeded { subsets, budget });
    }
    let (best, witness) = if n <= 128 {
        enumerate_masked(g, t)
    } else {
        enumerate_generic(g, t)
    };
    Ok((best, NodeSet::from_sorted(witness)))
}

/// Advances `c` to the next t-combination of `0..n`; false when exhausted.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let t = c.len();
    let Some(i) = (0..t).rev().find(|&i| c[i] < n - t + i) else {
        return false;
    };
    c[i] += 1;
    for j in i + 1..t {
        c[j] = c[j - 1] + 1;
    }
    true
}

fn enumerate_masked(g: &Graph, t: usize) -> (usize, Vec<usize>) {
    let n = g.node_count();
    let adjacency: Vec<u128> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u128, |m, &u| m | (1u128 << u)))
        .collect();
    let mut c: Vec<usize> = (0..t).collect();
    let mut best: Option<(usize, Vec<usize>)> = None;
    loop {
        let mask = c.iter().fold(0u128, |m, &v| m | (1u128 << v));
        let value = c
            .iter()
            .map(|&v| (adjacency[v] & mask).count_ones() as usize)
            .min()
            .unwrap_or(0);
        if best.as_ref().is_none_or(|(b, _)| value > *b) {
            best = Some((value, c.clone()));
            if value == t - 1 {
                break;
            }
        }
        if !next_combination(&mut c, n) {
            break;
        }
    }
    best.expect("at least one subset")
}

fn enumerate_generic(g: &Graph, t: usize) -> (usize, Vec<usize>) {
    let n = g.node_count();
    let mut inside = vec![false; n];
    let mut c: Vec<usize> = (0..t).collect();
    let mut best: Option<(usize, Vec<usize>)> = None;
    loop {
        for &v in &c {
            inside[v] = true;
        }
        let value = c
            .iter()
            .map(|&v| g.neighbors(v).iter().filter(|&&u| inside[u]).count())
            .min()
            .unwrap_or(0);
        for &v in &c {
            inside[v] = false;
        }
        if best.as_ref().is_none_or(|(b, _)| value > *b) {
            best = Some((value, c.clone()));
            if value == t - 1 {
                break;
            }
        }
        if !next_combination(&mut c, n) {
            break;
        }
    }
    best.expect("at least one subset")
}

/// The exhaustive solver packaged as a search result, for side-by-side
/// runs with the heuristics.
pub fn oracle_search_with(
    g: &Graph,
    ct: &CorenessTable,
    t: usize,
    mode: BoundMode,
    budget: u128,
    seed: u64,
) -> Result<SearchResult> {
    check_instance(g, ct, t)?;
    let clock = Stopwatch::start();
    let upper = upper_bound(g, ct, t, mode)?;
    let (_, witness) = exact_spcs_with_budget(g, t, budget)?;
    let elapsed = clock.elapsed();
    SearchResult::assemble(g, witness, t, upper, Algorithm::Oracle, false, elapsed, seed)
}
