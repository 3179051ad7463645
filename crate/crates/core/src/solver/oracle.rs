//! Brute-force enumeration of sign functions.
//!
//! Functions are visited by number of positive vertices, and within one level
//! in increasing integer encoding (bit `i` set when vertex `i` is `+1`). The
//! first hit is therefore the minimum weight with the smallest encoding, the
//! same answer a scan of all `2^n` encodings with a `(weight, encoding)`
//! minimum would give.

use rayon::prelude::*;

use super::{check_cap, Method, SolveResult, ORACLE_CAP};
use crate::bitset::VertexSet;
use crate::digraph::{Digraph, Graph};
use crate::domination::{closed_out_sets, closed_sets, is_majority, satisfied_count};
use crate::error::Result;
use crate::sign::SignFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    /// Worker threads; 1 runs on the calling thread.
    pub threads: usize,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { threads: 1 }
    }
}

/// Next integer with the same popcount (Gosper's hack). `x` must be nonzero.
#[inline]
fn next_same_popcount(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Scans the `k`-subsets of `{0..m}`, each OR-ed with `high`, in increasing
/// order. Returns the first accepted mask and the number of masks tried.
fn scan_level<F>(m: usize, k: usize, high: u64, accept: &F) -> (Option<u64>, u64)
where
    F: Fn(u64) -> bool,
{
    if k > m {
        return (None, 0);
    }
    let mut tried = 0;
    if k == 0 {
        tried += 1;
        return (accept(high).then_some(high), tried);
    }
    let limit = 1u64 << m;
    let mut x = (1u64 << k) - 1;
    while x < limit {
        tried += 1;
        if accept(x | high) {
            return (Some(x | high), tried);
        }
        x = next_same_popcount(x);
    }
    (None, tried)
}

/// Smallest-encoding accepted mask among the `k`-subsets of `{0..n}`.
fn search_level<F>(n: usize, k: usize, accept: &F, threads: usize) -> (Option<u64>, u64)
where
    F: Fn(u64) -> bool + Sync,
{
    if threads <= 1 || k == 0 || n < 12 {
        return scan_level(n, k, 0, accept);
    }
    // Split by the highest set bit t; chunks are increasing in t, so the
    // smallest hit overall is the hit of the smallest t that has one.
    let chunks: Vec<(Option<u64>, u64)> = (k - 1..n)
        .into_par_iter()
        .map(|t| scan_level(t, k - 1, 1u64 << t, accept))
        .collect();
    let tried = chunks.iter().map(|c| c.1).sum();
    (chunks.iter().find_map(|c| c.0), tried)
}

fn minimize<F>(n: usize, max_positives: usize, accept: F, threads: usize) -> (Option<u64>, u64)
where
    F: Fn(u64) -> bool + Sync,
{
    let run = || {
        let mut tried = 0;
        for k in 0..=max_positives.min(n) {
            let (hit, t) = search_level(n, k, &accept, threads);
            tried += t;
            if hit.is_some() {
                return (hit, tried);
            }
        }
        (None, tried)
    };
    if threads > 1 {
        match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(run),
            Err(_) => run(),
        }
    } else {
        run()
    }
}

/// Smallest-encoding minimum positive set whose satisfied vertices (closed
/// neighborhoods `closed`) form a majority, with the number of masks tried.
pub(crate) fn min_positive_mask(closed: &[VertexSet], threads: usize) -> (u64, u64) {
    let n = closed.len();
    let accept = |mask: u64| is_majority(satisfied_count(closed, VertexSet::from_bits(mask)), n);
    let (hit, tried) = minimize(n, n, accept, threads);
    // The all-positive function always qualifies.
    (hit.expect("f = +1 everywhere is always feasible"), tried)
}

fn solve_closed(closed: &[VertexSet], threads: usize) -> SolveResult {
    let n = closed.len();
    let (mask, tried) = min_positive_mask(closed, threads);
    let witness = SignFunction::from_parts(n, VertexSet::from_bits(mask));
    SolveResult {
        optimum: witness.weight(),
        witness,
        nodes_explored: tried,
        method: Method::Oracle,
    }
}

/// `γ+maj(D)` by enumeration; `1 <= n <= 26`.
pub fn gamma_maj_out_oracle(d: &Digraph) -> Result<SolveResult> {
    gamma_maj_out_oracle_with(d, OracleOptions::default())
}

pub fn gamma_maj_out_oracle_with(d: &Digraph, opts: OracleOptions) -> Result<SolveResult> {
    check_cap(d.order(), ORACLE_CAP)?;
    Ok(solve_closed(&closed_out_sets(d), opts.threads))
}

/// `γmaj(G)` by enumeration over closed neighborhoods; `1 <= n <= 26`.
pub fn gamma_maj_undirected(g: &Graph) -> Result<SolveResult> {
    gamma_maj_undirected_with(g, OracleOptions::default())
}

pub fn gamma_maj_undirected_with(g: &Graph, opts: OracleOptions) -> Result<SolveResult> {
    check_cap(g.order(), ORACLE_CAP)?;
    Ok(solve_closed(&closed_sets(g), opts.threads))
}

/// First MODF (by positives count, then encoding) with at most
/// `max_positives` positive vertices. Assumes the caller checked the cap.
pub(crate) fn first_modf_up_to(d: &Digraph, max_positives: usize) -> Option<SignFunction> {
    let closed = closed_out_sets(d);
    let n = d.order();
    let accept = |mask: u64| is_majority(satisfied_count(&closed, VertexSet::from_bits(mask)), n);
    minimize(n, max_positives, accept, 1)
        .0
        .map(|m| SignFunction::from_parts(n, VertexSet::from_bits(m)))
}

/// `γ+maj(D)` together with every `γ+maj(D)`-function, in increasing encoding.
pub fn all_optimal_modfs(d: &Digraph) -> Result<(i64, Vec<SignFunction>)> {
    let best = gamma_maj_out_oracle(d)?;
    let n = d.order();
    let k = best.witness.positives().len();
    let closed = closed_out_sets(d);
    let mut all = Vec::new();
    let accept = |mask: u64| {
        if is_majority(satisfied_count(&closed, VertexSet::from_bits(mask)), n) {
            all.push(SignFunction::from_parts(n, VertexSet::from_bits(mask)));
        }
        false
    };
    let _ = scan_level_mut(n, k, accept);
    Ok((best.optimum, all))
}

fn scan_level_mut<F: FnMut(u64) -> bool>(m: usize, k: usize, mut accept: F) -> Option<u64> {
    if k == 0 {
        return accept(0).then_some(0);
    }
    let limit = 1u64 << m;
    let mut x = (1u64 << k) - 1;
    while x < limit {
        if accept(x) {
            return Some(x);
        }
        x = next_same_popcount(x);
    }
    None
}
