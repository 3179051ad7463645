//! Evidence scanners for two open conjectures: in-degree monotone optimal
//! functions on digraphs with regular underlying graph, and the value of
//! `DOM+maj(K_{r,s})`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::digraph::Digraph;
use crate::domination::is_modf;
use crate::error::{ModfError, Result};
use crate::families::{complete_bipartite_graph, complete_digraph, directed_cycle};
use crate::generate::{random_orientation, random_regular_graph, score_sorted_tournaments};
use crate::orientations::{dom_range, enumerate_orientations};
use crate::sign::SignFunction;
use crate::solver::{all_optimal_modfs, gamma_maj_out_bb};

/// Largest tournament order the exhaustive regular scan accepts.
pub const TOURNAMENT_SCAN_CAP: usize = 8;
/// Largest `r * s` the bipartite scan accepts.
pub const BIPARTITE_PRODUCT_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjectureId {
    RegularIndegreeMonotone,
    BipartiteDom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjectureStatus {
    NoCounterexample,
    CounterexampleFound,
}

/// Where the regular scan draws its digraphs from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum RegularSource {
    /// Every tournament of order `1..=max_n`, up to relabelling by score.
    AllTournaments,
    /// Directed cycles, complete digraphs and rotational tournaments.
    Fixtures,
    /// Random orientations of random regular graphs.
    RandomRegularUnderlying { seed: u64, samples: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Counterexample {
    /// No optimal function of `digraph` is in-degree monotone.
    Regular {
        digraph: Digraph,
        optimum: i64,
        optimal_functions: usize,
    },
    /// `DOM+maj(K_{r,s})` differs from the prediction. `witness` attains
    /// `dom_max`.
    Bipartite {
        r: usize,
        s: usize,
        dom_max: i64,
        predicted: i64,
        witness: Digraph,
    },
}

/// One scanned `(r, s)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BipartiteRow {
    pub r: usize,
    pub s: usize,
    pub dom_max: i64,
    pub predicted: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub conjecture: ConjectureId,
    pub instances_checked: u64,
    pub status: ConjectureStatus,
    /// The first counterexample that survived re-verification.
    pub counterexample: Option<Counterexample>,
    pub counterexamples_found: u64,
    /// Empty for the regular conjecture.
    pub rows: Vec<BipartiteRow>,
}

impl ConjectureReport {
    fn new(conjecture: ConjectureId) -> Self {
        ConjectureReport {
            conjecture,
            instances_checked: 0,
            status: ConjectureStatus::NoCounterexample,
            counterexample: None,
            counterexamples_found: 0,
            rows: Vec::new(),
        }
    }

    fn record(&mut self, c: Counterexample) -> Result<()> {
        if !reverify_counterexample(&c)? {
            return Err(ModfError::InvalidInstance(format!(
                "counterexample failed re-verification: {c:?}"
            )));
        }
        self.counterexamples_found += 1;
        self.status = ConjectureStatus::CounterexampleFound;
        self.counterexample.get_or_insert(c);
        Ok(())
    }
}

/// `f(u) = -1` and `f(v) = +1` imply `d-(u) <= d-(v)`.
pub fn is_indegree_monotone(d: &Digraph, f: &SignFunction) -> bool {
    let pos = f.positives();
    let neg = f.negatives();
    let max_neg = neg.iter().map(|v| d.in_degree(v)).max();
    let min_pos = pos.iter().map(|v| d.in_degree(v)).min();
    match (max_neg, min_pos) {
        (Some(a), Some(b)) => a <= b,
        _ => true,
    }
}

/// An optimal function of `d` that is in-degree monotone, if any.
pub fn regular_conjecture_certificate(d: &Digraph) -> Result<Option<SignFunction>> {
    let (_, optima) = all_optimal_modfs(d)?;
    Ok(optima.into_iter().find(|f| is_indegree_monotone(d, f)))
}

fn has_regular_underlying(d: &Digraph) -> bool {
    let total: Vec<usize> = (0..d.order()).map(|v| d.in_degree(v) + d.out_degree(v)).collect();
    total.windows(2).all(|w| w[0] == w[1])
}

fn each_with_popcount(n: usize, k: usize, mut visit: impl FnMut(VertexSet) -> bool) {
    if k > n {
        return;
    }
    if k == 0 {
        visit(VertexSet::EMPTY);
        return;
    }
    let end = 1u64 << n;
    let mut x = (1u64 << k) - 1;
    while x < end {
        if !visit(VertexSet::from_bits(x)) {
            return;
        }
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
}

/// Checks a counterexample again through a separate route: branch-and-bound
/// for optimal values and the plain domination predicate for feasibility.
pub fn reverify_counterexample(c: &Counterexample) -> Result<bool> {
    match c {
        Counterexample::Regular { digraph, optimum, .. } => {
            if !has_regular_underlying(digraph) {
                return Ok(false);
            }
            let n = digraph.order();
            if gamma_maj_out_bb(digraph)?.optimum != *optimum {
                return Ok(false);
            }
            let positives = ((optimum + n as i64) / 2) as usize;
            let mut conforming = false;
            let mut failure = None;
            each_with_popcount(n, positives, |p| {
                let f = SignFunction::from_parts(n, p);
                match is_modf(digraph, &f) {
                    Ok(true) if is_indegree_monotone(digraph, &f) => {
                        conforming = true;
                        false
                    }
                    Ok(_) => true,
                    Err(e) => {
                        failure = Some(e);
                        false
                    }
                }
            });
            if let Some(e) = failure {
                return Err(e);
            }
            Ok(!conforming)
        }
        Counterexample::Bipartite {
            r,
            s,
            dom_max,
            predicted,
            witness,
        } => {
            if dom_max == predicted || *r < 2 || r > s {
                return Ok(false);
            }
            let g = complete_bipartite_graph(*r, *s)?;
            if !witness.is_orientation_of(&g) || gamma_maj_out_bb(witness)?.optimum != *dom_max {
                return Ok(false);
            }
            let mut max = i64::MIN;
            for o in enumerate_orientations(&g)? {
                max = max.max(gamma_maj_out_bb(&o)?.optimum);
            }
            Ok(max == *dom_max)
        }
    }
}

fn rotational_tournament(n: usize) -> Result<Digraph> {
    let half = (n - 1) / 2;
    Digraph::from_arcs(
        n,
        (0..n).flat_map(|i| (1..=half).map(move |j| (i, (i + j) % n))),
    )
}

fn regular_candidates(max_n: usize, source: RegularSource) -> Result<Box<dyn Iterator<Item = Digraph>>> {
    match source {
        RegularSource::AllTournaments => {
            if max_n > TOURNAMENT_SCAN_CAP {
                return Err(ModfError::CapExceeded {
                    what: "tournament order",
                    value: max_n,
                    cap: TOURNAMENT_SCAN_CAP,
                });
            }
            Ok(Box::new((1..=max_n).flat_map(score_sorted_tournaments)))
        }
        RegularSource::Fixtures => {
            let mut out = Vec::new();
            for n in 1..=max_n {
                if n >= 3 {
                    out.push(directed_cycle(n)?);
                }
                if n % 2 == 1 {
                    out.push(rotational_tournament(n)?);
                }
                out.push(complete_digraph(n)?);
            }
            Ok(Box::new(out.into_iter()))
        }
        RegularSource::RandomRegularUnderlying { seed, samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut out = Vec::new();
            let shapes: Vec<(usize, usize)> = (3..=max_n)
                .flat_map(|n| (1..n).filter(move |c| n * c % 2 == 0).map(move |c| (n, c)))
                .collect();
            if shapes.is_empty() {
                return Ok(Box::new(out.into_iter()));
            }
            let mut i = 0;
            let mut misses = 0;
            while out.len() < samples && misses < 100 * samples.max(1) {
                let (n, c) = shapes[i % shapes.len()];
                i += 1;
                match random_regular_graph(n, c, &mut rng) {
                    Some(g) => out.push(random_orientation(&g, &mut rng)),
                    None => misses += 1,
                }
            }
            Ok(Box::new(out.into_iter()))
        }
    }
}

/// Looks for digraphs with regular underlying graph where no optimal function
/// is in-degree monotone. Every optimum is examined, not just one.
pub fn scan_conjecture_regular(max_n: usize, source: RegularSource) -> Result<ConjectureReport> {
    let mut report = ConjectureReport::new(ConjectureId::RegularIndegreeMonotone);
    for d in regular_candidates(max_n, source)? {
        debug_assert!(has_regular_underlying(&d));
        report.instances_checked += 1;
        let (optimum, optima) = all_optimal_modfs(&d)?;
        if !optima.iter().any(|f| is_indegree_monotone(&d, f)) {
            report.record(Counterexample::Regular {
                digraph: d,
                optimum,
                optimal_functions: optima.len(),
            })?;
        }
    }
    Ok(report)
}

/// Predicted `DOM+maj(K_{r,s})`: 2 when `r + s` is even, 3 otherwise.
pub fn bipartite_dom_prediction(r: usize, s: usize) -> i64 {
    if (r + s).is_multiple_of(2) {
        2
    } else {
        3
    }
}

/// Computes `DOM+maj(K_{r,s})` by full orientation enumeration for every
/// `2 <= r <= s <= max_rs` with `r * s <= max_product`.
pub fn scan_conjecture_bipartite(max_rs: usize, max_product: usize) -> Result<ConjectureReport> {
    if max_product > BIPARTITE_PRODUCT_CAP {
        return Err(ModfError::CapExceeded {
            what: "r * s",
            value: max_product,
            cap: BIPARTITE_PRODUCT_CAP,
        });
    }
    let mut report = ConjectureReport::new(ConjectureId::BipartiteDom);
    for r in 2..=max_rs {
        for s in r..=max_rs {
            if r * s > max_product {
                continue;
            }
            let g = complete_bipartite_graph(r, s)?;
            let result = dom_range(&g)?;
            let predicted = bipartite_dom_prediction(r, s);
            report.instances_checked += 1;
            report.rows.push(BipartiteRow {
                r,
                s,
                dom_max: result.dom_max,
                predicted,
            });
            if result.dom_max != predicted {
                report.record(Counterexample::Bipartite {
                    r,
                    s,
                    dom_max: result.dom_max,
                    predicted,
                    witness: result.dom_max_witness,
                })?;
            }
        }
    }
    Ok(report)
}
