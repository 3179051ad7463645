//! Exact optimisation of majority domination parameters.

mod bb;
mod closed_form;
mod conjecture;
mod in_domination;
pub(crate) mod oracle;

use serde::Serialize;

use crate::digraph::Digraph;
use crate::error::{ModfError, Result};
use crate::sign::SignFunction;

pub use bb::gamma_maj_out_bb;
pub use closed_form::{closed_form, ClosedFormPrediction, FormulaId, Prediction, Quantity};
pub use conjecture::{
    bipartite_dom_prediction, is_indegree_monotone, regular_conjecture_certificate,
    reverify_counterexample, scan_conjecture_bipartite, scan_conjecture_regular,
    ConjectureId, ConjectureReport, ConjectureStatus, Counterexample, RegularSource,
    BIPARTITE_PRODUCT_CAP, TOURNAMENT_SCAN_CAP,
};
pub use in_domination::{check_gamma_minus_bound, gamma_minus, InDominationResult};
pub use oracle::{
    all_optimal_modfs, gamma_maj_out_oracle, gamma_maj_out_oracle_with, gamma_maj_undirected,
    gamma_maj_undirected_with, OracleOptions,
};

/// Hard cap on the order for `2^n` enumeration.
pub const ORACLE_CAP: usize = 26;

/// Hard cap on the order for branch-and-bound.
pub const BB_CAP: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Oracle,
    BranchAndBound,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::BranchAndBound => "branch-and-bound",
        }
    }
}

/// An optimum weight with a witness attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub optimum: i64,
    pub witness: SignFunction,
    /// Sign functions (oracle) or search nodes (branch-and-bound) visited.
    pub nodes_explored: u64,
    pub method: Method,
}

pub(crate) fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(ModfError::Empty);
    }
    if n > cap {
        return Err(ModfError::CapExceeded {
            what: "order",
            value: n,
            cap,
        });
    }
    Ok(())
}

/// `γ+maj(D) <= k`, decided by enumerating only sign functions with at most
/// `(k + n) / 2` positives. Falls back to branch-and-bound past the oracle cap.
pub fn modf_decision(d: &Digraph, k: i64) -> Result<bool> {
    let n = d.order();
    check_cap(n, BB_CAP)?;
    if k >= n as i64 {
        return Ok(true);
    }
    if k < -(n as i64) {
        return Ok(false);
    }
    if n > ORACLE_CAP {
        return Ok(gamma_maj_out_bb(d)?.optimum <= k);
    }
    // weight 2p - n <= k  <=>  p <= (k + n) / 2
    let max_positives = ((k + n as i64) / 2) as usize;
    Ok(oracle::first_modf_up_to(d, max_positives).is_some())
}

/// `γ+maj(D)` through whichever exact method fits the order.
pub fn gamma_maj_out(d: &Digraph) -> Result<SolveResult> {
    if d.order() <= ORACLE_CAP {
        gamma_maj_out_oracle(d)
    } else {
        gamma_maj_out_bb(d)
    }
}
