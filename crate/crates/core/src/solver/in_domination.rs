use serde::Serialize;

use super::{check_cap, ORACLE_CAP};
use crate::bitset::VertexSet;
use crate::digraph::Digraph;
use crate::domination::in_dominates;
use crate::error::{ModfError, Result};

/// `γ-(D)` with the smallest-encoding in-dominating set of that size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InDominationResult {
    pub size: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
}

/// Minimum in-dominating (absorbent) set by subset enumeration; `1 <= n <= 26`.
pub fn gamma_minus(d: &Digraph) -> Result<InDominationResult> {
    let n = d.order();
    check_cap(n, ORACLE_CAP)?;
    let out = d.out_sets();
    let mut nodes = 0;
    for k in 1..=n {
        // k-subsets in increasing encoding
        let mut x = (1u64 << k) - 1;
        while x < 1u64 << n {
            nodes += 1;
            let s = VertexSet::from_bits(x);
            if in_dominates(out, s) {
                return Ok(InDominationResult {
                    size: k,
                    witness: s,
                    nodes_explored: nodes,
                });
            }
            let c = x & x.wrapping_neg();
            let r = x + c;
            x = (((r ^ x) >> 2) / c) | r;
        }
    }
    unreachable!("the full vertex set is in-dominating")
}

/// `γ- <= ((δ+ + 1) / (2δ+ + 1)) n` for an out-regular digraph, checked as
/// `γ- (2δ+ + 1) <= (δ+ + 1) n`.
pub fn check_gamma_minus_bound(d: &Digraph) -> Result<bool> {
    let delta = d.regular_out_degree().ok_or(ModfError::NotOutRegular)?;
    let gamma = gamma_minus(d)?.size;
    Ok(gamma * (2 * delta + 1) <= (delta + 1) * d.order())
}
