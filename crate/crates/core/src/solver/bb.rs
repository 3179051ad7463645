//! Branch-and-bound for `γ+maj`.
//!
//! Vertices are fixed in order of decreasing total degree, trying `-1` before
//! `+1`. A node is cut when
//! * its positives already number at least the incumbent's, or
//! * fewer than `⌈n/2⌉` vertices can still be satisfied by any completion,
//!   counting `v` as lost once `N+[v]` cannot reach a positive sum even with
//!   every unassigned vertex set to `+1`.
//!
//! When the partial positives alone (all unassigned set to `-1`) already form
//! a MODF, that completion is optimal for the subtree and is recorded.

use super::{check_cap, Method, SolveResult, BB_CAP};
use crate::bitset::VertexSet;
use crate::digraph::Digraph;
use crate::domination::closed_out_sets;
use crate::error::Result;
use crate::sign::SignFunction;

struct Search {
    n: usize,
    order: Vec<usize>,
    closed: Vec<VertexSet>,
    required_satisfied: usize,
    best_positives: VertexSet,
    nodes: u64,
}

impl Search {
    /// Number of vertices that some completion of (`assigned`, `positives`)
    /// can still satisfy, and the number satisfied with unassigned at `-1`.
    fn counts(&self, unassigned: VertexSet, positives: VertexSet) -> (usize, usize) {
        let mut possible = 0;
        let mut now = 0;
        for &nb in &self.closed {
            let pos = (nb & positives).len();
            let free = (nb & unassigned).len();
            if 2 * (pos + free) > nb.len() {
                possible += 1;
            }
            if 2 * pos > nb.len() {
                now += 1;
            }
        }
        (possible, now)
    }

    fn visit(&mut self, depth: usize, unassigned: VertexSet, positives: VertexSet) {
        self.nodes += 1;
        if positives.len() >= self.best_positives.len() {
            return;
        }
        let (possible, now) = self.counts(unassigned, positives);
        if possible < self.required_satisfied {
            return;
        }
        if now >= self.required_satisfied {
            self.best_positives = positives;
            return;
        }
        if depth == self.n {
            return;
        }
        let v = self.order[depth];
        let rest = unassigned.without(v);
        self.visit(depth + 1, rest, positives);
        self.visit(depth + 1, rest, positives.with(v));
    }
}

/// `γ+maj(D)` by branch-and-bound; `1 <= n <= 40`.
pub fn gamma_maj_out_bb(d: &Digraph) -> Result<SolveResult> {
    let n = d.order();
    check_cap(n, BB_CAP)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(d.out_degree(v) + d.in_degree(v)), v));
    let mut search = Search {
        n,
        order,
        closed: closed_out_sets(d),
        required_satisfied: n.div_ceil(2),
        best_positives: VertexSet::full(n),
        nodes: 0,
    };
    // The all-positive function is the initial incumbent; the search only
    // looks for strictly fewer positives.
    search.visit(0, VertexSet::full(n), VertexSet::EMPTY);
    let witness = SignFunction::from_parts(n, search.best_positives);
    Ok(SolveResult {
        optimum: witness.weight(),
        witness,
        nodes_explored: search.nodes,
        method: Method::BranchAndBound,
    })
}
