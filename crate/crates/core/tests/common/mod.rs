//! A deliberately plain reference implementation: adjacency matrices, `i64`
//! sums, and full `0..2^n` scans. It shares no code with the library beyond
//! reading arcs out of a `Digraph`.

#![allow(dead_code)]

use modf_core::{Digraph, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub struct Matrix {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Matrix {
    pub fn from_digraph(d: &Digraph) -> Self {
        let n = d.order();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in d.arcs() {
            adj[u][v] = true;
        }
        Matrix { n, adj }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let n = g.order();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Matrix { n, adj }
    }

    fn value(mask: u64, v: usize) -> i64 {
        if mask >> v & 1 == 1 {
            1
        } else {
            -1
        }
    }

    /// `f(N+[v])` for the function encoded by `mask`.
    pub fn closed_sum(&self, mask: u64, v: usize) -> i64 {
        let mut s = Self::value(mask, v);
        for u in 0..self.n {
            if self.adj[v][u] {
                s += Self::value(mask, u);
            }
        }
        s
    }

    pub fn is_majority(&self, mask: u64) -> bool {
        let sat = (0..self.n).filter(|&v| self.closed_sum(mask, v) >= 1).count();
        2 * sat >= self.n
    }

    pub fn weight(&self, mask: u64) -> i64 {
        2 * mask.count_ones() as i64 - self.n as i64
    }

    /// Minimum weight over all majority functions, with the smallest
    /// encoding attaining it.
    pub fn minimum(&self) -> (i64, u64) {
        let mut best: Option<(i64, u64)> = None;
        for mask in 0..1u64 << self.n {
            if self.is_majority(mask) {
                let w = self.weight(mask);
                if best.is_none_or(|(bw, _)| w < bw) {
                    best = Some((w, mask));
                }
            }
        }
        best.expect("all-positive always qualifies")
    }

    pub fn is_in_dominating(&self, set: u64) -> bool {
        (0..self.n).all(|v| set >> v & 1 == 1 || (0..self.n).any(|u| self.adj[v][u] && set >> u & 1 == 1))
    }

    /// Minimum in-dominating set size.
    pub fn gamma_minus(&self) -> usize {
        (0..1u64 << self.n)
            .filter(|&s| self.is_in_dominating(s))
            .map(|s| s.count_ones() as usize)
            .min()
            .expect("the whole vertex set in-dominates")
    }
}

pub fn naive_gamma_out(d: &Digraph) -> i64 {
    Matrix::from_digraph(d).minimum().0
}

pub fn naive_gamma_undirected(g: &Graph) -> i64 {
    Matrix::from_graph(g).minimum().0
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
