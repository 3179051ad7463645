//! Seeded fixtures shared by the benchmarks.

use modf_core::generate::{random_digraph, random_out_regular};
use modf_core::Digraph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x6d6f_6466;

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ salt)
}

/// `count` digraphs of order `n` with arc probability `p`, the same on every run.
pub fn random_digraphs(n: usize, p: f64, count: usize) -> Vec<Digraph> {
    let mut rng = rng(n as u64);
    (0..count).map(|_| random_digraph(n, p, &mut rng)).collect()
}

pub fn random_out_regular_digraphs(n: usize, d: usize, count: usize) -> Vec<Digraph> {
    let mut rng = rng(((n as u64) << 8) | d as u64);
    (0..count).map(|_| random_out_regular(n, d, &mut rng)).collect()
}
