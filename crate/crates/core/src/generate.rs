//! Exhaustive and seeded random instance generators for the property suites.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bitset::VertexSet;
use crate::digraph::{Digraph, Graph};
use crate::families::complete_graph;

fn ordered_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect()
}

fn unordered_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn digraph_from_pair_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Digraph {
    let mut out = vec![VertexSet::EMPTY; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            out[u].insert(v);
        }
    }
    Digraph::from_out_sets(out)
}

/// Every labelled digraph on `n` vertices (opposite pairs included):
/// `2^(n(n-1))` of them.
pub fn all_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs = ordered_pairs(n);
    assert!(pairs.len() < 32, "too many digraphs to enumerate");
    (0u64..1 << pairs.len()).map(move |mask| digraph_from_pair_mask(n, &pairs, mask))
}

/// Every labelled simple graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = unordered_pairs(n);
    assert!(pairs.len() < 32, "too many graphs to enumerate");
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(move |(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("pairs are distinct")
    })
}

/// Every labelled tournament on `n` vertices.
pub fn all_tournaments(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs = unordered_pairs(n);
    assert!(pairs.len() < 32, "too many tournaments to enumerate");
    (0u64..1 << pairs.len()).map(move |mask| tournament_from_mask(n, &pairs, mask))
}

fn tournament_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Digraph {
    let mut out = vec![VertexSet::EMPTY; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 0 {
            out[u].insert(v);
        } else {
            out[v].insert(u);
        }
    }
    Digraph::from_out_sets(out)
}

/// Tournaments whose out-degree sequence is non-increasing in vertex index.
/// Relabelling by decreasing score maps any tournament onto one of these, so
/// every isomorphism class is represented at a fraction of the labelled count.
pub fn score_sorted_tournaments(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs = unordered_pairs(n);
    assert!(pairs.len() < 32, "too many tournaments to enumerate");
    (0u64..1 << pairs.len()).filter_map(move |mask| {
        let mut score = vec![0usize; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            score[if mask >> i & 1 == 0 { u } else { v }] += 1;
        }
        score
            .windows(2)
            .all(|w| w[0] >= w[1])
            .then(|| tournament_from_mask(n, &pairs, mask))
    })
}

/// Every labelled digraph on `n` vertices whose out-degrees all equal `d`.
pub fn out_regular_digraphs(n: usize, d: usize) -> Vec<Digraph> {
    if n == 0 || d >= n {
        return Vec::new();
    }
    // Per-vertex choices of d out-neighbours among the other n - 1 vertices.
    let choices: Vec<Vec<VertexSet>> = (0..n)
        .map(|v| {
            let others = VertexSet::full(n).without(v).bits();
            let mut sets = Vec::new();
            let mut sub = others;
            loop {
                if sub.count_ones() as usize == d {
                    sets.push(VertexSet::from_bits(sub));
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & others;
            }
            sets.sort();
            sets
        })
        .collect();
    let mut result = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        result.push(Digraph::from_out_sets(
            (0..n).map(|v| choices[v][idx[v]]).collect(),
        ));
        let mut pos = 0;
        loop {
            if pos == n {
                return result;
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Each ordered pair is an arc independently with probability `p`.
pub fn random_digraph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Digraph {
    let mut out = vec![VertexSet::EMPTY; n];
    for (u, v) in ordered_pairs(n) {
        if rng.gen_bool(p) {
            out[u].insert(v);
        }
    }
    Digraph::from_out_sets(out)
}

/// Each vertex picks `d` distinct out-neighbours uniformly.
pub fn random_out_regular<R: Rng + ?Sized>(n: usize, d: usize, rng: &mut R) -> Digraph {
    assert!(d < n, "out-degree must be below the order");
    let out = (0..n)
        .map(|v| {
            let mut others: Vec<usize> = (0..n).filter(|&u| u != v).collect();
            others.shuffle(rng);
            others[..d].iter().copied().collect()
        })
        .collect();
    Digraph::from_out_sets(out)
}

/// Each edge oriented by a fair coin.
pub fn random_orientation<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Digraph {
    let mut out = vec![VertexSet::EMPTY; g.order()];
    for (u, v) in g.edges() {
        if rng.gen_bool(0.5) {
            out[u].insert(v);
        } else {
            out[v].insert(u);
        }
    }
    Digraph::from_out_sets(out)
}

/// A uniform-ish simple `c`-regular graph from the pairing model, retrying
/// until the pairing has no loops or repeated edges. `None` if `n * c` is odd,
/// `c >= n`, or no simple pairing turns up within the retry budget.
pub fn random_regular_graph<R: Rng + ?Sized>(n: usize, c: usize, rng: &mut R) -> Option<Graph> {
    if c >= n || (n * c) % 2 == 1 {
        return None;
    }
    if c == n - 1 {
        return complete_graph(n).ok();
    }
    'attempt: for _ in 0..1000 {
        let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, c)).collect();
        points.shuffle(rng);
        let mut adj = vec![VertexSet::EMPTY; n];
        for pair in points.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || adj[u].contains(v) {
                continue 'attempt;
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect();
        return Graph::from_edges(n, edges).ok();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn exhaustive_counts() {
        assert_eq!(all_digraphs(3).count(), 64);
        assert_eq!(all_graphs(4).count(), 64);
        assert_eq!(all_tournaments(4).count(), 64);
        // C(2,1)^3 and C(3,2)^4
        assert_eq!(out_regular_digraphs(3, 1).len(), 8);
        assert_eq!(out_regular_digraphs(4, 2).len(), 81);
        assert_eq!(out_regular_digraphs(4, 0).len(), 1);
        assert_eq!(out_regular_digraphs(4, 4).len(), 0);
        assert!(out_regular_digraphs(4, 3)
            .iter()
            .all(|d| d.regular_out_degree() == Some(3)));
    }

    #[test]
    fn score_sorted_tournaments_cover_all_score_sequences() {
        // There are 4 tournaments on 4 vertices up to isomorphism, with
        // distinct score sequences (3210), (3111), (2220), (2211).
        let mut seqs: Vec<Vec<usize>> = score_sorted_tournaments(4).map(|t| t.out_degrees()).collect();
        seqs.sort();
        seqs.dedup();
        assert_eq!(seqs.len(), 4);
    }

    #[test]
    fn random_generators_respect_contracts() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let d = random_out_regular(9, 3, &mut rng);
        assert_eq!(d.regular_out_degree(), Some(3));
        let g = random_regular_graph(10, 3, &mut rng).unwrap();
        assert_eq!(g.regular_degree(), Some(3));
        let o = random_orientation(&g, &mut rng);
        assert!(o.is_orientation_of(&g));
        assert!(random_regular_graph(5, 3, &mut rng).is_none());
        let r = random_digraph(8, 0.5, &mut rng);
        assert_eq!(r.order(), 8);
    }

    #[test]
    fn random_digraphs_are_reproducible() {
        let a = random_digraph(10, 0.5, &mut ChaCha8Rng::seed_from_u64(42));
        let b = random_digraph(10, 0.5, &mut ChaCha8Rng::seed_from_u64(42));
        assert_eq!(a, b);
    }
}
