//! Orientations of undirected graphs and the extremes `dom+maj` / `DOM+maj`
//! of `γ+maj` over them.

use std::cmp::Ordering;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::digraph::{Digraph, Graph};
use crate::error::{ModfError, Result};
use crate::sign::SignFunction;
use crate::solver::oracle::min_positive_mask;
use crate::solver::{gamma_maj_out_bb, gamma_maj_undirected, Method, BB_CAP, ORACLE_CAP};

/// Most edges [`enumerate_orientations`] accepts.
pub const ENUMERATION_EDGE_CAP: usize = 24;
/// Most edges [`dom_range`] solves without a symmetry reduction.
pub const DOM_EDGE_CAP: usize = 20;
/// Largest order [`dom_range`] solves with the oracle.
pub const DOM_ORDER_CAP: usize = 20;

/// Iterator over all `2^|E|` orientations. Edges are taken in ascending
/// `(u, v)` order with `u < v`; bit `i` of the counter clear orients edge `i`
/// as `u -> v`, set as `v -> u`.
pub struct Orientations {
    n: usize,
    edges: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl Orientations {
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn total(&self) -> u64 {
        self.end
    }
}

impl Iterator for Orientations {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        if self.next >= self.end {
            return None;
        }
        let bits = self.next;
        self.next += 1;
        Some(Digraph::from_out_sets(out_sets(self.n, &self.edges, bits)))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Orientations {}

fn out_sets(n: usize, edges: &[(usize, usize)], bits: u64) -> Vec<VertexSet> {
    let mut out = vec![VertexSet::EMPTY; n];
    fill_out_sets(&mut out, edges, bits);
    out
}

fn fill_out_sets(out: &mut [VertexSet], edges: &[(usize, usize)], bits: u64) {
    out.iter_mut().for_each(|s| *s = VertexSet::EMPTY);
    for (i, &(u, v)) in edges.iter().enumerate() {
        if bits >> i & 1 == 0 {
            out[u].insert(v);
        } else {
            out[v].insert(u);
        }
    }
}

pub fn enumerate_orientations(g: &Graph) -> Result<Orientations> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.len() > ENUMERATION_EDGE_CAP {
        return Err(ModfError::CapExceeded {
            what: "edge count",
            value: edges.len(),
            cap: ENUMERATION_EDGE_CAP,
        });
    }
    Ok(Orientations {
        n: g.order(),
        end: 1u64 << edges.len(),
        edges,
        next: 0,
    })
}

/// Whether orientations that differ by permuting same-stem leaves of a star
/// or double star are collapsed to one representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Symmetry {
    #[default]
    None,
    Stars,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DomOptions {
    pub symmetry: Symmetry,
    /// Solver for each orientation.
    pub method: Method,
}

impl Default for DomOptions {
    fn default() -> Self {
        DomOptions {
            symmetry: Symmetry::None,
            method: Method::Oracle,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrientationResult {
    /// `dom+maj(G)`.
    pub dom_plus: i64,
    pub dom_witness: Digraph,
    /// A `γ+maj`-function of `dom_witness`.
    pub dom_witness_function: SignFunction,
    /// `DOM+maj(G)`.
    pub dom_max: i64,
    pub dom_max_witness: Digraph,
    pub orientations_enumerated: u64,
    pub symmetry_applied: bool,
}

/// Leaves hanging off one centre, for the symmetry reduction.
#[derive(Debug, Clone)]
struct StarPart {
    center: usize,
    leaves: Vec<usize>,
}

/// Stars as one part, double stars as two parts joined at the stems.
fn star_decomposition(g: &Graph) -> Option<Vec<StarPart>> {
    let n = g.order();
    if n < 2 || g.edge_count() != n - 1 {
        return None;
    }
    let part = |c: usize, skip: Option<usize>| StarPart {
        center: c,
        leaves: g.neighbors(c).iter().filter(|&x| Some(x) != skip).collect(),
    };
    if let Some(c) = (0..n).find(|&v| g.degree(v) == n - 1) {
        return Some(vec![part(c, None)]);
    }
    let stems: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 2).collect();
    if let [u, v] = stems[..] {
        let leaves_ok = (0..n)
            .filter(|x| !stems.contains(x))
            .all(|x| g.degree(x) == 1);
        if g.has_edge(u, v) && leaves_ok {
            return Some(vec![part(u, Some(v)), part(v, Some(u))]);
        }
    }
    None
}

/// One orientation per (stem-edge direction, out-leaf count per centre), with
/// the out-oriented leaves at the lowest indices.
fn star_representatives(n: usize, parts: &[StarPart]) -> Vec<Vec<VertexSet>> {
    let mut reps = Vec::new();
    let stem_dirs: &[bool] = if parts.len() == 2 { &[false, true] } else { &[false] };
    let counts: Vec<usize> = parts.iter().map(|p| p.leaves.len() + 1).collect();
    let combos: usize = counts.iter().product();
    for &flip in stem_dirs {
        for mut code in 0..combos {
            let mut out = vec![VertexSet::EMPTY; n];
            for (p, &c) in parts.iter().zip(&counts) {
                let outs = code % c;
                code /= c;
                for (i, &leaf) in p.leaves.iter().enumerate() {
                    if i < outs {
                        out[p.center].insert(leaf);
                    } else {
                        out[leaf].insert(p.center);
                    }
                }
            }
            if let [a, b] = parts {
                let (x, y) = if flip { (b.center, a.center) } else { (a.center, b.center) };
                out[x].insert(y);
            }
            reps.push(out);
        }
    }
    reps
}

struct Extremes {
    best_min: Option<(i64, Vec<VertexSet>, u64)>,
    best_max: Option<(i64, Vec<VertexSet>)>,
    count: u64,
}

impl Extremes {
    fn new() -> Self {
        Extremes {
            best_min: None,
            best_max: None,
            count: 0,
        }
    }

    fn offer(&mut self, value: i64, out: &[VertexSet], positives: u64) {
        self.count += 1;
        if self.best_min.as_ref().is_none_or(|b| value < b.0) {
            self.best_min = Some((value, out.to_vec(), positives));
        }
        if self.best_max.as_ref().is_none_or(|b| value > b.0) {
            self.best_max = Some((value, out.to_vec()));
        }
    }

    fn finish(self, n: usize, symmetry_applied: bool) -> OrientationResult {
        let (dom_plus, min_out, positives) = self.best_min.expect("at least one orientation");
        let (dom_max, max_out) = self.best_max.expect("at least one orientation");
        OrientationResult {
            dom_plus,
            dom_witness: Digraph::from_out_sets(min_out),
            dom_witness_function: SignFunction::from_parts(n, VertexSet::from_bits(positives)),
            dom_max,
            dom_max_witness: Digraph::from_out_sets(max_out),
            orientations_enumerated: self.count,
            symmetry_applied,
        }
    }
}

/// `γ+maj` of the digraph with out-sets `out`, plus a witness mask.
fn solve_out_sets(out: &[VertexSet], method: Method) -> Result<(i64, u64)> {
    let n = out.len();
    match method {
        Method::Oracle => {
            let closed: Vec<VertexSet> = out.iter().enumerate().map(|(v, s)| s.with(v)).collect();
            let (mask, _) = min_positive_mask(&closed, 1);
            Ok((2 * mask.count_ones() as i64 - n as i64, mask))
        }
        Method::BranchAndBound => {
            let r = gamma_maj_out_bb(&Digraph::from_out_sets(out.to_vec()))?;
            Ok((r.optimum, r.witness.positives().bits()))
        }
    }
}

/// `dom+maj(G)` and `DOM+maj(G)` by solving every orientation exactly.
pub fn dom_range(g: &Graph) -> Result<OrientationResult> {
    dom_range_with(g, DomOptions::default())
}

pub fn dom_range_with(g: &Graph, opts: DomOptions) -> Result<OrientationResult> {
    let n = g.order();
    if n == 0 {
        return Err(ModfError::Empty);
    }
    let order_cap = match opts.method {
        Method::Oracle => DOM_ORDER_CAP.min(ORACLE_CAP),
        Method::BranchAndBound => BB_CAP,
    };
    if n > order_cap {
        return Err(ModfError::CapExceeded {
            what: "order",
            value: n,
            cap: order_cap,
        });
    }
    let mut ext = Extremes::new();
    let parts = match opts.symmetry {
        Symmetry::Stars => star_decomposition(g),
        Symmetry::None => None,
    };
    if let Some(parts) = parts {
        for out in star_representatives(n, &parts) {
            let (value, mask) = solve_out_sets(&out, opts.method)?;
            ext.offer(value, &out, mask);
        }
        return Ok(ext.finish(n, true));
    }

    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.len() > DOM_EDGE_CAP {
        return Err(ModfError::CapExceeded {
            what: "edge count",
            value: edges.len(),
            cap: DOM_EDGE_CAP,
        });
    }
    let mut out = vec![VertexSet::EMPTY; n];
    for bits in 0u64..1 << edges.len() {
        fill_out_sets(&mut out, &edges, bits);
        let (value, mask) = solve_out_sets(&out, opts.method)?;
        ext.offer(value, &out, mask);
    }
    Ok(ext.finish(n, false))
}

/// `γmaj(G)` against `dom+maj(G)` and `DOM+maj(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaComparison {
    pub gamma_maj: i64,
    pub dom_plus: i64,
    pub dom_max: i64,
    /// Ordering of `γmaj` relative to `DOM+maj`.
    #[serde(serialize_with = "serialize_ordering")]
    pub gamma_vs_dom_max: Ordering,
    /// `dom+maj(G) <= γmaj(G)`, which holds for every graph.
    pub dom_plus_at_most_gamma: bool,
}

fn serialize_ordering<S: serde::Serializer>(o: &Ordering, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    })
}

pub fn compare_with_gamma_maj(g: &Graph) -> Result<GammaComparison> {
    compare_with_gamma_maj_with(g, DomOptions::default())
}

pub fn compare_with_gamma_maj_with(g: &Graph, opts: DomOptions) -> Result<GammaComparison> {
    let gamma_maj = gamma_maj_undirected(g)?.optimum;
    let r = dom_range_with(g, opts)?;
    Ok(GammaComparison {
        gamma_maj,
        dom_plus: r.dom_plus,
        dom_max: r.dom_max,
        gamma_vs_dom_max: gamma_maj.cmp(&r.dom_max),
        dom_plus_at_most_gamma: r.dom_plus <= gamma_maj,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::is_modf;
    use crate::families::*;
    use crate::solver::gamma_maj_out_oracle;

    #[test]
    fn orientation_counts() {
        assert_eq!(enumerate_orientations(&path_graph(3).unwrap()).unwrap().count(), 4);
        let c3 = cycle_graph(3).unwrap();
        let all: Vec<Digraph> = enumerate_orientations(&c3).unwrap().collect();
        assert_eq!(all.len(), 8);
        let cyclic = all
            .iter()
            .filter(|d| (0..3).all(|v| d.out_degree(v) == 1))
            .count();
        assert_eq!(cyclic, 2);
        for d in &all {
            assert!(d.is_orientation_of(&c3));
            assert_eq!(d.arc_count(), 3);
        }
    }

    #[test]
    fn orientation_order_is_deterministic() {
        let g = path_graph(3).unwrap();
        let first = enumerate_orientations(&g).unwrap().next().unwrap();
        assert_eq!(first.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let last = enumerate_orientations(&g).unwrap().last().unwrap();
        assert_eq!(last.arcs().collect::<Vec<_>>(), vec![(1, 0), (2, 1)]);
    }

    #[test]
    fn edge_cap() {
        let k8 = complete_graph(8).unwrap();
        assert!(matches!(
            enumerate_orientations(&k8),
            Err(ModfError::CapExceeded { .. })
        ));
        let k7 = complete_graph(7).unwrap();
        assert!(matches!(dom_range(&k7), Err(ModfError::CapExceeded { .. })));
    }

    #[test]
    fn dom_examples() {
        let r = dom_range(&path_graph(6).unwrap()).unwrap();
        assert_eq!((r.dom_plus, r.dom_max), (-2, 0));
        let r = dom_range(&cycle_graph(3).unwrap()).unwrap();
        assert_eq!((r.dom_plus, r.dom_max), (1, 3));
        let r = dom_range(&complete_bipartite_graph(2, 3).unwrap()).unwrap();
        assert_eq!(r.dom_plus, -1);
    }

    #[test]
    fn witnesses_are_consistent() {
        let g = double_star_graph(2, 3).unwrap();
        let r = dom_range(&g).unwrap();
        assert!(r.dom_witness.is_orientation_of(&g));
        assert!(r.dom_max_witness.is_orientation_of(&g));
        assert!(is_modf(&r.dom_witness, &r.dom_witness_function).unwrap());
        assert_eq!(r.dom_witness_function.weight(), r.dom_plus);
        assert_eq!(gamma_maj_out_oracle(&r.dom_max_witness).unwrap().optimum, r.dom_max);
        assert!(r.dom_plus <= r.dom_max);
    }

    #[test]
    fn symmetry_matches_plain_enumeration() {
        for g in [
            star_graph(6).unwrap(),
            star_graph(2).unwrap(),
            double_star_graph(1, 1).unwrap(),
            double_star_graph(2, 3).unwrap(),
            double_star_graph(3, 4).unwrap(),
        ] {
            let plain = dom_range(&g).unwrap();
            let sym = dom_range_with(
                &g,
                DomOptions {
                    symmetry: Symmetry::Stars,
                    method: Method::Oracle,
                },
            )
            .unwrap();
            assert!(sym.symmetry_applied);
            assert!(sym.orientations_enumerated <= plain.orientations_enumerated);
            assert_eq!((sym.dom_plus, sym.dom_max), (plain.dom_plus, plain.dom_max), "{g:?}");
            assert!(sym.dom_witness.is_orientation_of(&g));
        }
    }

    #[test]
    fn symmetry_falls_back_on_other_graphs() {
        let g = cycle_graph(5).unwrap();
        let r = dom_range_with(
            &g,
            DomOptions {
                symmetry: Symmetry::Stars,
                method: Method::Oracle,
            },
        )
        .unwrap();
        assert!(!r.symmetry_applied);
        assert_eq!(r.orientations_enumerated, 32);
    }

    #[test]
    fn branch_and_bound_per_orientation_agrees() {
        let g = double_star_graph(2, 2).unwrap();
        let bb = dom_range_with(
            &g,
            DomOptions {
                symmetry: Symmetry::None,
                method: Method::BranchAndBound,
            },
        )
        .unwrap();
        let plain = dom_range(&g).unwrap();
        assert_eq!((bb.dom_plus, bb.dom_max), (plain.dom_plus, plain.dom_max));
    }

    #[test]
    fn comparison_examples() {
        let c = compare_with_gamma_maj(&path_graph(10).unwrap()).unwrap();
        assert_eq!((c.gamma_maj, c.dom_max), (-2, 0));
        assert_eq!(c.gamma_vs_dom_max, Ordering::Less);
        let c = compare_with_gamma_maj(&star_graph(6).unwrap()).unwrap();
        assert_eq!((c.gamma_maj, c.dom_max), (2, 0));
        assert_eq!(c.gamma_vs_dom_max, Ordering::Greater);
        let c = compare_with_gamma_maj(&double_star_graph(2, 2).unwrap()).unwrap();
        assert_eq!((c.gamma_maj, c.dom_max), (0, 0));
        assert_eq!(c.gamma_vs_dom_max, Ordering::Equal);
        assert!(c.dom_plus_at_most_gamma);
    }
}
