//! Deterministic generators for the digraph and graph families with known
//! majority domination values, plus the two vertex-deletion counter-fixtures.

use std::fmt;

use serde::Serialize;

use crate::digraph::{Digraph, DigraphBuilder, Graph};
use crate::error::{ModfError, Result};

fn require(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(ModfError::InvalidParameter(what.to_string()))
    }
}

/// `v0 -> v1 -> ... -> v(n-1)`.
pub fn directed_path(n: usize) -> Result<Digraph> {
    require(n >= 1, "directed path needs n >= 1")?;
    Digraph::from_arcs(n, (1..n).map(|i| (i - 1, i)))
}

/// `v0 -> v1 -> ... -> v(n-1) -> v0`. Requires `n >= 3`, since `n = 2` would
/// be an opposite arc pair.
pub fn directed_cycle(n: usize) -> Result<Digraph> {
    require(n >= 3, "directed cycle needs n >= 3")?;
    Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Arc `vi -> vj` exactly when `i < j`; out-degrees `n-1, n-2, ..., 0`.
pub fn transitive_tournament(n: usize) -> Result<Digraph> {
    require(n >= 1, "transitive tournament needs n >= 1")?;
    Digraph::from_arcs(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// Every ordered pair of distinct vertices is an arc.
pub fn complete_digraph(n: usize) -> Result<Digraph> {
    Digraph::from_arcs(
        n,
        (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))),
    )
}

pub fn empty_digraph(n: usize) -> Result<Digraph> {
    Digraph::empty(n)
}

/// Star with center 0. The `out_leaves` leaves come first (indices
/// `1..=out_leaves`, arcs center -> leaf), then the `in_leaves` leaves
/// (arcs leaf -> center).
pub fn oriented_star(in_leaves: usize, out_leaves: usize) -> Result<Digraph> {
    require(in_leaves + out_leaves >= 1, "oriented star needs a leaf")?;
    let n = 1 + in_leaves + out_leaves;
    let outs = (1..=out_leaves).map(|l| (0, l));
    let ins = (out_leaves + 1..n).map(|l| (l, 0));
    Digraph::from_arcs(n, outs.chain(ins))
}

/// Vertex names of [`figure1`], in index order.
pub const FIGURE1_LABELS: [&str; 7] = ["a", "b", "c", "v", "d", "e", "f"];

/// Index of `v` in [`figure1`].
pub const FIGURE1_V: usize = 3;

/// The seven-vertex digraph `v -> c -> {a, b}`, `v -> d`, `d -> f -> e -> d`.
/// Deleting `v` (which has out-degree 2) lowers the optimum by 3.
pub fn figure1() -> Digraph {
    let [a, b, c, v, d, e, f] = [0, 1, 2, 3, 4, 5, 6];
    Digraph::from_arcs(7, [(v, c), (v, d), (c, a), (c, b), (d, f), (f, e), (e, d)])
        .expect("fixed arc list is valid")
}

/// Index of `u` in [`figure2`].
pub const FIGURE2_U: usize = 0;
/// Index of `v` in [`figure2`].
pub const FIGURE2_V: usize = 1;

/// Vertices `u, v, s1..sk, t1..t(k+2)` in that index order, with
/// `si -> u`, `si -> v` and `tj -> v`. Deleting the sink `u` raises the
/// optimum from at most `-2k` to at least 0.
pub fn figure2(k: usize) -> Result<Digraph> {
    require(k >= 1, "figure2 needs k >= 1")?;
    let n = 2 * k + 4;
    let mut b = DigraphBuilder::new(n)?;
    for s in 2..2 + k {
        b.add_arc(s, FIGURE2_U)?;
        b.add_arc(s, FIGURE2_V)?;
    }
    for t in 2 + k..n {
        b.add_arc(t, FIGURE2_V)?;
    }
    Ok(b.build())
}

pub fn path_graph(n: usize) -> Result<Graph> {
    require(n >= 1, "path needs n >= 1")?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    require(n >= 3, "cycle needs n >= 3")?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `K_{1,n-1}` with center 0.
pub fn star_graph(n: usize) -> Result<Graph> {
    require(n >= 2, "star needs n >= 2")?;
    Graph::from_edges(n, (1..n).map(|l| (0, l)))
}

/// Stems `u = 0` and `v = 1` joined by an edge; leaves `2..a+2` hang on `u`
/// and the next `b` leaves on `v`.
pub fn double_star_graph(a: usize, b: usize) -> Result<Graph> {
    require(a >= 1 && b >= 1, "double star needs a, b >= 1")?;
    let n = a + b + 2;
    let u_leaves = (2..a + 2).map(|l| (0, l));
    let v_leaves = (a + 2..n).map(|l| (1, l));
    Graph::from_edges(n, std::iter::once((0, 1)).chain(u_leaves).chain(v_leaves))
}

/// `K_{r,s}` with parts `0..r` and `r..r+s`.
pub fn complete_bipartite_graph(r: usize, s: usize) -> Result<Graph> {
    require(r >= 1 && s >= 1, "complete bipartite graph needs r, s >= 1")?;
    Graph::from_edges(r + s, (0..r).flat_map(|i| (r..r + s).map(move |j| (i, j))))
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// A named family member with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    DirectedPath { n: usize },
    DirectedCycle { n: usize },
    TransitiveTournament { n: usize },
    CompleteDigraph { n: usize },
    EmptyDigraph { n: usize },
    OrientedStar { in_leaves: usize, out_leaves: usize },
    Figure1,
    Figure2 { k: usize },
    PathGraph { n: usize },
    CycleGraph { n: usize },
    StarGraph { n: usize },
    DoubleStarGraph { a: usize, b: usize },
    CompleteBipartiteGraph { r: usize, s: usize },
}

/// Output of [`FamilySpec::build`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyMember {
    Digraph(Digraph),
    Graph(Graph),
}

impl FamilyMember {
    pub fn order(&self) -> usize {
        match self {
            FamilyMember::Digraph(d) => d.order(),
            FamilyMember::Graph(g) => g.order(),
        }
    }
}

/// Kind names accepted by [`FamilySpec::from_kind`].
pub const FAMILY_KINDS: [&str; 13] = [
    "directed_path",
    "directed_cycle",
    "transitive_tournament",
    "complete_digraph",
    "empty_digraph",
    "oriented_star",
    "figure1",
    "figure2",
    "path_graph",
    "cycle_graph",
    "star_graph",
    "double_star_graph",
    "complete_bipartite_graph",
];

/// Raw parameters from a command line; each kind reads the ones it needs.
#[derive(Debug, Clone, Copy, Default)]
pub struct FamilyParams {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub r: Option<usize>,
    pub s: Option<usize>,
}

impl FamilySpec {
    pub fn from_kind(kind: &str, p: FamilyParams) -> Result<FamilySpec> {
        fn need(v: Option<usize>, kind: &str, name: &str) -> Result<usize> {
            v.ok_or_else(|| ModfError::InvalidParameter(format!("{kind} needs --{name}")))
        }
        let n = || need(p.n, kind, "n");
        Ok(match kind {
            "directed_path" => FamilySpec::DirectedPath { n: n()? },
            "directed_cycle" => FamilySpec::DirectedCycle { n: n()? },
            "transitive_tournament" => FamilySpec::TransitiveTournament { n: n()? },
            "complete_digraph" => FamilySpec::CompleteDigraph { n: n()? },
            "empty_digraph" => FamilySpec::EmptyDigraph { n: n()? },
            "oriented_star" => FamilySpec::OrientedStar {
                in_leaves: need(p.a, kind, "a")?,
                out_leaves: need(p.b, kind, "b")?,
            },
            "figure1" => FamilySpec::Figure1,
            "figure2" => FamilySpec::Figure2 {
                k: need(p.k, kind, "k")?,
            },
            "path_graph" => FamilySpec::PathGraph { n: n()? },
            "cycle_graph" => FamilySpec::CycleGraph { n: n()? },
            "star_graph" => FamilySpec::StarGraph { n: n()? },
            "double_star_graph" => FamilySpec::DoubleStarGraph {
                a: need(p.a, kind, "a")?,
                b: need(p.b, kind, "b")?,
            },
            "complete_bipartite_graph" => FamilySpec::CompleteBipartiteGraph {
                r: need(p.r, kind, "r")?,
                s: need(p.s, kind, "s")?,
            },
            other => {
                return Err(ModfError::InvalidParameter(format!(
                    "unknown family {other:?}; expected one of {}",
                    FAMILY_KINDS.join(", ")
                )))
            }
        })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            FamilySpec::DirectedPath { .. } => "directed_path",
            FamilySpec::DirectedCycle { .. } => "directed_cycle",
            FamilySpec::TransitiveTournament { .. } => "transitive_tournament",
            FamilySpec::CompleteDigraph { .. } => "complete_digraph",
            FamilySpec::EmptyDigraph { .. } => "empty_digraph",
            FamilySpec::OrientedStar { .. } => "oriented_star",
            FamilySpec::Figure1 => "figure1",
            FamilySpec::Figure2 { .. } => "figure2",
            FamilySpec::PathGraph { .. } => "path_graph",
            FamilySpec::CycleGraph { .. } => "cycle_graph",
            FamilySpec::StarGraph { .. } => "star_graph",
            FamilySpec::DoubleStarGraph { .. } => "double_star_graph",
            FamilySpec::CompleteBipartiteGraph { .. } => "complete_bipartite_graph",
        }
    }

    pub fn is_directed(&self) -> bool {
        !matches!(
            self,
            FamilySpec::PathGraph { .. }
                | FamilySpec::CycleGraph { .. }
                | FamilySpec::StarGraph { .. }
                | FamilySpec::DoubleStarGraph { .. }
                | FamilySpec::CompleteBipartiteGraph { .. }
        )
    }

    /// Vertex count of the generated member.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::DirectedPath { n }
            | FamilySpec::DirectedCycle { n }
            | FamilySpec::TransitiveTournament { n }
            | FamilySpec::CompleteDigraph { n }
            | FamilySpec::EmptyDigraph { n }
            | FamilySpec::PathGraph { n }
            | FamilySpec::CycleGraph { n }
            | FamilySpec::StarGraph { n } => n,
            FamilySpec::OrientedStar {
                in_leaves,
                out_leaves,
            } => 1 + in_leaves + out_leaves,
            FamilySpec::Figure1 => 7,
            FamilySpec::Figure2 { k } => 2 * k + 4,
            FamilySpec::DoubleStarGraph { a, b } => a + b + 2,
            FamilySpec::CompleteBipartiteGraph { r, s } => r + s,
        }
    }

    pub fn build(&self) -> Result<FamilyMember> {
        use FamilyMember::{Digraph as D, Graph as G};
        Ok(match *self {
            FamilySpec::DirectedPath { n } => D(directed_path(n)?),
            FamilySpec::DirectedCycle { n } => D(directed_cycle(n)?),
            FamilySpec::TransitiveTournament { n } => D(transitive_tournament(n)?),
            FamilySpec::CompleteDigraph { n } => D(complete_digraph(n)?),
            FamilySpec::EmptyDigraph { n } => D(empty_digraph(n)?),
            FamilySpec::OrientedStar {
                in_leaves,
                out_leaves,
            } => D(oriented_star(in_leaves, out_leaves)?),
            FamilySpec::Figure1 => D(figure1()),
            FamilySpec::Figure2 { k } => D(figure2(k)?),
            FamilySpec::PathGraph { n } => G(path_graph(n)?),
            FamilySpec::CycleGraph { n } => G(cycle_graph(n)?),
            FamilySpec::StarGraph { n } => G(star_graph(n)?),
            FamilySpec::DoubleStarGraph { a, b } => G(double_star_graph(a, b)?),
            FamilySpec::CompleteBipartiteGraph { r, s } => G(complete_bipartite_graph(r, s)?),
        })
    }

    pub fn build_digraph(&self) -> Result<Digraph> {
        match self.build()? {
            FamilyMember::Digraph(d) => Ok(d),
            FamilyMember::Graph(_) => Err(ModfError::InvalidParameter(format!(
                "{} is an undirected family",
                self.kind()
            ))),
        }
    }

    pub fn build_graph(&self) -> Result<Graph> {
        match self.build()? {
            FamilyMember::Graph(g) => Ok(g),
            FamilyMember::Digraph(_) => Err(ModfError::InvalidParameter(format!(
                "{} is a directed family",
                self.kind()
            ))),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Figure1 => write!(f, "figure1"),
            FamilySpec::Figure2 { k } => write!(f, "figure2(k={k})"),
            FamilySpec::OrientedStar {
                in_leaves,
                out_leaves,
            } => write!(f, "oriented_star(in={in_leaves}, out={out_leaves})"),
            FamilySpec::DoubleStarGraph { a, b } => write!(f, "double_star_graph({a},{b})"),
            FamilySpec::CompleteBipartiteGraph { r, s } => {
                write!(f, "complete_bipartite_graph({r},{s})")
            }
            other => write!(f, "{}({})", other.kind(), other.order()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::write_digraph;

    #[test]
    fn directed_path_shape() {
        assert_eq!(directed_path(1).unwrap().arc_count(), 0);
        let p4 = directed_path(4).unwrap();
        assert_eq!(p4.arc_count(), 3);
        assert_eq!(p4.out_degrees(), vec![1, 1, 1, 0]);
        assert!(directed_path(0).is_err());
    }

    #[test]
    fn directed_cycle_shape() {
        let c3 = directed_cycle(3).unwrap();
        assert_eq!(c3.out_degrees(), vec![1, 1, 1]);
        for n in 3..10 {
            let c = directed_cycle(n).unwrap();
            assert!((0..n).all(|v| c.out_degree(v) == 1 && c.in_degree(v) == 1));
        }
        assert!(directed_cycle(2).is_err());
    }

    #[test]
    fn transitive_tournament_shape() {
        assert_eq!(
            transitive_tournament(2).unwrap().arcs().collect::<Vec<_>>(),
            vec![(0, 1)]
        );
        for n in 1..=8 {
            let t = transitive_tournament(n).unwrap();
            assert_eq!(t.out_degrees(), (0..n).rev().collect::<Vec<_>>());
            for u in 0..n {
                for v in 0..n {
                    for w in 0..n {
                        if t.has_arc(u, v) && t.has_arc(v, w) {
                            assert!(t.has_arc(u, w));
                        }
                    }
                }
            }
            let g = complete_graph(n).unwrap();
            assert!(t.is_orientation_of(&g));
        }
    }

    #[test]
    fn complete_and_empty() {
        assert_eq!(complete_digraph(3).unwrap().arc_count(), 6);
        assert_eq!(empty_digraph(4).unwrap().arc_count(), 0);
        assert_eq!(empty_digraph(0).unwrap().order(), 0);
    }

    #[test]
    fn oriented_star_shape() {
        let s = oriented_star(2, 2).unwrap();
        assert_eq!(s.out_degree(0), 2);
        assert_eq!(s.in_degree(0), 2);
        assert!(oriented_star(0, 0).is_err());
    }

    #[test]
    fn figures() {
        let f1 = figure1();
        assert_eq!(f1.arc_count(), 7);
        assert_eq!(f1.out_degree(FIGURE1_V), 2);
        for k in 1..5 {
            let f2 = figure2(k).unwrap();
            assert_eq!(f2.order(), 2 * k + 4);
            assert_eq!(f2.arc_count(), 3 * k + 2);
            assert_eq!(f2.out_degree(FIGURE2_U), 0);
            assert_eq!(f2.out_degree(FIGURE2_V), 0);
            assert_eq!(f2.in_degree(FIGURE2_U), k);
            assert_eq!(f2.in_degree(FIGURE2_V), 2 * k + 2);
        }
        assert!(figure2(0).is_err());
    }

    #[test]
    fn undirected_families() {
        let ds = double_star_graph(3, 3).unwrap();
        let mut degrees = ds.degrees();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degrees, vec![4, 4, 1, 1, 1, 1, 1, 1]);
        assert_eq!(complete_bipartite_graph(2, 3).unwrap().edge_count(), 6);
        assert_eq!(star_graph(5).unwrap().degree(0), 4);
        assert_eq!(cycle_graph(5).unwrap().regular_degree(), Some(2));
        assert!(cycle_graph(2).is_err());
        assert!(double_star_graph(0, 2).is_err());
        assert!(star_graph(1).is_err());
    }

    #[test]
    fn generators_are_deterministic() {
        let spec = FamilySpec::Figure2 { k: 3 };
        let a = write_digraph(&spec.build_digraph().unwrap());
        let b = write_digraph(&spec.build_digraph().unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn spec_from_kind() {
        let p = FamilyParams {
            n: Some(5),
            ..Default::default()
        };
        let spec = FamilySpec::from_kind("directed_cycle", p).unwrap();
        assert_eq!(spec, FamilySpec::DirectedCycle { n: 5 });
        assert_eq!(spec.kind(), "directed_cycle");
        assert!(FamilySpec::from_kind("double_star_graph", p).is_err());
        assert!(FamilySpec::from_kind("wheel", p).is_err());
        for kind in FAMILY_KINDS {
            let p = FamilyParams {
                n: Some(4),
                k: Some(1),
                a: Some(2),
                b: Some(2),
                r: Some(2),
                s: Some(2),
            };
            let spec = FamilySpec::from_kind(kind, p).unwrap();
            assert_eq!(spec.kind(), kind);
            assert_eq!(spec.build().unwrap().order(), spec.order());
            assert_eq!(spec.is_directed(), matches!(spec.build().unwrap(), FamilyMember::Digraph(_)));
        }
    }
}
