//! Digraph and undirected graph representations.
//!
//! Both are frozen after construction. Neighborhoods are word-sized bitsets,
//! which caps the order at [`MAX_VERTICES`]; every exact solver in this crate
//! sits far below that.

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::bitset::VertexSet;
use crate::error::{ModfError, Result};
use crate::MAX_VERTICES;

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(ModfError::TooLarge(n))
    } else {
        Ok(())
    }
}

fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v >= n {
        Err(ModfError::VertexOutOfRange { vertex: v, order: n })
    } else {
        Ok(())
    }
}

/// A finite digraph without loops or parallel arcs. Opposite arc pairs
/// `u -> v`, `v -> u` are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out_adj: Vec<VertexSet>,
    in_adj: Vec<VertexSet>,
}

/// Accumulates arcs, then freezes into a [`Digraph`].
#[derive(Clone, Debug)]
pub struct DigraphBuilder {
    n: usize,
    out_adj: Vec<VertexSet>,
}

impl DigraphBuilder {
    pub fn new(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(DigraphBuilder {
            n,
            out_adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out_adj[u].contains(v)
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        check_vertex(u, self.n)?;
        check_vertex(v, self.n)?;
        if u == v {
            return Err(ModfError::SelfLoop(u));
        }
        if self.out_adj[u].contains(v) {
            return Err(ModfError::DuplicateArc(u, v));
        }
        self.out_adj[u].insert(v);
        Ok(self)
    }

    /// Adds both `u -> v` and `v -> u`.
    pub fn add_symmetric(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        self.add_arc(u, v)?;
        self.add_arc(v, u)
    }

    pub fn build(self) -> Digraph {
        Digraph::from_out_sets(self.out_adj)
    }
}

impl Digraph {
    /// The digraph of order `n` with no arcs.
    pub fn empty(n: usize) -> Result<Self> {
        Ok(DigraphBuilder::new(n)?.build())
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut builder = DigraphBuilder::new(n)?;
        for (u, v) in arcs {
            builder.add_arc(u, v)?;
        }
        Ok(builder.build())
    }

    /// Builds from raw out-neighborhood sets. Panics in debug builds if a set
    /// contains its own vertex or an index past the order.
    pub(crate) fn from_out_sets(out_adj: Vec<VertexSet>) -> Self {
        let n = out_adj.len();
        let mut in_adj = vec![VertexSet::EMPTY; n];
        for (u, outs) in out_adj.iter().enumerate() {
            debug_assert!(!outs.contains(u) && outs.bound() <= n);
            for v in outs.iter() {
                in_adj[v].insert(u);
            }
        }
        Digraph { n, out_adj, in_adj }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn arc_count(&self) -> usize {
        self.out_adj.iter().map(|s| s.len()).sum()
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        self.out_adj[v]
    }

    #[inline]
    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        self.in_adj[v]
    }

    /// `N+[v]`.
    #[inline]
    pub fn closed_out_neighbors(&self, v: usize) -> VertexSet {
        self.out_adj[v].with(v)
    }

    /// `N-[v]`.
    #[inline]
    pub fn closed_in_neighbors(&self, v: usize) -> VertexSet {
        self.in_adj[v].with(v)
    }

    #[inline]
    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    #[inline]
    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out_adj[u].contains(v)
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.out_degree(v)).collect()
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.in_degree(v)).collect()
    }

    /// Maximum out-degree, zero for the empty digraph.
    pub fn max_out_degree(&self) -> usize {
        (0..self.n).map(|v| self.out_degree(v)).max().unwrap_or(0)
    }

    /// The common out-degree if every vertex has the same one.
    pub fn regular_out_degree(&self) -> Option<usize> {
        let first = self.out_adj.first()?.len();
        self.out_adj
            .iter()
            .all(|s| s.len() == first)
            .then_some(first)
    }

    /// Arcs in ascending `(u, v)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, outs)| outs.iter().map(move |v| (u, v)))
    }

    pub fn has_opposite_pair(&self) -> bool {
        self.arcs().any(|(u, v)| u < v && self.has_arc(v, u))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        check_vertex(v, self.n)
    }

    /// Same vertices, every arc reversed.
    pub fn reverse(&self) -> Digraph {
        Digraph {
            n: self.n,
            out_adj: self.in_adj.clone(),
            in_adj: self.out_adj.clone(),
        }
    }

    pub fn out_sets(&self) -> &[VertexSet] {
        &self.out_adj
    }

    /// Underlying simple graph, merging opposite arc pairs into one edge.
    pub fn underlying_graph(&self) -> Graph {
        let adj = (0..self.n).map(|v| self.out_adj[v] | self.in_adj[v]).collect();
        Graph { n: self.n, adj }
    }

    pub fn is_orientation_of(&self, graph: &Graph) -> bool {
        self.n == graph.order()
            && !self.has_opposite_pair()
            && self.underlying_graph() == *graph
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, arcs=", self.n)?;
        f.debug_list().entries(self.arcs()).finish()?;
        write!(f, ")")
    }
}

/// A finite simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(ModfError::SelfLoop(u));
            }
            if g.adj[u].contains(v) {
                return Err(ModfError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adj.first()?.len();
        self.adj.iter().all(|s| s.len() == first).then_some(first)
    }

    /// The digraph with both arcs for every edge; its closed out-neighborhoods
    /// are exactly the closed neighborhoods of the graph.
    pub fn symmetric_digraph(&self) -> Digraph {
        Digraph::from_out_sets(self.adj.clone())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        check_vertex(v, self.n)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

impl Serialize for Digraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Digraph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("arcs", &self.arcs().collect::<Vec<_>>())?;
        st.end()
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edges", &self.edges().collect::<Vec<_>>())?;
        st.end()
    }
}
