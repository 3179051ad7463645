//! Local edits of digraphs and the bounds they obey on `γ+maj`.

use std::fmt;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::digraph::{Digraph, Graph};
use crate::domination::is_majority_dominating;
use crate::error::{ModfError, Result};
use crate::sign::SignFunction;
use crate::solver::gamma_maj_out;

/// `D` with the arc `u -> v` replaced by `v -> u`.
pub fn reverse_arc(d: &Digraph, u: usize, v: usize) -> Result<Digraph> {
    d.check_vertex(u)?;
    d.check_vertex(v)?;
    if !d.has_arc(u, v) {
        return Err(ModfError::MissingArc(u, v));
    }
    if d.has_arc(v, u) {
        return Err(ModfError::ArcCollision(u, v));
    }
    let mut out = d.out_sets().to_vec();
    out[u].remove(v);
    out[v].insert(u);
    Ok(Digraph::from_out_sets(out))
}

pub fn delete_arc(d: &Digraph, u: usize, v: usize) -> Result<Digraph> {
    d.check_vertex(u)?;
    d.check_vertex(v)?;
    if !d.has_arc(u, v) {
        return Err(ModfError::MissingArc(u, v));
    }
    let mut out = d.out_sets().to_vec();
    out[u].remove(v);
    Ok(Digraph::from_out_sets(out))
}

/// Removes the bits of `set` at position `v` and shifts higher bits down.
fn close_gap(set: VertexSet, v: usize) -> VertexSet {
    let bits = set.bits();
    let low = bits & ((1u64 << v) - 1);
    let high = if v + 1 >= 64 { 0 } else { bits >> (v + 1) };
    VertexSet::from_bits(low | high << v)
}

/// `D - v`. Vertices above `v` move down by one index.
pub fn delete_vertex(d: &Digraph, v: usize) -> Result<Digraph> {
    d.check_vertex(v)?;
    if d.order() < 2 {
        return Err(ModfError::InvalidParameter(
            "cannot delete the only vertex".into(),
        ));
    }
    let out = d
        .out_sets()
        .iter()
        .enumerate()
        .filter(|&(u, _)| u != v)
        .map(|(_, &s)| close_gap(s, v))
        .collect();
    Ok(Digraph::from_out_sets(out))
}

/// The restriction of `f` to `V - v`, indexed as in [`delete_vertex`].
pub fn restrict_sign_function(f: &SignFunction, v: usize) -> Result<SignFunction> {
    if v >= f.order() {
        return Err(ModfError::VertexOutOfRange {
            vertex: v,
            order: f.order(),
        });
    }
    SignFunction::new(f.order() - 1, close_gap(f.positives(), v))
}

/// Orients `g` so that the majority dominating function `f` becomes a MODF:
/// edges between a `-1` and a `+1` vertex point towards the `+1` end, other
/// edges point from the lower to the higher index.
pub fn orientation_from_majority_function(g: &Graph, f: &SignFunction) -> Result<Digraph> {
    if !is_majority_dominating(g, f)? {
        return Err(ModfError::NotMajorityDominating);
    }
    let mut out = vec![VertexSet::EMPTY; g.order()];
    for (u, v) in g.edges() {
        let (tail, head) = if !f.is_positive(u) && f.is_positive(v) {
            (u, v)
        } else if f.is_positive(u) && !f.is_positive(v) {
            (v, u)
        } else {
            (u, v)
        };
        out[tail].insert(head);
    }
    Ok(Digraph::from_out_sets(out))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "edit")]
pub enum Edit {
    ReverseArc { u: usize, v: usize },
    DeleteArc { u: usize, v: usize },
    DeleteVertex { v: usize },
}

impl Edit {
    pub fn apply(&self, d: &Digraph) -> Result<Digraph> {
        match *self {
            Edit::ReverseArc { u, v } => reverse_arc(d, u, v),
            Edit::DeleteArc { u, v } => delete_arc(d, u, v),
            Edit::DeleteVertex { v } => delete_vertex(d, v),
        }
    }
}

impl fmt::Display for Edit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Edit::ReverseArc { u, v } => write!(f, "reverse {u}->{v}"),
            Edit::DeleteArc { u, v } => write!(f, "delete-arc {u}->{v}"),
            Edit::DeleteVertex { v } => write!(f, "delete-vertex {v}"),
        }
    }
}

/// The bound an edit is known to respect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EditBound {
    /// `|after - before| <= 2`.
    WithinTwo,
    /// `after >= before - 1`, for deleting a vertex with no out-neighbors.
    SinkDeletion,
    /// Deleting a vertex with out-neighbors can move the value arbitrarily.
    None,
}

impl EditBound {
    pub fn holds(self, before: i64, after: i64) -> bool {
        match self {
            EditBound::WithinTwo => (after - before).abs() <= 2,
            EditBound::SinkDeletion => after >= before - 1,
            EditBound::None => true,
        }
    }
}

pub fn edit_bound(d: &Digraph, edit: &Edit) -> EditBound {
    match *edit {
        Edit::ReverseArc { .. } | Edit::DeleteArc { .. } => EditBound::WithinTwo,
        Edit::DeleteVertex { v } if v < d.order() && d.out_degree(v) == 0 => EditBound::SinkDeletion,
        Edit::DeleteVertex { .. } => EditBound::None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerturbationStep {
    pub edit: Edit,
    pub before: i64,
    pub after: i64,
    pub bound: EditBound,
    pub bound_holds: bool,
}

/// Applies `edits` in order, solving `γ+maj` before and after each one.
pub fn perturb(d: &Digraph, edits: &[Edit]) -> Result<(Digraph, Vec<PerturbationStep>)> {
    let mut current = d.clone();
    let mut value = gamma_maj_out(&current)?.optimum;
    let mut steps = Vec::with_capacity(edits.len());
    for edit in edits {
        let bound = edit_bound(&current, edit);
        let next = edit.apply(&current)?;
        let after = gamma_maj_out(&next)?.optimum;
        steps.push(PerturbationStep {
            edit: *edit,
            before: value,
            after,
            bound,
            bound_holds: bound.holds(value, after),
        });
        current = next;
        value = after;
    }
    Ok((current, steps))
}
