//! Exact computation of majority out-domination in small digraphs.
//!
//! A sign function `f: V -> {-1, +1}` on a digraph is a majority
//! out-dominating function (MODF) when `f(N+[v]) >= 1` for at least half of
//! the vertices. This crate computes the minimum MODF weight `γ+maj`, its
//! undirected analogue `γmaj`, the extremes over orientations of a graph, the
//! in-domination number `γ-`, and a gadget that reduces in-domination to the
//! MODF decision problem.
//!
//! ```
//! use modf_core::{families, solver};
//!
//! let c6 = families::directed_cycle(6).unwrap();
//! assert_eq!(solver::gamma_maj_out(&c6).unwrap().optimum, 2);
//! ```

pub mod bitset;
pub mod digraph;
pub mod domination;
pub mod error;
pub mod families;
pub mod generate;
pub mod io;
pub mod orientations;
pub mod reduction;
pub mod sign;
pub mod solver;
pub mod table;
pub mod transforms;

/// Largest order a [`Digraph`] or [`Graph`] can have.
pub const MAX_VERTICES: usize = 64;

pub use bitset::VertexSet;
pub use digraph::{Digraph, DigraphBuilder, Graph};
pub use domination::{is_majority_dominating, is_minimal_modf, is_modf};
pub use error::{ModfError, Result};
pub use families::FamilySpec;
pub use orientations::OrientationResult;
pub use reduction::GadgetInstance;
pub use sign::SignFunction;
pub use solver::{Method, SolveResult};
