//! Exact computation of tree-clique width.
//!
//! The tree-clique width `tcl(G)` of a graph is the least `k` such that `G`
//! has a tree decomposition whose every bag can be covered by `k` cliques of
//! `G`. This crate provides subset tables for clique cover numbers, two
//! exponential-time general solvers, polynomial solvers for cographs and
//! permutation graphs, a decomposition checker and sanitizer, and a
//! brute-force oracle used to cross-check all of them.

pub mod cograph;
pub mod cover;
pub mod decomposition;
pub mod error;
pub mod generate;
pub mod graph;
pub mod ie;
pub mod io;
pub mod oracle;
pub mod permutation;
pub mod solver_dp;
pub mod solver_pmc;
pub mod vertex_set;

pub use cover::{fast_table, lawler_table, vcc, CoverTable};
pub use decomposition::Decomposition;
pub use error::{Error, Result};
pub use graph::{Graph, SeparatorInfo};
pub use vertex_set::VertexSet;
