//! Hypergraph covering toolkit.
//!
//! * [`hypergraph`]: canonical hypergraphs, restrictions (traces), strong
//!   removal, maximal edges, strong degrees, duals and definition checks.
//! * [`degeneracy`]: strong/plain degeneracy by peeling, and exhaustive
//!   oracles for strong and mighty degeneracy.
//! * [`cover`]: the greedy that returns an edge cover `C` and an independent
//!   set `X` with `|C| <= ŝ(H)·|X|`, and its dual transversal/matching form.
//! * [`domination`]: neighborhood hypergraphs and the tree solver for
//!   domination versus packing.
//! * [`oracles`], [`vc`]: exhaustive exact solvers.
//! * [`generators`], [`format`]: instances and the `.hg`/`.gr` text formats.

mod bits;
pub mod cover;
pub mod degeneracy;
pub mod domination;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod hypergraph;
pub mod oracles;
mod peel;
pub mod vc;

pub use cover::{greedy_cover, greedy_transversal, CoverCertificate, TransversalCertificate};
pub use degeneracy::{
    degeneracy, degeneracy_bf, mighty_degeneracy_bf, strong_degeneracy, strong_degeneracy_bf, EliminationOrder,
};
pub use domination::{
    check_graph, greedy_domination, neighborhood_equivalence_audit, neighborhood_hypergraph, tree_domination,
    DominationCertificate, GraphCheck, NeighborhoodKind,
};
pub use error::{Error, Result};
pub use generators::Seed;
pub use graph::Graph;
pub use hypergraph::{CheckKind, DuplicatePolicy, EdgeId, Hypergraph, SubHypergraph, VertexId};
pub use oracles::{exact, ExactProblem, ExactResult, Instance};
pub use vc::{shatter_witness, vc_dimension, ShatterWitness, VcResult};
