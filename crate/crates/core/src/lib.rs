//! Coalition partitions of small graphs.
//!
//! A *coalition* is a pair of disjoint sets, neither dominating, whose
//! union dominates. A *coalition partition* splits the vertices into blocks
//! that are either dominating singletons or non-dominating sets with a
//! coalition partner among the other blocks. This crate validates such
//! partitions, builds their coalition graphs, computes the coalition number
//! `C(G)` exactly, and runs exhaustive censuses over paths and small graphs.
//!
//! Graphs have at most 64 vertices so that vertex sets fit in one `u64`.

pub mod catalog;
pub mod census;
pub mod domination;
mod error;
pub mod graph;
pub mod io;
pub mod partition;
mod rgs;
pub mod solver;

pub use catalog::{classify_cp, make_named, CpClass};
pub use census::{census_path, CensusReport};
pub use domination::{domination_number, is_dominating, minimum_dominating_set, vertex_cover_number};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use partition::{
    coalition_graph, forms_coalition, validate_partition, BlockStatus, CoalitionGraph, PartitionValidity,
    Verdict, VertexPartition,
};
pub use rgs::bell;
pub use solver::{
    coalition_number, coalition_number_bnb, coalition_partitions, coalition_number_enumerate, coalition_number_with, upper_bound, Method,
    SolverConfig, SolverError, SolverResult, SolverStats,
};
