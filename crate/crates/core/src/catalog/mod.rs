//! Named graphs, isomorphism, graph generation and the path coalition-graph
//! family.

pub mod family;
pub mod generate;
pub mod iso;
pub mod lowdeg;
pub mod named;

pub use family::{catalog, classify_cp, CpClass};
pub use generate::{all_graphs, all_graphs_up_to, all_trees, labeled_graphs, trees_by_pruefer};
pub use iso::{canonical_form, is_isomorphic, tree_code, CanonicalForm};
pub use lowdeg::{build_f1, f1_members, is_in_f1, is_isolate_plus_clique, is_pendant_clique, F1Params, F1Roles};
pub use named::make_named;
