//! Exact computation of domination numbers and their double Roman / double
//! Italian variants, with tree-specialized dynamic programs, brute-force
//! oracles, structural recognizers, exhaustive free-tree enumeration, and a
//! verification harness that checks the known bounds and characterizations
//! over every small tree.

pub mod edgelist;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod labelings;
pub mod normal_form;
pub mod recognizers;
pub mod solvers;
pub mod tree_enum;

pub use graph::{Graph, GraphError, RootedTree, VertexRoles};
pub use labelings::Labeling;
