//! Exact optimizers for the domination number and the double Roman /
//! double Italian domination numbers: brute-force solvers for small
//! arbitrary graphs (the oracles) and linear-time dynamic programs for
//! trees, including the {0,2,3}-restricted double Roman variant.
//!
//! All solvers are deterministic: among equal-optimum witnesses they
//! return the one whose label vector (0/1 indicator for dominating sets)
//! is lexicographically smallest in vertex-index order.

mod brute;
mod tree_dp;

pub use brute::{
    didf_bruteforce, didf_bruteforce_with_limit, drdf_bruteforce, drdf_bruteforce_no_ones,
    drdf_bruteforce_no_ones_with_limit, drdf_bruteforce_with_limit, gamma_bruteforce,
    gamma_bruteforce_with_limit,
};
pub use tree_dp::{didf_tree_dp, drdf_tree_dp, drdf_tree_dp_no_ones, gamma_tree_dp};

use thiserror::Error;

use crate::labelings::Labeling;

/// Default order cap for the subset brute force.
pub const GAMMA_BRUTEFORCE_DEFAULT_LIMIT: usize = 20;
/// Default order cap for the 4^n labeling brute force.
pub const LABELING_BRUTEFORCE_DEFAULT_LIMIT: usize = 14;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph order {order} exceeds the brute-force limit {limit}; pass a higher limit to override")]
    LimitExceeded { order: usize, limit: usize },
    #[error("brute-force solvers require a connected graph")]
    Disconnected,
}

/// An optimal witness: a dominating set for `gamma`, a labeling otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    DominatingSet(Vec<usize>),
    Labeling(Labeling),
}

impl Witness {
    pub fn as_dominating_set(&self) -> Option<&[usize]> {
        match self {
            Witness::DominatingSet(s) => Some(s),
            Witness::Labeling(_) => None,
        }
    }

    pub fn as_labeling(&self) -> Option<&Labeling> {
        match self {
            Witness::Labeling(f) => Some(f),
            Witness::DominatingSet(_) => None,
        }
    }
}

/// Minimum value together with a witness achieving it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub value: u32,
    pub witness: Witness,
}
