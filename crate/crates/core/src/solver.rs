//! Exact classical solvers for PBS instances.
//!
//! The dynamic program processes nodes by increasing height: for each node
//! `x` and candidate site `i` it minimises over all injective assignments of
//! the sub-parts to sites distinct from `i`, giving runtime `O(M * N^(m+1))`.
//! A brute-force enumeration solver serves as the oracle, and the
//! crop/contract decomposition splits a tree into independently solvable
//! pieces without losing exactness.

mod brute;
mod crop;
mod dp;

pub use brute::brute_force;
pub use crop::{crop, solve_decomposed, suggest_crops, CropOutcome};
pub use dp::{dp_solve, dp_solve_fixed_root, dp_solve_with_stats, DpStats, DpTable};

use crate::model::ModelError;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum SolverError {
    #[error("no feasible assignment: {sites} sites but the tree needs {required}")]
    Infeasible { sites: usize, required: usize },
    #[error("cannot crop at the root")]
    CropAtRoot(usize),
    #[error("crop subtrees of nodes {0} and {1} overlap")]
    OverlappingCrops(usize, usize),
    #[error("crop node {label} out of range")]
    BadCropNode { label: usize },
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// CLI-facing solve result.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SolveRecord {
    pub assignment: Vec<usize>,
    pub cost: f64,
    pub solver: String,
    pub wall_time_ms: f64,
    pub crop_nodes: Vec<usize>,
}
