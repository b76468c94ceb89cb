//! Solvers for the product breakdown structure (PBS) assignment problem.
//!
//! A PBS instance is a rooted tree of parts together with per-part transport
//! cost matrices over a set of manufacturing sites. The task is to assign each
//! part to a site such that every part sits at a different site than its
//! parent and than all of its siblings, minimising the total transport cost.
//!
//! The crate provides:
//!
//! - [`model`]: instances, feasibility, feasible-set combinatorics, QUBO export
//!   and seeded instance generation.
//! - [`sim`]: a dense statevector simulator with exactly the gate set the
//!   constrained-QAOA circuits need.
//! - [`prep`]: circuit construction for the uniform superposition of all
//!   feasible assignments, and the span-classification self-test.
//! - [`qaoa`]: the constrained QAOA engine with three mixer realisations and
//!   two backends (full statevector and feasible-subspace).
//! - [`solver`]: exact classical solvers (tree dynamic programming, brute
//!   force) and the crop/contract decomposition.

pub mod model;
pub mod prep;
pub mod qaoa;
pub mod sim;
pub mod solver;

pub use model::{Assignment, PbsInstance, PbsTree};
