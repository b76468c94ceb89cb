//! Construction of the feasible-superposition circuit.
//!
//! The circuit acts on `M` one-hot registers of `N` qubits. The root register
//! receives a full W state; each node's sub-part registers receive partial
//! W states of decreasing size, are made pairwise distinct by controlled-swap
//! cascades, then made distinct from their parent, and the construction
//! recurses. Applied to |0...0> the circuit yields amplitude `1/sqrt(|F|)` on
//! exactly the one-hot encodings of feasible assignments.

mod build;
mod classify;
mod wstate;

pub use build::{make_distinct, prepare_pbs_circuit, PrepCircuit};
pub use classify::{classify_prep_image, SpanClass, SpanClassifier};
pub use wstate::{partial_w, w_angles, w_angles_weighted};

use crate::model::ModelError;
use crate::sim::SimError;

#[derive(Debug, thiserror::Error)]
pub enum PrepError {
    #[error("state preparation needs at least {required} sites, got {sites}")]
    TooFewSites { sites: usize, required: usize },
    #[error("partial W size {n} exceeds register size {register}")]
    WTooLarge { n: usize, register: usize },
    #[error("W state needs at least one qubit")]
    EmptyW,
    #[error("weight vector must be non-empty with non-negative entries and positive sum")]
    BadWeights,
    #[error(
        "prep image of basis state {input} mixes feasible and infeasible support; \
         this contradicts the span-classification property and signals an implementation bug"
    )]
    MixedSpan { input: usize },
    #[error(transparent)]
    Sim(#[from] SimError),
    #[error(transparent)]
    Model(#[from] ModelError),
}
