//! Constrained QAOA over the feasible subspace of a PBS instance.
//!
//! Layers alternate a diagonal cost phase with a mixer that never leaves the
//! span of feasible one-hot encodings. Three mixer realisations are provided:
//! the closed-form rank-one projector update, the same operator as a circuit
//! (state preparation conjugating a global zero-controlled phase), and the
//! reduced per-register variant. Two backends run them: an `|F|`-dimensional
//! subspace vector, and the full `2^(M*N)` statevector.

mod basis;
mod engine;
mod mixer;
mod nelder_mead;
mod optimize;
mod records;
mod variance;

pub use basis::FeasibleBasis;
pub use engine::{
    cost_polynomial, sample_counts, success_probability, tqa_init, Backend, QaoaEngine,
    QaoaOutput, QaoaParams, SubspaceState,
};
pub use mixer::{
    circuit_mixer_big_mcp, circuit_mixer_reduced, projector_mixer, projector_mixer_full,
    u_tag_gates, MixerKind,
};
pub use optimize::{optimize, OptimizeConfig, QaoaResult, TracePoint};
pub use records::{RunConfig, RunRecord};
pub use variance::gradient_variance;

use crate::model::ModelError;
use crate::prep::PrepError;
use crate::sim::SimError;

#[derive(Debug, thiserror::Error)]
pub enum QaoaError {
    #[error("the subspace backend only realises the projector mixer (got {0:?})")]
    UnsupportedMixer(MixerKind),
    #[error("gamma and beta must both hold {0} layer angles")]
    BadParams(usize),
    #[error("layer count must be at least 1")]
    NoLayers,
    #[error("empty distribution")]
    EmptyDistribution,
    #[error("gradient variance needs at least 2 samples")]
    TooFewSamples,
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Prep(#[from] PrepError),
    #[error(transparent)]
    Sim(#[from] SimError),
}
