use super::build::{prepare_pbs_circuit, PrepCircuit};
use super::PrepError;
use crate::model::{enumerate_feasible, PbsTree};
use crate::sim::StateVector;
use std::collections::HashSet;

/// Amplitudes below this squared magnitude count as zero support.
const SUPPORT_TOL: f64 = 1e-12;

/// Where the prep image of a basis state lives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpanClass {
    /// All support on one-hot encodings of feasible assignments.
    FeasibleSpan,
    /// No support on any feasible encoding.
    InfeasibleSpan,
}

/// Reusable classifier: the prep circuit plus the set of feasible encodings.
/// Classification runs are independent, so one classifier can serve parallel
/// sweeps over basis states.
pub struct SpanClassifier {
    prep: PrepCircuit,
    feasible: HashSet<usize>,
    cap: usize,
}

impl SpanClassifier {
    pub fn new(tree: &PbsTree, num_sites: usize) -> Result<Self, PrepError> {
        Self::with_cap(tree, num_sites, crate::sim::DEFAULT_MAX_QUBITS)
    }

    pub fn with_cap(tree: &PbsTree, num_sites: usize, cap: usize) -> Result<Self, PrepError> {
        let prep = prepare_pbs_circuit(tree, num_sites)?;
        let layout = prep.layout();
        let feasible = enumerate_feasible(tree, num_sites, 1_000_000)?
            .iter()
            .map(|f| layout.encode(f.sites()))
            .collect();
        Ok(SpanClassifier { prep, feasible, cap })
    }

    pub fn num_qubits(&self) -> usize {
        self.prep.layout().num_qubits()
    }

    /// Runs the prep circuit on |input> and reports which span the image
    /// lies in. Mixed support would falsify the span-classification property
    /// of the construction, so it is an error, not a value.
    pub fn classify(&self, input: usize) -> Result<SpanClass, PrepError> {
        let mut state = StateVector::basis_state_with_cap(self.num_qubits(), input, self.cap)?;
        self.prep.circuit().run(&mut state)?;
        let mut on_feasible = false;
        let mut on_infeasible = false;
        for idx in 0..state.dim() {
            if state.probability(idx) > SUPPORT_TOL {
                if self.feasible.contains(&idx) {
                    on_feasible = true;
                } else {
                    on_infeasible = true;
                }
                if on_feasible && on_infeasible {
                    return Err(PrepError::MixedSpan { input });
                }
            }
        }
        if on_feasible {
            Ok(SpanClass::FeasibleSpan)
        } else {
            Ok(SpanClass::InfeasibleSpan)
        }
    }
}

/// One-shot classification of `U_prep |input>`.
pub fn classify_prep_image(
    tree: &PbsTree,
    num_sites: usize,
    input: usize,
) -> Result<SpanClass, PrepError> {
    SpanClassifier::new(tree, num_sites)?.classify(input)
}
