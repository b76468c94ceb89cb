use super::engine::SubspaceState;
use crate::prep::PrepCircuit;
use crate::sim::{Circuit, Gate, StateVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Which realisation of the constrained mixer to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MixerKind {
    /// Closed-form rank-one update `1 - (1 - e^{i beta}) |psi_F><psi_F|`.
    Projector,
    /// State preparation conjugating one zero-controlled phase on all qubits.
    BigMcp,
    /// State preparation conjugating M register-local zero-controlled phases
    /// of angle `beta / M` each.
    Reduced,
}

impl std::fmt::Display for MixerKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MixerKind::Projector => write!(f, "projector"),
            MixerKind::BigMcp => write!(f, "big_mcp"),
            MixerKind::Reduced => write!(f, "reduced"),
        }
    }
}

/// Projector mixer on the subspace backend:
/// `s -> s - (1 - e^{i beta}) <u|s> u` with `u` the uniform vector
/// `(1/sqrt(|F|), ...)`. Exact in O(|F|).
pub fn projector_mixer(state: &mut SubspaceState, beta: f64) {
    let dim = state.amps.len() as f64;
    let factor = Complex64::ONE - Complex64::from_polar(1.0, beta);
    let mean: Complex64 = state.amps.iter().sum::<Complex64>() / dim;
    for amp in &mut state.amps {
        *amp -= factor * mean;
    }
}

/// The same rank-one update applied on the full statevector, with `u` the
/// uniform real vector over the feasible one-hot encodings.
pub fn projector_mixer_full(state: &mut StateVector, encodings: &[usize], beta: f64) {
    let root_dim = (encodings.len() as f64).sqrt();
    let factor = Complex64::ONE - Complex64::from_polar(1.0, beta);
    let overlap: Complex64 = encodings
        .iter()
        .map(|&enc| state.amplitude(enc))
        .sum::<Complex64>()
        / root_dim;
    let shift = factor * overlap / root_dim;
    for &enc in encodings {
        let amp = state.amplitude(enc) - shift;
        // encodings are distinct basis indices, so per-entry update is safe
        state.set_amplitude(enc, amp);
    }
}

/// Mixer circuit `U_prep . MCP0(beta, all qubits) . U_prep^dagger`.
pub fn circuit_mixer_big_mcp(prep: &PrepCircuit, beta: f64) -> Circuit {
    let num_qubits = prep.layout().num_qubits();
    let mut circuit = prep.circuit().inverted();
    circuit.push(Gate::Mcp0 {
        phi: beta,
        qubits: (0..num_qubits).collect(),
    });
    circuit.append(prep.circuit());
    circuit
}

/// The register-local zero-controlled phases: one `MCP0(phi / M)` per part,
/// so a basis state with `w` all-zero registers accrues `e^{i w phi / M}`
/// and the all-zero array accrues the full `e^{i phi}`.
pub fn u_tag_gates(prep: &PrepCircuit, phi: f64) -> Vec<Gate> {
    let layout = prep.layout();
    let parts = layout.parts() as f64;
    (0..layout.parts())
        .map(|r| Gate::Mcp0 {
            phi: phi / parts,
            qubits: layout.register(r).collect(),
        })
        .collect()
}

/// Reduced mixer circuit `U_prep . U_tag(beta) . U_prep^dagger`: spares the
/// global multi-controlled gate while still preserving the feasible span.
pub fn circuit_mixer_reduced(prep: &PrepCircuit, beta: f64) -> Circuit {
    let mut circuit = prep.circuit().inverted();
    circuit.extend(u_tag_gates(prep, beta));
    circuit.append(prep.circuit());
    circuit
}
