//! Dense statevector simulation with exactly the gate set the PBS circuits
//! need: Pauli-X, a continuous-swap rotation, controlled swap, a
//! multi-controlled phase on the all-zero subspace, and diagonal phases from
//! a cost polynomial.
//!
//! Bit convention: qubit `q` is bit `q` of the basis-state index, so qubit 0
//! is the least significant bit. This matches the QUBO variable indexing,
//! where qubit `r * N + i` carries "part `r` at site `i`".

mod circuit;
mod layout;
mod poly;
mod state;

#[cfg(test)]
pub(crate) mod testutil {
    use super::StateVector;
    use num_complex::Complex64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn random_state(num_qubits: usize, seed: u64) -> StateVector {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut amps: Vec<Complex64> = (0..1usize << num_qubits)
            .map(|_| Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
            .collect();
        let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        for a in &mut amps {
            *a /= norm;
        }
        StateVector::from_amplitudes(amps).unwrap()
    }
}

pub use circuit::{Circuit, Gate};
pub use layout::RegisterLayout;
pub use poly::CostPolynomial;
pub use state::{StateVector, DEFAULT_MAX_QUBITS};

#[derive(Debug, thiserror::Error)]
pub enum SimError {
    #[error("qubit {qubit} out of range for {num_qubits} qubits")]
    QubitOutOfRange { qubit: usize, num_qubits: usize },
    #[error("gate requires distinct qubits")]
    DuplicateQubit,
    #[error("controlled phase needs a non-empty qubit set")]
    EmptyQubitSet,
    #[error("{requested} qubits exceed the simulator cap of {cap} (set PBS_CQAOA_MAX_QUBITS to override)")]
    QubitCapExceeded { requested: usize, cap: usize },
    #[error("circuit acts on {circuit} qubits but state holds {state}")]
    WidthMismatch { circuit: usize, state: usize },
    #[error("polynomial variable {variable} out of range for {num_qubits} qubits")]
    VariableOutOfRange { variable: usize, num_qubits: usize },
    #[error("amplitude dump supported up to 12 qubits, state has {0}")]
    DumpTooLarge(usize),
    #[error("amplitude vector length {len} is not a power of two")]
    BadAmplitudeCount { len: usize },
}
