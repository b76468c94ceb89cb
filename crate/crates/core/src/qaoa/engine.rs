use super::basis::FeasibleBasis;
use super::mixer::{
    circuit_mixer_big_mcp, circuit_mixer_reduced, projector_mixer, projector_mixer_full, MixerKind,
};
use super::QaoaError;
use crate::model::PbsInstance;
use crate::prep::{prepare_pbs_circuit, PrepCircuit};
use crate::sim::{CostPolynomial, DEFAULT_MAX_QUBITS};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Which simulation backend carries the QAOA state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Backend {
    /// `|F|` amplitudes over the feasible basis; projector mixer only.
    Subspace,
    /// Dense `2^(M*N)` statevector; any mixer realisation.
    Full,
}

impl std::fmt::Display for Backend {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Backend::Subspace => write!(f, "subspace"),
            Backend::Full => write!(f, "full"),
        }
    }
}

/// State restricted to the feasible basis: one amplitude per assignment,
/// ordered like [`FeasibleBasis`].
#[derive(Clone, Debug)]
pub struct SubspaceState {
    pub(crate) amps: Vec<Complex64>,
}

impl SubspaceState {
    /// The uniform superposition of all feasible assignments.
    pub fn uniform(dim: usize) -> Self {
        let amp = Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
        SubspaceState {
            amps: vec![amp; dim],
        }
    }

    pub fn from_amplitudes(amps: Vec<Complex64>) -> Self {
        SubspaceState { amps }
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// Per-layer angles. `gamma[k]` scales layer k's cost phase, `beta[k]` its
/// mixer.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QaoaParams {
    pub gamma: Vec<f64>,
    pub beta: Vec<f64>,
}

impl QaoaParams {
    pub fn new(gamma: Vec<f64>, beta: Vec<f64>) -> Result<Self, QaoaError> {
        if gamma.is_empty() || gamma.len() != beta.len() {
            return Err(QaoaError::BadParams(gamma.len().max(beta.len())));
        }
        Ok(QaoaParams { gamma, beta })
    }

    pub fn layers(&self) -> usize {
        self.gamma.len()
    }

    /// Flat layout `[gamma_1..gamma_p, beta_1..beta_p]`; the last slot is
    /// `beta_p`, the "last parameter" of the ansatz.
    pub fn to_flat(&self) -> Vec<f64> {
        let mut flat = self.gamma.clone();
        flat.extend_from_slice(&self.beta);
        flat
    }

    pub fn from_flat(flat: &[f64]) -> Result<Self, QaoaError> {
        if flat.is_empty() || !flat.len().is_multiple_of(2) {
            return Err(QaoaError::BadParams(flat.len() / 2));
        }
        let p = flat.len() / 2;
        Ok(QaoaParams {
            gamma: flat[..p].to_vec(),
            beta: flat[p..].to_vec(),
        })
    }
}

/// Trotterized-annealing initial angles: `gamma_k = (k/p) dt`,
/// `beta_k = (1 - k/p) dt` for k = 1..p.
pub fn tqa_init(layers: usize, delta_t: f64) -> QaoaParams {
    let p = layers as f64;
    QaoaParams {
        gamma: (1..=layers).map(|k| k as f64 / p * delta_t).collect(),
        beta: (1..=layers).map(|k| (1.0 - k as f64 / p) * delta_t).collect(),
    }
}

/// The cost function as a multilinear polynomial over the one-hot variables:
/// for every edge (r, s) and site pair i != j the term
/// `c^r[i][j] x_{r,i} x_{s,j}`.
pub fn cost_polynomial(inst: &PbsInstance) -> CostPolynomial {
    let n = inst.num_sites();
    let mut poly = CostPolynomial::new(inst.num_parts() * n);
    for &(r, s) in inst.tree().edges() {
        let c = inst.cost_matrix(r);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    poly.add_quadratic(r * n + i, s * n + j, c.get(i, j));
                }
            }
        }
    }
    poly
}

/// Result of running a fixed-parameter QAOA state: the exact probability of
/// each feasible assignment, plus whatever probability leaked outside the
/// feasible span (zero by construction on the subspace backend).
#[derive(Clone, Debug)]
pub struct QaoaOutput {
    pub distribution: Vec<f64>,
    pub leakage: f64,
}

impl QaoaOutput {
    pub fn expectation(&self, basis: &FeasibleBasis) -> f64 {
        self.distribution
            .iter()
            .zip(basis.costs())
            .map(|(p, c)| p * c)
            .sum()
    }
}

/// A ready-to-run QAOA setup for one instance: feasible basis, cost data and
/// (for the full backend) the preparation circuit.
pub struct QaoaEngine {
    basis: FeasibleBasis,
    backend: Backend,
    mixer: MixerKind,
    prep: Option<PrepCircuit>,
    poly: Option<CostPolynomial>,
    cap: usize,
}

impl QaoaEngine {
    pub fn new(inst: &PbsInstance, backend: Backend, mixer: MixerKind) -> Result<Self, QaoaError> {
        Self::with_cap(inst, backend, mixer, DEFAULT_MAX_QUBITS)
    }

    pub fn with_cap(
        inst: &PbsInstance,
        backend: Backend,
        mixer: MixerKind,
        cap: usize,
    ) -> Result<Self, QaoaError> {
        if backend == Backend::Subspace && mixer != MixerKind::Projector {
            // the reduced mixer has no closed form on the feasible basis
            return Err(QaoaError::UnsupportedMixer(mixer));
        }
        let basis = FeasibleBasis::new(inst)?;
        let (prep, poly) = match backend {
            Backend::Subspace => (None, None),
            Backend::Full => (
                Some(prepare_pbs_circuit(inst.tree(), inst.num_sites())?),
                Some(cost_polynomial(inst)),
            ),
        };
        Ok(QaoaEngine {
            basis,
            backend,
            mixer,
            prep,
            poly,
            cap,
        })
    }

    pub fn basis(&self) -> &FeasibleBasis {
        &self.basis
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn mixer(&self) -> MixerKind {
        self.mixer
    }

    /// Runs `p` layers from the feasible superposition and returns the exact
    /// outcome distribution.
    pub fn run(&self, params: &QaoaParams) -> Result<QaoaOutput, QaoaError> {
        match self.backend {
            Backend::Subspace => Ok(self.run_subspace(params)),
            Backend::Full => self.run_full(params),
        }
    }

    /// The optimisation objective: exact `<C>` over the feasible
    /// distribution at the given parameters.
    pub fn expectation(&self, params: &QaoaParams) -> Result<f64, QaoaError> {
        Ok(self.run(params)?.expectation(&self.basis))
    }

    fn run_subspace(&self, params: &QaoaParams) -> QaoaOutput {
        let mut state = SubspaceState::uniform(self.basis.len());
        for (&gamma, &beta) in params.gamma.iter().zip(&params.beta) {
            for (amp, &cost) in state.amps.iter_mut().zip(self.basis.costs()) {
                *amp *= Complex64::from_polar(1.0, -gamma * cost);
            }
            projector_mixer(&mut state, beta);
        }
        QaoaOutput {
            distribution: state.probabilities(),
            leakage: 0.0,
        }
    }

    fn run_full(&self, params: &QaoaParams) -> Result<QaoaOutput, QaoaError> {
        let prep = self.prep.as_ref().expect("full backend builds the prep");
        let poly = self.poly.as_ref().expect("full backend builds the polynomial");
        let mut state = prep.prepare_state_with_cap(self.cap)?;
        for (&gamma, &beta) in params.gamma.iter().zip(&params.beta) {
            state.apply_diagonal_phase(poly, gamma)?;
            match self.mixer {
                MixerKind::Projector => {
                    projector_mixer_full(&mut state, self.basis.encodings(), beta)
                }
                MixerKind::BigMcp => circuit_mixer_big_mcp(prep, beta).run(&mut state)?,
                MixerKind::Reduced => circuit_mixer_reduced(prep, beta).run(&mut state)?,
            }
        }
        let distribution: Vec<f64> = self
            .basis
            .encodings()
            .iter()
            .map(|&enc| state.probability(enc))
            .collect();
        let leakage = (1.0 - distribution.iter().sum::<f64>()).max(0.0);
        Ok(QaoaOutput {
            distribution,
            leakage,
        })
    }
}

/// Draws `shots` assignments from an exact distribution (seeded multinomial)
/// and returns the per-assignment counts. Expectations in this crate are
/// computed exactly from amplitudes; sampling exists for shot-noise studies.
pub fn sample_counts(distribution: &[f64], shots: usize, seed: u64) -> Vec<usize> {
    use rand::{Rng, SeedableRng};
    let mut cumulative = Vec::with_capacity(distribution.len());
    let mut total = 0.0;
    for &p in distribution {
        total += p;
        cumulative.push(total);
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut counts = vec![0usize; distribution.len()];
    for _ in 0..shots {
        let draw: f64 = rng.random::<f64>() * total;
        let k = cumulative.partition_point(|&c| c < draw);
        counts[k.min(distribution.len() - 1)] += 1;
    }
    counts
}

/// Total probability of measuring an assignment with cost strictly below
/// `(1 + alpha) * c_min`.
pub fn success_probability(
    distribution: &[f64],
    costs: &[f64],
    c_min: f64,
    alpha: f64,
) -> Result<f64, QaoaError> {
    if distribution.is_empty() || distribution.len() != costs.len() {
        return Err(QaoaError::EmptyDistribution);
    }
    let threshold = (1.0 + alpha) * c_min;
    Ok(distribution
        .iter()
        .zip(costs)
        .filter(|&(_, &c)| c < threshold)
        .map(|(p, _)| p)
        .sum())
}
