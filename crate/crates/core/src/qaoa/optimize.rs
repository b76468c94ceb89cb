use super::engine::{success_probability, tqa_init, QaoaEngine, QaoaParams};
use super::nelder_mead;
use super::QaoaError;
use serde::{Deserialize, Serialize};

/// Candidate annealing times tried when no `delta_t` is fixed; the one with
/// the best initial objective wins.
const DELTA_T_GRID: [f64; 4] = [0.25, 0.5, 0.75, 1.0];

/// Spread of the initial Nelder-Mead simplex around the TQA start.
const SIMPLEX_STEP: f64 = 0.25;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OptimizeConfig {
    pub layers: usize,
    /// Objective evaluations allowed beyond the initial simplex.
    pub max_iter: usize,
    /// Fixed annealing time for the TQA start; `None` scans [`DELTA_T_GRID`].
    pub delta_t: Option<f64>,
    /// Approximation factor of the reported success probability.
    pub alpha: f64,
    /// Carried into result records for provenance; the optimisation itself
    /// is deterministic.
    pub seed: u64,
}

impl Default for OptimizeConfig {
    fn default() -> Self {
        OptimizeConfig {
            layers: 3,
            max_iter: 100,
            delta_t: None,
            alpha: 0.1,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TracePoint {
    pub iteration: usize,
    pub objective: f64,
}

/// Outcome of an optimised QAOA run.
#[derive(Clone, Debug)]
pub struct QaoaResult {
    pub params: QaoaParams,
    /// Exact probability per feasible assignment, in basis order.
    pub distribution: Vec<f64>,
    pub expectation: f64,
    pub p_alpha: f64,
    pub leakage: f64,
    pub trace: Vec<TracePoint>,
    pub delta_t: f64,
    pub evaluations: usize,
}

/// Minimises `<C>` over the 2p angles with Nelder-Mead from a TQA start and
/// returns the best-seen parameters. Deterministic for a fixed config.
pub fn optimize(engine: &QaoaEngine, config: &OptimizeConfig) -> Result<QaoaResult, QaoaError> {
    if config.layers == 0 {
        return Err(QaoaError::NoLayers);
    }
    let objective = |flat: &[f64]| -> Result<f64, QaoaError> {
        engine.expectation(&QaoaParams::from_flat(flat)?)
    };

    // pick the annealing time by the best starting objective
    let mut start_trace = Vec::new();
    let delta_t = match config.delta_t {
        Some(dt) => dt,
        None => {
            let mut best = (DELTA_T_GRID[0], f64::INFINITY);
            for &dt in &DELTA_T_GRID {
                let value = objective(&tqa_init(config.layers, dt).to_flat())?;
                start_trace.push(value);
                if value < best.1 {
                    best = (dt, value);
                }
            }
            best.0
        }
    };
    let x0 = tqa_init(config.layers, delta_t).to_flat();

    // Nelder-Mead cannot return errors mid-callback; engine failures for a
    // valid configuration would have surfaced in the grid scan above.
    let mut failure = None;
    let outcome = nelder_mead::minimize(
        |flat| match objective(flat) {
            Ok(value) => value,
            Err(err) => {
                failure.get_or_insert(err);
                f64::INFINITY
            }
        },
        &x0,
        SIMPLEX_STEP,
        config.max_iter,
    );
    if let Some(err) = failure {
        return Err(err);
    }

    let params = QaoaParams::from_flat(&outcome.best_x)?;
    let output = engine.run(&params)?;
    let expectation = output.expectation(engine.basis());
    debug_assert!((expectation - outcome.best_f).abs() < 1e-9);
    let p_alpha = success_probability(
        &output.distribution,
        engine.basis().costs(),
        engine.basis().min_cost(),
        config.alpha,
    )?;
    let evaluations = start_trace.len() + outcome.trace.len();
    let trace = start_trace
        .into_iter()
        .chain(outcome.trace)
        .enumerate()
        .map(|(iteration, objective)| TracePoint {
            iteration,
            objective,
        })
        .collect();
    Ok(QaoaResult {
        params,
        distribution: output.distribution,
        expectation,
        p_alpha,
        leakage: output.leakage,
        trace,
        delta_t,
        evaluations,
    })
}
