use super::engine::{Backend, QaoaParams};
use super::mixer::MixerKind;
use super::optimize::{QaoaResult, TracePoint};
use super::FeasibleBasis;
use serde::{Deserialize, Serialize};

/// Serialisable description of one QAOA run, embedded in result files for
/// provenance.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunConfig {
    /// Instance file path, if the instance came from disk.
    pub instance: Option<String>,
    pub layers: usize,
    pub mixer: MixerKind,
    pub backend: Backend,
    pub max_iter: usize,
    pub delta_t: Option<f64>,
    pub alpha: f64,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            instance: None,
            layers: 3,
            mixer: MixerKind::Projector,
            backend: Backend::Subspace,
            max_iter: 100,
            delta_t: None,
            alpha: 0.1,
            seed: 0,
        }
    }
}

/// Serialisable result record: parameters, objective, success probability,
/// the most probable assignments and the optimiser trace.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunRecord {
    pub config: RunConfig,
    pub params: QaoaParams,
    pub expectation: f64,
    pub p_alpha: f64,
    pub c_min: f64,
    pub feasible_count: usize,
    pub leakage: f64,
    pub delta_t_used: f64,
    pub evaluations: usize,
    pub top_assignments: Vec<TopAssignment>,
    pub trace: Vec<TracePoint>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TopAssignment {
    pub sites: Vec<usize>,
    pub cost: f64,
    pub probability: f64,
}

impl RunRecord {
    pub fn new(
        config: RunConfig,
        result: &QaoaResult,
        basis: &FeasibleBasis,
        top_k: usize,
    ) -> Self {
        let mut ranked: Vec<usize> = (0..basis.len()).collect();
        ranked.sort_by(|&a, &b| {
            result.distribution[b]
                .total_cmp(&result.distribution[a])
                .then(a.cmp(&b))
        });
        let top_assignments = ranked
            .into_iter()
            .take(top_k)
            .map(|k| TopAssignment {
                sites: basis.assignment(k).sites().to_vec(),
                cost: basis.cost(k),
                probability: result.distribution[k],
            })
            .collect();
        RunRecord {
            config,
            params: result.params.clone(),
            expectation: result.expectation,
            p_alpha: result.p_alpha,
            c_min: basis.min_cost(),
            feasible_count: basis.len(),
            leakage: result.leakage,
            delta_t_used: result.delta_t,
            evaluations: result.evaluations,
            top_assignments,
            trace: result.trace.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{random_costs, PbsTree};
    use crate::qaoa::{optimize, OptimizeConfig, QaoaEngine};

    #[test]
    fn record_serialises_round_trip() {
        let tree = PbsTree::new(2, vec![(1, 0)]).unwrap();
        let inst = random_costs(&tree, 3, 8);
        let engine = QaoaEngine::new(&inst, Backend::Subspace, MixerKind::Projector).unwrap();
        let result = optimize(
            &engine,
            &OptimizeConfig {
                layers: 1,
                max_iter: 20,
                ..Default::default()
            },
        )
        .unwrap();
        let record = RunRecord::new(RunConfig::default(), &result, engine.basis(), 3);
        assert_eq!(record.top_assignments.len(), 3);
        assert!(record.top_assignments[0].probability >= record.top_assignments[1].probability);
        let text = serde_json::to_string(&record).unwrap();
        let back: RunRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(back.feasible_count, 6);
        assert_eq!(back.params, record.params);
    }

    #[test]
    fn mixer_and_backend_serialise_snake_case() {
        assert_eq!(
            serde_json::to_string(&MixerKind::BigMcp).unwrap(),
            "\"big_mcp\""
        );
        assert_eq!(
            serde_json::to_string(&Backend::Subspace).unwrap(),
            "\"subspace\""
        );
    }
}
