use super::engine::{QaoaEngine, QaoaParams};
use super::QaoaError;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

/// Sample variance of the finite-difference gradient of `<C>` with respect
/// to the last ansatz parameter (`beta_p`).
///
/// Draws `samples` parameter vectors uniformly from `[0, 2*pi)^(2p)`, forms
/// `(E(theta + eps * e_last) - E(theta)) / eps` for each, and returns the
/// unbiased sample variance. Deterministic per seed.
pub fn gradient_variance(
    engine: &QaoaEngine,
    layers: usize,
    samples: usize,
    eps: f64,
    seed: u64,
) -> Result<f64, QaoaError> {
    if layers == 0 {
        return Err(QaoaError::NoLayers);
    }
    if samples < 2 {
        return Err(QaoaError::TooFewSamples);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = 2 * layers;
    let mut gradients = Vec::with_capacity(samples);
    for _ in 0..samples {
        let mut flat: Vec<f64> = (0..dim).map(|_| rng.random::<f64>() * TAU).collect();
        let base = engine.expectation(&QaoaParams::from_flat(&flat)?)?;
        flat[dim - 1] += eps;
        let shifted = engine.expectation(&QaoaParams::from_flat(&flat)?)?;
        gradients.push((shifted - base) / eps);
    }
    let n = gradients.len() as f64;
    let mean = gradients.iter().sum::<f64>() / n;
    let variance = gradients
        .iter()
        .map(|g| (g - mean).powi(2))
        .sum::<f64>()
        / (n - 1.0);
    Ok(variance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{random_costs, CostMatrix, PbsInstance, PbsTree};
    use crate::qaoa::{Backend, MixerKind};

    #[test]
    fn constant_costs_have_zero_gradient() {
        // every feasible assignment costs exactly 2, so <C> is flat
        let tree = PbsTree::new(3, vec![(1, 0), (2, 0)]).unwrap();
        let ones = || {
            CostMatrix::from_rows(vec![
                vec![0.0, 1.0, 1.0],
                vec![1.0, 0.0, 1.0],
                vec![1.0, 1.0, 0.0],
            ])
            .unwrap()
        };
        let inst = PbsInstance::new(tree, 3, vec![(1, ones()), (2, ones())]).unwrap();
        let engine = QaoaEngine::new(&inst, Backend::Subspace, MixerKind::Projector).unwrap();
        let variance = gradient_variance(&engine, 2, 20, 1e-4, 7).unwrap();
        assert!(variance.abs() < 1e-12, "variance {variance}");
    }

    #[test]
    fn random_costs_have_positive_reproducible_variance() {
        let tree = PbsTree::new(4, vec![(1, 0), (2, 0), (3, 1)]).unwrap();
        let inst = random_costs(&tree, 3, 12);
        let engine = QaoaEngine::new(&inst, Backend::Subspace, MixerKind::Projector).unwrap();
        let a = gradient_variance(&engine, 3, 50, 1e-4, 42).unwrap();
        let b = gradient_variance(&engine, 3, 50, 1e-4, 42).unwrap();
        assert!(a > 0.0);
        assert_eq!(a, b);
        let c = gradient_variance(&engine, 3, 50, 1e-4, 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn halving_eps_barely_moves_the_estimate() {
        let tree = PbsTree::new(4, vec![(1, 0), (2, 0), (3, 1)]).unwrap();
        let inst = random_costs(&tree, 3, 5);
        let engine = QaoaEngine::new(&inst, Backend::Subspace, MixerKind::Projector).unwrap();
        let coarse = gradient_variance(&engine, 2, 40, 2e-4, 9).unwrap();
        let fine = gradient_variance(&engine, 2, 40, 1e-4, 9).unwrap();
        assert!((coarse - fine).abs() / fine < 0.01, "{coarse} vs {fine}");
    }

    #[test]
    fn input_validation() {
        let tree = PbsTree::new(2, vec![(1, 0)]).unwrap();
        let inst = random_costs(&tree, 2, 0);
        let engine = QaoaEngine::new(&inst, Backend::Subspace, MixerKind::Projector).unwrap();
        assert!(matches!(
            gradient_variance(&engine, 2, 1, 1e-4, 0),
            Err(QaoaError::TooFewSamples)
        ));
        assert!(matches!(
            gradient_variance(&engine, 0, 10, 1e-4, 0),
            Err(QaoaError::NoLayers)
        ));
    }
}
