use super::PrepError;
use crate::sim::{Gate, RegisterLayout};

/// Rotation schedule that turns |10...0> into the uniform W_n state.
///
/// The i-th continuous swap (i = 1..n-1) moves amplitude from qubit 0 onto
/// qubit i so that qubit i ends with amplitude `1/sqrt(n)`; the remaining
/// mass stays on qubit 0. All resulting amplitudes are real positive.
pub fn w_angles(n: usize) -> Result<Vec<f64>, PrepError> {
    if n == 0 {
        return Err(PrepError::EmptyW);
    }
    Ok((1..n)
        .map(|i| {
            let keep = (n - i) as f64 / (n - i + 1) as f64;
            2.0 * keep.sqrt().acos()
        })
        .collect())
}

/// Rotation schedule for a weighted W state: qubit i ends with probability
/// `weights[i] / sum(weights)`. With equal weights this reduces to
/// [`w_angles`]. The uniform schedule is all the QAOA pipeline uses; the
/// weighted variant exists because the same circuit shape supports it.
pub fn w_angles_weighted(weights: &[f64]) -> Result<Vec<f64>, PrepError> {
    let n = weights.len();
    if n == 0 || weights.iter().any(|&w| w.is_nan() || w < 0.0) {
        return Err(PrepError::BadWeights);
    }
    let total: f64 = weights.iter().sum();
    if total <= 0.0 {
        return Err(PrepError::BadWeights);
    }
    let mut remaining = 1.0;
    let mut angles = Vec::with_capacity(n - 1);
    for &w in &weights[1..] {
        let p = w / total;
        let ratio = if remaining > 0.0 {
            (p / remaining).clamp(0.0, 1.0)
        } else {
            0.0
        };
        angles.push(2.0 * ratio.sqrt().asin());
        remaining -= p;
    }
    Ok(angles)
}

/// Gate fragment preparing a partial W state on register `part`: W_n on its
/// first `n` qubits, |0> on the rest. Assumes the register is all-zero.
pub fn partial_w(
    layout: RegisterLayout,
    part: usize,
    n: usize,
) -> Result<Vec<Gate>, PrepError> {
    if n > layout.sites() {
        return Err(PrepError::WTooLarge {
            n,
            register: layout.sites(),
        });
    }
    let angles = w_angles(n)?;
    let mut gates = Vec::with_capacity(n);
    gates.push(Gate::X(layout.qubit(part, 0)));
    for (i, &theta) in angles.iter().enumerate() {
        gates.push(Gate::XxPlusYy {
            theta,
            q1: layout.qubit(part, i + 1),
            q2: layout.qubit(part, 0),
        });
    }
    Ok(gates)
}
