use super::{Assignment, ModelError, PbsInstance};
use std::collections::BTreeMap;
use std::fmt::Write;

/// QUBO form of a PBS instance over binary variables `x_{r,i}` ("part `r` is
/// at site `i`"), indexed as `r * N + i`.
///
/// The objective is the transport cost plus three penalty blocks: one-hot per
/// part (weight `lambda1`), part-vs-parent site clashes (`lambda2`) and
/// sibling site clashes (`lambda3`). On the one-hot encoding of a feasible
/// assignment all penalties vanish and the value equals the transport cost.
#[derive(Clone, Debug)]
pub struct QuboModel {
    num_vars: usize,
    /// Coefficients keyed by `(a, b)` with `a <= b`; `a == b` holds the
    /// linear term (x^2 = x on binaries).
    terms: BTreeMap<(usize, usize), f64>,
    offset: f64,
    lambda1: f64,
    lambda2: f64,
    lambda3: f64,
}

impl QuboModel {
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn penalties(&self) -> (f64, f64, f64) {
        (self.lambda1, self.lambda2, self.lambda3)
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), f64> {
        &self.terms
    }

    fn add(&mut self, a: usize, b: usize, coeff: f64) {
        let key = if a <= b { (a, b) } else { (b, a) };
        *self.terms.entry(key).or_insert(0.0) += coeff;
    }

    /// Evaluates the QUBO on a bit vector.
    pub fn evaluate(&self, bits: &[bool]) -> f64 {
        assert_eq!(bits.len(), self.num_vars);
        let mut value = self.offset;
        for (&(a, b), &coeff) in &self.terms {
            if bits[a] && bits[b] {
                value += coeff;
            }
        }
        value
    }

    /// Sparse triplet export: a header line `offset <value>` followed by one
    /// `a b coeff` line per term, 0-based indices, ascending.
    pub fn to_triplet_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "offset {}", self.offset).unwrap();
        for (&(a, b), &coeff) in &self.terms {
            writeln!(out, "{a} {b} {coeff}").unwrap();
        }
        out
    }
}

/// One-hot encoding of an assignment as a bit vector of length `M * N`.
pub fn onehot_bits(f: &Assignment, num_sites: usize) -> Vec<bool> {
    let mut bits = vec![false; f.len() * num_sites];
    for (r, &site) in f.sites().iter().enumerate() {
        bits[r * num_sites + site] = true;
    }
    bits
}

/// Builds the penalty-weighted QUBO for an instance.
pub fn build_qubo(
    inst: &PbsInstance,
    lambda1: f64,
    lambda2: f64,
    lambda3: f64,
) -> Result<QuboModel, ModelError> {
    if lambda1 <= 0.0 || lambda2 <= 0.0 || lambda3 <= 0.0 {
        return Err(ModelError::NonPositivePenalty);
    }
    let n = inst.num_sites();
    let m = inst.num_parts();
    let var = |r: usize, i: usize| r * n + i;
    let mut qubo = QuboModel {
        num_vars: m * n,
        terms: BTreeMap::new(),
        offset: 0.0,
        lambda1,
        lambda2,
        lambda3,
    };

    // transport cost: sum over edges (r, s) and i != j of c^r_{i,j} x_{r,i} x_{s,j}
    for &(r, s) in inst.tree().edges() {
        let c = inst.cost_matrix(r);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    qubo.add(var(r, i), var(s, j), c.get(i, j));
                }
            }
        }
    }

    // one-hot constraint: lambda1 * sum_r (sum_i x_{r,i} - 1)^2
    // expands to -x_{r,i} linear terms, +2 x_{r,i} x_{r,j} pairs, +1 constant
    for r in 0..m {
        qubo.offset += lambda1;
        for i in 0..n {
            qubo.add(var(r, i), var(r, i), -lambda1);
            for j in (i + 1)..n {
                qubo.add(var(r, i), var(r, j), 2.0 * lambda1);
            }
        }
    }

    // part-vs-parent clash: lambda2 * sum over edges, sites i of x_{r,i} x_{s,i}
    for &(r, s) in inst.tree().edges() {
        for i in 0..n {
            qubo.add(var(r, i), var(s, i), lambda2);
        }
    }

    // sibling clash: lambda3 over ordered sibling pairs r < s
    for x in 0..m {
        let preds = inst.tree().preds(x);
        for (a, &r) in preds.iter().enumerate() {
            for &s in &preds[a + 1..] {
                for i in 0..n {
                    qubo.add(var(r, i), var(s, i), lambda3);
                }
            }
        }
    }

    Ok(qubo)
}
