//! Plain Nelder-Mead simplex with the standard coefficients
//! (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
//!
//! The budget counts objective evaluations after the initial simplex; the
//! best point ever evaluated is returned, not the final simplex.

pub(crate) struct NmOutcome {
    pub best_x: Vec<f64>,
    pub best_f: f64,
    /// Objective value of every evaluation, in order (initial simplex
    /// included).
    pub trace: Vec<f64>,
}

/// Minimises `f` starting from `x0`, spanning the initial simplex by `step`
/// along each coordinate. Fully deterministic.
pub(crate) fn minimize(
    mut f: impl FnMut(&[f64]) -> f64,
    x0: &[f64],
    step: f64,
    max_evals_after_init: usize,
) -> NmOutcome {
    let dim = x0.len();
    assert!(dim >= 1);

    let mut trace = Vec::new();
    let mut best_x = x0.to_vec();
    let mut best_f = f64::INFINITY;
    let mut budget = max_evals_after_init;

    let mut eval = |x: &[f64], trace: &mut Vec<f64>, best_x: &mut Vec<f64>, best_f: &mut f64| {
        let value = f(x);
        trace.push(value);
        if value < *best_f {
            *best_f = value;
            best_x.clear();
            best_x.extend_from_slice(x);
        }
        value
    };

    // initial simplex: x0 and x0 + step * e_i
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(dim + 1);
    let f0 = eval(x0, &mut trace, &mut best_x, &mut best_f);
    simplex.push((x0.to_vec(), f0));
    for i in 0..dim {
        let mut x = x0.to_vec();
        x[i] += step;
        let v = eval(&x, &mut trace, &mut best_x, &mut best_f);
        simplex.push((x, v));
    }

    while budget > 0 {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let spread = simplex[dim].1 - simplex[0].1;
        if spread.abs() < 1e-12 {
            break;
        }

        let centroid: Vec<f64> = (0..dim)
            .map(|i| simplex[..dim].iter().map(|(x, _)| x[i]).sum::<f64>() / dim as f64)
            .collect();
        let worst = simplex[dim].clone();

        let reflected: Vec<f64> = (0..dim)
            .map(|i| centroid[i] + (centroid[i] - worst.0[i]))
            .collect();
        let fr = eval(&reflected, &mut trace, &mut best_x, &mut best_f);
        budget -= 1;

        if fr < simplex[0].1 {
            if budget == 0 {
                simplex[dim] = (reflected, fr);
                break;
            }
            let expanded: Vec<f64> = (0..dim)
                .map(|i| centroid[i] + 2.0 * (centroid[i] - worst.0[i]))
                .collect();
            let fe = eval(&expanded, &mut trace, &mut best_x, &mut best_f);
            budget -= 1;
            simplex[dim] = if fe < fr { (expanded, fe) } else { (reflected, fr) };
            continue;
        }
        if fr < simplex[dim - 1].1 {
            simplex[dim] = (reflected, fr);
            continue;
        }

        // contract towards the better of worst/reflected
        if budget == 0 {
            break;
        }
        let (towards, f_towards) = if fr < worst.1 {
            (&reflected, fr)
        } else {
            (&worst.0, worst.1)
        };
        let contracted: Vec<f64> = (0..dim)
            .map(|i| centroid[i] + 0.5 * (towards[i] - centroid[i]))
            .collect();
        let fc = eval(&contracted, &mut trace, &mut best_x, &mut best_f);
        budget -= 1;
        if fc < f_towards {
            simplex[dim] = (contracted, fc);
            continue;
        }

        // shrink everything towards the best vertex
        let anchor = simplex[0].0.clone();
        for vertex in simplex.iter_mut().skip(1) {
            if budget == 0 {
                break;
            }
            let x: Vec<f64> = (0..dim)
                .map(|i| anchor[i] + 0.5 * (vertex.0[i] - anchor[i]))
                .collect();
            let v = eval(&x, &mut trace, &mut best_x, &mut best_f);
            budget -= 1;
            *vertex = (x, v);
        }
    }

    NmOutcome {
        best_x,
        best_f,
        trace,
    }
}
