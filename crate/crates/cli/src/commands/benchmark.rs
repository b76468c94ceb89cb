use super::solve::{parse_backend, parse_mixer};
use crate::failure::{Classify, Failure};
use crate::output::write_csv;
use crate::source::InstanceArgs;
use anyhow::anyhow;
use pbs_core::qaoa::{optimize, success_probability, OptimizeConfig, QaoaEngine};
use serde_json::json;
use std::collections::BTreeMap;
use std::path::Path;

#[derive(clap::Args, Debug)]
pub struct BenchmarkArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    /// Layer counts to sweep; 0 is the uniform baseline
    #[arg(long, value_delimiter = ',', default_values_t = [0usize, 1, 2, 3, 4, 5])]
    pub layers: Vec<usize>,
    #[arg(long, default_value_t = 0.1)]
    pub alpha: f64,
    #[arg(long, default_value = "projector")]
    pub mixer: String,
    #[arg(long, default_value = "subspace")]
    pub backend: String,
    #[arg(long, default_value_t = 100)]
    pub max_iter: usize,
    #[arg(long)]
    pub delta_t: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Layer count whose distribution feeds the cost histogram
    #[arg(long, default_value_t = 3)]
    pub hist_layers: usize,
}

/// Aggregation grid for the cost histogram: costs equal up to this
/// resolution share a bin.
const COST_BIN_RESOLUTION: f64 = 1e-9;

pub fn run(out: &Path, cap: usize, args: BenchmarkArgs) -> Result<(), Failure> {
    if args.layers.is_empty() {
        return Err(Failure::usage(anyhow!("--layers must not be empty")));
    }
    let (inst, source) = args.instance.resolve()?;
    let mixer = parse_mixer(&args.mixer)?;
    let backend = parse_backend(&args.backend)?;
    let engine = QaoaEngine::with_cap(&inst, backend, mixer, cap).or_runtime()?;
    let basis = engine.basis();
    let uniform = vec![1.0 / basis.len() as f64; basis.len()];

    let config = json!({
        "command": "benchmark",
        "source": source,
        "layers": args.layers,
        "alpha": args.alpha,
        "mixer": args.mixer,
        "backend": args.backend,
        "max_iter": args.max_iter,
        "delta_t": args.delta_t,
        "seed": args.seed,
        "hist_layers": args.hist_layers,
        "feasible_count": basis.len(),
    });

    let mut palpha_rows = Vec::new();
    let mut hist_distribution: Option<Vec<f64>> = None;
    for &layers in &args.layers {
        let (distribution, expectation) = if layers == 0 {
            // layer 0 means the plain uniform superposition, no optimisation
            let expectation: f64 =
                basis.costs().iter().sum::<f64>() / basis.len() as f64;
            (uniform.clone(), expectation)
        } else {
            let result = optimize(
                &engine,
                &OptimizeConfig {
                    layers,
                    max_iter: args.max_iter,
                    delta_t: args.delta_t,
                    alpha: args.alpha,
                    seed: args.seed,
                },
            )
            .or_runtime()?;
            (result.distribution, result.expectation)
        };
        let p_alpha =
            success_probability(&distribution, basis.costs(), basis.min_cost(), args.alpha)
                .or_runtime()?;
        palpha_rows.push(format!("{layers},{p_alpha},{expectation},{}", args.seed));
        if layers == args.hist_layers {
            hist_distribution = Some(distribution);
        }
        println!("layers = {layers}: P_{} = {p_alpha:.6}, <C> = {expectation:.6}", args.alpha);
    }
    write_csv(
        &out.join("palpha.csv"),
        &config,
        "layers,P_alpha,expectation,seed",
        palpha_rows,
    )?;

    let hist_distribution = match hist_distribution {
        Some(d) => d,
        None if args.hist_layers == 0 => uniform.clone(),
        None => {
            // histogram layer not in the sweep: run it separately
            let result = optimize(
                &engine,
                &OptimizeConfig {
                    layers: args.hist_layers,
                    max_iter: args.max_iter,
                    delta_t: args.delta_t,
                    alpha: args.alpha,
                    seed: args.seed,
                },
            )
            .or_runtime()?;
            result.distribution
        }
    };
    let mut bins: BTreeMap<i64, f64> = BTreeMap::new();
    for (k, &p) in hist_distribution.iter().enumerate() {
        let bin = (basis.cost(k) / COST_BIN_RESOLUTION).round() as i64;
        *bins.entry(bin).or_insert(0.0) += p;
    }
    let hist_rows = bins
        .into_iter()
        .map(|(bin, p)| format!("{},{p}", bin as f64 * COST_BIN_RESOLUTION));
    write_csv(
        &out.join("cost_hist.csv"),
        &config,
        "cost_bin,aggregated_probability",
        hist_rows,
    )?;
    println!(
        "wrote {} and {}",
        out.join("palpha.csv").display(),
        out.join("cost_hist.csv").display()
    );
    Ok(())
}
