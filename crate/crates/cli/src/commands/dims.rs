use crate::failure::{Classify, Failure};
use crate::output::write_csv;
use anyhow::anyhow;
use pbs_core::model::{log10_count_feasible, saturating_random_tree};
use serde_json::json;
use std::path::Path;

#[derive(clap::Args, Debug)]
pub struct DimsArgs {
    #[arg(long, default_value_t = 4)]
    pub m_min: usize,
    #[arg(long, default_value_t = 20)]
    pub m_max: usize,
    /// Trees averaged per part count
    #[arg(long, default_value_t = 30)]
    pub trees: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Compares the quasi-constrained search space (all of `2^(M*N)`) against
/// the feasible set, for bushy random trees with `N = floor(M/2)` sites.
/// Counting is closed-form, so the sweep costs nothing.
pub fn run(out: &Path, args: DimsArgs) -> Result<(), Failure> {
    if args.m_min < 2 || args.m_max < args.m_min || args.trees == 0 {
        return Err(Failure::usage(anyhow!(
            "need 2 <= m-min <= m-max and at least one tree per step"
        )));
    }
    let config = json!({
        "command": "dims",
        "m_min": args.m_min,
        "m_max": args.m_max,
        "trees": args.trees,
        "seed": args.seed,
        "tree_model": "saturating attachment, in-degree cap N-1",
    });
    let mut rows = Vec::new();
    for m in args.m_min..=args.m_max {
        let sites = (m / 2).max(1);
        // cap N-1 keeps every tree satisfiable; saturated hubs then have
        // total degree N, matching the bushy regime of the study
        let cap = sites.saturating_sub(1).max(1);
        let mut total_log = 0.0;
        for k in 0..args.trees {
            let tree_seed = args
                .seed
                .wrapping_add((m as u64) << 32)
                .wrapping_add(k as u64);
            let tree = saturating_random_tree(m, cap, tree_seed).or_runtime()?;
            let log_count = log10_count_feasible(&tree, sites);
            if !log_count.is_finite() {
                return Err(Failure::runtime(anyhow!(
                    "generated tree at M={m} seed {tree_seed} has no feasible assignment"
                )));
            }
            total_log += log_count;
        }
        let log10_full = (m * sites) as f64 * 2f64.log10();
        let log10_mean_feasible = total_log / args.trees as f64;
        let gap = log10_full - log10_mean_feasible;
        rows.push(format!("{m},{log10_full},{log10_mean_feasible},{gap}"));
    }
    let path = out.join("dims.csv");
    write_csv(
        &path,
        &config,
        "M,log10_full_space,log10_mean_feasible,gap",
        rows,
    )?;
    println!("wrote {}", path.display());
    Ok(())
}
