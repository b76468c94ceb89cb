use crate::failure::{Classify, Failure};
use crate::output::write_json;
use crate::source::InstanceArgs;
use anyhow::{anyhow, Context};
use pbs_core::model::build_qubo;
use serde_json::json;
use std::path::Path;

#[derive(clap::Args, Debug)]
pub struct ExportQuboArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    /// One-hot penalty weight; default 2 * max cost coefficient
    #[arg(long)]
    pub lambda1: Option<f64>,
    /// Parent-clash penalty weight; same default
    #[arg(long)]
    pub lambda2: Option<f64>,
    /// Sibling-clash penalty weight; same default
    #[arg(long)]
    pub lambda3: Option<f64>,
}

pub fn run(out: &Path, args: ExportQuboArgs) -> Result<(), Failure> {
    let (inst, source) = args.instance.resolve()?;
    // a documented default beats none: twice the largest coefficient keeps
    // any single constraint violation more expensive than any cost edge
    let fallback = (2.0 * inst.max_cost_coefficient()).max(1.0);
    let lambda1 = args.lambda1.unwrap_or(fallback);
    let lambda2 = args.lambda2.unwrap_or(fallback);
    let lambda3 = args.lambda3.unwrap_or(fallback);
    for (name, value) in [("lambda1", lambda1), ("lambda2", lambda2), ("lambda3", lambda3)] {
        if value <= 0.0 {
            return Err(Failure::usage(anyhow!("{name} must be positive, got {value}")));
        }
    }
    let qubo = build_qubo(&inst, lambda1, lambda2, lambda3).or_usage()?;

    let path = out.join("qubo.txt");
    std::fs::write(&path, qubo.to_triplet_text())
        .with_context(|| format!("cannot write {}", path.display()))
        .or_runtime()?;
    // the triplet format has no comment syntax, so provenance rides along
    // in a sidecar document
    write_json(
        &out.join("qubo_config.json"),
        &json!({
            "command": "export-qubo",
            "source": source,
            "lambda1": lambda1,
            "lambda2": lambda2,
            "lambda3": lambda3,
            "num_vars": qubo.num_vars(),
            "terms": qubo.terms().len(),
            "offset": qubo.offset(),
        }),
    )?;
    println!(
        "wrote {} ({} variables, {} terms)",
        path.display(),
        qubo.num_vars(),
        qubo.terms().len()
    );
    Ok(())
}
