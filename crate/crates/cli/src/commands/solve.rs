use crate::failure::{Classify, Failure};
use crate::output::write_json;
use crate::source::InstanceArgs;
use anyhow::anyhow;
use pbs_core::qaoa::{
    optimize, Backend, MixerKind, OptimizeConfig, QaoaEngine, RunConfig, RunRecord,
};
use pbs_core::solver::{dp_solve, solve_decomposed, suggest_crops, SolveRecord};
use serde_json::json;
use std::path::Path;
use std::time::Instant;

#[derive(clap::Args, Debug)]
pub struct SolveArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    /// Solve exactly with the tree dynamic program
    #[arg(long, conflicts_with = "quantum")]
    pub classical: bool,
    /// Solve with constrained QAOA
    #[arg(long)]
    pub quantum: bool,
    /// QAOA layer count
    #[arg(short = 'p', long, default_value_t = 3)]
    pub layers: usize,
    /// Crop nodes for the classical decomposition, e.g. "1,4"
    #[arg(long, value_delimiter = ',')]
    pub crops: Vec<usize>,
    /// Pick crop nodes automatically: max subtree degree to allow
    #[arg(long, conflicts_with = "crops")]
    pub auto_crop: Option<usize>,
    #[arg(long, default_value = "projector")]
    pub mixer: String,
    #[arg(long, default_value = "subspace")]
    pub backend: String,
    #[arg(long, default_value_t = 100)]
    pub max_iter: usize,
    /// Annealing time for the TQA start (default: scan a small grid)
    #[arg(long)]
    pub delta_t: Option<f64>,
    /// Approximation factor for the success probability
    #[arg(long, default_value_t = 0.1)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

pub fn parse_mixer(text: &str) -> Result<MixerKind, Failure> {
    match text {
        "projector" => Ok(MixerKind::Projector),
        "big_mcp" => Ok(MixerKind::BigMcp),
        "reduced" => Ok(MixerKind::Reduced),
        other => Err(Failure::usage(anyhow!(
            "unknown mixer {other:?}: expected projector, big_mcp or reduced"
        ))),
    }
}

pub fn parse_backend(text: &str) -> Result<Backend, Failure> {
    match text {
        "subspace" => Ok(Backend::Subspace),
        "full" => Ok(Backend::Full),
        other => Err(Failure::usage(anyhow!(
            "unknown backend {other:?}: expected subspace or full"
        ))),
    }
}

pub fn run(out: &Path, cap: usize, args: SolveArgs) -> Result<(), Failure> {
    let (inst, source) = args.instance.resolve()?;
    let path = out.join("solve_result.json");

    if args.quantum {
        let mixer = parse_mixer(&args.mixer)?;
        let backend = parse_backend(&args.backend)?;
        let engine = QaoaEngine::with_cap(&inst, backend, mixer, cap).or_runtime()?;
        let config = OptimizeConfig {
            layers: args.layers,
            max_iter: args.max_iter,
            delta_t: args.delta_t,
            alpha: args.alpha,
            seed: args.seed,
        };
        let started = Instant::now();
        let result = optimize(&engine, &config).or_runtime()?;
        let elapsed = started.elapsed().as_secs_f64() * 1e3;
        let run_config = RunConfig {
            instance: args.instance.instance.as_ref().map(|p| p.display().to_string()),
            layers: args.layers,
            mixer,
            backend,
            max_iter: args.max_iter,
            delta_t: args.delta_t,
            alpha: args.alpha,
            seed: args.seed,
        };
        let record = RunRecord::new(run_config, &result, engine.basis(), 10);
        let doc = json!({
            "command": "solve",
            "mode": "quantum",
            "source": source,
            "wall_time_ms": elapsed,
            "result": record,
        });
        write_json(&path, &doc)?;
        println!(
            "quantum solve: <C> = {:.6}, P_{} = {:.6}, result in {}",
            record.expectation,
            args.alpha,
            record.p_alpha,
            path.display()
        );
        return Ok(());
    }

    // classical is the default mode
    let crops = match args.auto_crop {
        Some(threshold) if threshold >= 1 => suggest_crops(inst.tree(), threshold),
        Some(_) => return Err(Failure::usage(anyhow!("--auto-crop threshold must be >= 1"))),
        None => args.crops.clone(),
    };
    let started = Instant::now();
    let (assignment, cost) = if crops.is_empty() {
        dp_solve(&inst).or_runtime()?
    } else {
        solve_decomposed(&inst, &crops).or_runtime()?
    };
    let elapsed = started.elapsed().as_secs_f64() * 1e3;
    let record = SolveRecord {
        assignment: assignment.sites().to_vec(),
        cost,
        solver: if crops.is_empty() {
            "dp".into()
        } else {
            "dp+decomposition".into()
        },
        wall_time_ms: elapsed,
        crop_nodes: crops,
    };
    let doc = json!({
        "command": "solve",
        "mode": "classical",
        "source": source,
        "seed": args.seed,
        "result": record,
    });
    write_json(&path, &doc)?;
    println!(
        "classical solve: cost = {:.6}, assignment = {:?}, result in {}",
        record.cost,
        record.assignment,
        path.display()
    );
    Ok(())
}
