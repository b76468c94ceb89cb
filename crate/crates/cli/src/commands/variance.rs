use crate::failure::{Classify, Failure};
use crate::output::write_csv;
use crate::source::parse_edge_list;
use anyhow::anyhow;
use pbs_core::model::{random_costs, PbsTree};
use pbs_core::qaoa::{gradient_variance, Backend, MixerKind, QaoaEngine};
use serde_json::json;
use std::path::Path;

#[derive(clap::Args, Debug)]
pub struct VarianceArgs {
    /// Setup rows "N:edges", e.g. "3:1-0,2-0,3-1"; defaults to the
    /// 12/16/20/24-qubit sweep
    #[arg(long)]
    pub rows: Vec<String>,
    #[arg(long, default_value_t = 3)]
    pub layers: usize,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 1e-4)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// The growing-instance sweep: same tree family, more qubits per row.
fn default_rows() -> Vec<(usize, &'static str)> {
    vec![
        (3, "1-0,2-0,3-1"),
        (4, "1-0,2-0,3-1"),
        (4, "1-0,2-0,3-1,4-2"),
        (4, "1-0,2-0,3-1,4-2,5-4"),
    ]
}

pub fn run(out: &Path, _cap: usize, args: VarianceArgs) -> Result<(), Failure> {
    if args.samples < 2 {
        return Err(Failure::usage(anyhow!("--samples must be at least 2")));
    }
    let rows: Vec<(usize, String)> = if args.rows.is_empty() {
        default_rows()
            .into_iter()
            .map(|(n, e)| (n, e.to_string()))
            .collect()
    } else {
        args.rows
            .iter()
            .map(|row| {
                let (n, edges) = row
                    .split_once(':')
                    .ok_or_else(|| Failure::usage(anyhow!("row {row:?} is not N:edges")))?;
                Ok((n.trim().parse().map_err(|_| {
                    Failure::usage(anyhow!("bad site count in row {row:?}"))
                })?, edges.to_string()))
            })
            .collect::<Result<_, Failure>>()?
    };

    let config = json!({
        "command": "variance",
        "rows": rows.iter().map(|(n, e)| format!("{n}:{e}")).collect::<Vec<_>>(),
        "layers": args.layers,
        "samples": args.samples,
        "epsilon": args.epsilon,
        "seed": args.seed,
        "backend": "subspace",
        "mixer": "projector",
    });

    let mut out_rows = Vec::new();
    for (sites, edges_text) in &rows {
        let edges = parse_edge_list(edges_text).or_usage()?;
        let node_count = edges.iter().map(|&(r, s)| r.max(s) + 1).max().unwrap_or(1);
        let tree = PbsTree::new(node_count, edges).or_usage()?;
        let inst = random_costs(&tree, *sites, args.seed);
        let engine =
            QaoaEngine::new(&inst, Backend::Subspace, MixerKind::Projector).or_runtime()?;
        let variance = gradient_variance(
            &engine,
            args.layers,
            args.samples,
            args.epsilon,
            args.seed,
        )
        .or_runtime()?;
        let num_qubits = node_count * sites;
        let feasible = engine.basis().len();
        out_rows.push(format!(
            "{num_qubits},{feasible},{variance},{},{}",
            args.samples, args.epsilon
        ));
        println!("N_q = {num_qubits}: |F| = {feasible}, variance = {variance:.3e}");
    }
    let path = out.join("variance.csv");
    write_csv(
        &path,
        &config,
        "n_qubits,feasible_count,variance,samples,epsilon",
        out_rows,
    )?;
    println!("wrote {}", path.display());
    Ok(())
}
