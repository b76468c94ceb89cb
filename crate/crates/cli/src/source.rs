use crate::failure::{Classify, Failure};
use anyhow::{anyhow, Context};
use pbs_core::model::{parse_instance, random_costs, random_tree, PbsInstance, PbsTree};
use serde_json::json;
use std::path::PathBuf;

/// Where an instance comes from: a JSON file, a seeded random tree, or an
/// explicit edge list with seeded costs.
#[derive(clap::Args, Clone, Debug)]
pub struct InstanceArgs {
    /// JSON instance file
    #[arg(long, conflicts_with_all = ["random", "edges"])]
    pub instance: Option<PathBuf>,
    /// Random instance: number of parts, number of sites, seed
    #[arg(long, num_args = 3, value_names = ["M", "N", "SEED"])]
    pub random: Option<Vec<u64>>,
    /// Tree edges as child-parent pairs, e.g. "1-0,2-0,3-1"
    #[arg(long, requires = "sites", conflicts_with = "random")]
    pub edges: Option<String>,
    /// Number of sites for --edges
    #[arg(long)]
    pub sites: Option<usize>,
    /// Cost seed for --edges instances
    #[arg(long, default_value_t = 0)]
    pub cost_seed: u64,
    /// In-degree cap for --random trees (default N-1, keeping the
    /// instance satisfiable)
    #[arg(long)]
    pub max_degree: Option<usize>,
}

pub fn parse_edge_list(text: &str) -> anyhow::Result<Vec<(usize, usize)>> {
    text.split(',')
        .map(|pair| {
            let (child, parent) = pair
                .trim()
                .split_once('-')
                .ok_or_else(|| anyhow!("edge {pair:?} is not of the form child-parent"))?;
            Ok((child.trim().parse()?, parent.trim().parse()?))
        })
        .collect()
}

impl InstanceArgs {
    /// Loads or generates the instance, returning it along with a JSON
    /// description of the resolved source for provenance.
    pub fn resolve(&self) -> Result<(PbsInstance, serde_json::Value), Failure> {
        if let Some(path) = &self.instance {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("cannot read instance file {}", path.display()))
                .or_usage()?;
            let inst = parse_instance(&text).or_usage()?;
            return Ok((
                inst,
                json!({ "kind": "file", "path": path.display().to_string() }),
            ));
        }
        if let Some(spec) = &self.random {
            let (parts, sites, seed) = (spec[0] as usize, spec[1] as usize, spec[2]);
            if parts == 0 || sites == 0 {
                return Err(Failure::usage(anyhow!("--random needs M >= 1 and N >= 1")));
            }
            let cap = self.max_degree.unwrap_or(sites.saturating_sub(1)).max(1);
            let tree = random_tree(parts, cap, seed).or_usage()?;
            let inst = random_costs(&tree, sites, seed ^ 0x9E37_79B9_7F4A_7C15);
            return Ok((
                inst,
                json!({
                    "kind": "random",
                    "parts": parts,
                    "sites": sites,
                    "seed": seed,
                    "max_degree": cap,
                    "edges": tree.edges(),
                }),
            ));
        }
        if let Some(edges_text) = &self.edges {
            let sites = self
                .sites
                .ok_or_else(|| Failure::usage(anyhow!("--edges requires --sites")))?;
            let edges = parse_edge_list(edges_text).or_usage()?;
            let node_count = edges
                .iter()
                .map(|&(r, s)| r.max(s) + 1)
                .max()
                .unwrap_or(1);
            let tree = PbsTree::new(node_count, edges.clone()).or_usage()?;
            let inst = random_costs(&tree, sites, self.cost_seed);
            return Ok((
                inst,
                json!({
                    "kind": "edges",
                    "edges": edges,
                    "sites": sites,
                    "cost_seed": self.cost_seed,
                }),
            ));
        }
        Err(Failure::usage(anyhow!(
            "no instance given: pass --instance FILE, --random M N SEED, or --edges LIST --sites N"
        )))
    }
}
