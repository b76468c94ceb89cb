//! PBS problem model: trees, instances, feasibility, QUBO form and generators.

mod feasible;
mod instance;
mod qubo;
mod random;
mod tree;

pub use feasible::{count_feasible, enumerate_feasible, is_feasible, log10_count_feasible};
pub use instance::{parse_instance, CostMatrix, PbsInstance};
pub use qubo::{build_qubo, onehot_bits, QuboModel};
pub use random::{random_costs, random_tree, saturating_random_tree};
pub use tree::PbsTree;

use serde::{Deserialize, Serialize};

/// An assignment of parts to sites: `sites[r]` is the site of part `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Assignment(pub Vec<usize>);

impl Assignment {
    pub fn sites(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<usize>> for Assignment {
    fn from(sites: Vec<usize>) -> Self {
        Assignment(sites)
    }
}

/// Total transport cost of an assignment: the sum over tree edges `(r, s)` of
/// `c^r[f(r)][f(s)]`. Defined for any assignment, feasible or not.
pub fn cost(f: &Assignment, inst: &PbsInstance) -> f64 {
    inst.tree()
        .edges()
        .iter()
        .map(|&(r, s)| inst.cost_matrix(r).get(f.0[r], f.0[s]))
        .sum()
}

#[derive(Debug, thiserror::Error)]
pub enum ModelError {
    #[error("invalid instance document: {0}")]
    Document(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("node label {label} out of range for {node_count} nodes")]
    NodeOutOfRange { label: usize, node_count: usize },
    #[error("expected {expected} edges for {node_count} nodes, found {found}")]
    WrongEdgeCount {
        node_count: usize,
        expected: usize,
        found: usize,
    },
    #[error("node {0} has more than one outgoing edge")]
    MultipleParents(usize),
    #[error("edge relation contains a cycle or is disconnected")]
    NotATree,
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("missing cost matrix for node {0}")]
    MissingCostMatrix(usize),
    #[error("unexpected cost matrix for node {0} (root has no transport edge)")]
    UnexpectedCostMatrix(usize),
    #[error("cost matrix for node {node} is not {n}x{n}")]
    RaggedCostMatrix { node: usize, n: usize },
    #[error("cost matrix for node {node} asymmetric at ({i}, {j}): |delta| = {delta}")]
    AsymmetricCost {
        node: usize,
        i: usize,
        j: usize,
        delta: f64,
    },
    #[error("negative cost {value} for node {node} at ({i}, {j})")]
    NegativeCost {
        node: usize,
        i: usize,
        j: usize,
        value: f64,
    },
    #[error("cost for node {node} at ({i}, {j}) is not finite")]
    NonFiniteCost { node: usize, i: usize, j: usize },
    #[error("penalty weights must be positive")]
    NonPositivePenalty,
    #[error("feasible set too large to enumerate: {count} assignments exceed budget {budget}")]
    EnumerationBudget { count: num_bigint::BigUint, budget: usize },
    #[error("num_sites must be positive")]
    NoSites,
}
