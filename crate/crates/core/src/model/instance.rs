use super::{ModelError, PbsTree};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Tolerance for the symmetry check on parsed cost matrices.
const SYMMETRY_TOL: f64 = 1e-12;

/// A dense N x N matrix of transport costs, row-major.
/// Entry `(i, j)` is the cost of moving the part from site `i` to site `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct CostMatrix {
    n: usize,
    data: Vec<f64>,
}

impl CostMatrix {
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self, ModelError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(ModelError::Document("ragged cost matrix".into()));
            }
            data.extend_from_slice(row);
        }
        Ok(CostMatrix { n, data })
    }

    pub fn zeros(n: usize) -> Self {
        CostMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    fn is_symmetric_within(&self, tol: f64) -> Result<(), (usize, usize, f64)> {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let delta = (self.get(i, j) - self.get(j, i)).abs();
                if delta > tol {
                    return Err((i, j, delta));
                }
            }
        }
        Ok(())
    }

    /// Replaces each off-diagonal pair by its mean, removing round-trip noise.
    fn symmetrize(&mut self) {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let mean = 0.5 * (self.get(i, j) + self.get(j, i));
                self.set(i, j, mean);
                self.set(j, i, mean);
            }
        }
    }
}

/// A PBS problem instance: a part tree, a number of sites, and one transport
/// cost matrix per non-root part.
///
/// The matrix for part `r` is read as `c^r[f(r)][f(s)]` where `s` is the
/// parent of `r`. Diagonal entries are carried by the format but never read:
/// feasible assignments forbid `f(r) = f(s)`.
#[derive(Clone, Debug)]
pub struct PbsInstance {
    tree: PbsTree,
    num_sites: usize,
    /// Indexed by node label; `None` exactly for the root.
    costs: Vec<Option<CostMatrix>>,
    asymmetric: bool,
}

impl PbsInstance {
    /// Builds a validated instance from symmetric cost matrices.
    pub fn new(
        tree: PbsTree,
        num_sites: usize,
        costs: Vec<(usize, CostMatrix)>,
    ) -> Result<Self, ModelError> {
        Self::build(tree, num_sites, costs, false)
    }

    /// As [`PbsInstance::new`] but skips the symmetry check. Used by the
    /// crop/contract decomposition, whose contracted matrices absorb a
    /// site-dependent subtree cost on one side.
    pub fn new_allow_asymmetric(
        tree: PbsTree,
        num_sites: usize,
        costs: Vec<(usize, CostMatrix)>,
    ) -> Result<Self, ModelError> {
        Self::build(tree, num_sites, costs, true)
    }

    fn build(
        tree: PbsTree,
        num_sites: usize,
        costs: Vec<(usize, CostMatrix)>,
        allow_asymmetric: bool,
    ) -> Result<Self, ModelError> {
        if num_sites == 0 {
            return Err(ModelError::NoSites);
        }
        let mut slots: Vec<Option<CostMatrix>> = vec![None; tree.node_count()];
        for (node, matrix) in costs {
            if node >= tree.node_count() {
                return Err(ModelError::NodeOutOfRange {
                    label: node,
                    node_count: tree.node_count(),
                });
            }
            if node == tree.root() {
                return Err(ModelError::UnexpectedCostMatrix(node));
            }
            slots[node] = Some(matrix);
        }
        for (node, slot) in slots.iter_mut().enumerate() {
            if node == tree.root() {
                continue;
            }
            let matrix = slot.as_mut().ok_or(ModelError::MissingCostMatrix(node))?;
            if matrix.size() != num_sites {
                return Err(ModelError::RaggedCostMatrix {
                    node,
                    n: num_sites,
                });
            }
            for i in 0..num_sites {
                for j in 0..num_sites {
                    let value = matrix.get(i, j);
                    if !value.is_finite() {
                        return Err(ModelError::NonFiniteCost { node, i, j });
                    }
                    if value < 0.0 {
                        return Err(ModelError::NegativeCost { node, i, j, value });
                    }
                }
            }
            if !allow_asymmetric {
                if let Err((i, j, delta)) = matrix.is_symmetric_within(SYMMETRY_TOL) {
                    return Err(ModelError::AsymmetricCost { node, i, j, delta });
                }
                matrix.symmetrize();
            }
        }
        Ok(PbsInstance {
            tree,
            num_sites,
            costs: slots,
            asymmetric: allow_asymmetric,
        })
    }

    pub fn tree(&self) -> &PbsTree {
        &self.tree
    }

    pub fn num_parts(&self) -> usize {
        self.tree.node_count()
    }

    pub fn num_sites(&self) -> usize {
        self.num_sites
    }

    /// Cost matrix of non-root part `r`. Panics on the root, which has no
    /// transport edge.
    pub fn cost_matrix(&self, r: usize) -> &CostMatrix {
        self.costs[r]
            .as_ref()
            .expect("root node has no cost matrix")
    }

    pub fn is_asymmetric(&self) -> bool {
        self.asymmetric
    }

    /// Whether any feasible assignment exists, i.e. `N >= m + 1`.
    pub fn is_satisfiable(&self) -> bool {
        self.num_sites > self.tree.max_degree()
    }

    /// Largest cost coefficient over all matrices; 0 for a single-node tree.
    pub fn max_cost_coefficient(&self) -> f64 {
        self.costs
            .iter()
            .flatten()
            .flat_map(|m| m.data.iter().copied())
            .fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let doc = InstanceDoc {
            num_sites: self.num_sites,
            edges: self.tree.edges().to_vec(),
            costs: self
                .costs
                .iter()
                .enumerate()
                .filter_map(|(node, m)| m.as_ref().map(|m| (node.to_string(), m.rows())))
                .collect(),
        };
        serde_json::to_value(doc).expect("instance serialization cannot fail")
    }
}

#[derive(Serialize, Deserialize)]
struct InstanceDoc {
    num_sites: usize,
    edges: Vec<(usize, usize)>,
    costs: BTreeMap<String, Vec<Vec<f64>>>,
}

/// Parses a JSON instance document.
///
/// Expected shape:
/// ```json
/// {
///   "num_sites": 4,
///   "edges": [[1, 0], [2, 0], [3, 0]],
///   "costs": { "1": [[0.0, 0.3, ...], ...], "2": ..., "3": ... }
/// }
/// ```
/// The node count is inferred from the edge labels (a document without edges
/// describes the single-node instance); the root is the unique node without
/// an outgoing edge. Cost matrices are keyed by decimal node id and must be
/// `num_sites` x `num_sites`, symmetric within `1e-12` and non-negative.
pub fn parse_instance(text: &str) -> Result<PbsInstance, ModelError> {
    let doc: InstanceDoc = serde_json::from_str(text)?;
    let node_count = doc
        .edges
        .iter()
        .map(|&(r, s)| r.max(s) + 1)
        .max()
        .unwrap_or(1);
    let tree = PbsTree::new(node_count, doc.edges)?;
    let mut costs = Vec::with_capacity(doc.costs.len());
    for (key, rows) in doc.costs {
        let node: usize = key
            .parse()
            .map_err(|_| ModelError::Document(format!("bad cost key {key:?}")))?;
        costs.push((node, CostMatrix::from_rows(rows)?));
    }
    PbsInstance::new(tree, doc.num_sites, costs)
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG2A_LIKE: &str = r#"{
        "num_sites": 4,
        "edges": [[1,0],[2,0],[3,0]],
        "costs": {
            "1": [[0,1,2,3],[1,0,4,5],[2,4,0,6],[3,5,6,0]],
            "2": [[0,2,2,2],[2,0,2,2],[2,2,0,2],[2,2,2,0]],
            "3": [[0,1,1,1],[1,0,1,1],[1,1,0,1],[1,1,1,0]]
        }
    }"#;

    #[test]
    fn parses_star_instance() {
        let inst = parse_instance(FIG2A_LIKE).unwrap();
        assert_eq!(inst.num_parts(), 4);
        assert_eq!(inst.num_sites(), 4);
        assert_eq!(inst.tree().root(), 0);
        assert_eq!(inst.tree().max_degree(), 3);
        assert!(inst.is_satisfiable());
        assert_eq!(inst.cost_matrix(1).get(2, 1), 4.0);
        assert_eq!(inst.max_cost_coefficient(), 6.0);
    }

    #[test]
    fn parses_single_node_instance() {
        let inst = parse_instance(r#"{"num_sites":2,"edges":[],"costs":{}}"#).unwrap();
        assert_eq!(inst.num_parts(), 1);
        assert_eq!(inst.tree().root(), 0);
    }

    #[test]
    fn rejects_cycle() {
        let text = r#"{"num_sites":2,"edges":[[1,0],[0,1]],"costs":{}}"#;
        assert!(parse_instance(text).is_err());
    }

    #[test]
    fn rejects_cost_matrix_on_the_root() {
        let text = r#"{"num_sites":2,"edges":[[1,0]],"costs":{
            "0":[[0,1],[1,0]], "1":[[0,1],[1,0]]}}"#;
        assert!(matches!(
            parse_instance(text),
            Err(ModelError::UnexpectedCostMatrix(0))
        ));
    }

    #[test]
    fn rejects_missing_matrix() {
        let text = r#"{"num_sites":2,"edges":[[1,0]],"costs":{}}"#;
        assert!(matches!(
            parse_instance(text),
            Err(ModelError::MissingCostMatrix(1))
        ));
    }

    #[test]
    fn rejects_asymmetric_matrix() {
        let text = r#"{"num_sites":2,"edges":[[1,0]],"costs":{"1":[[0,1],[2,0]]}}"#;
        assert!(matches!(
            parse_instance(text),
            Err(ModelError::AsymmetricCost { node: 1, .. })
        ));
    }

    #[test]
    fn rejects_negative_cost() {
        let text = r#"{"num_sites":2,"edges":[[1,0]],"costs":{"1":[[0,-1],[-1,0]]}}"#;
        assert!(matches!(
            parse_instance(text),
            Err(ModelError::NegativeCost { .. })
        ));
    }

    #[test]
    fn rejects_ragged_matrix() {
        let text = r#"{"num_sites":3,"edges":[[1,0]],"costs":{"1":[[0,1],[1,0]]}}"#;
        assert!(parse_instance(text).is_err());
    }

    #[test]
    fn symmetrizes_within_tolerance() {
        let text = r#"{"num_sites":2,"edges":[[1,0]],"costs":{"1":[[0,1.0000000000000002],[1,0]]}}"#;
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.cost_matrix(1).get(0, 1), inst.cost_matrix(1).get(1, 0));
    }

    #[test]
    fn json_round_trip() {
        let inst = parse_instance(FIG2A_LIKE).unwrap();
        let text = inst.to_json().to_string();
        let back = parse_instance(&text).unwrap();
        assert_eq!(back.num_parts(), 4);
        assert_eq!(back.cost_matrix(3).get(0, 2), 1.0);
    }

    #[test]
    fn unsatisfiable_is_reported_not_rejected() {
        let text = r#"{"num_sites":2,"edges":[[1,0],[2,0]],"costs":{
            "1":[[0,1],[1,0]], "2":[[0,1],[1,0]]}}"#;
        let inst = parse_instance(text).unwrap();
        assert!(!inst.is_satisfiable());
    }
}
