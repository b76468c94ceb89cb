use super::ModelError;
use serde::{Deserialize, Serialize};

/// A rooted directed tree of parts. Edges point from sub-part to part
/// (child to parent); the unique node without an outgoing edge is the root,
/// the final product.
///
/// Node labels are `0..node_count`; the root is inferred from the edge set
/// and is not required to be node 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PbsTree {
    node_count: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip)]
    root: usize,
    #[serde(skip)]
    parent: Vec<Option<usize>>,
    #[serde(skip)]
    preds: Vec<Vec<usize>>,
}

impl PbsTree {
    /// Builds and validates a tree from child-to-parent edges.
    pub fn new(node_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, ModelError> {
        if node_count == 0 {
            return Err(ModelError::Document("node count must be positive".into()));
        }
        if edges.len() != node_count - 1 {
            return Err(ModelError::WrongEdgeCount {
                node_count,
                expected: node_count - 1,
                found: edges.len(),
            });
        }
        let mut parent: Vec<Option<usize>> = vec![None; node_count];
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); node_count];
        for &(r, s) in &edges {
            for label in [r, s] {
                if label >= node_count {
                    return Err(ModelError::NodeOutOfRange { label, node_count });
                }
            }
            if parent[r].is_some() {
                if parent[r] == Some(s) {
                    return Err(ModelError::DuplicateEdge(r, s));
                }
                return Err(ModelError::MultipleParents(r));
            }
            parent[r] = Some(s);
            preds[s].push(r);
        }
        let roots: Vec<usize> = (0..node_count).filter(|&x| parent[x].is_none()).collect();
        // With node_count-1 edges and unique parents, a unique root implies
        // acyclicity and connectedness; a cycle would leave >= 2 roots.
        let root = match roots.as_slice() {
            [r] => *r,
            _ => return Err(ModelError::NotATree),
        };
        // Walk up from every node to catch cycles among non-root components.
        for start in 0..node_count {
            let mut x = start;
            let mut steps = 0;
            while let Some(p) = parent[x] {
                x = p;
                steps += 1;
                if steps > node_count {
                    return Err(ModelError::NotATree);
                }
            }
            if x != root {
                return Err(ModelError::NotATree);
            }
        }
        for p in preds.iter_mut() {
            p.sort_unstable();
        }
        Ok(PbsTree {
            node_count,
            edges,
            root,
            parent,
            preds,
        })
    }

    /// Number of parts `M`.
    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// Child-to-parent edges, in input order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, x: usize) -> Option<usize> {
        self.parent[x]
    }

    /// Predecessors (sub-parts) of `x`, sorted ascending by label.
    pub fn preds(&self, x: usize) -> &[usize] {
        &self.preds[x]
    }

    /// In-degree `d_x`: the number of sub-parts of `x`.
    pub fn degree(&self, x: usize) -> usize {
        self.preds[x].len()
    }

    /// Maximum in-degree `m` over all nodes.
    pub fn max_degree(&self) -> usize {
        (0..self.node_count).map(|x| self.degree(x)).max().unwrap()
    }

    pub fn is_leaf(&self, x: usize) -> bool {
        self.preds[x].is_empty()
    }

    /// Nodes of the subtree rooted at `r` (including `r`), ascending.
    pub fn subtree_nodes(&self, r: usize) -> Vec<usize> {
        let mut nodes = vec![r];
        let mut i = 0;
        while i < nodes.len() {
            nodes.extend_from_slice(&self.preds[nodes[i]]);
            i += 1;
        }
        nodes.sort_unstable();
        nodes
    }

    /// Height of each node: edges on the longest downward path to a leaf.
    pub fn heights(&self) -> Vec<usize> {
        let mut heights = vec![0usize; self.node_count];
        for x in self.nodes_by_height() {
            heights[x] = self
                .preds(x)
                .iter()
                .map(|&y| heights[y] + 1)
                .max()
                .unwrap_or(0);
        }
        heights
    }

    /// Nodes ordered by nondecreasing height (leaves first, root last),
    /// ties broken by label.
    pub fn nodes_by_height(&self) -> Vec<usize> {
        let mut heights = vec![0usize; self.node_count];
        let mut order: Vec<usize> = Vec::with_capacity(self.node_count);
        let mut remaining: Vec<usize> = self.preds.iter().map(|p| p.len()).collect();
        let mut frontier: Vec<usize> = (0..self.node_count).filter(|&x| self.is_leaf(x)).collect();
        while let Some(x) = frontier.pop() {
            order.push(x);
            if let Some(p) = self.parent[x] {
                heights[p] = heights[p].max(heights[x] + 1);
                remaining[p] -= 1;
                if remaining[p] == 0 {
                    frontier.push(p);
                }
            }
        }
        order.sort_by_key(|&x| (heights[x], x));
        order
    }

    /// Depth of each node: edges on the path up to the root.
    pub fn depths(&self) -> Vec<usize> {
        let mut depths = vec![0usize; self.node_count];
        let mut stack = vec![self.root];
        while let Some(x) = stack.pop() {
            for &y in self.preds(x) {
                depths[y] = depths[x] + 1;
                stack.push(y);
            }
        }
        depths
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_tree_basics() {
        let t = PbsTree::new(4, vec![(1, 0), (2, 0), (3, 0)]).unwrap();
        assert_eq!(t.root(), 0);
        assert_eq!(t.max_degree(), 3);
        assert_eq!(t.preds(0), &[1, 2, 3]);
        assert_eq!(t.parent(2), Some(0));
        assert_eq!(t.parent(0), None);
    }

    #[test]
    fn single_node() {
        let t = PbsTree::new(1, vec![]).unwrap();
        assert_eq!(t.root(), 0);
        assert_eq!(t.max_degree(), 0);
    }

    #[test]
    fn root_not_zero() {
        let t = PbsTree::new(3, vec![(0, 2), (1, 2)]).unwrap();
        assert_eq!(t.root(), 2);
        assert_eq!(t.preds(2), &[0, 1]);
    }

    #[test]
    fn cycle_rejected() {
        assert!(matches!(
            PbsTree::new(2, vec![(1, 0), (0, 1)]),
            Err(ModelError::WrongEdgeCount { .. })
        ));
        // cycle plus a dangling root candidate: correct edge count, still invalid
        assert!(matches!(
            PbsTree::new(3, vec![(0, 1), (1, 0)]),
            Err(ModelError::NotATree)
        ));
    }

    #[test]
    fn double_parent_rejected() {
        assert!(matches!(
            PbsTree::new(4, vec![(1, 0), (1, 2), (3, 0)]),
            Err(ModelError::MultipleParents(1))
        ));
    }

    #[test]
    fn label_out_of_range_rejected() {
        assert!(matches!(
            PbsTree::new(2, vec![(5, 0)]),
            Err(ModelError::NodeOutOfRange { label: 5, .. })
        ));
    }

    #[test]
    fn heights_and_depths() {
        // 0 <- 1 <- 3, 0 <- 2
        let t = PbsTree::new(4, vec![(1, 0), (2, 0), (3, 1)]).unwrap();
        assert_eq!(t.heights(), vec![2, 1, 0, 0]);
        assert_eq!(t.depths(), vec![0, 1, 1, 2]);
        assert_eq!(t.subtree_nodes(1), vec![1, 3]);
        let order = t.nodes_by_height();
        assert_eq!(order, vec![2, 3, 1, 0]);
    }
}
