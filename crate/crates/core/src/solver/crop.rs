use super::dp::{dp_assignment_fixed_root, dp_fixed_root_row, dp_solve};
use super::SolverError;
use crate::model::{cost, Assignment, CostMatrix, PbsInstance, PbsTree};

/// The two halves of a crop at node `r`: the subtree instance, the
/// contracted remainder, and the bookkeeping to map labels back.
#[derive(Clone, Debug)]
pub struct CropOutcome {
    /// `P'`: the subtree rooted at `r`, relabelled to `0..|subtree|`.
    pub sub_instance: PbsInstance,
    /// Original label of each relabelled subtree node.
    pub sub_nodes: Vec<usize>,
    /// `P^`: the original tree with the subtree contracted to the leaf `r`,
    /// relabelled; `r`'s matrix absorbs the fixed-root subtree optima and is
    /// generally asymmetric.
    pub contracted: PbsInstance,
    /// Original label of each relabelled contracted node.
    pub contracted_nodes: Vec<usize>,
    /// `c_i^r`: the subtree optimum per root site.
    pub fixed_root_costs: Vec<f64>,
}

fn extract_sub_instance(
    inst: &PbsInstance,
    r: usize,
) -> Result<(PbsInstance, Vec<usize>), SolverError> {
    let tree = inst.tree();
    let sub_nodes = tree.subtree_nodes(r);
    let index_of = |label: usize| sub_nodes.binary_search(&label).expect("subtree member");
    let edges: Vec<(usize, usize)> = sub_nodes
        .iter()
        .filter(|&&x| x != r)
        .map(|&x| (index_of(x), index_of(tree.parent(x).expect("non-root"))))
        .collect();
    let sub_tree = PbsTree::new(sub_nodes.len(), edges)?;
    let costs: Vec<(usize, CostMatrix)> = sub_nodes
        .iter()
        .filter(|&&x| x != r)
        .map(|&x| (index_of(x), inst.cost_matrix(x).clone()))
        .collect();
    let sub_instance = if inst.is_asymmetric() {
        PbsInstance::new_allow_asymmetric(sub_tree, inst.num_sites(), costs)?
    } else {
        PbsInstance::new(sub_tree, inst.num_sites(), costs)?
    };
    Ok((sub_instance, sub_nodes))
}

fn contract_instance(
    inst: &PbsInstance,
    crops: &[(usize, Vec<f64>)],
) -> Result<(PbsInstance, Vec<usize>), SolverError> {
    let tree = inst.tree();
    let n = inst.num_sites();
    let mut keep = vec![true; tree.node_count()];
    for (r, _) in crops {
        for x in tree.subtree_nodes(*r) {
            if x != *r {
                keep[x] = false;
            }
        }
    }
    let kept: Vec<usize> = (0..tree.node_count()).filter(|&x| keep[x]).collect();
    let index_of = |label: usize| kept.binary_search(&label).expect("kept node");
    let edges: Vec<(usize, usize)> = kept
        .iter()
        .filter(|&&x| x != tree.root())
        .map(|&x| (index_of(x), index_of(tree.parent(x).expect("non-root"))))
        .collect();
    let contracted_tree = PbsTree::new(kept.len(), edges)?;
    let mut costs = Vec::new();
    for &x in &kept {
        if x == tree.root() {
            continue;
        }
        let mut matrix = inst.cost_matrix(x).clone();
        if let Some((_, row)) = crops.iter().find(|(r, _)| *r == x) {
            // absorb the subtree optimum into the incoming edge:
            // c^[i][j] = c[i][j] + c_i^r with i the site of r itself
            for (i, &subtree_cost) in row.iter().enumerate() {
                for j in 0..n {
                    matrix.set(i, j, matrix.get(i, j) + subtree_cost);
                }
            }
        }
        costs.push((index_of(x), matrix));
    }
    let contracted =
        PbsInstance::new_allow_asymmetric(contracted_tree, inst.num_sites(), costs)?;
    Ok((contracted, kept))
}

/// Crops the tree at `r`: solves the subtree for every fixed root site and
/// returns both the standalone subtree instance and the contracted
/// remainder whose matrix for `r` absorbs those optima. Cropping at a leaf
/// is a valid identity decomposition (the absorbed row is zero).
pub fn crop(inst: &PbsInstance, r: usize) -> Result<CropOutcome, SolverError> {
    let tree = inst.tree();
    if r >= tree.node_count() {
        return Err(SolverError::BadCropNode { label: r });
    }
    if r == tree.root() {
        return Err(SolverError::CropAtRoot(r));
    }
    let (sub_instance, sub_nodes) = extract_sub_instance(inst, r)?;
    let fixed_root_costs = dp_fixed_root_row(&sub_instance)?;
    let (contracted, contracted_nodes) =
        contract_instance(inst, &[(r, fixed_root_costs.clone())])?;
    Ok(CropOutcome {
        sub_instance,
        sub_nodes,
        contracted,
        contracted_nodes,
        fixed_root_costs,
    })
}

/// Solves by cropping at every listed node, solving the contracted tree,
/// then re-expanding each subtree with its root site pinned; exact by
/// construction. Crop subtrees must be pairwise disjoint.
pub fn solve_decomposed(
    inst: &PbsInstance,
    crop_nodes: &[usize],
) -> Result<(Assignment, f64), SolverError> {
    let tree = inst.tree();
    for (a_pos, &a) in crop_nodes.iter().enumerate() {
        if a >= tree.node_count() {
            return Err(SolverError::BadCropNode { label: a });
        }
        if a == tree.root() {
            return Err(SolverError::CropAtRoot(a));
        }
        let sub_a = tree.subtree_nodes(a);
        for &b in &crop_nodes[a_pos + 1..] {
            if b == a || sub_a.contains(&b) || tree.subtree_nodes(b).contains(&a) {
                return Err(SolverError::OverlappingCrops(a, b));
            }
        }
    }
    if crop_nodes.is_empty() {
        return dp_solve(inst);
    }

    // solve every subtree for all root sites against the original labels
    let mut pieces = Vec::with_capacity(crop_nodes.len());
    for &r in crop_nodes {
        let (sub_instance, sub_nodes) = extract_sub_instance(inst, r)?;
        let row = dp_fixed_root_row(&sub_instance)?;
        pieces.push((r, sub_instance, sub_nodes, row));
    }
    let crops: Vec<(usize, Vec<f64>)> = pieces
        .iter()
        .map(|(r, _, _, row)| (*r, row.clone()))
        .collect();
    let (contracted, contracted_nodes) = contract_instance(inst, &crops)?;
    let (contracted_assignment, _) = dp_solve(&contracted)?;

    // stitch the contracted solution and the pinned subtree solutions back
    let mut sites = vec![usize::MAX; tree.node_count()];
    for (new_label, &original) in contracted_nodes.iter().enumerate() {
        sites[original] = contracted_assignment.sites()[new_label];
    }
    for (r, sub_instance, sub_nodes, _) in &pieces {
        let pinned = sites[*r];
        let sub_assignment = dp_assignment_fixed_root(sub_instance, pinned)?;
        for (new_label, &original) in sub_nodes.iter().enumerate() {
            sites[original] = sub_assignment.sites()[new_label];
        }
    }
    debug_assert!(sites.iter().all(|&s| s != usize::MAX));
    let assignment = Assignment(sites);
    let value = cost(&assignment, inst);
    Ok((assignment, value))
}

/// Suggests crop nodes whose subtrees a classical solver handles well: the
/// maximal non-overlapping set of non-root, non-leaf nodes whose subtree
/// maximum degree stays within `degree_threshold`, preferring nodes with the
/// tallest subtrees. Deterministic.
pub fn suggest_crops(tree: &PbsTree, degree_threshold: usize) -> Vec<usize> {
    assert!(degree_threshold >= 1);
    let node_count = tree.node_count();
    let heights = tree.heights();
    // max in-degree within each subtree, bottom-up
    let mut subtree_degree = vec![0usize; node_count];
    for x in tree.nodes_by_height() {
        subtree_degree[x] = tree
            .preds(x)
            .iter()
            .map(|&y| subtree_degree[y])
            .max()
            .unwrap_or(0)
            .max(tree.degree(x));
    }
    let mut candidates: Vec<usize> = (0..node_count)
        .filter(|&x| {
            x != tree.root() && !tree.is_leaf(x) && subtree_degree[x] <= degree_threshold
        })
        .collect();
    candidates.sort_by_key(|&x| (std::cmp::Reverse(heights[x]), x));
    let mut chosen: Vec<usize> = Vec::new();
    let mut covered = vec![false; node_count];
    for x in candidates {
        if covered[x] {
            continue;
        }
        // an ancestor conflict means x's subtree contains a chosen node,
        // which the covered flags already track
        chosen.push(x);
        for member in tree.subtree_nodes(x) {
            covered[member] = true;
        }
    }
    chosen.sort_unstable();
    chosen
}
