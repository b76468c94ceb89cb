use super::{CostMatrix, ModelError, PbsInstance, PbsTree};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Uniform-attachment random tree: nodes `1..M` are added in label order and
/// each attaches to a uniformly chosen existing node whose in-degree is still
/// below `max_degree`. Node 0 is the root. Deterministic per seed.
pub fn random_tree(num_nodes: usize, max_degree: usize, seed: u64) -> Result<PbsTree, ModelError> {
    assert!(num_nodes >= 1, "tree needs at least one node");
    assert!(max_degree >= 1, "max_degree must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut in_degree = vec![0usize; num_nodes];
    let mut edges = Vec::with_capacity(num_nodes.saturating_sub(1));
    for node in 1..num_nodes {
        let eligible: Vec<usize> = (0..node).filter(|&x| in_degree[x] < max_degree).collect();
        // k nodes hold k-1 edges, so some node is always below any cap >= 1
        let parent = eligible[rng.random_range(0..eligible.len())];
        in_degree[parent] += 1;
        edges.push((node, parent));
    }
    PbsTree::new(num_nodes, edges)
}

/// Degree-saturating random tree: each new node attaches to a uniformly
/// chosen node among those of currently maximal in-degree below `max_degree`,
/// so hubs fill up to the cap before new hubs open. Produces the bushy trees
/// of the dimension study, where a cap of `N-1` keeps every instance
/// satisfiable while the saturated hubs reach total degree `N`.
pub fn saturating_random_tree(
    num_nodes: usize,
    max_degree: usize,
    seed: u64,
) -> Result<PbsTree, ModelError> {
    assert!(num_nodes >= 1, "tree needs at least one node");
    assert!(max_degree >= 1, "max_degree must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut in_degree = vec![0usize; num_nodes];
    let mut edges = Vec::with_capacity(num_nodes.saturating_sub(1));
    for node in 1..num_nodes {
        let top = (0..node)
            .filter(|&x| in_degree[x] < max_degree)
            .map(|x| in_degree[x])
            .max()
            .expect("some node is below the cap");
        let candidates: Vec<usize> = (0..node)
            .filter(|&x| in_degree[x] == top && in_degree[x] < max_degree)
            .collect();
        let parent = candidates[rng.random_range(0..candidates.len())];
        in_degree[parent] += 1;
        edges.push((node, parent));
    }
    PbsTree::new(num_nodes, edges)
}

/// Fills an instance with seeded uniform costs: each `c^r[i][j]` for `i < j`
/// is drawn from `[0, 1)` and mirrored, diagonals are zero. Deterministic per
/// seed; matrices are generated in ascending node order.
pub fn random_costs(tree: &PbsTree, num_sites: usize, seed: u64) -> PbsInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut costs = Vec::new();
    for node in 0..tree.node_count() {
        if node == tree.root() {
            continue;
        }
        let mut matrix = CostMatrix::zeros(num_sites);
        for i in 0..num_sites {
            for j in (i + 1)..num_sites {
                let value: f64 = rng.random();
                matrix.set(i, j, value);
                matrix.set(j, i, value);
            }
        }
        costs.push((node, matrix));
    }
    PbsInstance::new(tree.clone(), num_sites, costs)
        .expect("generated costs are symmetric and non-negative")
}
