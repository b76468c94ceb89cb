use super::SolverError;
use crate::model::{cost, Assignment, PbsInstance};

/// The filled dynamic-programming table: per node and site the minimal cost
/// of the subtree rooted there, plus backpointers to the minimising site
/// tuple of the (ascending-sorted) sub-parts.
#[derive(Clone, Debug)]
pub struct DpTable {
    /// `values[x][i]` = minimal cost of `x`'s subtree given `f(x) = i`;
    /// leaf rows are all zero.
    values: Vec<Vec<f64>>,
    /// `back[x][i]` = site per sub-part of `x`, in ascending label order.
    back: Vec<Vec<Vec<usize>>>,
}

impl DpTable {
    /// `c_i^x`: minimal subtree cost of `x` at site `i`.
    pub fn value(&self, node: usize, site: usize) -> f64 {
        self.values[node][site]
    }

    /// Reads the optimal assignment off the backpointers, given the root's
    /// site.
    pub fn extract(&self, inst: &PbsInstance, root_site: usize) -> Assignment {
        let tree = inst.tree();
        let mut sites = vec![0usize; tree.node_count()];
        sites[tree.root()] = root_site;
        let mut stack = vec![tree.root()];
        while let Some(x) = stack.pop() {
            let chosen = &self.back[x][sites[x]];
            for (&y, &site) in tree.preds(x).iter().zip(chosen) {
                sites[y] = site;
                stack.push(y);
            }
        }
        Assignment(sites)
    }
}

/// Operation counter for scaling checks: complete sub-part site tuples
/// evaluated inside the minimisation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DpStats {
    pub tuples_evaluated: usize,
}

fn dp_table(inst: &PbsInstance) -> Result<(DpTable, DpStats), SolverError> {
    if !inst.is_satisfiable() {
        return Err(SolverError::Infeasible {
            sites: inst.num_sites(),
            required: inst.tree().max_degree() + 1,
        });
    }
    let tree = inst.tree();
    let n = inst.num_sites();
    let mut values = vec![Vec::new(); tree.node_count()];
    let mut back = vec![Vec::new(); tree.node_count()];
    let mut stats = DpStats::default();

    for x in tree.nodes_by_height() {
        let preds = tree.preds(x);
        if preds.is_empty() {
            values[x] = vec![0.0; n];
            back[x] = vec![Vec::new(); n];
            continue;
        }
        let mut row = Vec::with_capacity(n);
        let mut row_back = Vec::with_capacity(n);
        for i in 0..n {
            let mut best = f64::INFINITY;
            let mut best_tuple = Vec::new();
            let mut tuple = vec![usize::MAX; preds.len()];
            let mut used = vec![false; n];
            // lexicographic scan over injective site tuples avoiding i;
            // the first strict minimum wins, fixing the tie-break
            search_tuples(
                preds,
                &values,
                inst,
                i,
                0,
                0.0,
                &mut tuple,
                &mut used,
                &mut best,
                &mut best_tuple,
                &mut stats.tuples_evaluated,
            );
            row.push(best);
            row_back.push(best_tuple);
        }
        values[x] = row;
        back[x] = row_back;
    }
    Ok((DpTable { values, back }, stats))
}

#[allow(clippy::too_many_arguments)]
fn search_tuples(
    preds: &[usize],
    values: &[Vec<f64>],
    inst: &PbsInstance,
    parent_site: usize,
    depth: usize,
    partial: f64,
    tuple: &mut Vec<usize>,
    used: &mut Vec<bool>,
    best: &mut f64,
    best_tuple: &mut Vec<usize>,
    evaluated: &mut usize,
) {
    if depth == preds.len() {
        *evaluated += 1;
        if partial < *best {
            *best = partial;
            best_tuple.clear();
            best_tuple.extend_from_slice(tuple);
        }
        return;
    }
    let y = preds[depth];
    for site in 0..inst.num_sites() {
        if site == parent_site || used[site] {
            continue;
        }
        let contribution = values[y][site] + inst.cost_matrix(y).get(site, parent_site);
        used[site] = true;
        tuple[depth] = site;
        search_tuples(
            preds,
            values,
            inst,
            parent_site,
            depth + 1,
            partial + contribution,
            tuple,
            used,
            best,
            best_tuple,
            evaluated,
        );
        used[site] = false;
    }
}

/// Exact optimum by dynamic programming over the tree. The returned cost is
/// re-evaluated from the assignment, so it is bit-identical to [`cost`] on
/// the same assignment.
pub fn dp_solve(inst: &PbsInstance) -> Result<(Assignment, f64), SolverError> {
    let (assignment, value, _) = dp_solve_with_stats(inst)?;
    Ok((assignment, value))
}

/// As [`dp_solve`], also reporting how many site tuples the inner
/// minimisation visited.
pub fn dp_solve_with_stats(
    inst: &PbsInstance,
) -> Result<(Assignment, f64, DpStats), SolverError> {
    let (table, stats) = dp_table(inst)?;
    let root = inst.tree().root();
    let mut best_site = 0usize;
    for site in 1..inst.num_sites() {
        if table.value(root, site) < table.value(root, best_site) {
            best_site = site;
        }
    }
    let assignment = table.extract(inst, best_site);
    let value = cost(&assignment, inst);
    Ok((assignment, value, stats))
}

/// `c_i^root` for a fixed root site: the optimum under the extra condition
/// `f(root) = site`.
pub fn dp_solve_fixed_root(inst: &PbsInstance, site: usize) -> Result<f64, SolverError> {
    let (table, _) = dp_table(inst)?;
    Ok(table.value(inst.tree().root(), site))
}

/// The optimal assignment under a fixed root site.
pub(crate) fn dp_assignment_fixed_root(
    inst: &PbsInstance,
    site: usize,
) -> Result<Assignment, SolverError> {
    let (table, _) = dp_table(inst)?;
    Ok(table.extract(inst, site))
}

/// The full fixed-root value row for the decomposition: `c_i^root` for every
/// site `i`.
pub(crate) fn dp_fixed_root_row(inst: &PbsInstance) -> Result<Vec<f64>, SolverError> {
    let (table, _) = dp_table(inst)?;
    let root = inst.tree().root();
    Ok((0..inst.num_sites())
        .map(|i| table.value(root, i))
        .collect())
}
