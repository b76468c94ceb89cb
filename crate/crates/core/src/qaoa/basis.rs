use super::QaoaError;
use crate::model::{cost, enumerate_feasible, Assignment, PbsInstance};
use crate::sim::RegisterLayout;
use std::collections::HashMap;

/// The feasible set as an ordered basis: assignments in enumeration order,
/// their cached costs, and their one-hot basis indices in the full space.
#[derive(Clone, Debug)]
pub struct FeasibleBasis {
    layout: RegisterLayout,
    assignments: Vec<Assignment>,
    costs: Vec<f64>,
    encodings: Vec<usize>,
    position: HashMap<usize, usize>,
    min_cost: f64,
}

impl FeasibleBasis {
    pub fn new(inst: &PbsInstance) -> Result<Self, QaoaError> {
        Self::with_budget(inst, 1_000_000)
    }

    pub fn with_budget(inst: &PbsInstance, budget: usize) -> Result<Self, QaoaError> {
        let layout = RegisterLayout::new(inst.num_parts(), inst.num_sites());
        let assignments = enumerate_feasible(inst.tree(), inst.num_sites(), budget)?;
        let costs: Vec<f64> = assignments.iter().map(|f| cost(f, inst)).collect();
        let encodings: Vec<usize> = assignments.iter().map(|f| layout.encode(f.sites())).collect();
        let position = encodings
            .iter()
            .enumerate()
            .map(|(k, &enc)| (enc, k))
            .collect();
        let min_cost = costs.iter().copied().fold(f64::INFINITY, f64::min);
        Ok(FeasibleBasis {
            layout,
            assignments,
            costs,
            encodings,
            position,
            min_cost,
        })
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn layout(&self) -> RegisterLayout {
        self.layout
    }

    pub fn assignment(&self, k: usize) -> &Assignment {
        &self.assignments[k]
    }

    pub fn assignments(&self) -> &[Assignment] {
        &self.assignments
    }

    pub fn cost(&self, k: usize) -> f64 {
        self.costs[k]
    }

    pub fn costs(&self) -> &[f64] {
        &self.costs
    }

    /// Minimum cost over the feasible set (the brute-force optimum).
    pub fn min_cost(&self) -> f64 {
        self.min_cost
    }

    pub fn encoding(&self, k: usize) -> usize {
        self.encodings[k]
    }

    pub fn encodings(&self) -> &[usize] {
        &self.encodings
    }

    pub fn position_of_encoding(&self, encoding: usize) -> Option<usize> {
        self.position.get(&encoding).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{random_costs, PbsTree};

    #[test]
    fn basis_matches_enumeration_order_and_costs() {
        let tree = PbsTree::new(4, vec![(1, 0), (2, 0), (3, 0)]).unwrap();
        let inst = random_costs(&tree, 4, 3);
        let basis = FeasibleBasis::new(&inst).unwrap();
        assert_eq!(basis.len(), 24);
        let listed = enumerate_feasible(&tree, 4, 1000).unwrap();
        for (k, f) in listed.iter().enumerate() {
            assert_eq!(basis.assignment(k), f);
            assert_eq!(basis.cost(k), cost(f, &inst));
            assert_eq!(
                basis.position_of_encoding(basis.encoding(k)),
                Some(k)
            );
        }
        assert!(basis.min_cost() <= basis.costs().iter().copied().fold(f64::INFINITY, f64::min));
    }
}
