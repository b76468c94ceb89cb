use super::SolverError;
use crate::model::{cost, enumerate_feasible, Assignment, PbsInstance};

/// Enumerates the feasible set and returns the cheapest assignment, breaking
/// cost ties towards the lexicographically smallest site sequence.
pub fn brute_force(inst: &PbsInstance) -> Result<(Assignment, f64), SolverError> {
    brute_force_with_budget(inst, 1_000_000)
}

pub fn brute_force_with_budget(
    inst: &PbsInstance,
    budget: usize,
) -> Result<(Assignment, f64), SolverError> {
    if !inst.is_satisfiable() {
        return Err(SolverError::Infeasible {
            sites: inst.num_sites(),
            required: inst.tree().max_degree() + 1,
        });
    }
    let feasible = enumerate_feasible(inst.tree(), inst.num_sites(), budget)?;
    // enumeration is lexicographic, so keeping the first strict minimum
    // realises the tie-break
    let mut best: Option<(Assignment, f64)> = None;
    for f in feasible {
        let value = cost(&f, inst);
        match &best {
            Some((_, current)) if value >= *current => {}
            _ => best = Some((f, value)),
        }
    }
    Ok(best.expect("satisfiable instances have a non-empty feasible set"))
}
