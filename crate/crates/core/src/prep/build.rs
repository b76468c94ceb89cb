use super::wstate::partial_w;
use super::PrepError;
use crate::model::PbsTree;
use crate::sim::{Circuit, Gate, RegisterLayout, StateVector};

/// The state-preparation circuit for a PBS shape, together with the shape
/// that generated it. Contains only X, continuous-swap and controlled-swap
/// gates; applied to |0...0> it produces the uniform superposition of the
/// one-hot encodings of all feasible assignments.
#[derive(Clone, Debug)]
pub struct PrepCircuit {
    tree: PbsTree,
    layout: RegisterLayout,
    circuit: Circuit,
}

impl PrepCircuit {
    pub fn tree(&self) -> &PbsTree {
        &self.tree
    }

    pub fn layout(&self) -> RegisterLayout {
        self.layout
    }

    pub fn circuit(&self) -> &Circuit {
        &self.circuit
    }

    pub fn gate_count(&self) -> usize {
        self.circuit.len()
    }

    /// Runs the circuit on |0...0>, yielding the feasible superposition.
    pub fn prepare_state_with_cap(&self, cap: usize) -> Result<StateVector, PrepError> {
        let mut state = StateVector::zero_state_with_cap(self.layout.num_qubits(), cap)?;
        self.circuit.run(&mut state)?;
        Ok(state)
    }

    pub fn prepare_state(&self) -> Result<StateVector, PrepError> {
        self.prepare_state_with_cap(crate::sim::DEFAULT_MAX_QUBITS)
    }
}

/// Controlled-swap cascade entangling two one-hot registers so their encoded
/// sites differ: for each position `i < n`, a 1 at `r1[i]` swaps `r2[n]` with
/// `r2[i]`, pushing any clash at `i` up to the free position `n`.
pub fn make_distinct(
    layout: RegisterLayout,
    r1: usize,
    r2: usize,
    n: usize,
) -> Result<Vec<Gate>, PrepError> {
    if r1 == r2 {
        return Err(PrepError::Sim(crate::sim::SimError::DuplicateQubit));
    }
    if n > layout.sites() - 1 {
        return Err(PrepError::WTooLarge {
            n,
            register: layout.sites(),
        });
    }
    Ok((0..n)
        .map(|i| Gate::CSwap {
            control: layout.qubit(r1, i),
            a: layout.qubit(r2, n),
            b: layout.qubit(r2, i),
        })
        .collect())
}

/// Builds the full preparation circuit for `tree` over `num_sites` sites.
/// Requires `N >= m+1`; sub-parts are visited in ascending label order.
pub fn prepare_pbs_circuit(tree: &PbsTree, num_sites: usize) -> Result<PrepCircuit, PrepError> {
    let required = tree.max_degree() + 1;
    if num_sites < required {
        return Err(PrepError::TooFewSites {
            sites: num_sites,
            required,
        });
    }
    let layout = RegisterLayout::new(tree.node_count(), num_sites);
    let mut circuit = Circuit::new(layout.num_qubits());
    circuit.extend(partial_w(layout, tree.root(), num_sites)?);
    add_predecessors(tree, tree.root(), layout, &mut circuit)?;
    Ok(PrepCircuit {
        tree: tree.clone(),
        layout,
        circuit,
    })
}

fn add_predecessors(
    tree: &PbsTree,
    node: usize,
    layout: RegisterLayout,
    circuit: &mut Circuit,
) -> Result<(), PrepError> {
    let preds = tree.preds(node);
    let m = preds.len();
    let n = layout.sites();

    // partial W states of decreasing size for the sub-parts
    for (i, &p) in preds.iter().enumerate() {
        circuit.extend(partial_w(layout, p, n - 1 - i)?);
    }

    // pairwise distinctness among sub-parts, latest pairs first
    for i in (0..m.saturating_sub(1)).rev() {
        for j in (i + 1)..m {
            circuit.extend(make_distinct(layout, preds[i], preds[j], n - 2 - i)?);
        }
    }

    // distinctness from the parent
    for &p in preds {
        circuit.extend(make_distinct(layout, node, p, n - 1)?);
    }

    for &p in preds {
        add_predecessors(tree, p, layout, circuit)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{count_feasible, enumerate_feasible};
    use approx::assert_abs_diff_eq;
    use num_bigint::BigUint;

    fn assert_uniform_on_feasible(tree: &PbsTree, num_sites: usize) {
        let prep = prepare_pbs_circuit(tree, num_sites).unwrap();
        let state = prep.prepare_state().unwrap();
        let feasible = enumerate_feasible(tree, num_sites, 1_000_000).unwrap();
        let expect = 1.0 / feasible.len() as f64;
        let layout = prep.layout();
        let mut support = 0usize;
        for idx in 0..state.dim() {
            let p = state.probability(idx);
            if p > 1e-12 {
                support += 1;
            }
        }
        assert_eq!(support, feasible.len(), "support size");
        for f in &feasible {
            let idx = layout.encode(f.sites());
            assert_abs_diff_eq!(state.probability(idx), expect, epsilon = 1e-10);
        }
        assert_eq!(
            BigUint::from(feasible.len()),
            count_feasible(tree, num_sites)
        );
    }

    #[test]
    fn single_part_is_a_w_state() {
        let tree = PbsTree::new(1, vec![]).unwrap();
        assert_uniform_on_feasible(&tree, 2);
    }

    #[test]
    fn star_of_three_parts_is_uniform_over_24() {
        let tree = PbsTree::new(4, vec![(1, 0), (2, 0), (3, 0)]).unwrap();
        assert_uniform_on_feasible(&tree, 4);
    }

    #[test]
    fn two_level_tree_is_uniform_over_72() {
        let tree = PbsTree::new(4, vec![(1, 0), (2, 0), (3, 1)]).unwrap();
        assert_uniform_on_feasible(&tree, 4);
    }

    #[test]
    fn chain_with_extra_sites_is_uniform() {
        let tree = PbsTree::new(3, vec![(1, 0), (2, 1)]).unwrap();
        assert_uniform_on_feasible(&tree, 3);
    }

    #[test]
    fn three_level_tree_with_tight_sites_is_uniform() {
        // chain into a bush, N = m + 1 exactly
        let tree = PbsTree::new(5, vec![(1, 0), (2, 1), (3, 2), (4, 2)]).unwrap();
        assert_eq!(tree.max_degree(), 2);
        assert_uniform_on_feasible(&tree, 3);
    }

    #[test]
    fn uniformity_holds_on_random_small_trees() {
        use proptest::prelude::*;
        proptest!(ProptestConfig::with_cases(24), |(seed in 0u64..500, parts in 2usize..5)| {
            let tree = crate::model::random_tree(parts, 3, seed).unwrap();
            let sites = tree.max_degree() + 1;
            prop_assume!(parts * sites <= 14);
            assert_uniform_on_feasible(&tree, sites);
        });
    }

    #[test]
    fn amplitudes_are_real_positive() {
        let tree = PbsTree::new(4, vec![(1, 0), (2, 0), (3, 1)]).unwrap();
        let prep = prepare_pbs_circuit(&tree, 4).unwrap();
        let state = prep.prepare_state().unwrap();
        for idx in 0..state.dim() {
            let amp = state.amplitude(idx);
            assert!(amp.im.abs() < 1e-12);
            assert!(amp.re > -1e-12);
        }
    }

    #[test]
    fn rejects_too_few_sites() {
        let tree = PbsTree::new(4, vec![(1, 0), (2, 0), (3, 0)]).unwrap();
        assert!(matches!(
            prepare_pbs_circuit(&tree, 3),
            Err(PrepError::TooFewSites { sites: 3, required: 4 })
        ));
    }

    #[test]
    fn make_distinct_single_cswap_action() {
        // control one-hot at 0, target one-hot at 0, n = 1: swap fires
        let layout = RegisterLayout::new(2, 2);
        let mut circuit = Circuit::new(4);
        circuit.extend(make_distinct(layout, 0, 1, 1).unwrap());
        let start = layout.encode(&[0, 0]);
        let mut state = StateVector::basis_state(4, start).unwrap();
        circuit.run(&mut state).unwrap();
        assert_eq!(state.probability(layout.encode(&[0, 1])), 1.0);

        // control register all-zero: target unchanged
        let mut state = StateVector::basis_state(4, 0b0100).unwrap();
        circuit.run(&mut state).unwrap();
        assert_eq!(state.probability(0b0100), 1.0);
    }

    #[test]
    fn make_distinct_on_w2_w1_yields_both_orders() {
        let tree = PbsTree::new(2, vec![(1, 0)]).unwrap();
        let prep = prepare_pbs_circuit(&tree, 2).unwrap();
        let state = prep.prepare_state().unwrap();
        let layout = prep.layout();
        for f in [[0usize, 1], [1, 0]] {
            assert_abs_diff_eq!(
                state.probability(layout.encode(&f)),
                0.5,
                epsilon = 1e-10
            );
        }
    }

    #[test]
    fn make_distinct_rejects_register_clash() {
        let layout = RegisterLayout::new(2, 3);
        assert!(make_distinct(layout, 1, 1, 1).is_err());
    }

    #[test]
    fn golden_netlist_for_two_part_chain() {
        let tree = PbsTree::new(2, vec![(1, 0)]).unwrap();
        let prep = prepare_pbs_circuit(&tree, 2).unwrap();
        assert_eq!(
            prep.circuit().netlist(),
            "X 0\nXXPLUSYY 1.5707963267948966 1 0\nX 2\nCSWAP 0 3 2\n"
        );
    }

    #[test]
    fn gate_count_bounded_by_quadratic_envelope() {
        // chains and stars: count <= 2 * M^2 * N, nondecreasing in M
        let mut previous = 0;
        for m in 2..=8usize {
            let chain = PbsTree::new(m, (1..m).map(|x| (x, x - 1)).collect()).unwrap();
            let n = 3;
            let count = prepare_pbs_circuit(&chain, n).unwrap().gate_count();
            assert!(count <= 2 * m * m * n, "chain M={m}: {count}");
            assert!(count > previous);
            previous = count;
        }
        let mut previous = 0;
        for m in 2..=7usize {
            let star = PbsTree::new(m, (1..m).map(|x| (x, 0)).collect()).unwrap();
            let n = m; // keep N = m+1-ish scale
            let count = prepare_pbs_circuit(&star, n).unwrap().gate_count();
            assert!(count <= 2 * m * m * n, "star M={m}: {count}");
            assert!(count > previous);
            previous = count;
        }
    }
}
