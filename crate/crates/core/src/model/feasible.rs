use super::{Assignment, ModelError, PbsTree};
use num_bigint::BigUint;

/// Whether `f` satisfies the PBS constraints: for every node `x`, the sites
/// of `x` and all its sub-parts are pairwise distinct. Equivalently,
/// (i) every part sits at a different site than its parent, and
/// (ii) sub-parts of a common part sit at pairwise different sites.
pub fn is_feasible(f: &Assignment, tree: &PbsTree, num_sites: usize) -> bool {
    let sites = f.sites();
    debug_assert_eq!(sites.len(), tree.node_count());
    if sites.iter().any(|&s| s >= num_sites) {
        return false;
    }
    for x in 0..tree.node_count() {
        let preds = tree.preds(x);
        for (a, &p) in preds.iter().enumerate() {
            if sites[p] == sites[x] {
                return false;
            }
            for &q in &preds[a + 1..] {
                if sites[p] == sites[q] {
                    return false;
                }
            }
        }
    }
    true
}

/// Exact size of the feasible set,
/// `|F| = N * prod_x (N-1)(N-2)...(N-d_x)`:
/// the root chooses freely among `N` sites and the `d_x` sub-parts of each
/// node fill an injection into the remaining `N-1` sites. Returns 0 when
/// `N < m+1`.
pub fn count_feasible(tree: &PbsTree, num_sites: usize) -> BigUint {
    let mut count = BigUint::from(num_sites);
    for x in 0..tree.node_count() {
        for k in 1..=tree.degree(x) {
            if num_sites < k + 1 {
                return BigUint::ZERO;
            }
            count *= BigUint::from(num_sites - k);
        }
    }
    count
}

/// `log10 |F|`, computed without big integers; `-inf` when `|F| = 0`.
/// Used by the dimension study where `M * N` exceeds machine-word sizes.
pub fn log10_count_feasible(tree: &PbsTree, num_sites: usize) -> f64 {
    if num_sites == 0 {
        return f64::NEG_INFINITY;
    }
    let mut sum = (num_sites as f64).log10();
    for x in 0..tree.node_count() {
        for k in 1..=tree.degree(x) {
            if num_sites < k + 1 {
                return f64::NEG_INFINITY;
            }
            sum += ((num_sites - k) as f64).log10();
        }
    }
    sum
}

/// All feasible assignments in lexicographic order of their site sequences.
///
/// Intended for desk-scale oracles; refuses to materialise more than
/// `budget` assignments (callers typically pass around `10^6`).
pub fn enumerate_feasible(
    tree: &PbsTree,
    num_sites: usize,
    budget: usize,
) -> Result<Vec<Assignment>, ModelError> {
    let count = count_feasible(tree, num_sites);
    if count > BigUint::from(budget) {
        return Err(ModelError::EnumerationBudget { count, budget });
    }
    let m = tree.node_count();
    // conflicts[x] = nodes with smaller label that must differ from x:
    // its parent, its children, and its siblings.
    let mut conflicts: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (x, partners) in conflicts.iter_mut().enumerate() {
        if let Some(p) = tree.parent(x) {
            if p < x {
                partners.push(p);
            }
            for &sib in tree.preds(p) {
                if sib < x {
                    partners.push(sib);
                }
            }
        }
        for &child in tree.preds(x) {
            if child < x {
                partners.push(child);
            }
        }
    }
    let mut out = Vec::new();
    let mut sites = vec![0usize; m];
    fn assign(
        node: usize,
        sites: &mut Vec<usize>,
        conflicts: &[Vec<usize>],
        num_sites: usize,
        out: &mut Vec<Assignment>,
    ) {
        if node == sites.len() {
            out.push(Assignment(sites.clone()));
            return;
        }
        'site: for s in 0..num_sites {
            for &other in &conflicts[node] {
                if sites[other] == s {
                    continue 'site;
                }
            }
            sites[node] = s;
            assign(node + 1, sites, conflicts, num_sites, out);
        }
    }
    assign(0, &mut sites, &conflicts, num_sites, &mut out);
    debug_assert_eq!(BigUint::from(out.len()), count);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn star4() -> PbsTree {
        PbsTree::new(4, vec![(1, 0), (2, 0), (3, 0)]).unwrap()
    }

    #[test]
    fn feasibility_examples() {
        let t = star4();
        assert!(is_feasible(&Assignment(vec![0, 1, 2, 3]), &t, 4));
        assert!(!is_feasible(&Assignment(vec![0, 1, 1, 3]), &t, 4));
        let chain = PbsTree::new(2, vec![(1, 0)]).unwrap();
        assert!(!is_feasible(&Assignment(vec![0, 0]), &chain, 2));
        assert!(is_feasible(&Assignment(vec![0, 1]), &chain, 2));
    }

    #[test]
    fn caption_counts() {
        let star = star4();
        assert_eq!(count_feasible(&star, 4), BigUint::from(24u32));
        assert_eq!(count_feasible(&star, 5), BigUint::from(120u32));
        assert_eq!(count_feasible(&star, 6), BigUint::from(360u32));
        let t3a = PbsTree::new(4, vec![(1, 0), (2, 0), (3, 1)]).unwrap();
        assert_eq!(count_feasible(&t3a, 4), BigUint::from(72u32));
        let t3b = PbsTree::new(5, vec![(1, 0), (2, 0), (3, 0), (4, 1)]).unwrap();
        assert_eq!(count_feasible(&t3b, 5), BigUint::from(480u32));
        let t3c = PbsTree::new(7, vec![(1, 0), (2, 0), (3, 0), (4, 1), (5, 1), (6, 1)]).unwrap();
        assert_eq!(count_feasible(&t3c, 4), BigUint::from(144u32));
    }

    #[test]
    fn count_vanishes_below_threshold_and_not_at_it() {
        for (m_nodes, edges) in [
            (4usize, vec![(1, 0), (2, 0), (3, 0)]),
            (4, vec![(1, 0), (2, 0), (3, 1)]),
            (3, vec![(1, 0), (2, 1)]),
        ] {
            let t = PbsTree::new(m_nodes, edges).unwrap();
            let m = t.max_degree();
            assert_eq!(count_feasible(&t, m), BigUint::ZERO);
            assert!(count_feasible(&t, m + 1) > BigUint::ZERO);
        }
    }

    #[test]
    fn enumerate_tiny_chain() {
        let t = PbsTree::new(2, vec![(1, 0)]).unwrap();
        let fs = enumerate_feasible(&t, 2, 1000).unwrap();
        assert_eq!(
            fs,
            vec![Assignment(vec![0, 1]), Assignment(vec![1, 0])]
        );
    }

    #[test]
    fn enumerate_matches_count_and_is_sorted() {
        for (n, expected) in [(4usize, 24usize), (5, 120)] {
            let fs = enumerate_feasible(&star4(), n, 1_000_000).unwrap();
            assert_eq!(fs.len(), expected);
            assert!(fs.windows(2).all(|w| w[0] < w[1]));
            assert!(fs.iter().all(|f| is_feasible(f, &star4(), n)));
        }
    }

    #[test]
    fn enumerate_equals_grid_filter() {
        // exhaustive N^M cross-check on every shape small enough
        let shapes = [
            PbsTree::new(4, vec![(1, 0), (2, 0), (3, 0)]).unwrap(),
            PbsTree::new(4, vec![(1, 0), (2, 0), (3, 1)]).unwrap(),
            PbsTree::new(3, vec![(1, 0), (2, 1)]).unwrap(),
            PbsTree::new(1, vec![]).unwrap(),
            PbsTree::new(5, vec![(0, 4), (1, 4), (2, 0), (3, 0)]).unwrap(),
        ];
        for t in &shapes {
            for n in 1..=4usize {
                let m = t.node_count();
                let grid: Vec<Assignment> = (0..n.pow(m as u32))
                    .map(|mut idx| {
                        let mut sites = vec![0usize; m];
                        for s in sites.iter_mut().rev() {
                            *s = idx % n;
                            idx /= n;
                        }
                        Assignment(sites)
                    })
                    .filter(|f| is_feasible(f, t, n))
                    .collect();
                let fs = enumerate_feasible(t, n, 1_000_000).unwrap();
                assert_eq!(fs, grid, "tree {:?} n={}", t.edges(), n);
                assert_eq!(BigUint::from(fs.len()), count_feasible(t, n));
            }
        }
    }

    #[test]
    fn budget_enforced() {
        assert!(matches!(
            enumerate_feasible(&star4(), 4, 10),
            Err(ModelError::EnumerationBudget { .. })
        ));
    }

    #[test]
    fn log10_matches_exact_count() {
        let t = PbsTree::new(7, vec![(1, 0), (2, 0), (3, 0), (4, 1), (5, 1), (6, 1)]).unwrap();
        for n in 2..=6usize {
            let exact = count_feasible(&t, n);
            let logged = log10_count_feasible(&t, n);
            if exact == BigUint::ZERO {
                assert_eq!(logged, f64::NEG_INFINITY);
            } else {
                let expect = format!("{exact}").len() as f64; // digit count brackets log10
                assert!((logged - expect).abs() < 1.0, "n={n} log={logged} digits={expect}");
            }
        }
    }

    proptest! {
        #[test]
        fn count_matches_filter_on_random_trees(seed in 0u64..50, m in 1usize..6, n in 1usize..4) {
            let tree = crate::model::random_tree(m, 3, seed).unwrap();
            let total = n.pow(m as u32);
            prop_assume!(total <= 100_000);
            let brute = (0..total)
                .map(|mut idx| {
                    let mut sites = vec![0usize; m];
                    for s in sites.iter_mut() {
                        *s = idx % n;
                        idx /= n;
                    }
                    Assignment(sites)
                })
                .filter(|f| is_feasible(f, &tree, n))
                .count();
            prop_assert_eq!(BigUint::from(brute), count_feasible(&tree, n));
        }
    }
}
