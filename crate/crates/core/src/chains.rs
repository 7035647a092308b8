//! Maximal chains of a finite lattice and the equivalence generated by
//! single-element replacement.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::lattice::Lattice;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChainError {
    #[error("node index {0} out of range")]
    NodeOutOfRange(usize),
    #[error("lower bound does not lie below upper bound")]
    NotComparable,
}

/// All maximal chains from `lo` to `hi`, each listed bottom-up. Chains are
/// produced in lexicographic node order, so the output is deterministic.
pub fn enumerate_maximal_chains(
    lattice: &Lattice,
    lo: usize,
    hi: usize,
) -> Result<Vec<Vec<usize>>, ChainError> {
    let n = lattice.len();
    if lo >= n {
        return Err(ChainError::NodeOutOfRange(lo));
    }
    if hi >= n {
        return Err(ChainError::NodeOutOfRange(hi));
    }
    if !lattice.leq(lo, hi) {
        return Err(ChainError::NotComparable);
    }
    let mut chains = Vec::new();
    let mut stack = vec![lo];
    dfs(lattice, hi, &mut stack, &mut chains);
    Ok(chains)
}

fn dfs(lattice: &Lattice, hi: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let last = *stack.last().unwrap();
    if last == hi {
        out.push(stack.clone());
        return;
    }
    for &up in lattice.upper_covers(last) {
        if lattice.leq(up, hi) {
            stack.push(up);
            dfs(lattice, hi, stack, out);
            stack.pop();
        }
    }
}

/// Partition of `chains` into r-equivalence classes: the reflexive
/// transitive closure of "differ in exactly one element". Classes are
/// sorted by their smallest chain index; members are sorted.
pub fn r_equivalence_classes(chains: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..chains.len()).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    // chains that agree outside one slot share a "keyed hole" bucket
    let mut buckets: HashMap<Vec<usize>, usize> = HashMap::new();
    const HOLE: usize = usize::MAX;
    for (idx, chain) in chains.iter().enumerate() {
        for i in 0..chain.len() {
            let mut key = chain.clone();
            key[i] = HOLE;
            match buckets.get(&key) {
                Some(&first) => {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, idx));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
                None => {
                    buckets.insert(key, idx);
                }
            }
        }
    }
    let mut classes: HashMap<usize, Vec<usize>> = HashMap::new();
    for idx in 0..chains.len() {
        let root = find(&mut parent, idx);
        classes.entry(root).or_default().push(idx);
    }
    let mut out: Vec<Vec<usize>> = classes.into_values().collect();
    for class in &mut out {
        class.sort_unstable();
    }
    out.sort_by_key(|c| c[0]);
    out
}

/// Summary of a chain census on one interval.
#[derive(Clone, Debug, Serialize)]
pub struct ChainReport {
    pub chain_count: usize,
    /// (length in cover steps, number of chains of that length), ascending
    pub length_histogram: Vec<(usize, usize)>,
    pub class_count: usize,
    /// one representative chain per class, in class order
    pub class_representatives: Vec<Vec<usize>>,
    pub class_sizes: Vec<usize>,
    pub semimodular: bool,
    pub lower_semimodular: bool,
    /// The single-class conclusion applies when the lattice is semimodular
    /// or lower semimodular.
    pub hypothesis_applies: bool,
    /// Chains from two different classes, present when class_count > 1.
    pub counterexample: Option<(Vec<usize>, Vec<usize>)>,
}

/// Census of the maximal chains of a whole lattice (bottom to top),
/// checking the single-r-class conclusion whenever the lattice is
/// semimodular or lower semimodular.
pub fn ritt_theorem_check(lattice: &Lattice) -> ChainReport {
    let chains = enumerate_maximal_chains(lattice, lattice.bottom(), lattice.top())
        .expect("bottom lies below top");
    let classes = r_equivalence_classes(&chains);
    let mut hist: HashMap<usize, usize> = HashMap::new();
    for c in &chains {
        *hist.entry(c.len() - 1).or_insert(0) += 1;
    }
    let mut length_histogram: Vec<(usize, usize)> = hist.into_iter().collect();
    length_histogram.sort_unstable();
    let semimodular = lattice.is_semimodular();
    let lower_semimodular = lattice.is_lower_semimodular();
    let hypothesis_applies = semimodular || lower_semimodular;
    let counterexample = if classes.len() > 1 {
        Some((
            chains[classes[0][0]].clone(),
            chains[classes[1][0]].clone(),
        ))
    } else {
        None
    };
    if hypothesis_applies {
        assert_eq!(
            classes.len(),
            1,
            "semimodularity must force a single replacement class"
        );
    }
    ChainReport {
        chain_count: chains.len(),
        length_histogram,
        class_count: classes.len(),
        class_representatives: classes.iter().map(|c| chains[c[0]].clone()).collect(),
        class_sizes: classes.iter().map(|c| c.len()).collect(),
        semimodular,
        lower_semimodular,
        hypothesis_applies,
        counterexample,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::{build_interval, BuildStrategy};
    use crate::lattice::DivisorLattice;
    use crate::perm::{close, GroupSpec, GroupTable};

    fn regular(degree: usize, gens: &[&str]) -> GroupTable {
        let g = close(&GroupSpec::from_cycles(degree, gens).unwrap(), 20_000).unwrap();
        close(&g.regular_representation(), 20_000).unwrap()
    }

    fn census(g: &GroupTable) -> (usize, Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let l = build_interval(g, 1, BuildStrategy::ViaSubgroupEnumeration).unwrap();
        let chains =
            enumerate_maximal_chains(l.lattice(), l.bottom(), l.top()).unwrap();
        let classes = r_equivalence_classes(&chains);
        (l.len(), chains, classes)
    }

    #[test]
    fn divisor_lattice_chains() {
        let l12 = DivisorLattice::new(12).to_lattice();
        let chains = enumerate_maximal_chains(&l12, l12.bottom(), l12.top()).unwrap();
        // 12 = 2·2·3 in three orders
        assert_eq!(chains.len(), 3);
        assert!(chains.iter().all(|c| c.len() == 4));
        assert_eq!(r_equivalence_classes(&chains).len(), 1);
        let lp = DivisorLattice::new(7).to_lattice();
        let chains = enumerate_maximal_chains(&lp, lp.bottom(), lp.top()).unwrap();
        assert_eq!(chains, vec![vec![0, 1]]);
    }

    #[test]
    fn single_node_interval() {
        let l = DivisorLattice::new(1).to_lattice();
        let chains = enumerate_maximal_chains(&l, 0, 0).unwrap();
        assert_eq!(chains, vec![vec![0]]);
    }

    #[test]
    fn out_of_range_and_incomparable() {
        let l12 = DivisorLattice::new(12).to_lattice();
        assert!(matches!(
            enumerate_maximal_chains(&l12, 9, 0),
            Err(ChainError::NodeOutOfRange(9))
        ));
        // 4 and 6 are incomparable in L_12
        let d4 = DivisorLattice::new(12).divisors().iter().position(|&d| d == 4).unwrap();
        let d6 = DivisorLattice::new(12).divisors().iter().position(|&d| d == 6).unwrap();
        assert_eq!(
            enumerate_maximal_chains(&l12, d4, d6),
            Err(ChainError::NotComparable)
        );
    }

    #[test]
    fn a4_census() {
        let g = regular(4, &["(1 2 3)", "(1 2)(3 4)"]);
        let (nodes, chains, classes) = census(&g);
        assert_eq!(nodes, 10);
        assert_eq!(chains.len(), 7);
        let len3 = chains.iter().filter(|c| c.len() == 4).count();
        let len2 = chains.iter().filter(|c| c.len() == 3).count();
        assert_eq!((len3, len2), (3, 4));
        assert_eq!(classes.len(), 2);
        // classes split exactly by length
        for class in &classes {
            let l = chains[class[0]].len();
            assert!(class.iter().all(|&i| chains[i].len() == l));
        }
    }

    #[test]
    fn s4_census() {
        let g = regular(4, &["(1 2 3 4)", "(1 2)"]);
        let (nodes, chains, classes) = census(&g);
        assert_eq!(nodes, 30);
        assert_eq!(chains.len(), 44);
        assert_eq!(classes.len(), 2);
        let len4 = chains.iter().filter(|c| c.len() == 5).count();
        let len3 = chains.iter().filter(|c| c.len() == 4).count();
        assert_eq!((len4, len3), (24, 20));
        for class in &classes {
            let l = chains[class[0]].len();
            assert!(class.iter().all(|&i| chains[i].len() == l));
        }
    }

    #[test]
    fn a5_census() {
        let g = regular(5, &["(1 2 3 4 5)", "(1 2 3)"]);
        let (nodes, chains, classes) = census(&g);
        assert_eq!(nodes, 59);
        assert_eq!(chains.len(), 111);
        assert_eq!(classes.len(), 6);
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 3, 3, 3, 3, 96]);
    }

    #[test]
    fn ritt_check_on_semimodular_cases() {
        for (deg, gens) in [
            (12usize, vec!["(1 2 3 4 5 6 7 8 9 10 11 12)"]),
            (4, vec!["(1 2 3 4)", "(1 3)"]),
            (6, vec!["(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"]),
            (8, vec!["(1 2 3 4 5 6 7 8)", "(1 8)(2 7)(3 6)(4 5)"]),
        ] {
            let g = regular(deg, &gens);
            let l = build_interval(&g, 1, BuildStrategy::ViaSubgroupEnumeration).unwrap();
            let report = ritt_theorem_check(l.lattice());
            assert!(report.hypothesis_applies, "degree {deg}");
            assert_eq!(report.class_count, 1, "degree {deg}");
            assert!(report.counterexample.is_none());
        }
    }

    #[test]
    fn ritt_check_reports_counterexample() {
        let g = regular(4, &["(1 2 3)", "(1 2)(3 4)"]);
        let l = build_interval(&g, 1, BuildStrategy::ViaSubgroupEnumeration).unwrap();
        let report = ritt_theorem_check(l.lattice());
        assert!(!report.hypothesis_applies);
        assert_eq!(report.class_count, 2);
        let (c1, c2) = report.counterexample.unwrap();
        assert_ne!(c1.len(), c2.len());
        assert_eq!(report.length_histogram, vec![(2, 4), (3, 3)]);
    }
}
