//! The interval lattice L(G_omega, G) of subgroups between a point
//! stabilizer and the full group, built either from block systems or by
//! exhaustive subgroup enumeration, plus the divisor-lattice embedding
//! for groups with a transitive cyclic subgroup.

use std::collections::HashSet;

use thiserror::Error;

use crate::blocks::{self, BlockError};
use crate::lattice::{Lattice, LatticeError};
use crate::perm::{generated_subgroup, GroupTable, PermError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IntervalError {
    #[error(transparent)]
    Block(#[from] BlockError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("node index {0} out of range")]
    BadNode(usize),
    #[error("subgroup is not cyclic")]
    NotCyclic,
    #[error("subgroup is not transitive")]
    NotTransitive,
    #[error("not a subgroup of the ambient group")]
    NotSubgroup,
    #[error("Dedekind map is not injective on the interval")]
    NotInjective,
    #[error("Dedekind map does not carry meet/join to gcd/lcm")]
    NotHomomorphic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuildStrategy {
    ViaBlocks,
    ViaSubgroupEnumeration,
}

/// The poset of subgroups X with G_omega <= X <= G, with cover edges and
/// meet/join. Nodes are canonically sorted by (order, element list).
#[derive(Clone, Debug)]
pub struct IntervalLattice {
    group: GroupTable,
    omega: usize,
    nodes: Vec<GroupTable>,
    lattice: Lattice,
}

fn canonical_sort(nodes: &mut Vec<GroupTable>) {
    nodes.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elements().cmp(b.elements()))
    });
    nodes.dedup_by(|a, b| a.elements() == b.elements());
}

/// All subgroups between `bottom` and `ambient`: seed with the cyclic
/// extensions <bottom, g> for each g, then close under pairwise join.
pub fn enumerate_between(ambient: &GroupTable, bottom: &GroupTable) -> Vec<GroupTable> {
    let mut subs: HashSet<Vec<crate::perm::Permutation>> = HashSet::new();
    let mut out: Vec<GroupTable> = Vec::new();
    let push = |g: GroupTable, subs: &mut HashSet<_>, out: &mut Vec<GroupTable>| {
        if subs.insert(g.elements().to_vec()) {
            out.push(g);
        }
    };
    push(bottom.clone(), &mut subs, &mut out);
    for g in ambient.elements() {
        let ext = generated_subgroup(
            ambient,
            bottom.elements().iter().cloned().chain([g.clone()]),
        );
        push(ext, &mut subs, &mut out);
    }
    loop {
        let snapshot = out.clone();
        let before = out.len();
        for i in 0..snapshot.len() {
            for j in (i + 1)..snapshot.len() {
                if snapshot[i].is_subgroup_of(&snapshot[j])
                    || snapshot[j].is_subgroup_of(&snapshot[i])
                {
                    continue;
                }
                let joined = blocks::join_subgroups(ambient, &snapshot[i], &snapshot[j]);
                push(joined, &mut subs, &mut out);
            }
        }
        if out.len() == before {
            break;
        }
    }
    canonical_sort(&mut out);
    out
}

pub fn build_interval(
    g: &GroupTable,
    omega: usize,
    strategy: BuildStrategy,
) -> Result<IntervalLattice, IntervalError> {
    if !g.is_transitive() {
        return Err(BlockError::NotTransitive.into());
    }
    let stab = g.point_stabilizer(omega)?;
    let mut nodes: Vec<GroupTable> = match strategy {
        BuildStrategy::ViaBlocks => {
            let systems = blocks::all_block_systems(g, omega)?;
            systems
                .iter()
                .map(|e| blocks::block_stabilizer(g, e, omega))
                .collect::<Result<Vec<_>, _>>()?
        }
        BuildStrategy::ViaSubgroupEnumeration => enumerate_between(g, &stab),
    };
    canonical_sort(&mut nodes);
    let lattice = Lattice::from_leq(nodes.len(), |i, j| nodes[i].is_subgroup_of(&nodes[j]))?;
    Ok(IntervalLattice {
        group: g.clone(),
        omega,
        nodes,
        lattice,
    })
}

impl IntervalLattice {
    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn omega(&self) -> usize {
        self.omega
    }

    pub fn nodes(&self) -> &[GroupTable] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &GroupTable {
        &self.nodes[i]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn bottom(&self) -> usize {
        self.lattice.bottom()
    }

    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    /// Node index of a subgroup given by its element set, if present.
    pub fn find(&self, g: &GroupTable) -> Option<usize> {
        self.nodes
            .binary_search_by(|n| {
                n.order()
                    .cmp(&g.order())
                    .then_with(|| n.elements().cmp(g.elements()))
            })
            .ok()
    }

    /// Meet = intersection; realized on the node table.
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.lattice.meet(a, b)
    }

    /// Join = generated subgroup; realized on the node table.
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.lattice.join(a, b)
    }

    /// DOT export of the cover digraph, deterministic node order.
    pub fn to_dot(&self, tag: impl Fn(&GroupTable) -> String) -> String {
        let mut out = String::from("digraph interval {\n  rankdir=BT;\n");
        for (i, node) in self.nodes.iter().enumerate() {
            out.push_str(&format!(
                "  n{} [label=\"{} (order {})\"];\n",
                i,
                tag(node),
                node.order()
            ));
        }
        for &(a, b) in self.lattice.cover_pairs() {
            out.push_str(&format!("  n{a} -> n{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Result of the divisor-lattice embedding X -> |X ∩ C|.
#[derive(Clone, Debug)]
pub struct DedekindEmbedding {
    /// Divisor assigned to each interval node, in node order.
    pub image: Vec<usize>,
    pub modulus: usize,
}

/// The map X -> |X ∩ C| for a transitive cyclic subgroup C of order n,
/// verified to be injective and to carry meet to gcd and join to lcm.
pub fn dedekind_embedding(
    interval: &IntervalLattice,
    c: &GroupTable,
) -> Result<DedekindEmbedding, IntervalError> {
    let g = interval.group();
    if !c.is_subgroup_of(g) {
        return Err(IntervalError::NotSubgroup);
    }
    if !c.is_cyclic() {
        return Err(IntervalError::NotCyclic);
    }
    if !c.is_transitive() || c.order() != g.degree() {
        return Err(IntervalError::NotTransitive);
    }
    let n = c.order();
    let image: Vec<usize> = interval
        .nodes()
        .iter()
        .map(|x| blocks::intersect_subgroups(x, c).order())
        .collect();
    let mut seen = HashSet::new();
    for &d in &image {
        debug_assert_eq!(n % d, 0);
        if !seen.insert(d) {
            return Err(IntervalError::NotInjective);
        }
    }
    for a in 0..interval.len() {
        for b in 0..interval.len() {
            let m = interval.meet(a, b);
            let j = interval.join(a, b);
            if image[m] != num_integer::gcd(image[a], image[b])
                || image[j] != num_integer::lcm(image[a], image[b])
            {
                return Err(IntervalError::NotHomomorphic);
            }
        }
    }
    Ok(DedekindEmbedding { image, modulus: n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{close, GroupSpec};

    fn group(degree: usize, gens: &[&str]) -> GroupTable {
        close(&GroupSpec::from_cycles(degree, gens).unwrap(), 20_000).unwrap()
    }

    fn regular(g: &GroupTable) -> GroupTable {
        close(&g.regular_representation(), 20_000).unwrap()
    }

    #[test]
    fn a4_regular_interval() {
        let reg = regular(&group(4, &["(1 2 3)", "(1 2)(3 4)"]));
        let l = build_interval(&reg, 1, BuildStrategy::ViaSubgroupEnumeration).unwrap();
        assert_eq!(l.len(), 10);
        let orders: Vec<usize> = l.nodes().iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 3, 3, 3, 4, 12]);
        let via_blocks = build_interval(&reg, 1, BuildStrategy::ViaBlocks).unwrap();
        assert_eq!(
            l.nodes().iter().map(|n| n.elements()).collect::<Vec<_>>(),
            via_blocks.nodes().iter().map(|n| n.elements()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn s4_natural_interval() {
        let s4 = group(4, &["(1 2 3 4)", "(1 2)"]);
        let l = build_interval(&s4, 1, BuildStrategy::ViaBlocks).unwrap();
        assert_eq!(l.len(), 2);
        let orders: Vec<usize> = l.nodes().iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![6, 24]);
        let l2 = build_interval(&s4, 1, BuildStrategy::ViaSubgroupEnumeration).unwrap();
        assert_eq!(l2.len(), 2);
    }

    #[test]
    fn strategies_agree() {
        for g in [
            group(4, &["(1 2 3 4)", "(1 3)"]),
            group(5, &["(1 2 3 4 5)", "(2 3 5 4)"]),
            group(6, &["(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"]),
            regular(&group(4, &["(1 2 3 4)", "(1 3)"])),
            group(9, &["(1 2 3 4 5 6)(7 8 9)", "(1 7)(2 8)(3 9)"]),
        ] {
            let a = build_interval(&g, 1, BuildStrategy::ViaBlocks).unwrap();
            let b = build_interval(&g, 1, BuildStrategy::ViaSubgroupEnumeration).unwrap();
            assert_eq!(
                a.nodes().iter().map(|n| n.elements()).collect::<Vec<_>>(),
                b.nodes().iter().map(|n| n.elements()).collect::<Vec<_>>(),
                "strategy mismatch for group of order {}",
                g.order()
            );
        }
    }

    #[test]
    fn meet_join_examples() {
        let reg = regular(&group(4, &["(1 2 3)", "(1 2)(3 4)"]));
        let l = build_interval(&reg, 1, BuildStrategy::ViaSubgroupEnumeration).unwrap();
        let top = l.top();
        let bottom = l.bottom();
        for x in 0..l.len() {
            assert_eq!(l.meet(x, top), x);
            assert_eq!(l.meet(x, x), x);
            assert_eq!(l.join(x, bottom), x);
        }
        let v4 = (0..l.len()).find(|&i| l.node(i).order() == 4).unwrap();
        let c3 = (0..l.len()).find(|&i| l.node(i).order() == 3).unwrap();
        assert_eq!(l.meet(v4, c3), bottom);
        assert_eq!(l.join(v4, c3), top);
        // join of two distinct C2s is V4
        let c2s: Vec<usize> = (0..l.len()).filter(|&i| l.node(i).order() == 2).collect();
        assert_eq!(l.join(c2s[0], c2s[1]), v4);
    }

    #[test]
    fn dedekind_c12() {
        let c12 = group(12, &["(1 2 3 4 5 6 7 8 9 10 11 12)"]);
        let l = build_interval(&c12, 1, BuildStrategy::ViaSubgroupEnumeration).unwrap();
        let emb = dedekind_embedding(&l, &c12).unwrap();
        let mut image = emb.image.clone();
        image.sort_unstable();
        assert_eq!(image, vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn dedekind_f20() {
        let f20 = group(5, &["(1 2 3 4 5)", "(2 3 5 4)"]);
        let c5 = group(5, &["(1 2 3 4 5)"]);
        let l = build_interval(&f20, 1, BuildStrategy::ViaBlocks).unwrap();
        assert_eq!(l.len(), 2);
        let emb = dedekind_embedding(&l, &c5).unwrap();
        assert_eq!(emb.image, vec![1, 5]);
    }

    #[test]
    fn dedekind_rejects_noncyclic() {
        let d12 = group(6, &["(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"]);
        let l = build_interval(&d12, 1, BuildStrategy::ViaBlocks).unwrap();
        assert!(matches!(
            dedekind_embedding(&l, &d12),
            Err(IntervalError::NotCyclic)
        ));
        let c6 = group(6, &["(1 2 3 4 5 6)"]);
        let emb = dedekind_embedding(&l, &c6).unwrap();
        let mut image = emb.image.clone();
        image.sort_unstable();
        // block stabilizers of the hexagon realize these divisors of 6
        assert_eq!(image, vec![1, 2, 3, 6]);
    }

    #[test]
    fn dedekind_identity_on_interval() {
        // X = G_omega (X ∩ C) for every node when C is transitive
        let f20 = group(5, &["(1 2 3 4 5)", "(2 3 5 4)"]);
        let c5 = group(5, &["(1 2 3 4 5)"]);
        let l = build_interval(&f20, 1, BuildStrategy::ViaBlocks).unwrap();
        let stab = f20.point_stabilizer(1).unwrap();
        for x in l.nodes() {
            let xc = blocks::intersect_subgroups(x, &c5);
            let prod = blocks::product_set(&stab, &xc);
            assert_eq!(prod, x.elements());
        }
    }

    #[test]
    fn dot_is_deterministic() {
        let d8 = group(4, &["(1 2 3 4)", "(1 3)"]);
        let l = build_interval(&d8, 1, BuildStrategy::ViaBlocks).unwrap();
        let a = l.to_dot(|g| format!("G{}", g.order()));
        let b = l.to_dot(|g| format!("G{}", g.order()));
        assert_eq!(a, b);
        assert!(a.contains("digraph interval"));
    }
}
