//! Imprimitivity systems: G-invariant partitions of the permuted set,
//! their lattice, normality, core-complementary subgroups, and the
//! classification of systems under a cyclic subgroup with two orbits.

use std::collections::HashSet;

use thiserror::Error;

use crate::perm::{generated_subgroup, GroupTable, Permutation};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BlockError {
    #[error("group is not transitive")]
    NotTransitive,
    #[error("partition is not invariant under the group")]
    NotInvariant,
    #[error("point {0} out of range 1..={1}")]
    BadPoint(usize, usize),
    #[error("not a subgroup of the given parent group")]
    NotSubgroup,
    #[error("containment G_omega <= A <= G violated")]
    BadContainment,
    #[error("permutation does not have exactly two orbits (found {0})")]
    NotTwoOrbits(usize),
}

/// A G-invariant partition of {1..n} with equal-size blocks.
///
/// Block ids are assigned by smallest contained point, so equal systems
/// compare bit-exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockSystem {
    degree: usize,
    block_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl BlockSystem {
    /// Build from a union-find style map point -> class; renumbers blocks
    /// by smallest contained point and checks equal cardinality.
    fn from_classes(degree: usize, class_of: &[usize]) -> BlockSystem {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_index = vec![usize::MAX; degree];
        for x in 0..degree {
            let c = class_of[x];
            if block_index[c] == usize::MAX {
                block_index[c] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[block_index[c]].push(x + 1);
        }
        let block_of = (0..degree).map(|x| block_index[class_of[x]]).collect();
        BlockSystem {
            degree,
            block_of,
            blocks,
        }
    }

    /// The orbit partition of a subgroup, as a block system candidate.
    pub fn from_orbits(degree: usize, orbits: &[Vec<usize>]) -> BlockSystem {
        let mut class_of = vec![0usize; degree];
        for (i, orbit) in orbits.iter().enumerate() {
            for &p in orbit {
                class_of[p - 1] = i;
            }
        }
        BlockSystem::from_classes(degree, &class_of)
    }

    pub fn singletons(degree: usize) -> BlockSystem {
        BlockSystem::from_classes(degree, &(0..degree).collect::<Vec<_>>())
    }

    pub fn one_block(degree: usize) -> BlockSystem {
        BlockSystem::from_classes(degree, &vec![0; degree])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Common block size n_E. Equal-cardinality is guaranteed for systems
    /// of a transitive group.
    pub fn block_size(&self) -> usize {
        self.blocks[0].len()
    }

    /// Block id of a 1-based point.
    pub fn block_id_of(&self, point: usize) -> usize {
        self.block_of[point - 1]
    }

    /// The block through a 1-based point.
    pub fn block_through(&self, point: usize) -> &[usize] {
        &self.blocks[self.block_of[point - 1]]
    }

    /// A bijection preserves an equal-block-size partition iff points
    /// sharing a block land in a common block.
    pub fn is_invariant_under(&self, p: &Permutation) -> bool {
        (0..self.degree).all(|x| {
            let rep = self.blocks[self.block_of[x]][0] - 1;
            self.block_of[p.apply(x)] == self.block_of[p.apply(rep)]
        })
    }

    /// Refinement order: self <= other iff every block of self lies
    /// inside a block of other.
    pub fn refines(&self, other: &BlockSystem) -> bool {
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&p| other.block_id_of(p) == other.block_id_of(b[0])))
    }

    /// Partition join (finest common coarsening), computed by union-find.
    pub fn join(&self, other: &BlockSystem) -> BlockSystem {
        let n = self.degree;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for sys in [self, other] {
            for block in &sys.blocks {
                for &p in &block[1..] {
                    let a = find(&mut parent, block[0] - 1);
                    let b = find(&mut parent, p - 1);
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let class_of: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
        BlockSystem::from_classes(n, &class_of)
    }

    /// Partition meet (common refinement).
    pub fn meet(&self, other: &BlockSystem) -> BlockSystem {
        let n = self.degree;
        let mut key_to_class: std::collections::HashMap<(usize, usize), usize> =
            std::collections::HashMap::new();
        let mut class_of = vec![0usize; n];
        for x in 0..n {
            let key = (self.block_of[x], other.block_of[x]);
            let next = key_to_class.len();
            let c = *key_to_class.entry(key).or_insert(next);
            class_of[x] = c;
        }
        BlockSystem::from_classes(n, &class_of)
    }
}

fn check_invariant(g: &GroupTable, e: &BlockSystem) -> Result<(), BlockError> {
    if g.generators().iter().all(|p| e.is_invariant_under(p)) {
        Ok(())
    } else {
        Err(BlockError::NotInvariant)
    }
}

/// The finest block system of a transitive group in which `omega` and
/// `delta` share a block. `omega == delta` gives the singleton partition.
pub fn minimal_block_system(
    g: &GroupTable,
    omega: usize,
    delta: usize,
) -> Result<BlockSystem, BlockError> {
    let n = g.degree();
    if omega == 0 || omega > n {
        return Err(BlockError::BadPoint(omega, n));
    }
    if delta == 0 || delta > n {
        return Err(BlockError::BadPoint(delta, n));
    }
    if !g.is_transitive() {
        return Err(BlockError::NotTransitive);
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    fn union(parent: &mut Vec<usize>, a: usize, b: usize) -> bool {
        let ra = find(parent, a);
        let rb = find(parent, b);
        if ra == rb {
            return false;
        }
        parent[ra.max(rb)] = ra.min(rb);
        true
    }
    // standard minimal-block refinement: merge, then propagate under generators
    let mut stack = Vec::new();
    if union(&mut parent, omega - 1, delta - 1) {
        stack.push((omega - 1, delta - 1));
    }
    while let Some((a, b)) = stack.pop() {
        for gen in g.generators() {
            let (ia, ib) = (gen.apply(a), gen.apply(b));
            if union(&mut parent, ia, ib) {
                stack.push((ia, ib));
            }
        }
    }
    let class_of: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
    Ok(BlockSystem::from_classes(n, &class_of))
}

/// The full lattice E(G): join-closure of the minimal systems through
/// `omega`, plus the singleton and one-block systems. Deterministic order:
/// by (block size, blocks).
pub fn all_block_systems(g: &GroupTable, omega: usize) -> Result<Vec<BlockSystem>, BlockError> {
    if !g.is_transitive() {
        return Err(BlockError::NotTransitive);
    }
    let n = g.degree();
    if omega == 0 || omega > n {
        return Err(BlockError::BadPoint(omega, n));
    }
    let mut systems: HashSet<BlockSystem> = HashSet::new();
    systems.insert(BlockSystem::singletons(n));
    systems.insert(BlockSystem::one_block(n));
    for delta in 1..=n {
        systems.insert(minimal_block_system(g, omega, delta)?);
    }
    loop {
        let snapshot: Vec<BlockSystem> = systems.iter().cloned().collect();
        let mut grew = false;
        for i in 0..snapshot.len() {
            for j in (i + 1)..snapshot.len() {
                let joined = snapshot[i].join(&snapshot[j]);
                if systems.insert(joined) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let mut out: Vec<BlockSystem> = systems.into_iter().collect();
    out.sort_by(|a, b| {
        a.block_size()
            .cmp(&b.block_size())
            .then_with(|| a.blocks.cmp(&b.blocks))
    });
    Ok(out)
}

/// Setwise stabilizer of the block through `omega`.
pub fn block_stabilizer(
    g: &GroupTable,
    e: &BlockSystem,
    omega: usize,
) -> Result<GroupTable, BlockError> {
    check_invariant(g, e)?;
    if omega == 0 || omega > g.degree() {
        return Err(BlockError::BadPoint(omega, g.degree()));
    }
    let target = e.block_id_of(omega);
    let elems: Vec<Permutation> = g
        .elements()
        .iter()
        .filter(|p| e.block_id_of(p.apply(omega - 1) + 1) == target)
        .cloned()
        .collect();
    Ok(GroupTable::from_elements(g.degree(), elems))
}

/// The normal subgroup fixing every block of `e` setwise.
pub fn kernel_on_blocks(g: &GroupTable, e: &BlockSystem) -> Result<GroupTable, BlockError> {
    check_invariant(g, e)?;
    let elems: Vec<Permutation> = g
        .elements()
        .iter()
        .filter(|p| (0..g.degree()).all(|x| e.block_of[p.apply(x)] == e.block_of[x]))
        .cloned()
        .collect();
    Ok(GroupTable::from_elements(g.degree(), elems))
}

/// Largest normal subgroup of `g` inside `a`: the intersection of the
/// conjugates of `a`.
pub fn core(g: &GroupTable, a: &GroupTable) -> Result<GroupTable, BlockError> {
    if !a.is_subgroup_of(g) {
        return Err(BlockError::NotSubgroup);
    }
    let mut current: Vec<Permutation> = a.elements().to_vec();
    for conj in g.elements() {
        let ci = conj.inverse();
        current.retain(|h| {
            a.contains(&conj.compose(h).unwrap().compose(&ci).unwrap())
        });
        if current.len() == 1 {
            break;
        }
    }
    Ok(GroupTable::from_elements(g.degree(), current))
}

/// Product set A·B of two subgroups (not necessarily a group).
pub fn product_set(a: &GroupTable, b: &GroupTable) -> Vec<Permutation> {
    let mut out: HashSet<Permutation> = HashSet::new();
    for x in a.elements() {
        for y in b.elements() {
            out.insert(x.compose(y).unwrap());
        }
    }
    let mut v: Vec<Permutation> = out.into_iter().collect();
    v.sort_unstable();
    v
}

/// True iff A equals the product set G_omega · core_G(A).
pub fn is_core_complementary(
    g: &GroupTable,
    omega: usize,
    a: &GroupTable,
) -> Result<bool, BlockError> {
    if omega == 0 || omega > g.degree() {
        return Err(BlockError::BadPoint(omega, g.degree()));
    }
    let stab = g.point_stabilizer(omega).map_err(|_| BlockError::BadPoint(omega, g.degree()))?;
    if !stab.is_subgroup_of(a) || !a.is_subgroup_of(g) {
        return Err(BlockError::BadContainment);
    }
    let c = core(g, a)?;
    let prod = product_set(&stab, &c);
    Ok(prod == a.elements())
}

/// True iff the blocks of `e` are exactly the orbits of its kernel.
pub fn is_normal_system(g: &GroupTable, e: &BlockSystem) -> Result<bool, BlockError> {
    let kernel = kernel_on_blocks(g, e)?;
    let orbit_sys = BlockSystem::from_orbits(g.degree(), &kernel.orbits());
    Ok(orbit_sys == *e)
}

/// Classification of a block system under the cyclic group generated by a
/// two-orbit permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HClassification {
    /// The cyclic group permutes the blocks in a single orbit; `d` is the
    /// number of blocks.
    Transitive { d: usize },
    /// Each block lies in one point orbit; `d1`, `d2` count the blocks in
    /// each orbit, and n1/d1 = n2/d2 = block size.
    Intransitive { d1: usize, d2: usize },
}

/// Classify `e` as H-transitive or H-intransitive for H = <h>, where `h`
/// has exactly two orbits.
pub fn classify_h(h: &Permutation, e: &BlockSystem) -> Result<HClassification, BlockError> {
    let orbits = h.orbit_partition();
    if orbits.len() != 2 {
        return Err(BlockError::NotTwoOrbits(orbits.len()));
    }
    if !e.is_invariant_under(h) {
        return Err(BlockError::NotInvariant);
    }
    let (n1, n2) = (orbits[0].len(), orbits[1].len());
    // orbit partition of <h> acting on block ids
    let k = e.block_count();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for b in 0..k {
        let image = e.block_id_of(h.apply(e.blocks[b][0] - 1) + 1);
        let (ra, rb) = (find(&mut parent, b), find(&mut parent, image));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let reps: HashSet<usize> = (0..k).map(|b| find(&mut parent, b)).collect();
    if reps.len() == 1 {
        Ok(HClassification::Transitive { d: k })
    } else {
        debug_assert_eq!(reps.len(), 2);
        // blocks inside the first point orbit vs the second
        let in_first = |b: &Vec<usize>| orbits[0].contains(&b[0]);
        let d1 = e.blocks.iter().filter(|b| in_first(b)).count();
        let d2 = k - d1;
        let ne = e.block_size();
        debug_assert!(d1 > 0 && d2 > 0);
        if n1 / d1 != ne || n1 % d1 != 0 || n2 / d2 != ne || n2 % d2 != 0 {
            return Err(BlockError::NotInvariant);
        }
        Ok(HClassification::Intransitive { d1, d2 })
    }
}

/// Subgroup generated inside an ambient group by the union of two
/// subgroups' elements.
pub fn join_subgroups(ambient: &GroupTable, a: &GroupTable, b: &GroupTable) -> GroupTable {
    let seeds = a.elements().iter().chain(b.elements()).cloned();
    generated_subgroup(ambient, seeds)
}

/// Intersection of two subgroups of a common ambient group.
pub fn intersect_subgroups(a: &GroupTable, b: &GroupTable) -> GroupTable {
    let elems: Vec<Permutation> = a
        .elements()
        .iter()
        .filter(|p| b.contains(p))
        .cloned()
        .collect();
    GroupTable::from_elements(a.degree(), elems)
}
