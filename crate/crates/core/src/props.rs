//! Permutability, the index inequality, dihedral recognition and the
//! dihedral-interval witnesses produced when modularity fails.

use thiserror::Error;

use crate::blocks;
use crate::interval::{enumerate_between, IntervalLattice};
use crate::jh::coset_action;
use crate::lattice::Lattice;
use crate::perm::{close, GroupSpec, GroupTable, Permutation};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PropsError {
    #[error("degree mismatch between subgroups")]
    DegreeMismatch,
    #[error("not a subgroup of the given parent group")]
    NotSubgroup,
    #[error("inputs are permutable; a non-permutable pair is required")]
    Permutable,
    #[error("normal-subgroup check failed where normality was implied")]
    NotNormal,
    #[error("quotient is not dihedral")]
    NotDihedral,
    #[error("interval is not isomorphic to the dihedral subgroup lattice")]
    LatticeMismatch,
    #[error("<E,F> does not equal the ambient group")]
    JoinNotFull,
    #[error("ambient group has no cyclic subgroup with two orbits")]
    NoTwoOrbitCyclic,
}

/// AB = BA as sets.
pub fn are_permutable(a: &GroupTable, b: &GroupTable) -> Result<bool, PropsError> {
    if a.degree() != b.degree() {
        return Err(PropsError::DegreeMismatch);
    }
    let ab = blocks::product_set(a, b);
    let ba = blocks::product_set(b, a);
    Ok(ab == ba)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexInequality {
    /// [<A,B> : B]
    pub lhs: usize,
    /// [A : A ∩ B]
    pub rhs: usize,
    pub equality: bool,
    pub permutable: bool,
}

/// The index inequality [<A,B>:B] >= [A:A∩B], with equality exactly for
/// permutable pairs.
pub fn index_inequality_check(
    ambient: &GroupTable,
    a: &GroupTable,
    b: &GroupTable,
) -> Result<IndexInequality, PropsError> {
    if !a.is_subgroup_of(ambient) || !b.is_subgroup_of(ambient) {
        return Err(PropsError::NotSubgroup);
    }
    let join = blocks::join_subgroups(ambient, a, b);
    let meet = blocks::intersect_subgroups(a, b);
    let lhs = join.order() / b.order();
    let rhs = a.order() / meet.order();
    let permutable = are_permutable(a, b)?;
    assert!(lhs >= rhs, "index inequality violated");
    let equality = lhs == rhs;
    assert_eq!(equality, permutable, "equality must characterize permutability");
    Ok(IndexInequality {
        lhs,
        rhs,
        equality,
        permutable,
    })
}

/// Dihedral recognition: returns m when |H| = 2m and H is generated by a
/// rotation of order m together with an inverting involution. By
/// convention C2 counts as D_2 (m = 1) and V4 as D_4 (m = 2).
pub fn is_dihedral(h: &GroupTable) -> Option<usize> {
    dihedral_generators(h).map(|(m, _, _)| m)
}

/// Like `is_dihedral` but also returns the witnessing rotation and
/// reflection.
pub fn dihedral_generators(h: &GroupTable) -> Option<(usize, Permutation, Permutation)> {
    let order = h.order();
    if order < 2 || order % 2 != 0 {
        return None;
    }
    let m = order / 2;
    for r in h.elements() {
        if r.order() != m {
            continue;
        }
        let r_group: Vec<Permutation> = {
            let mut v = Vec::with_capacity(m);
            let mut cur = Permutation::identity(h.degree());
            for _ in 0..m {
                v.push(cur.clone());
                cur = cur.compose(r).unwrap();
            }
            v.sort_unstable();
            v
        };
        let r_inv = r.inverse();
        for s in h.elements() {
            if s.order() > 2 || r_group.binary_search(s).is_ok() {
                continue;
            }
            // s r s = r^{-1} with s an involution
            if s.compose(r).unwrap().compose(s).unwrap() == r_inv {
                return Some((m, r.clone(), s.clone()));
            }
        }
    }
    None
}

/// A reference copy of the dihedral group of order 2m as a permutation
/// group, used for subgroup-lattice comparisons.
pub fn dihedral_group(m: usize) -> GroupTable {
    let spec = match m {
        0 => panic!("dihedral group needs m >= 1"),
        1 => GroupSpec::from_cycles(2, &["(1 2)"]).unwrap(),
        2 => GroupSpec::from_cycles(4, &["(1 2)(3 4)", "(1 3)(2 4)"]).unwrap(),
        _ => {
            let rot: Vec<String> = (1..=m).map(|i| i.to_string()).collect();
            let r = format!("({})", rot.join(" "));
            let mut pairs = String::new();
            for i in 1..=(m / 2) {
                let j = m + 1 - i;
                if i != j {
                    pairs.push_str(&format!("({i} {j})"));
                }
            }
            GroupSpec::from_cycles(m, &[&r, &pairs]).unwrap()
        }
    };
    close(&spec, 4 * m + 16).unwrap()
}

/// Subgroup lattice of a whole group as an abstract lattice.
pub fn subgroup_lattice(g: &GroupTable) -> Lattice {
    let subs = enumerate_between(g, &GroupTable::trivial(g.degree()));
    Lattice::from_leq(subs.len(), |i, j| subs[i].is_subgroup_of(&subs[j]))
        .expect("subgroup poset is a lattice")
}

/// Witness that an interval of a subgroup lattice is dihedral.
#[derive(Clone, Debug)]
pub struct DihedralWitness {
    pub m: usize,
    /// The normal subgroup E ∩ F (or the lifted intersection) of <E,F>.
    pub normal_subgroup: GroupTable,
    /// Faithful image of <E,F> acting on the cosets of the normal subgroup.
    pub quotient: GroupTable,
    pub rotation: Permutation,
    pub reflection: Permutation,
}

/// When [E:E∩F] = [F:E∩F] = 2: checks E∩F is normal in <E,F>, the
/// quotient is dihedral of order 2m, and the interval between E∩F and
/// <E,F> is lattice-isomorphic to the subgroup lattice of D_2m.
/// Returns `Ok(None)` when the index hypothesis fails.
pub fn dihedral_quotient_check(
    ambient: &GroupTable,
    e: &GroupTable,
    f: &GroupTable,
) -> Result<Option<DihedralWitness>, PropsError> {
    if !e.is_subgroup_of(ambient) || !f.is_subgroup_of(ambient) {
        return Err(PropsError::NotSubgroup);
    }
    let meet = blocks::intersect_subgroups(e, f);
    if e.order() != 2 * meet.order() || f.order() != 2 * meet.order() {
        return Ok(None);
    }
    let join = blocks::join_subgroups(ambient, e, f);
    if !meet.is_normal_in(&join) {
        return Err(PropsError::NotNormal);
    }
    let m = join.order() / meet.order() / 2;
    let action = coset_action(&join, &meet).expect("meet is a subgroup of join");
    let quotient = action.image.clone();
    let (found_m, rotation, reflection) =
        dihedral_generators(&quotient).ok_or(PropsError::NotDihedral)?;
    if found_m != m {
        return Err(PropsError::NotDihedral);
    }
    // interval L(E∩F, <E,F>) must match L(D_2m)
    let between = enumerate_between(&join, &meet);
    let interval =
        Lattice::from_leq(between.len(), |i, j| between[i].is_subgroup_of(&between[j]))
            .expect("subgroup interval is a lattice");
    let reference = subgroup_lattice(&dihedral_group(m));
    if !interval.isomorphic_to(&reference) {
        return Err(PropsError::LatticeMismatch);
    }
    Ok(Some(DihedralWitness {
        m,
        normal_subgroup: meet,
        quotient,
        rotation,
        reflection,
    }))
}

/// The induction of the non-permutable lifting argument: replace (A, B)
/// by (A·core_G(B), B·core_G(A)) until stable. The fixed point is a
/// non-permutable pair with equal cores extending the inputs.
pub fn lift_nonpermutable(
    g: &GroupTable,
    a: &GroupTable,
    b: &GroupTable,
) -> Result<(GroupTable, GroupTable), PropsError> {
    if !a.is_subgroup_of(g) || !b.is_subgroup_of(g) {
        return Err(PropsError::NotSubgroup);
    }
    if are_permutable(a, b)? {
        return Err(PropsError::Permutable);
    }
    let mut cur_a = a.clone();
    let mut cur_b = b.clone();
    loop {
        let core_a = blocks::core(g, &cur_a).map_err(|_| PropsError::NotSubgroup)?;
        let core_b = blocks::core(g, &cur_b).map_err(|_| PropsError::NotSubgroup)?;
        let next_a = blocks::join_subgroups(g, &cur_a, &core_b);
        let next_b = blocks::join_subgroups(g, &cur_b, &core_a);
        if next_a.order() == cur_a.order() && next_b.order() == cur_b.order() {
            debug_assert_eq!(
                blocks::core(g, &cur_a).unwrap(),
                blocks::core(g, &cur_b).unwrap()
            );
            assert!(!are_permutable(&cur_a, &cur_b)?, "lift lost non-permutability");
            return Ok((cur_a, cur_b));
        }
        cur_a = next_a;
        cur_b = next_b;
    }
}

/// Dihedral-quotient witness for a non-permutable pair generating the
/// whole group, in a group with a two-orbit cyclic subgroup: lift the
/// pair to equal cores, then apply the index-2 dihedral construction.
pub fn gru0_witness(
    g: &GroupTable,
    e: &GroupTable,
    f: &GroupTable,
) -> Result<DihedralWitness, PropsError> {
    if two_orbit_cyclic_element(g).is_none() && transitive_cyclic_element(g).is_none() {
        return Err(PropsError::NoTwoOrbitCyclic);
    }
    if are_permutable(e, f)? {
        return Err(PropsError::Permutable);
    }
    if blocks::join_subgroups(g, e, f).order() != g.order() {
        return Err(PropsError::JoinNotFull);
    }
    let (le, lf) = lift_nonpermutable(g, e, f)?;
    let meet_ef = blocks::intersect_subgroups(e, f);
    let witness = dihedral_quotient_check(g, &le, &lf)?.ok_or(PropsError::NotDihedral)?;
    assert!(
        meet_ef.is_subgroup_of(&witness.normal_subgroup),
        "E∩F must lie in the witness kernel"
    );
    Ok(witness)
}

/// An element whose cyclic group has exactly two orbits, if any.
pub fn two_orbit_cyclic_element(g: &GroupTable) -> Option<&Permutation> {
    g.elements().iter().find(|p| p.orbit_partition().len() == 2)
}

/// An element generating a transitive cyclic subgroup, if any.
pub fn transitive_cyclic_element(g: &GroupTable) -> Option<&Permutation> {
    g.elements()
        .iter()
        .find(|p| p.orbit_partition().len() == 1)
}

/// Search an interval lattice for a dihedral witness: a non-permutable
/// pair of nodes whose meet is covered by both. Ties are broken toward
/// the smallest kernel, then lexicographic node order.
pub fn find_dihedral_interval(
    interval: &IntervalLattice,
) -> Result<Option<(usize, usize, DihedralWitness)>, PropsError> {
    let lat = interval.lattice();
    let mut best: Option<(usize, usize, DihedralWitness)> = None;
    for a in 0..interval.len() {
        for b in (a + 1)..interval.len() {
            let m = lat.meet(a, b);
            if !(lat.covers(m, a) && lat.covers(m, b)) {
                continue;
            }
            if are_permutable(interval.node(a), interval.node(b))? {
                continue;
            }
            let witness =
                dihedral_quotient_check(interval.group(), interval.node(a), interval.node(b))?
                    .ok_or(PropsError::NotDihedral)?;
            let better = match &best {
                None => true,
                Some((ba, bb, bw)) => {
                    let key = (witness.normal_subgroup.order(), a, b);
                    let bkey = (bw.normal_subgroup.order(), *ba, *bb);
                    key < bkey
                }
            };
            if better {
                best = Some((a, b, witness));
            }
        }
    }
    Ok(best)
}

/// Short structure tag for labeling lattice nodes.
pub fn structure_tag(g: &GroupTable) -> String {
    let n = g.order();
    if n == 1 {
        return "1".to_string();
    }
    if g.is_cyclic() {
        return format!("C{n}");
    }
    if let Some(m) = is_dihedral(g) {
        return if 2 * m == 4 { "V4".to_string() } else { format!("D{}", 2 * m) };
    }
    let involutions = g.elements().iter().filter(|p| p.order() == 2).count();
    if g.is_abelian() {
        let exponent = g.elements().iter().map(|p| p.order()).max().unwrap();
        if exponent == 2 {
            return format!("E{n}");
        }
        return format!("C{}xC{}", exponent, n / exponent);
    }
    match (n, involutions) {
        (8, 1) => "Q8".to_string(),
        (12, 3) => "A4".to_string(),
        (24, 9) => "S4".to_string(),
        (24, 1) => "SL(2,3)".to_string(),
        (60, 15) => "A5".to_string(),
        _ => format!("G{n}"),
    }
}
