//! Permutations in cycle notation and exhaustive enumeration of small
//! permutation groups.
//!
//! Points are 1-based in all text formats and public point arguments;
//! the internal image table is 0-based. The action convention is
//! left-to-right: `compose(p, q)` maps `x` to `q(p(x))`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

/// Default cap on exhaustive group enumeration.
pub const DEFAULT_ORDER_CAP: usize = 20_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("point {point} out of range 1..={degree} at position {pos}")]
    PointOutOfRange { point: usize, degree: usize, pos: usize },
    #[error("repeated point {point} at position {pos}")]
    RepeatedPoint { point: usize, pos: usize },
    #[error("malformed cycle notation at position {pos}: {msg}")]
    Malformed { pos: usize, msg: String },
    #[error("group order cap {cap} exceeded during closure")]
    CapExceeded { cap: usize },
    #[error("no generators")]
    NoGenerators,
    #[error("point {0} out of range 1..={1}")]
    BadPoint(usize, usize),
    #[error("group file line {line}: {source}")]
    InFile {
        line: usize,
        #[source]
        source: Box<PermError>,
    },
}

/// A bijection on {1..n}, stored 0-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Build from a 0-based image table. Checks bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        if images.is_empty() {
            return Err(PermError::ZeroDegree);
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            let im = im as usize;
            if im >= n {
                return Err(PermError::BadPoint(im + 1, n));
            }
            if seen[im] {
                return Err(PermError::RepeatedPoint { point: im + 1, pos: 0 });
            }
            seen[im] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// Image of a 1-based point.
    pub fn apply_point(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i as u32 == im)
    }

    /// Left-to-right composition: the result maps `x` to `q(p(x))`.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != q.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), q.degree()));
        }
        Ok(Permutation {
            images: self.images.iter().map(|&i| q.images[i as usize]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &im) in self.images.iter().enumerate() {
            inv[im as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn order(&self) -> usize {
        self.cycles_zero_based()
            .iter()
            .fold(1usize, |acc, c| num_integer::lcm(acc, c.len()))
    }

    /// Nontrivial cycles, 0-based, each rotated to start at its minimum,
    /// sorted by first point.
    fn cycles_zero_based(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }

    /// Orbits of the cyclic group generated by this permutation,
    /// singletons included, 1-based, sorted.
    pub fn orbit_partition(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start + 1];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                orbit.push(x + 1);
                x = self.apply(x);
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    /// Multiset of cycle lengths including fixed points, sorted.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.orbit_partition().iter().map(|o| o.len()).collect();
        t.sort_unstable();
        t
    }

    /// Cycle notation, 1-based. The identity prints as `()`.
    pub fn format_cycles(&self) -> String {
        let cycles = self.cycles_zero_based();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut out = String::new();
        for cycle in cycles {
            out.push('(');
            for (i, &x) in cycle.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                out.push_str(&(x + 1).to_string());
            }
            out.push(')');
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_cycles())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_cycles())
    }
}

/// Parse disjoint-cycle notation like `(1 2 3)(4 5)`.
///
/// Empty input and `()` both give the identity. Points may be separated
/// by spaces or commas. Positions in errors are 1-based byte offsets.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation, PermError> {
    if degree == 0 {
        return Err(PermError::ZeroDegree);
    }
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut used = vec![false; degree];
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c != b'(' {
            return Err(PermError::Malformed {
                pos: i + 1,
                msg: format!("expected '(' but found '{}'", c as char),
            });
        }
        i += 1;
        let mut cycle: Vec<usize> = Vec::new();
        loop {
            while i < bytes.len() && (bytes[i].is_ascii_whitespace() || bytes[i] == b',') {
                i += 1;
            }
            if i >= bytes.len() {
                return Err(PermError::Malformed {
                    pos: i + 1,
                    msg: "unterminated cycle".to_string(),
                });
            }
            if bytes[i] == b')' {
                i += 1;
                break;
            }
            if !bytes[i].is_ascii_digit() {
                return Err(PermError::Malformed {
                    pos: i + 1,
                    msg: format!("expected point or ')' but found '{}'", bytes[i] as char),
                });
            }
            let start = i;
            let mut point = 0usize;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                point = point * 10 + (bytes[i] - b'0') as usize;
                i += 1;
            }
            if point == 0 || point > degree {
                return Err(PermError::PointOutOfRange {
                    point,
                    degree,
                    pos: start + 1,
                });
            }
            if used[point - 1] {
                return Err(PermError::RepeatedPoint { point, pos: start + 1 });
            }
            used[point - 1] = true;
            cycle.push(point - 1);
        }
        for k in 0..cycle.len() {
            images[cycle[k]] = cycle[(k + 1) % cycle.len()] as u32;
        }
    }
    Ok(Permutation { images })
}

/// A degree plus a nonempty generator list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GroupSpec {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        if generators.is_empty() {
            return Err(PermError::NoGenerators);
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch(degree, g.degree()));
            }
        }
        Ok(GroupSpec { degree, generators })
    }

    /// Parse generators given in cycle notation.
    pub fn from_cycles(degree: usize, gens: &[&str]) -> Result<Self, PermError> {
        let generators = gens
            .iter()
            .map(|s| parse_cycles(s, degree))
            .collect::<Result<Vec<_>, _>>()?;
        GroupSpec::new(degree, generators)
    }
}

/// A fully enumerated permutation group: generators plus the sorted,
/// duplicate-free list of all elements.
#[derive(Clone, Debug)]
pub struct GroupTable {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

// Equality is by underlying subgroup, not by generating set.
impl PartialEq for GroupTable {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for GroupTable {}

impl std::hash::Hash for GroupTable {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.degree.hash(state);
        self.elements.hash(state);
    }
}

/// Enumerate the group generated by `spec` by breadth-first closure.
///
/// Fails cleanly with `CapExceeded` when the order grows past `cap`.
pub fn close(spec: &GroupSpec, cap: usize) -> Result<GroupTable, PermError> {
    let id = Permutation::identity(spec.degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue: VecDeque<Permutation> = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(p) = queue.pop_front() {
        for g in &spec.generators {
            let q = p.compose(g).expect("degrees checked by GroupSpec");
            if !seen.contains(&q) {
                if seen.len() >= cap {
                    return Err(PermError::CapExceeded { cap });
                }
                seen.insert(q.clone());
                queue.push_back(q);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort_unstable();
    Ok(GroupTable {
        degree: spec.degree,
        generators: spec.generators.clone(),
        elements,
    })
}

impl GroupTable {
    /// Wrap an already-closed element list as a group. The list is sorted
    /// and deduplicated; closure is the caller's responsibility.
    pub fn from_elements(degree: usize, mut elements: Vec<Permutation>) -> GroupTable {
        elements.sort_unstable();
        elements.dedup();
        let generators = elements.iter().filter(|p| !p.is_identity()).cloned().collect::<Vec<_>>();
        let generators = if generators.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            generators
        };
        GroupTable {
            degree,
            generators,
            elements,
        }
    }

    pub fn trivial(degree: usize) -> GroupTable {
        GroupTable::from_elements(degree, vec![Permutation::identity(degree)])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &GroupTable) -> bool {
        self.degree == other.degree && self.elements.iter().all(|p| other.contains(p))
    }

    /// Orbit partition of the group, singleton orbits included,
    /// 1-based, each orbit sorted, orbits sorted by minimum.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(&self.elements, self.degree)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    /// Stabilizer of the 1-based point `omega`.
    pub fn point_stabilizer(&self, omega: usize) -> Result<GroupTable, PermError> {
        if omega == 0 || omega > self.degree {
            return Err(PermError::BadPoint(omega, self.degree));
        }
        let elems: Vec<Permutation> = self
            .elements
            .iter()
            .filter(|p| p.apply(omega - 1) == omega - 1)
            .cloned()
            .collect();
        Ok(GroupTable::from_elements(self.degree, elems))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, g)| {
            self.generators[i + 1..]
                .iter()
                .all(|h| g.compose(h).unwrap() == h.compose(g).unwrap())
        })
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements.iter().any(|g| g.order() == self.order())
    }

    /// A generator of the whole group, when the group is cyclic.
    pub fn cyclic_generator(&self) -> Option<&Permutation> {
        self.elements.iter().find(|g| g.order() == self.order())
    }

    pub fn is_normal_in(&self, parent: &GroupTable) -> bool {
        parent.elements.iter().all(|g| {
            let gi = g.inverse();
            self.elements
                .iter()
                .all(|h| self.contains(&gi.compose(h).unwrap().compose(g).unwrap()))
        })
    }

    /// The right-regular representation: degree |G|, each generator acting
    /// on element indices by right multiplication.
    pub fn regular_representation(&self) -> GroupSpec {
        let index: HashMap<&Permutation, usize> =
            self.elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let generators = self
            .generators
            .iter()
            .map(|g| {
                let images = self
                    .elements
                    .iter()
                    .map(|e| index[&e.compose(g).unwrap()] as u32)
                    .collect();
                Permutation { images }
            })
            .collect();
        GroupSpec {
            degree: self.order(),
            generators,
        }
    }
}

/// Orbit partition of the group generated by `elements` on 1..=degree.
pub fn orbits_of(elements: &[Permutation], degree: usize) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..degree).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for p in elements {
        for x in 0..degree {
            let a = find(&mut parent, x);
            let b = find(&mut parent, p.apply(x));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut buckets: HashMap<usize, Vec<usize>> = HashMap::new();
    for x in 0..degree {
        let r = find(&mut parent, x);
        buckets.entry(r).or_default().push(x + 1);
    }
    let mut orbits: Vec<Vec<usize>> = buckets.into_values().collect();
    for o in &mut orbits {
        o.sort_unstable();
    }
    orbits.sort_by_key(|o| o[0]);
    orbits
}

/// Closure of a subgroup's elements together with extra elements, inside
/// an ambient group. All inputs must already lie in `ambient`.
pub fn generated_subgroup(
    ambient: &GroupTable,
    seeds: impl IntoIterator<Item = Permutation>,
) -> GroupTable {
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue: VecDeque<Permutation> = VecDeque::new();
    let id = Permutation::identity(ambient.degree());
    seen.insert(id.clone());
    queue.push_back(id);
    let gens: Vec<Permutation> = seeds.into_iter().collect();
    // closing under right multiplication by generators suffices in a finite group
    while let Some(p) = queue.pop_front() {
        for g in &gens {
            let q = p.compose(g).unwrap();
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    debug_assert!(seen.len() <= ambient.order());
    GroupTable::from_elements(ambient.degree(), seen.into_iter().collect())
}

/// Parse the group file format: line 1 is the degree, each later
/// nonempty non-`#` line is one generator in cycle notation.
pub fn parse_group_file(text: &str) -> Result<GroupSpec, PermError> {
    let mut degree: Option<usize> = None;
    let mut generators = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match degree {
            None => {
                let d: usize = line.parse().map_err(|_| PermError::InFile {
                    line: lineno + 1,
                    source: Box::new(PermError::Malformed {
                        pos: 1,
                        msg: format!("expected degree, found {line:?}"),
                    }),
                })?;
                if d == 0 {
                    return Err(PermError::InFile {
                        line: lineno + 1,
                        source: Box::new(PermError::ZeroDegree),
                    });
                }
                degree = Some(d);
            }
            Some(d) => {
                let p = parse_cycles(line, d).map_err(|e| PermError::InFile {
                    line: lineno + 1,
                    source: Box::new(e),
                })?;
                generators.push(p);
            }
        }
    }
    let degree = degree.ok_or(PermError::NoGenerators)?;
    GroupSpec::new(degree, generators)
}

/// Inverse of `parse_group_file`, whitespace-normalized.
pub fn format_group_file(spec: &GroupSpec) -> String {
    let mut out = format!("{}\n", spec.degree);
    for g in &spec.generators {
        out.push_str(&g.format_cycles());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, n: usize) -> Permutation {
        parse_cycles(s, n).unwrap()
    }

    #[test]
    fn parse_empty_is_identity() {
        assert!(parse_cycles("", 4).unwrap().is_identity());
        assert!(parse_cycles("()", 4).unwrap().is_identity());
    }

    #[test]
    fn parse_basic() {
        let p = perm("(1 2 3)(4 5)", 5);
        assert_eq!(p.apply_point(1), 2);
        assert_eq!(p.apply_point(2), 3);
        assert_eq!(p.apply_point(3), 1);
        assert_eq!(p.apply_point(4), 5);
        assert_eq!(p.apply_point(5), 4);
    }

    #[test]
    fn parse_out_of_range() {
        match parse_cycles("(1 2 10)", 5) {
            Err(PermError::PointOutOfRange { point: 10, .. }) => {}
            other => panic!("expected out-of-range error, got {other:?}"),
        }
    }

    #[test]
    fn parse_repeated_point() {
        assert!(matches!(
            parse_cycles("(1 2)(2 3)", 4),
            Err(PermError::RepeatedPoint { point: 2, .. })
        ));
    }

    #[test]
    fn parse_malformed() {
        assert!(matches!(parse_cycles("(1 2", 4), Err(PermError::Malformed { .. })));
        assert!(matches!(parse_cycles("1 2)", 4), Err(PermError::Malformed { .. })));
    }

    #[test]
    fn compose_left_to_right() {
        let id = Permutation::identity(3);
        let p = perm("(1 2 3)", 3);
        assert_eq!(id.compose(&p).unwrap(), p);
        let t = perm("(1 2)", 3);
        assert!(t.compose(&t).unwrap().is_identity());
        // (1 2 3) then (1 2) sends 1->2->1, 2->3->3, 3->1->2, i.e. (2 3)?
        // pointwise: 1 -> 2 -> 1; 2 -> 3 -> 3; 3 -> 1 -> 2. That is (2 3).
        assert_eq!(p.compose(&t).unwrap(), perm("(2 3)", 3));
        // and (1 2) then (1 2 3): 1->2->3, 2->1->2, 3->3->1, i.e. (1 3)
        assert_eq!(t.compose(&p).unwrap(), perm("(1 3)", 3));
    }

    #[test]
    fn close_small_groups() {
        let c5 = close(&GroupSpec::from_cycles(5, &["(1 2 3 4 5)"]).unwrap(), 100).unwrap();
        assert_eq!(c5.order(), 5);
        let a4 = close(
            &GroupSpec::from_cycles(4, &["(1 2 3)", "(1 2)(3 4)"]).unwrap(),
            100,
        )
        .unwrap();
        assert_eq!(a4.order(), 12);
        let a5 = close(
            &GroupSpec::from_cycles(5, &["(1 2 3 4 5)", "(1 2 3)"]).unwrap(),
            100,
        )
        .unwrap();
        assert_eq!(a5.order(), 60);
    }

    #[test]
    fn close_cap_exceeded() {
        let spec = GroupSpec::from_cycles(5, &["(1 2 3 4 5)", "(1 2 3)"]).unwrap();
        assert!(matches!(close(&spec, 10), Err(PermError::CapExceeded { cap: 10 })));
    }

    #[test]
    fn close_is_idempotent() {
        let spec = GroupSpec::from_cycles(4, &["(1 2 3 4)", "(1 3)"]).unwrap();
        let g = close(&spec, 100).unwrap();
        let again = close(
            &GroupSpec::new(4, g.elements().to_vec()).unwrap(),
            100,
        )
        .unwrap();
        assert_eq!(g.elements(), again.elements());
    }

    #[test]
    fn orbit_examples() {
        let h = perm("(1 2 3 4 5 6)(7 8 9)", 9);
        let orbits = orbits_of(&[h], 9);
        assert_eq!(orbits, vec![vec![1, 2, 3, 4, 5, 6], vec![7, 8, 9]]);
        let id = Permutation::identity(3);
        assert_eq!(orbits_of(&[id], 3).len(), 3);
        let a5 = close(
            &GroupSpec::from_cycles(5, &["(1 2 3 4 5)", "(1 2 3)"]).unwrap(),
            100,
        )
        .unwrap();
        assert_eq!(a5.orbits(), vec![vec![1, 2, 3, 4, 5]]);
    }

    #[test]
    fn stabilizer_examples() {
        let s4 = close(&GroupSpec::from_cycles(4, &["(1 2 3 4)", "(1 2)"]).unwrap(), 100).unwrap();
        let st = s4.point_stabilizer(1).unwrap();
        assert_eq!(st.order(), 6);
        // orbit-stabilizer
        assert_eq!(st.order() * 4, s4.order());
        let c5 = close(&GroupSpec::from_cycles(5, &["(1 2 3 4 5)"]).unwrap(), 100).unwrap();
        assert_eq!(c5.point_stabilizer(1).unwrap().order(), 1);
    }

    #[test]
    fn lagrange_and_orbit_stabilizer() {
        let groups = [
            close(&GroupSpec::from_cycles(4, &["(1 2 3 4)", "(1 3)"]).unwrap(), 100).unwrap(),
            close(&GroupSpec::from_cycles(4, &["(1 2 3)", "(1 2)(3 4)"]).unwrap(), 100).unwrap(),
            close(&GroupSpec::from_cycles(5, &["(1 2 3 4 5)", "(2 3 5 4)"]).unwrap(), 100).unwrap(),
        ];
        for g in &groups {
            for w in 1..=g.degree() {
                let st = g.point_stabilizer(w).unwrap();
                assert_eq!(g.order() % st.order(), 0);
                let orbit_len = g
                    .orbits()
                    .into_iter()
                    .find(|o| o.contains(&w))
                    .unwrap()
                    .len();
                assert_eq!(orbit_len * st.order(), g.order());
            }
        }
    }

    #[test]
    fn regular_representation_is_regular() {
        let a4 = close(&GroupSpec::from_cycles(4, &["(1 2 3)", "(1 2)(3 4)"]).unwrap(), 100).unwrap();
        let reg = close(&a4.regular_representation(), 100).unwrap();
        assert_eq!(reg.degree(), 12);
        assert_eq!(reg.order(), 12);
        assert!(reg.is_transitive());
        assert_eq!(reg.point_stabilizer(1).unwrap().order(), 1);
    }

    #[test]
    fn group_file_round_trip() {
        let text = "4\n# a comment\n(1 2 3 4)\n(1 3)\n";
        let spec = parse_group_file(text).unwrap();
        assert_eq!(spec.degree, 4);
        assert_eq!(spec.generators.len(), 2);
        let printed = format_group_file(&spec);
        let reparsed = parse_group_file(&printed).unwrap();
        assert_eq!(spec, reparsed);
    }

    #[test]
    fn group_file_errors() {
        assert!(matches!(parse_group_file(""), Err(PermError::NoGenerators)));
        assert!(matches!(parse_group_file("4\n"), Err(PermError::NoGenerators)));
        assert!(matches!(
            parse_group_file("3\n(1 5)\n"),
            Err(PermError::InFile { line: 2, .. })
        ));
    }

    #[test]
    fn format_parse_round_trip() {
        let p = perm("(1 2 3)(4 5)", 6);
        assert_eq!(parse_cycles(&p.format_cycles(), 6).unwrap(), p);
        assert_eq!(Permutation::identity(4).format_cycles(), "()");
    }
}
