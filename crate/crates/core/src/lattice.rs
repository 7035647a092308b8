//! Finite lattices given by an explicit order relation: cover edges,
//! meet/join tables, the (lower) semimodularity predicates, and a
//! backtracking isomorphism test for small lattices.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("empty lattice")]
    Empty,
    #[error("order relation is not a partial order")]
    NotPartialOrder,
    #[error("elements {0} and {1} have no unique meet")]
    NoMeet(usize, usize),
    #[error("elements {0} and {1} have no unique join")]
    NoJoin(usize, usize),
    #[error("node index {0} out of range")]
    BadNode(usize),
}

/// A finite lattice on nodes 0..n with precomputed structure.
#[derive(Clone, Debug)]
pub struct Lattice {
    n: usize,
    leq: Vec<bool>,
    covers: Vec<(usize, usize)>,
    cover_matrix: Vec<bool>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    meet_table: Vec<usize>,
    join_table: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl Lattice {
    /// Build from an order predicate. Fails if the relation is not a
    /// partial order or some pair lacks a meet or join.
    pub fn from_leq(n: usize, leq_fn: impl Fn(usize, usize) -> bool) -> Result<Lattice, LatticeError> {
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = leq_fn(i, j);
            }
        }
        for i in 0..n {
            if !leq[i * n + i] {
                return Err(LatticeError::NotPartialOrder);
            }
            for j in 0..n {
                if i != j && leq[i * n + j] && leq[j * n + i] {
                    return Err(LatticeError::NotPartialOrder);
                }
                for k in 0..n {
                    if leq[i * n + j] && leq[j * n + k] && !leq[i * n + k] {
                        return Err(LatticeError::NotPartialOrder);
                    }
                }
            }
        }
        let le = |i: usize, j: usize| leq[i * n + j];
        let mut meet_table = vec![0usize; n * n];
        let mut join_table = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                // meet: unique maximal common lower bound
                let lowers: Vec<usize> = (0..n).filter(|&k| le(k, i) && le(k, j)).collect();
                let maximal: Vec<usize> = lowers
                    .iter()
                    .copied()
                    .filter(|&k| lowers.iter().all(|&l| !le(k, l) || k == l))
                    .collect();
                if maximal.len() != 1 {
                    return Err(LatticeError::NoMeet(i, j));
                }
                meet_table[i * n + j] = maximal[0];
                let uppers: Vec<usize> = (0..n).filter(|&k| le(i, k) && le(j, k)).collect();
                let minimal: Vec<usize> = uppers
                    .iter()
                    .copied()
                    .filter(|&k| uppers.iter().all(|&l| !le(l, k) || k == l))
                    .collect();
                if minimal.len() != 1 {
                    return Err(LatticeError::NoJoin(i, j));
                }
                join_table[i * n + j] = minimal[0];
            }
        }
        let bottom = (0..n)
            .find(|&b| (0..n).all(|j| le(b, j)))
            .ok_or(LatticeError::NoMeet(0, 0))?;
        let top = (0..n)
            .find(|&t| (0..n).all(|j| le(j, t)))
            .ok_or(LatticeError::NoJoin(0, 0))?;
        // transitive reduction
        let mut covers = Vec::new();
        let mut cover_matrix = vec![false; n * n];
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for a in 0..n {
            for b in 0..n {
                if a != b
                    && le(a, b)
                    && !(0..n).any(|c| c != a && c != b && le(a, c) && le(c, b))
                {
                    covers.push((a, b));
                    cover_matrix[a * n + b] = true;
                    up[a].push(b);
                    down[b].push(a);
                }
            }
        }
        Ok(Lattice {
            n,
            leq,
            covers,
            cover_matrix,
            up,
            down,
            meet_table,
            join_table,
            bottom,
            top,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    /// a <. b (b covers a).
    #[inline]
    pub fn covers(&self, a: usize, b: usize) -> bool {
        self.cover_matrix[a * self.n + b]
    }

    pub fn cover_pairs(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Cover successors of a node.
    pub fn upper_covers(&self, a: usize) -> &[usize] {
        &self.up[a]
    }

    pub fn lower_covers(&self, a: usize) -> &[usize] {
        &self.down[a]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet_table[a * self.n + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join_table[a * self.n + b]
    }

    /// Length of a longest chain from bottom to the node.
    pub fn height(&self, node: usize) -> usize {
        // nodes in a lattice from from_leq are unordered; memoized DFS
        fn rec(l: &Lattice, node: usize, memo: &mut [Option<usize>]) -> usize {
            if let Some(h) = memo[node] {
                return h;
            }
            let h = l.down[node]
                .iter()
                .map(|&d| rec(l, d, memo) + 1)
                .max()
                .unwrap_or(0);
            memo[node] = Some(h);
            h
        }
        let mut memo = vec![None; self.n];
        rec(self, node, &mut memo)
    }

    /// Covering condition: whenever a∧b <. a and a∧b <. b, also
    /// a <. a∨b and b <. a∨b.
    pub fn is_semimodular(&self) -> bool {
        for a in 0..self.n {
            for b in 0..self.n {
                let m = self.meet(a, b);
                if self.covers(m, a) && self.covers(m, b) {
                    let j = self.join(a, b);
                    if !(self.covers(a, j) && self.covers(b, j)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Dual covering condition: whenever a <. a∨b and b <. a∨b, also
    /// a∧b <. a and a∧b <. b.
    pub fn is_lower_semimodular(&self) -> bool {
        for a in 0..self.n {
            for b in 0..self.n {
                let j = self.join(a, b);
                if self.covers(a, j) && self.covers(b, j) {
                    let m = self.meet(a, b);
                    if !(self.covers(m, a) && self.covers(m, b)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_modular(&self) -> bool {
        self.is_semimodular() && self.is_lower_semimodular()
    }

    /// Lattice isomorphism by backtracking on the cover digraph, with
    /// (height, up-degree, down-degree) pruning. Intended for small
    /// instances only.
    pub fn isomorphic_to(&self, other: &Lattice) -> bool {
        if self.n != other.n || self.covers.len() != other.covers.len() {
            return false;
        }
        let sig = |l: &Lattice, v: usize| (l.height(v), l.up[v].len(), l.down[v].len());
        let mut sig_a: Vec<_> = (0..self.n).map(|v| sig(self, v)).collect();
        let mut sig_b: Vec<_> = (0..other.n).map(|v| sig(other, v)).collect();
        {
            let mut sa = sig_a.clone();
            let mut sb = sig_b.clone();
            sa.sort_unstable();
            sb.sort_unstable();
            if sa != sb {
                return false;
            }
        }
        // order nodes of self by ascending candidate count
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| sig_b.iter().filter(|&&s| s == sig_a[v]).count());
        let mut mapping = vec![usize::MAX; self.n];
        let mut used = vec![false; other.n];
        fn consistent(a: &Lattice, b: &Lattice, mapping: &[usize], v: usize, w: usize) -> bool {
            for u in 0..a.n {
                let x = mapping[u];
                if x == usize::MAX {
                    continue;
                }
                if a.covers(v, u) != b.covers(w, x) || a.covers(u, v) != b.covers(x, w) {
                    return false;
                }
                if a.leq(v, u) != b.leq(w, x) || a.leq(u, v) != b.leq(x, w) {
                    return false;
                }
            }
            true
        }
        fn backtrack(
            a: &Lattice,
            b: &Lattice,
            order: &[usize],
            pos: usize,
            sig_a: &[(usize, usize, usize)],
            sig_b: &[(usize, usize, usize)],
            mapping: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            if pos == order.len() {
                return true;
            }
            let v = order[pos];
            for w in 0..b.n {
                if used[w] || sig_b[w] != sig_a[v] {
                    continue;
                }
                if !consistent(a, b, mapping, v, w) {
                    continue;
                }
                mapping[v] = w;
                used[w] = true;
                if backtrack(a, b, order, pos + 1, sig_a, sig_b, mapping, used) {
                    return true;
                }
                mapping[v] = usize::MAX;
                used[w] = false;
            }
            false
        }
        let _ = (&mut sig_a, &mut sig_b);
        backtrack(self, other, &order, 0, &sig_a, &sig_b, &mut mapping, &mut used)
    }
}

/// The lattice of divisors of n under divisibility; meet is gcd and join
/// is lcm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorLattice {
    n: usize,
    divisors: Vec<usize>,
}

impl DivisorLattice {
    pub fn new(n: usize) -> DivisorLattice {
        assert!(n >= 1, "divisor lattice needs n >= 1");
        let mut divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
        divisors.sort_unstable();
        DivisorLattice { n, divisors }
    }

    pub fn modulus(&self) -> usize {
        self.n
    }

    pub fn divisors(&self) -> &[usize] {
        &self.divisors
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        num_integer::gcd(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        num_integer::lcm(a, b)
    }

    pub fn contains(&self, d: usize) -> bool {
        self.divisors.binary_search(&d).is_ok()
    }

    /// The same object as an abstract lattice.
    pub fn to_lattice(&self) -> Lattice {
        let ds = &self.divisors;
        Lattice::from_leq(ds.len(), |i, j| ds[j] % ds[i] == 0).expect("divisibility is a lattice")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_lattice_basics() {
        let l = DivisorLattice::new(12);
        assert_eq!(l.divisors(), &[1, 2, 3, 4, 6, 12]);
        assert_eq!(DivisorLattice::new(1).divisors(), &[1]);
        let l30 = DivisorLattice::new(30);
        assert_eq!(l30.divisors().len(), 8);
        assert_eq!(l30.meet(6, 10), 2);
        assert_eq!(l30.join(6, 10), 30);
    }

    #[test]
    fn divisor_lattice_is_modular() {
        for n in [12, 30, 60] {
            let l = DivisorLattice::new(n).to_lattice();
            assert!(l.is_modular(), "L_{n} should be modular");
        }
    }

    #[test]
    fn pentagon_is_neither() {
        // N5: bottom 0, top 4, chain 0<1<3<4 and 0<2<4
        let pairs = [
            (0, 1),
            (1, 3),
            (3, 4),
            (0, 2),
            (2, 4),
        ];
        let mut leq = vec![[false; 5]; 5];
        for i in 0..5 {
            leq[i][i] = true;
        }
        for &(a, b) in &pairs {
            leq[a][b] = true;
        }
        // transitive closure
        for k in 0..5 {
            for i in 0..5 {
                for j in 0..5 {
                    if leq[i][k] && leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
        let l = Lattice::from_leq(5, |i, j| leq[i][j]).unwrap();
        assert!(!l.is_modular());
        assert!(!l.is_semimodular());
        assert!(!l.is_lower_semimodular());
    }

    #[test]
    fn chain_covers() {
        let l = Lattice::from_leq(4, |i, j| i <= j).unwrap();
        assert_eq!(l.cover_pairs(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 3);
        assert_eq!(l.height(3), 3);
        assert!(l.is_modular());
    }

    #[test]
    fn isomorphism_divisor_lattices() {
        let a = DivisorLattice::new(6).to_lattice();
        let b = DivisorLattice::new(15).to_lattice();
        let c = DivisorLattice::new(4).to_lattice();
        assert!(a.isomorphic_to(&b));
        assert!(!a.isomorphic_to(&c));
    }
}
