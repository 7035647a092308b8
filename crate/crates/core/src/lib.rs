//! Interval subgroup lattices of transitive permutation groups, block
//! systems, chain equivalence, and exact rational-function decomposition
//! checks.

pub mod blocks;
pub mod chains;
pub mod interval;
pub mod jh;
pub mod lattice;
pub mod perm;
pub mod props;
pub mod ratfunc;
