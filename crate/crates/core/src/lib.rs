//! Exact-arithmetic library for permutation and D-permutation statistics,
//! their bijections to labelled lattice paths (with Laguerre-digraph
//! histories and cycle-closer counting), and S/J/T continued-fraction
//! machinery over sparse multivariate polynomials, verified by brute-force
//! polynomial equality at small sizes.
//!
//! Module map:
//!
//! - [`perm`] — permutations, D-permutations and subclasses, cycle
//!   structure, Laguerre digraphs;
//! - [`stats`] — record/cycle classifications, crossings and nestings
//!   (index-refined and primed), pseudo-nestings;
//! - [`poly`] — sparse multivariate polynomials over big integers and
//!   truncated power series;
//! - [`paths`] — Dyck/Motzkin/Schröder/almost-Dyck paths, the ψ
//!   transform, path and labelled-path enumeration;
//! - [`bijections`] — the Foata–Zeilberger and the two Deb–Sokal
//!   bijections with insertion histories;
//! - [`cfrac`] — continued-fraction expansion and Flajolet path sums by
//!   independent algorithms;
//! - [`theorems`] — the polynomial families, weight schemes and the
//!   verification registry.

pub mod bijections;
pub mod cfrac;
pub mod paths;
pub mod perm;
pub mod poly;
pub mod stats;
pub mod theorems;

pub use perm::Permutation;
pub use poly::MultiPoly;

#[cfg(test)]
pub(crate) mod testutil {
    use crate::perm::Permutation;

    /// First running example: `(1,9,10)(2,3,7,5,6,11)(4)(8)`.
    pub fn example_1() -> Permutation {
        "9 3 7 4 6 11 5 8 10 1 2".parse().unwrap()
    }

    /// Second running example, a D-permutation of [14]:
    /// `(1,7,8,6,4,2)(3,9,10)(5)(11)(12)(13,14)`.
    pub fn example_2() -> Permutation {
        "7 1 9 2 5 4 8 6 10 3 11 12 14 13".parse().unwrap()
    }
}
