//! Abelian ideals of a Borel subalgebra, indexed by minuscule elements of the
//! affine Weyl group, and the symmetries of the poset they form.

pub mod abelian;
pub mod affine;
pub mod bitset;
pub mod cli;
pub mod dynkin;
pub mod error;
pub mod linalg;
pub mod perm;
pub mod poset;
pub mod report;
pub mod rootsys;
pub mod suite;
pub mod young;

/// Version tag carried by every JSON document this crate writes.
pub const SCHEMA: &str = "abid/1";
