//! Finite groups as dense multiplication tables.

mod lattice;
mod quotient;
mod subgroup;
mod table;

pub use lattice::SUBGROUP_ENUMERATION_CAP;
pub use quotient::QuotientGroup;
pub use subgroup::{BitSet, Subgroup};
pub use table::{GroupTable, ASSOCIATIVITY_AUDIT_CAP, ASSOCIATIVITY_SPOT_CHECKS};
