//! Shoda pairs, primitive central idempotents and simple components of the
//! rational group algebra `QG` for finite monomial groups.
//!
//! The pipeline runs on dense multiplication tables:
//!
//! 1. [`group`] materializes the group and its subgroup lattice machinery.
//! 2. [`clifford`] grows, for every normal subgroup `N`, the rooted tree of
//!    `N`-linear character triples. Characters are never materialized: a
//!    triple `(H, A, theta)` is carried by the kernel of `theta`.
//! 3. [`idempotents`] turns tree leaves into Shoda pairs, their scaling
//!    factor `alpha` and the primitive central idempotent `alpha * e(G,H,K)`.
//! 4. [`components`] describes each simple component as a nested matrix ring
//!    over crossed products and audits its dimension exactly.
//!
//! All arithmetic in `QG` is exact (arbitrary precision rationals).

pub mod algebra;
pub mod cli;
pub mod clifford;
pub mod components;
pub mod error;
pub mod group;
pub mod idempotents;
pub mod io;

pub use error::{Error, Result};
pub use group::{GroupTable, QuotientGroup, Subgroup};
