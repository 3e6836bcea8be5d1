//! Exact character tables of finite groups and executable checks of the
//! structure theory of GVZ-groups with two character degrees.
//!
//! The crate is organised bottom-up:
//!
//! - [`group`]: Cayley-table groups, subgroups, quotients, classes, lattices,
//!   isomorphism and isoclinism search.
//! - [`cyclotomic`]: exact arithmetic in `Z[ζₑ]`.
//! - [`chartab`]: the Dixon–Schneider character table engine.
//! - [`props`]: kernels, centers, degree sets and the GVZ predicate.
//! - [`verify`]: one registered [`verify::Verifier`] per result, selectable by name.
//! - [`catalog`]: group recipes, the bundled catalog, `.grp` files and reports.

pub mod catalog;
pub mod chartab;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod props;
pub mod verify;

pub use error::{Error, Result};

/// Resource caps shared by every expensive search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    /// Node budget for isomorphism and isoclinism backtracking.
    pub iso_search_cap: u64,
    pub normal_lattice_cap: usize,
    /// Largest `|G/Z(G)|` for which isoclinism is searched directly.
    pub isoclinism_quotient_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 2048,
            iso_search_cap: 10_000_000,
            normal_lattice_cap: 10_000,
            isoclinism_quotient_cap: 64,
        }
    }
}
