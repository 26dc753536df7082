//! Permutation groups given by generators: orbits, transitivity, conjugacy
//! classes of fixed-point-free involutions, characteristic numbers, and the
//! four-column classification of transitive groups.

pub mod catalog;
pub mod charnum;
pub mod classify;
pub mod group;
pub mod perm;

pub use catalog::{bundled_catalog, parse_catalog, BUNDLED_DEGREES};
pub use charnum::{char_number, m_set, CharNumber, Membership};
pub use classify::{
    classify, classify_catalog, fpf_involution_classes, FpfClass, GroupAnalysis, TableRow,
};
pub use group::{orbit_closure, GroupDesc, DEFAULT_ENUM_BOUND};
pub use perm::Perm;
