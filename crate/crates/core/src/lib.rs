//! Exact certificates for sums of squares of forms over the rationals.
//!
//! The crate covers three connected pipelines:
//!
//! * [`permgroup`] and [`numfield`]: the characteristic number of a
//!   fixed-point-free involution in a transitive permutation group, and the
//!   resulting obstruction showing that a norm form `N_{K/Q}(l)` of a totally
//!   imaginary field is not a sum of squares over `Q`.
//! * [`boundary`]: strictly positive ternary sextics on the boundary of the
//!   sums-of-squares cone, built from a Cayley-Bacharach configuration of
//!   nine points, with boundary and uniqueness certificates.
//! * [`gram`]: Gram spectrahedra, face dimensions, rational extraction of a
//!   unique representation, and span shrinking along a line segment.
//!
//! Everything rests on [`exactcore`], which does all arithmetic over `Q`.

pub mod boundary;
pub mod error;
pub mod exactcore;
pub mod gram;
pub mod numfield;
pub mod permgroup;

pub use error::{Error, Result};
pub use exactcore::{Matrix, Monomial, Poly, Rational, SymMatrix, UniPoly};
