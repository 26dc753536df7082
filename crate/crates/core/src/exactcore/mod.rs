//! Exact arithmetic substrate: rationals, polynomials, linear algebra,
//! PSD decisions, resultants and real-root counting.

pub mod matrix;
pub mod poly;
pub mod psd;
pub mod rational;
pub mod resultant;
pub mod squares;
pub mod unipoly;

pub use matrix::{Echelon, Matrix, SymMatrix};
pub use poly::{graded_dim, monomials, Monomial, Poly};
pub use psd::{ldl_sos, psd_check, Ldl, PsdVerdict, WeightedSquare};
pub use rational::{parse_rational, Rational};
pub use resultant::resultant;
pub use squares::four_squares;
pub use unipoly::{rational_roots, real_root_approximations, sturm_real_roots, UniPoly};
