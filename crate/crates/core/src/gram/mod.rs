//! Gram spectrahedra of forms: Gram points, faces through a representation,
//! rational extraction of a unique representation, and span shrinking.

pub mod extract;
pub mod face;
pub mod point;
pub mod shrink;

pub use extract::{extract_qsos, format_sos, parse_sos, sum_of_squares, QSosWitness};
pub use face::{face_dimension, product_kernel, FaceDimension};
pub use point::{gram_from_squares, is_gram_point, mu, span_basis, GramCheck, GramPoint, SosRep};
pub use shrink::{
    det_polynomial, shrink_span, walk_to_extreme, ShrinkOutcome, WalkResult, WalkStep,
};
