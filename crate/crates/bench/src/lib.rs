//! Fixtures shared by the criterion benches.

use sosq_core::exactcore::rational::{rat, ratio};
use sosq_core::gram::GramPoint;
use sosq_core::numfield::{quartic_galois, GaloisData};
use sosq_core::{Poly, Rational, SymMatrix, UniPoly};

/// Gram points of `(x1^2 + x2^2)^2` with corner entries `a`.
pub fn quartic_family(a: &Rational) -> GramPoint {
    let m = SymMatrix::from_upper(3, |i, j| match (i, j) {
        (0, 0) | (2, 2) => rat(1),
        (1, 1) => rat(2) - rat(2) * a,
        (0, 2) => a.clone(),
        _ => rat(0),
    });
    GramPoint::new(2, 2, m).expect("valid Gram point")
}

pub fn shrink_pair() -> (GramPoint, GramPoint) {
    (quartic_family(&rat(0)), quartic_family(&ratio(1, 2)))
}

/// `t^4 + t + 1` with its Galois data.
pub fn s4_field() -> (UniPoly, GaloisData) {
    let m = UniPoly::from_ints(&[1, 1, 0, 0, 1]);
    let q = quartic_galois(&m).expect("irreducible quartic");
    let g = GaloisData::with_roots(q.group, &q.roots).expect("tau in group");
    (m, g)
}

pub fn form(s: &str) -> Poly {
    Poly::parse_with_nvars(s, 3).expect("valid form")
}
