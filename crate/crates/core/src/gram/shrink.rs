//! Moving along a line inside a face of the Gram spectrahedron until the
//! matrix becomes singular, which shrinks the span of the representation.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::face::{combine, product_kernel};
use super::point::{mu, span_basis, GramPoint};
use crate::error::{Error, Result};
use crate::exactcore::unipoly::{rational_roots, root_bound, sturm_count_in};
use crate::exactcore::{Matrix, Poly, Rational, SymMatrix, UniPoly};

/// Restricted coordinates: `G = B^T Q B` with `B` the echelon basis of the
/// column space (rows) and `Q = G[piv, piv]`.
#[derive(Clone, Debug)]
pub struct Restricted {
    pub basis: Matrix,
    pub pivots: Vec<usize>,
    pub q: SymMatrix,
}

pub fn restrict(g: &GramPoint) -> Restricted {
    let e = g.matrix.matrix().rref();
    let r = e.pivots.len();
    let basis = Matrix::from_fn(r, g.matrix.size(), |i, j| e.matrix[(i, j)].clone());
    let q = g.matrix.principal(&e.pivots);
    Restricted {
        basis,
        pivots: e.pivots,
        q,
    }
}

fn lift(b: &Matrix, q: &SymMatrix) -> SymMatrix {
    SymMatrix::new(b.transpose().mul(q.matrix()).mul(b)).expect("congruence keeps symmetry")
}

/// `det(a + s e)` as a polynomial in `s`, by interpolation at `0..=r`.
pub fn det_polynomial(a: &SymMatrix, e: &SymMatrix) -> UniPoly {
    let r = a.size();
    let xs: Vec<Rational> = (0..=r as i64)
        .map(|k| Rational::from_integer(k.into()))
        .collect();
    let ys: Vec<Rational> = xs
        .iter()
        .map(|s| a.add(&e.scale(s)).matrix().det())
        .collect();
    let mut out = UniPoly::zero();
    for (i, xi) in xs.iter().enumerate() {
        let mut basis = UniPoly::constant(ys[i].clone());
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                let factor = UniPoly::new(vec![-xj.clone(), Rational::one()]);
                basis = basis.mul(&factor).scale(&(xi - xj).recip());
            }
        }
        out = out.add(&basis);
    }
    out
}

/// The first real root of `p` strictly above `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FirstRoot {
    Rational(Rational),
    /// Irrational root isolated in `(lo, hi]`.
    Interval(Rational, Rational),
}

impl FirstRoot {
    pub fn interval(&self) -> (Rational, Rational) {
        match self {
            FirstRoot::Rational(r) => (r.clone(), r.clone()),
            FirstRoot::Interval(lo, hi) => (lo.clone(), hi.clone()),
        }
    }
}

/// Sturm isolation of the smallest root above `a`, refined to width `2^-bits`
/// when irrational.
pub fn first_root_above(p: &UniPoly, a: &Rational, bits: u32) -> Option<FirstRoot> {
    let seq = p.sturm_sequence();
    let mut lo = a.clone();
    let mut hi = upper_end(p, a);
    if sturm_count_in(&seq, &lo, &hi) == 0 {
        return None;
    }
    let two = Rational::from_integer(2.into());
    while sturm_count_in(&seq, &lo, &hi) > 1 {
        let mid = (&lo + &hi) / &two;
        if sturm_count_in(&seq, &lo, &mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    if let Some(r) = rational_roots(p).into_iter().find(|r| r > &lo && r <= &hi) {
        return Some(FirstRoot::Rational(r));
    }
    let width = Rational::new(BigInt::one(), BigInt::one() << bits as usize);
    while &hi - &lo > width {
        let mid = (&lo + &hi) / &two;
        if sturm_count_in(&seq, &lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(FirstRoot::Interval(lo, hi))
}

/// A point above every real root of `p` and above `a`.
fn upper_end(p: &UniPoly, a: &Rational) -> Rational {
    let b = root_bound(p);
    if &b > a {
        b
    } else {
        a + Rational::one()
    }
}

#[derive(Clone, Debug)]
pub enum ShrinkOutcome {
    Shrunk {
        point: GramPoint,
        /// Boundary parameter on the line `G1 + s (G2 - G1)`.
        s_star: Rational,
        /// Kernel of the restricted boundary matrix, in the coordinates of the span.
        kernel: Vec<Vec<Rational>>,
        old_rank: usize,
        new_rank: usize,
    },
    /// The boundary parameter is irrational; no rational point of the
    /// boundary lies on this line.
    DeferredKernel {
        interval: (Rational, Rational),
        det_poly: UniPoly,
    },
}

pub const SHRINK_INTERVAL_BITS: u32 = 64;

fn same_span(a: &[Poly], b: &[Poly]) -> bool {
    a == b
}

/// Moves from `g1` through `g2` to the boundary of the face they share.
pub fn shrink_span(g1: &GramPoint, g2: &GramPoint) -> Result<ShrinkOutcome> {
    if g1.n != g2.n || g1.d != g2.d {
        return Err(Error::DimensionMismatch(
            "Gram points of different shapes".into(),
        ));
    }
    if g1 == g2 {
        return Err(Error::EqualPoints);
    }
    if mu(g1) != mu(g2) {
        return Err(Error::DifferentForms);
    }
    if !same_span(&span_basis(g1)?, &span_basis(g2)?) {
        return Err(Error::SpansDiffer);
    }
    let r1 = restrict(g1);
    let q2 = g2.matrix.principal(&r1.pivots);
    let dir = q2.sub(&r1.q);
    let p = det_polynomial(&r1.q, &dir);
    let root =
        first_root_above(&p, &Rational::one(), SHRINK_INTERVAL_BITS).ok_or(Error::NoSolution)?;
    match root {
        FirstRoot::Rational(s) => {
            let q = r1.q.add(&dir.scale(&s));
            let kernel = q.matrix().nullspace();
            for v in &kernel {
                assert!(
                    q.matrix().mul_vec(v).iter().all(Zero::is_zero),
                    "kernel vector"
                );
            }
            let point = GramPoint {
                n: g1.n,
                d: g1.d,
                matrix: lift(&r1.basis, &q),
            };
            let old_rank = r1.q.size();
            let new_rank = q.rank();
            Ok(ShrinkOutcome::Shrunk {
                point,
                s_star: s,
                kernel,
                old_rank,
                new_rank,
            })
        }
        FirstRoot::Interval(lo, hi) => Ok(ShrinkOutcome::DeferredKernel {
            interval: (lo, hi),
            det_poly: p,
        }),
    }
}

#[derive(Clone, Debug)]
pub struct WalkStep {
    pub s: Rational,
    pub rank_before: usize,
    pub rank_after: usize,
}

#[derive(Clone, Debug)]
pub struct WalkResult {
    pub point: GramPoint,
    pub steps: Vec<WalkStep>,
    /// The final point has a face of dimension zero.
    pub extreme: bool,
    /// Stopped because every kernel direction meets the boundary irrationally.
    pub deferred: bool,
}

/// Repeatedly moves along kernel directions of the product map until the
/// representation is an extreme point. Terminates because the rank drops
/// at every step.
pub fn walk_to_extreme(g: &GramPoint) -> Result<WalkResult> {
    let mut point = g.clone();
    let mut steps = Vec::new();
    loop {
        let r = restrict(&point);
        let forms = span_basis(&point)?;
        let kernel = product_kernel(&forms, point.n, point.d);
        debug_assert!(kernel.iter().all(|e| combine(e, &forms, point.n).is_zero()));
        if kernel.is_empty() {
            return Ok(WalkResult {
                point,
                steps,
                extreme: true,
                deferred: false,
            });
        }
        let mut moved = false;
        for e in kernel
            .iter()
            .flat_map(|e| [e.clone(), e.scale(&-Rational::one())])
        {
            let p = det_polynomial(&r.q, &e);
            if let Some(FirstRoot::Rational(s)) = first_root_above(&p, &Rational::zero(), 8) {
                let q = r.q.add(&e.scale(&s));
                let rank_before = r.q.size();
                let next = GramPoint {
                    n: point.n,
                    d: point.d,
                    matrix: lift(&r.basis, &q),
                };
                steps.push(WalkStep {
                    s,
                    rank_before,
                    rank_after: q.rank(),
                });
                point = next;
                moved = true;
                break;
            }
        }
        if !moved {
            return Ok(WalkResult {
                point,
                steps,
                extreme: false,
                deferred: true,
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::{rat, ratio};
    use crate::gram::point::{gram_from_squares, is_gram_point, SosRep};
    use num_traits::Signed;

    /// Diagonal `(1, 2 - 2a, 1)`, corners `a`, on `(x1^2, x1 x2, x2^2)`.
    fn family(a: Rational) -> GramPoint {
        let m = SymMatrix::from_upper(3, |i, j| match (i, j) {
            (0, 0) | (2, 2) => rat(1),
            (1, 1) => rat(2) - rat(2) * &a,
            (0, 2) => a.clone(),
            _ => rat(0),
        });
        GramPoint::new(2, 2, m).unwrap()
    }

    #[test]
    fn interpolated_determinant() {
        let a = family(rat(0)).matrix;
        let e = family(ratio(1, 2)).matrix.sub(&a);
        // det(G(s/2)) = (2 - s)(1 - s^2/4)
        let p = det_polynomial(&a, &e);
        for s in [rat(-3), rat(0), ratio(7, 3), rat(5)] {
            let want = (rat(2) - &s) * (rat(1) - &s * &s / rat(4));
            assert_eq!(p.eval(&s), want);
        }
    }

    #[test]
    fn binary_quartic_line() {
        let f: Poly = "x1^4 + 2*x1^2*x2^2 + x2^4".parse().unwrap();
        let out = shrink_span(&family(rat(0)), &family(ratio(1, 2))).unwrap();
        let ShrinkOutcome::Shrunk {
            point,
            s_star,
            old_rank,
            new_rank,
            kernel,
        } = out
        else {
            panic!("expected a rational boundary");
        };
        assert_eq!(s_star, rat(2));
        assert_eq!((old_rank, new_rank), (3, 1));
        assert_eq!(kernel.len(), 2);
        let want = gram_from_squares(&SosRep::new(vec!["x1^2 + x2^2".parse().unwrap()]).unwrap());
        assert_eq!(point, want);
        assert!(is_gram_point(&point, &f).unwrap().is_gram_point());
    }

    #[test]
    fn preconditions() {
        assert_eq!(
            shrink_span(&family(rat(0)), &family(rat(0))).unwrap_err(),
            Error::EqualPoints
        );
        let p3 = |s: &str| Poly::parse_with_nvars(s, 3).unwrap();
        let a = gram_from_squares(&SosRep::new(vec![p3("x1^3"), p3("x2^3"), p3("x3^3")]).unwrap());
        let b = gram_from_squares(
            &SosRep::new(vec![
                p3("x1^3 - 2*x1*x2^2"),
                p3("2*x1^2*x2 - x2^3"),
                p3("x3^3"),
            ])
            .unwrap(),
        );
        assert_eq!(shrink_span(&a, &b).unwrap_err(), Error::SpansDiffer);
        let c = gram_from_squares(&SosRep::new(vec![p3("x1^3"), p3("x2^3")]).unwrap());
        assert_eq!(shrink_span(&a, &c).unwrap_err(), Error::DifferentForms);
    }

    #[test]
    fn irrational_boundary_is_deferred() {
        // [[2, 0, a], [0, 4 - 2a, 0], [a, 0, 1]] has det (4 - 2a)(2 - a^2)
        let g = |a: Rational| {
            let m = SymMatrix::from_upper(3, |i, j| match (i, j) {
                (0, 0) => rat(2),
                (1, 1) => rat(4) - rat(2) * &a,
                (2, 2) => rat(1),
                (0, 2) => a.clone(),
                _ => rat(0),
            });
            GramPoint::new(2, 2, m).unwrap()
        };
        let out = shrink_span(&g(rat(0)), &g(ratio(1, 2))).unwrap();
        let ShrinkOutcome::DeferredKernel {
            interval: (lo, hi),
            det_poly,
        } = out
        else {
            panic!("boundary at s = 2 sqrt 2 is irrational");
        };
        // s^2 = 8 at the boundary
        assert!(&lo * &lo < rat(8) && &hi * &hi >= rat(8));
        assert!(
            &hi - &lo <= Rational::new(1.into(), BigInt::one() << SHRINK_INTERVAL_BITS as usize)
        );
        assert!(det_poly.eval(&lo).is_positive());
        let out = shrink_span(&family(rat(0)), &family(ratio(-1, 3))).unwrap();
        assert!(matches!(out, ShrinkOutcome::Shrunk { ref s_star, .. } if *s_star == rat(3)));
    }

    #[test]
    fn walk_reaches_an_extreme_point() {
        let w = walk_to_extreme(&family(rat(0))).unwrap();
        assert!(w.extreme && !w.deferred);
        assert!(w.steps.iter().all(|s| s.rank_after < s.rank_before));
        assert_eq!(mu(&w.point), "x1^4 + 2*x1^2*x2^2 + x2^4".parse().unwrap());
    }
}
