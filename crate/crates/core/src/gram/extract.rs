//! Rational sums of squares from a quadratically independent subspace.

use std::fmt;

use num_traits::{Signed, Zero};

use super::face::{echelon_forms, product_matrix, symmetric_from_pairs};
use super::point::homogeneous_degree;
use crate::error::{Error, Result};
use crate::exactcore::poly::split_signed_terms;
use crate::exactcore::{four_squares, ldl_sos, monomials, psd_check, Poly, Rational, SymMatrix};

/// `f = sum_k weights_k polys_k^2 = sum_j expanded_j^2`, all over `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSosWitness {
    /// The unique Gram matrix of `f` in the coordinates of `U`.
    pub gram: SymMatrix,
    pub weights: Vec<Rational>,
    pub polys: Vec<Poly>,
    pub expanded: Vec<Poly>,
}

impl QSosWitness {
    pub fn weighted_sum(&self) -> Poly {
        let n = self.polys.first().map_or(1, Poly::nvars);
        self.weights
            .iter()
            .zip(&self.polys)
            .fold(Poly::zero(n), |acc, (w, p)| &acc + &p.square().scale(w))
    }

    pub fn sum_of_squares(&self) -> Poly {
        sum_of_squares(&self.expanded)
    }
}

pub fn sum_of_squares(forms: &[Poly]) -> Poly {
    let n = forms.iter().map(Poly::nvars).max().unwrap_or(1);
    forms
        .iter()
        .fold(Poly::zero(n), |acc, p| &acc + &p.square())
}

/// Prints `f = (q1)^2 + (q2)^2 + ...`.
impl fmt::Display for QSosWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_sos("f", &self.expanded))
    }
}

pub fn format_sos(lhs: &str, squares: &[Poly]) -> String {
    let rhs: Vec<String> = squares.iter().map(|q| format!("({q})^2")).collect();
    if rhs.is_empty() {
        format!("{lhs} = 0")
    } else {
        format!("{lhs} = {}", rhs.join(" + "))
    }
}

/// Parses `lhs = (q1)^2 + (q2)^2 + ...`. The left side is returned as a form
/// when it parses as one and `None` when it is a bare name such as `f`.
pub fn parse_sos(text: &str, nvars: Option<usize>) -> Result<(Option<Poly>, Vec<Poly>)> {
    let (lhs, rhs) = match text.split_once('=') {
        Some((l, r)) => (Some(l.trim()), r.trim()),
        None => (None, text.trim()),
    };
    let parse_poly = |s: &str| match nvars {
        Some(n) => Poly::parse_with_nvars(s, n),
        None => s.parse::<Poly>(),
    };
    let mut squares = Vec::new();
    for (neg, term) in split_signed_terms(rhs)? {
        let inner = term
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(")^2"))
            .filter(|_| !neg)
            .ok_or_else(|| Error::Parse(format!("expected `(q)^2`, got `{term}`")))?;
        squares.push(parse_poly(inner)?);
    }
    let lhs = match lhs {
        Some(l) if l.chars().all(|c| c.is_ascii_alphabetic()) => None,
        Some(l) => Some(parse_poly(l)?),
        None => None,
    };
    let n = squares
        .iter()
        .chain(&lhs)
        .map(Poly::nvars)
        .max()
        .unwrap_or(1);
    let squares = squares.into_iter().map(|p| p.with_nvars(n)).collect();
    Ok((lhs.map(|p| p.with_nvars(n)), squares))
}

/// The unique representation `f = sum a_ij u_i u_j` with `u_i` in `U`, made
/// explicit as a sum of squares over `Q` when `(a_ij)` is PSD.
pub fn extract_qsos(f: &Poly, u: &[Poly]) -> Result<QSosWitness> {
    let d = homogeneous_degree(u)?;
    let n = u.iter().map(Poly::nvars).chain([f.nvars()]).max().unwrap();
    let u: Vec<Poly> = u.iter().map(|p| p.clone().with_nvars(n)).collect();
    if echelon_forms(&u, n, d).len() < u.len() {
        return Err(Error::LinearlyDependent);
    }
    let f = f.clone().with_nvars(n);
    if !f.supported_on(&monomials(n, 2 * d)) {
        return Err(Error::NoSolution);
    }
    let a = product_matrix(&u, n, d);
    if a.rank() < a.cols() {
        return Err(Error::NotQuadraticallyIndependent);
    }
    let y = a
        .solve(&f.coeff_vector(&monomials(n, 2 * d)))
        .ok_or(Error::NoSolution)?;
    let gram = symmetric_from_pairs(u.len(), &y);
    if !psd_check(&gram).is_psd() {
        return Err(Error::NotPsd);
    }
    let mut weights = Vec::new();
    let mut polys = Vec::new();
    let mut expanded = Vec::new();
    for sq in ldl_sos(&gram)? {
        let p = sq
            .vector
            .iter()
            .zip(&u)
            .fold(Poly::zero(n), |acc, (c, ui)| &acc + &ui.scale(c));
        for part in four_squares(&sq.weight)? {
            if !part.is_zero() {
                expanded.push(p.scale(&part.abs()));
            }
        }
        weights.push(sq.weight);
        polys.push(p);
    }
    let w = QSosWitness {
        gram,
        weights,
        polys,
        expanded,
    };
    assert_eq!(w.weighted_sum(), f, "weighted reconstruction");
    assert_eq!(w.sum_of_squares(), f, "four-square reconstruction");
    Ok(w)
}
