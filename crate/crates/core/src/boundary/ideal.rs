//! The ideal generated by `U_alpha`: Hilbert function, zero set, and the
//! strict positivity of sums of squares from `U`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactcore::{graded_dim, monomials, Matrix, Poly};
use crate::gram::extract::extract_qsos;
use crate::gram::point::homogeneous_degree;

fn stack(forms: &[Poly], n: usize, d: u32) -> Matrix {
    let basis = monomials(n, d);
    Matrix::from_rows(
        forms.iter().map(|p| p.coeff_vector(&basis)).collect(),
        basis.len(),
    )
}

/// `p` lies in `span(forms)`.
pub fn in_span(forms: &[Poly], p: &Poly) -> bool {
    let Some(d) = p.degree() else { return true };
    let n = forms
        .iter()
        .map(Poly::nvars)
        .chain([p.nvars()])
        .max()
        .unwrap();
    let forms: Vec<Poly> = forms.iter().map(|q| q.clone().with_nvars(n)).collect();
    let mut with = forms.clone();
    with.push(p.clone().with_nvars(n));
    stack(&forms, n, d).rank() == stack(&with, n, d).rank()
}

/// Equal as subspaces of the forms of degree `d`.
pub fn same_span(a: &[Poly], b: &[Poly], n: usize, d: u32) -> bool {
    let ea = if a.is_empty() {
        Vec::new()
    } else {
        stack(a, n, d).row_space()
    };
    let eb = if b.is_empty() {
        Vec::new()
    } else {
        stack(b, n, d).row_space()
    };
    ea == eb
}

/// `q_1^2 + ... + q_k^2` for linearly independent `q_i`.
pub fn assemble_sextic(qs: &[Poly]) -> Result<Poly> {
    let d = homogeneous_degree(qs)?;
    let n = qs.iter().map(Poly::nvars).max().unwrap();
    let qs: Vec<Poly> = qs.iter().map(|q| q.clone().with_nvars(n)).collect();
    if stack(&qs, n, d).rank() < qs.len() {
        return Err(Error::LinearlyDependent);
    }
    Ok(qs.iter().fold(Poly::zero(n), |acc, q| &acc + &q.square()))
}

/// Spanning set `{x^gamma u}` of `I_k` for `I = (U)`.
pub fn ideal_degree_span(u: &[Poly], n: usize, k: u32) -> Vec<Poly> {
    let Some(d) = u.first().and_then(Poly::degree) else {
        return Vec::new();
    };
    if k < d {
        return Vec::new();
    }
    monomials(n, k - d)
        .iter()
        .flat_map(|g| {
            u.iter()
                .map(move |p| p.clone().with_nvars(n).mul_monomial(g))
        })
        .collect()
}

pub fn ideal_dim(u: &[Poly], n: usize, k: u32) -> usize {
    let span = ideal_degree_span(u, n, k);
    if span.is_empty() {
        0
    } else {
        stack(&span, n, k).rank()
    }
}

/// Degree just past the socle of a complete intersection of `n` forms of degree `d`.
pub fn terminal_degree(n: usize, d: u32) -> u32 {
    n as u32 * (d - 1) + 1
}

/// `dim (A/I)_k` for `k = 0..=terminal_degree`.
pub fn hilbert_function(u: &[Poly]) -> Result<Vec<usize>> {
    let d = homogeneous_degree(u)?;
    let n = u.iter().map(Poly::nvars).max().unwrap();
    Ok((0..=terminal_degree(n, d))
        .map(|k| graded_dim(n, k) - ideal_dim(u, n, k))
        .collect())
}

/// Coefficients of `((1 - t^d) / (1 - t))^n`, the Hilbert function of a
/// complete intersection of `n` forms of degree `d` in `n` variables.
pub fn complete_intersection_series(n: usize, d: u32) -> Vec<usize> {
    let mut s = vec![1usize];
    for _ in 0..n {
        let mut next = vec![0usize; s.len() + d as usize - 1];
        for (i, c) in s.iter().enumerate() {
            for j in 0..d as usize {
                next[i + j] += c;
            }
        }
        s = next;
    }
    s.push(0);
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroSet {
    Empty,
    NonEmpty,
}

impl fmt::Display for ZeroSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ZeroSet::Empty => "empty",
            ZeroSet::NonEmpty => "nonempty",
        })
    }
}

/// For `n` independent forms of degree `d` in `n` variables the projective
/// zero set is empty exactly when `I` fills degree `n(d-1)+1`.
pub fn empty_zero_check(u: &[Poly]) -> Result<ZeroSet> {
    let d = homogeneous_degree(u)?;
    let n = u.iter().map(Poly::nvars).max().unwrap();
    if u.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "need {n} forms in {n} variables, got {}",
            u.len()
        )));
    }
    let padded: Vec<Poly> = u.iter().map(|p| p.clone().with_nvars(n)).collect();
    if stack(&padded, n, d).rank() < n {
        return Err(Error::LinearlyDependent);
    }
    let k = terminal_degree(n, d);
    Ok(if ideal_dim(&padded, n, k) == graded_dim(n, k) {
        ZeroSet::Empty
    } else {
        ZeroSet::NonEmpty
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Positivity {
    StrictlyPositive,
    Inconclusive,
}

impl fmt::Display for Positivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Positivity::StrictlyPositive => "strictly positive",
            Positivity::Inconclusive => "inconclusive",
        })
    }
}

/// `f` is a sum of squares of forms in `U` and `V(U)` is empty, so `f` has
/// no real zeros. The representation is recovered exactly from `U`.
pub fn strict_positivity_cert(f: &Poly, u: &[Poly]) -> Result<Positivity> {
    let w = match extract_qsos(f, u) {
        Ok(w) => w,
        Err(Error::NoSolution | Error::NotPsd | Error::NotQuadraticallyIndependent) => {
            return Err(Error::NotASumOverU)
        }
        Err(e) => return Err(e),
    };
    debug_assert!(w.expanded.iter().all(|q| in_span(u, q)));
    Ok(match empty_zero_check(u)? {
        ZeroSet::Empty => Positivity::StrictlyPositive,
        ZeroSet::NonEmpty => Positivity::Inconclusive,
    })
}
