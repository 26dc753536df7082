//! Faces of the Gram spectrahedron through a representation: the products
//! `p_i p_j` and their linear relations.

use num_traits::Zero;

use super::point::SosRep;
use crate::exactcore::{monomials, Matrix, Poly, Rational, SymMatrix};

/// Pairs `(i, j)` with `i <= j`, row by row.
pub fn upper_pairs(r: usize) -> Vec<(usize, usize)> {
    (0..r).flat_map(|i| (i..r).map(move |j| (i, j))).collect()
}

/// Echelon basis of `span(forms)`.
pub fn echelon_forms(forms: &[Poly], n: usize, d: u32) -> Vec<Poly> {
    let basis = monomials(n, d);
    let m = Matrix::from_rows(
        forms.iter().map(|p| p.coeff_vector(&basis)).collect(),
        basis.len(),
    );
    m.row_space()
        .iter()
        .map(|row| Poly::from_coeffs(n, &basis, row))
        .collect()
}

/// Columns are the coefficient vectors of `p_i p_j` (`i <= j`) in degree `2d`.
pub fn product_matrix(forms: &[Poly], n: usize, d: u32) -> Matrix {
    let basis = monomials(n, 2 * d);
    let cols: Vec<Vec<Rational>> = upper_pairs(forms.len())
        .into_iter()
        .map(|(i, j)| (&forms[i] * &forms[j]).coeff_vector(&basis))
        .collect();
    Matrix::from_fn(basis.len(), cols.len(), |row, col| cols[col][row].clone())
}

/// Symmetric `E` with `sum_ij E_ij p_i p_j = y . (p_i p_j)_{i<=j}`.
pub fn symmetric_from_pairs(r: usize, y: &[Rational]) -> SymMatrix {
    let two = Rational::from_integer(2.into());
    let mut m = Matrix::zeros(r, r);
    for ((i, j), v) in upper_pairs(r).into_iter().zip(y) {
        if i == j {
            m[(i, i)] = v.clone();
        } else {
            m[(i, j)] = v / &two;
            m[(j, i)] = v / &two;
        }
    }
    SymMatrix::new(m).expect("symmetric by construction")
}

/// Directions `E != 0` with `sum E_ij p_i p_j = 0`: the tangent space of the face.
pub fn product_kernel(forms: &[Poly], n: usize, d: u32) -> Vec<SymMatrix> {
    product_matrix(forms, n, d)
        .nullspace()
        .iter()
        .map(|y| symmetric_from_pairs(forms.len(), y))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FaceDimension {
    /// Dimension of the span of the squares.
    pub r: usize,
    pub product_rank: usize,
    pub dim: usize,
}

impl FaceDimension {
    pub fn quadratically_independent(&self) -> bool {
        self.dim == 0
    }

    /// The representation is an extreme point of the Gram spectrahedron.
    pub fn is_extreme(&self) -> bool {
        self.dim == 0
    }
}

/// `dim F = C(r+1, 2) - rank{p_i p_j}` with `r = dim span(p_i)`.
pub fn face_dimension(rep: &SosRep) -> FaceDimension {
    let forms = echelon_forms(&rep.squares, rep.n, rep.d);
    let r = forms.len();
    let product_rank = if r == 0 {
        0
    } else {
        product_matrix(&forms, rep.n, rep.d).rank()
    };
    FaceDimension {
        r,
        product_rank,
        dim: r * (r + 1) / 2 - product_rank,
    }
}

/// `sum_ij E_ij p_i p_j`.
pub fn combine(e: &SymMatrix, forms: &[Poly], n: usize) -> Poly {
    let mut out = Poly::zero(n);
    for i in 0..forms.len() {
        for j in 0..forms.len() {
            let c = e.get(i, j);
            if !c.is_zero() {
                out = &out + &(&forms[i] * &forms[j]).scale(c);
            }
        }
    }
    out
}
