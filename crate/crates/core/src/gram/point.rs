//! Gram points `G` with `X^T G X = f`, indexed by the degree-`d` monomials in
//! graded-lex order.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactcore::{
    monomials, psd_check, Matrix, Monomial, Poly, PsdVerdict, Rational, SymMatrix,
};

/// A list of forms whose squares sum to some `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SosRep {
    pub n: usize,
    pub d: u32,
    pub squares: Vec<Poly>,
}

impl SosRep {
    /// Pads every form to the largest variable count among them.
    pub fn new(squares: Vec<Poly>) -> Result<Self> {
        let n = squares
            .iter()
            .map(Poly::nvars)
            .max()
            .ok_or(Error::EmptySquares)?;
        Self::with_nvars(squares, n)
    }

    pub fn with_nvars(squares: Vec<Poly>, n: usize) -> Result<Self> {
        if squares.is_empty() {
            return Err(Error::EmptySquares);
        }
        if squares.iter().any(|p| p.nvars() > n) {
            return Err(Error::HeterogeneousDegrees);
        }
        let d = homogeneous_degree(&squares)?;
        let squares = squares.into_iter().map(|p| p.with_nvars(n)).collect();
        Ok(SosRep { n, d, squares })
    }

    /// `sum p_i^2`.
    pub fn form(&self) -> Poly {
        self.squares
            .iter()
            .fold(Poly::zero(self.n), |acc, p| &acc + &p.square())
    }
}

/// Common degree of nonzero homogeneous forms.
pub(crate) fn homogeneous_degree(forms: &[Poly]) -> Result<u32> {
    let mut degree = None;
    for p in forms {
        if p.is_zero() || !p.is_homogeneous() {
            return Err(Error::HeterogeneousDegrees);
        }
        let dp = p.degree().unwrap();
        if *degree.get_or_insert(dp) != dp {
            return Err(Error::HeterogeneousDegrees);
        }
    }
    degree.ok_or(Error::EmptySquares)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramPoint {
    pub n: usize,
    pub d: u32,
    pub matrix: SymMatrix,
}

impl GramPoint {
    pub fn new(n: usize, d: u32, matrix: SymMatrix) -> Result<Self> {
        let size = monomials(n, d).len();
        if matrix.size() != size {
            return Err(Error::DimensionMismatch(format!(
                "Gram matrix for n={n}, d={d} must be {size}x{size}, got {}x{}",
                matrix.size(),
                matrix.size()
            )));
        }
        Ok(GramPoint { n, d, matrix })
    }

    pub fn basis(&self) -> Vec<Monomial> {
        monomials(self.n, self.d)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Reads a `basis:` header naming the monomials, then one matrix row per line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty Gram matrix file".into()))?;
        let names = header
            .strip_prefix("basis:")
            .ok_or_else(|| Error::Parse("Gram matrix file must start with `basis:`".into()))?;
        let basis: Vec<Poly> = names
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect::<Result<_>>()?;
        let n = basis.iter().map(Poly::nvars).max().unwrap_or(1);
        let d = basis
            .first()
            .and_then(Poly::degree)
            .ok_or_else(|| Error::Parse("empty basis header".into()))?;
        let expected = monomials(n, d);
        let given: Vec<Monomial> = basis
            .iter()
            .map(|p| match p.leading_term() {
                Some((m, c)) if p.num_terms() == 1 && c == &Rational::from_integer(1.into()) => {
                    Ok(Monomial(
                        m.0.iter()
                            .copied()
                            .chain(std::iter::repeat(0))
                            .take(n)
                            .collect(),
                    ))
                }
                _ => Err(Error::Parse(format!("`{p}` is not a monomial"))),
            })
            .collect::<Result<_>>()?;
        if given != expected {
            return Err(Error::Parse(format!(
                "basis must list all degree-{d} monomials in {n} variables in graded-lex order"
            )));
        }
        let body: Vec<&str> = lines.collect();
        let matrix = Matrix::parse(&body.join("\n"))?;
        GramPoint::new(n, d, SymMatrix::new(matrix)?)
    }
}

impl fmt::Display for GramPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.basis().iter().map(Monomial::to_string).collect();
        writeln!(f, "basis: {}", names.join(", "))?;
        write!(f, "{}", self.matrix.matrix())
    }
}

/// `G = sum u_i u_i^T` with `u_i` the coefficient vector of `p_i`.
pub fn gram_from_squares(rep: &SosRep) -> GramPoint {
    let basis = monomials(rep.n, rep.d);
    let vecs: Vec<Vec<Rational>> = rep.squares.iter().map(|p| p.coeff_vector(&basis)).collect();
    let size = basis.len();
    let matrix = SymMatrix::from_upper(size, |i, j| {
        vecs.iter()
            .fold(Rational::zero(), |acc, u| acc + &u[i] * &u[j])
    });
    GramPoint {
        n: rep.n,
        d: rep.d,
        matrix,
    }
}

/// `X^T G X`.
pub fn mu(g: &GramPoint) -> Poly {
    let basis = g.basis();
    let mut out = Poly::zero(g.n);
    for (i, mi) in basis.iter().enumerate() {
        for (j, mj) in basis.iter().enumerate() {
            let c = g.matrix.get(i, j);
            if !c.is_zero() {
                out.add_term(mi.mul(mj), c.clone());
            }
        }
    }
    out
}

/// Result of testing `G` against `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramCheck {
    pub represents: bool,
    pub psd: PsdVerdict,
}

impl GramCheck {
    pub fn is_gram_point(&self) -> bool {
        self.represents && self.psd.is_psd()
    }
}

pub fn is_gram_point(g: &GramPoint, f: &Poly) -> Result<GramCheck> {
    if f.nvars() > g.n {
        return Err(Error::DimensionMismatch(format!(
            "form has {} variables, Gram point has {}",
            f.nvars(),
            g.n
        )));
    }
    if !f.is_zero() && (!f.is_homogeneous() || f.degree() != Some(2 * g.d)) {
        return Err(Error::DimensionMismatch(format!(
            "form must be homogeneous of degree {}",
            2 * g.d
        )));
    }
    Ok(GramCheck {
        represents: mu(g) == *f,
        psd: psd_check(&g.matrix),
    })
}

/// Echelon basis of the column space of a PSD Gram point, read as forms.
pub fn span_basis(g: &GramPoint) -> Result<Vec<Poly>> {
    if !psd_check(&g.matrix).is_psd() {
        return Err(Error::NotPsd);
    }
    let basis = g.basis();
    Ok(g.matrix
        .matrix()
        .row_space()
        .iter()
        .map(|row| Poly::from_coeffs(g.n, &basis, row))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::rat;

    pub(crate) fn p3(s: &str) -> Poly {
        Poly::parse_with_nvars(s, 3).unwrap()
    }

    pub(crate) fn triple() -> SosRep {
        SosRep::new(vec![
            p3("x1^3 - x1*x3^2"),
            p3("x2^3 - x2*x3^2"),
            p3("3*x1^2*x3 + 3*x2^2*x3 - 4*x3^3"),
        ])
        .unwrap()
    }

    #[test]
    fn diagonal_squares() {
        let g = gram_from_squares(
            &SosRep::new(vec!["x1^2".parse().unwrap(), "x2^2".parse().unwrap()]).unwrap(),
        );
        let want = SymMatrix::from_upper(3, |i, j| if i == j && i != 1 { rat(1) } else { rat(0) });
        assert_eq!(g.matrix, want);
        assert_eq!(SosRep::new(vec![]).unwrap_err(), Error::EmptySquares);
        assert_eq!(
            SosRep::new(vec![p3("x1^2"), p3("x2^3")]).unwrap_err(),
            Error::HeterogeneousDegrees
        );
    }

    #[test]
    fn ternary_sextic() {
        let rep = triple();
        let g = gram_from_squares(&rep);
        assert_eq!(g.matrix.size(), 10);
        assert_eq!(g.rank(), 3);
        let f = p3("x1^6 + x2^6 + 7*x1^4*x3^2 + 7*x2^4*x3^2 + 18*x1^2*x2^2*x3^2 - 23*x1^2*x3^4 - 23*x2^2*x3^4 + 16*x3^6");
        assert_eq!(mu(&g), f);
        assert!(is_gram_point(&g, &f).unwrap().is_gram_point());
    }

    #[test]
    fn fermat_sextic() {
        let rep = SosRep::new(vec![
            p3("x1^3 - 2*x1*x2^2"),
            p3("2*x1^2*x2 - x2^3"),
            p3("x3^3"),
        ])
        .unwrap();
        assert_eq!(mu(&gram_from_squares(&rep)), p3("x1^6 + x2^6 + x3^6"));
    }

    #[test]
    fn identity_on_linear_forms() {
        let g = GramPoint::new(2, 1, SymMatrix::identity(2)).unwrap();
        assert_eq!(mu(&g), "x1^2 + x2^2".parse().unwrap());
        assert!(GramPoint::new(2, 1, SymMatrix::identity(3)).is_err());
    }

    #[test]
    fn spans() {
        let g = gram_from_squares(&SosRep::new(vec!["x1^2 + x2^2".parse().unwrap()]).unwrap());
        assert_eq!(
            span_basis(&g).unwrap(),
            vec!["x1^2 + x2^2".parse().unwrap()]
        );
        let rep = triple();
        let span = span_basis(&gram_from_squares(&rep)).unwrap();
        assert_eq!(span.len(), 3);
        let basis = monomials(3, 3);
        let stack = |forms: &[Poly]| {
            Matrix::from_rows(
                forms.iter().map(|p| p.coeff_vector(&basis)).collect(),
                basis.len(),
            )
        };
        assert_eq!(stack(&span).row_space(), stack(&rep.squares).row_space());
        let zero = GramPoint::new(3, 1, SymMatrix::zeros(3)).unwrap();
        assert!(span_basis(&zero).unwrap().is_empty());
    }

    #[test]
    fn file_round_trip() {
        let g = gram_from_squares(&triple());
        let text = g.to_string();
        assert!(text.starts_with("basis: x1^3, x1^2*x2,"));
        assert_eq!(GramPoint::parse(&text).unwrap(), g);
        assert!(GramPoint::parse("basis: x2^2, x1^2\n1, 0\n0, 1").is_err());
        assert!(GramPoint::parse("1, 0\n0, 1").is_err());
    }
}
