//! Linear functionals on forms of even degree and their moment matrices.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactcore::{
    monomials, parse_rational, psd_check, Matrix, Monomial, Poly, Rational, SymMatrix,
};

/// `alpha(x^beta)` for every monomial of the given degree, in graded-lex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFunctional {
    pub n: usize,
    pub degree: u32,
    pub coeffs: Vec<Rational>,
}

impl LinearFunctional {
    pub fn new(n: usize, degree: u32, coeffs: Vec<Rational>) -> Result<Self> {
        let len = monomials(n, degree).len();
        if coeffs.len() != len {
            return Err(Error::DimensionMismatch(format!(
                "functional on degree {degree} forms in {n} variables needs {len} values, got {}",
                coeffs.len()
            )));
        }
        Ok(LinearFunctional { n, degree, coeffs })
    }

    /// `sum_i w_i ev(points_i)`.
    pub fn from_points(
        points: &[Vec<Rational>],
        weights: &[Rational],
        degree: u32,
    ) -> Result<Self> {
        let n = points.first().map_or(0, Vec::len);
        if n == 0 || points.len() != weights.len() || points.iter().any(|p| p.len() != n) {
            return Err(Error::DimensionMismatch(
                "points and weights do not match".into(),
            ));
        }
        let coeffs = monomials(n, degree)
            .iter()
            .map(|m| {
                points
                    .iter()
                    .zip(weights)
                    .fold(Rational::zero(), |acc, (p, w)| acc + w * m.eval(p))
            })
            .collect();
        Ok(LinearFunctional { n, degree, coeffs })
    }

    pub fn basis(&self) -> Vec<Monomial> {
        monomials(self.n, self.degree)
    }

    pub fn apply(&self, f: &Poly) -> Result<Rational> {
        if f.nvars() > self.n
            || (!f.is_zero() && (!f.is_homogeneous() || f.degree() != Some(self.degree)))
        {
            return Err(Error::DimensionMismatch(format!(
                "functional acts on degree {} forms in {} variables",
                self.degree, self.n
            )));
        }
        let v = f.clone().with_nvars(self.n).coeff_vector(&self.basis());
        Ok(v.iter()
            .zip(&self.coeffs)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LinearFunctional {
            n: self.n,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Echelon basis of `ker alpha` inside the forms of its degree.
    pub fn kernel(&self) -> Vec<Poly> {
        let basis = self.basis();
        let row = Matrix::from_rows(vec![self.coeffs.clone()], basis.len());
        row.nullspace()
            .iter()
            .map(|v| Poly::from_coeffs(self.n, &basis, v))
            .collect()
    }

    /// Accepts either `monomial = value` lines or weighted points
    /// `weight : x1, ..., xn`, which may not be mixed.
    pub fn parse(text: &str, degree: u32) -> Result<Self> {
        let lines: Vec<&str> = text
            .lines()
            .map(|l| l.split('#').next().unwrap().trim())
            .filter(|l| !l.is_empty())
            .collect();
        if lines.is_empty() {
            return Err(Error::Parse("empty functional".into()));
        }
        if lines.iter().all(|l| l.contains(':')) {
            let mut points = Vec::new();
            let mut weights = Vec::new();
            for l in &lines {
                let (w, p) = l.split_once(':').unwrap();
                weights.push(parse_rational(w.trim())?);
                points.push(
                    p.split(',')
                        .map(|c| parse_rational(c.trim()))
                        .collect::<Result<Vec<_>>>()?,
                );
            }
            return Self::from_points(&points, &weights, degree);
        }
        let mut entries = Vec::new();
        for l in &lines {
            let (m, v) = l
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected `monomial = value`, got `{l}`")))?;
            let m: Poly = m.trim().parse()?;
            entries.push((m, parse_rational(v.trim())?));
        }
        let n = entries.iter().map(|(m, _)| m.nvars()).max().unwrap();
        let basis = monomials(n, degree);
        let mut coeffs = vec![Rational::zero(); basis.len()];
        for (m, v) in entries {
            let m = m.with_nvars(n);
            let idx = match m.leading_term() {
                Some((mono, c)) if m.num_terms() == 1 && *c == Rational::from_integer(1.into()) => {
                    basis.iter().position(|b| b == mono)
                }
                _ => None,
            }
            .ok_or_else(|| Error::Parse(format!("`{m}` is not a monomial of degree {degree}")))?;
            coeffs[idx] = v;
        }
        Self::new(n, degree, coeffs)
    }
}

/// One `monomial = value` line per monomial.
impl fmt::Display for LinearFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, v) in self.basis().iter().zip(&self.coeffs) {
            writeln!(f, "{m} = {v}")?;
        }
        Ok(())
    }
}

/// `b_alpha(p, q) = alpha(p q)` on forms of half the degree.
pub fn moment_matrix(alpha: &LinearFunctional) -> Result<SymMatrix> {
    if !alpha.degree.is_multiple_of(2) {
        return Err(Error::DimensionMismatch(
            "moment matrix needs an even degree".into(),
        ));
    }
    let half = monomials(alpha.n, alpha.degree / 2);
    let full = alpha.basis();
    Ok(SymMatrix::from_upper(half.len(), |i, j| {
        let m = half[i].mul(&half[j]);
        alpha.coeffs[full
            .binary_search_by(|b| m.cmp(b))
            .expect("product has full degree")]
        .clone()
    }))
}

/// Echelon basis of `U_alpha = {p : alpha(p^2) = 0}`, the kernel of a PSD moment matrix.
pub fn kernel_u(b: &SymMatrix, n: usize) -> Result<Vec<Poly>> {
    if !psd_check(b).is_psd() {
        return Err(Error::NotPsd);
    }
    let d = (0..).find(|&d| monomials(n, d).len() >= b.size()).unwrap();
    let basis = monomials(n, d);
    if basis.len() != b.size() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} is not a moment matrix in {n} variables",
            b.size(),
            b.size()
        )));
    }
    let null = b.matrix().nullspace();
    if null.is_empty() {
        return Ok(Vec::new());
    }
    Ok(Matrix::from_rows(null, basis.len())
        .row_space()
        .iter()
        .map(|row| Poly::from_coeffs(n, &basis, row))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::demo::{demo_config, demo_tuple, p1, p2, p3};
    use crate::boundary::ideal::in_span;
    use crate::exactcore::rational::{rat, ratio};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn demo_alpha() -> LinearFunctional {
        LinearFunctional::from_points(&demo_config().points, &demo_tuple().a, 6).unwrap()
    }

    #[test]
    fn demo_moment_matrix() {
        let b = moment_matrix(&demo_alpha()).unwrap();
        assert_eq!(b.size(), 10);
        let v = psd_check(&b);
        assert!(v.is_psd());
        assert_eq!(v.rank(), Some(7));
        let u = kernel_u(&b, 3).unwrap();
        assert_eq!(u.len(), 3);
        for p in [p1(), p2(), p3()] {
            assert!(in_span(&u, &p));
        }
    }

    #[test]
    fn value_on_fermat() {
        let f0 = Poly::parse_with_nvars("x1^6 + x2^6 + x3^6", 3).unwrap();
        assert_eq!(demo_alpha().apply(&f0).unwrap(), rat(42));
        assert_eq!(demo_alpha().scale(&rat(5)).apply(&f0).unwrap(), rat(210));
    }

    #[test]
    fn point_evaluation_has_rank_one() {
        let alpha =
            LinearFunctional::from_points(&[vec![rat(0), rat(0), rat(1)]], &[rat(1)], 6).unwrap();
        let b = moment_matrix(&alpha).unwrap();
        assert_eq!(psd_check(&b).rank(), Some(1));
        assert_eq!(kernel_u(&b, 3).unwrap().len(), 9);
    }

    #[test]
    fn generic_positive_combination_is_definite() {
        let mut rng = ChaCha8Rng::seed_from_u64(55);
        let points: Vec<Vec<Rational>> = (0..55)
            .map(|_| {
                (0..3)
                    .map(|_| ratio(rng.gen_range(-9..10), rng.gen_range(1..4)))
                    .collect()
            })
            .collect();
        let weights: Vec<Rational> = (0..55).map(|_| rat(rng.gen_range(1..5))).collect();
        let b =
            moment_matrix(&LinearFunctional::from_points(&points, &weights, 6).unwrap()).unwrap();
        assert_eq!(psd_check(&b).rank(), Some(10));
        assert!(kernel_u(&b, 3).unwrap().is_empty());
    }

    #[test]
    fn indefinite_moment_matrix() {
        let alpha =
            LinearFunctional::from_points(&[vec![rat(1), rat(0), rat(0)]], &[rat(-1)], 6).unwrap();
        assert_eq!(
            kernel_u(&moment_matrix(&alpha).unwrap(), 3).unwrap_err(),
            Error::NotPsd
        );
    }

    #[test]
    fn text_round_trip() {
        let a = demo_alpha();
        assert_eq!(LinearFunctional::parse(&a.to_string(), 6).unwrap(), a);
        let weighted = "1 : 1,1,1\n1: -1,1,1\n1: 1,-1,1\n1: 1,1,-1\n4: 0,1,1\n4: 0,1,-1\n4: 1,0,1\n4: 1,0,-1\n-2: 0,0,1";
        assert_eq!(LinearFunctional::parse(weighted, 6).unwrap(), a);
        assert_eq!(a.kernel().len(), 27);
    }
}
