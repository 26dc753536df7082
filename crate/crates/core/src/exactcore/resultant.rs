//! Resultants in one distinguished variable with multivariate coefficients.
//!
//! A polynomial in `t` whose coefficients are [`Poly`]s is passed as a slice
//! of coefficients from `t^0` upward. The resultant is the Sylvester
//! determinant, expanded with Bareiss' fraction-free elimination so every
//! intermediate division is exact.

use num_traits::One;

use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

fn trim(p: &[Poly]) -> &[Poly] {
    let mut n = p.len();
    while n > 0 && p[n - 1].is_zero() {
        n -= 1;
    }
    &p[..n]
}

/// Sylvester matrix of `a` (degree m) and `b` (degree n), size m + n.
pub fn sylvester(a: &[Poly], b: &[Poly], nvars: usize) -> Vec<Vec<Poly>> {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let mut rows = vec![vec![Poly::zero(nvars); size]; size];
    // Rows hold coefficients from the leading one down, shifted right.
    for i in 0..n {
        for (k, c) in a.iter().rev().enumerate() {
            rows[i][i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in b.iter().rev().enumerate() {
            rows[n + i][i + k] = c.clone();
        }
    }
    rows
}

/// Determinant of a square matrix of polynomials.
pub fn poly_det(mut m: Vec<Vec<Poly>>, nvars: usize) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::constant(nvars, Rational::one());
    }
    let mut sign = Rational::one();
    let mut prev = Poly::constant(nvars, Rational::one());
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Poly::zero(nvars);
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            m[i][k] = Poly::zero(nvars);
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].scale(&sign)
}

/// `Res_t(a, b)`.
pub fn resultant(a: &[Poly], b: &[Poly]) -> Result<Poly> {
    let a = trim(a);
    let b = trim(b);
    if a.is_empty() || b.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let nvars = a.iter().chain(b).map(Poly::nvars).max().unwrap_or(1);
    let m = a.len() - 1;
    let n = b.len() - 1;
    if m == 0 {
        return Ok(a[0].pow(n as u32).with_nvars(nvars));
    }
    if n == 0 {
        return Ok(b[0].pow(m as u32).with_nvars(nvars));
    }
    Ok(poly_det(sylvester(a, b, nvars), nvars))
}

/// Embeds a univariate rational polynomial as constant coefficients.
pub fn constant_coeffs(coeffs: &[Rational], nvars: usize) -> Vec<Poly> {
    coeffs
        .iter()
        .map(|c| Poly::constant(nvars, c.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::rat;

    fn p(s: &str) -> Poly {
        Poly::parse_with_nvars(s, 3).unwrap()
    }

    fn c(v: i64) -> Poly {
        Poly::constant(3, rat(v))
    }

    #[test]
    fn gaussian_norm() {
        let m = [c(1), c(0), c(1)];
        let l = [p("x1"), p("x2")];
        assert_eq!(resultant(&m, &l).unwrap(), p("x1^2 + x2^2"));
    }

    #[test]
    fn quadratic_linear_form() {
        let m = [c(1), c(0), c(1)];
        let l = [p("x1"), p("x2"), p("x3")];
        assert_eq!(
            resultant(&m, &l).unwrap(),
            p("x1^2 - 2*x1*x3 + x2^2 + x3^2")
        );
    }

    #[test]
    fn constant_argument() {
        let m = [c(1), c(1), c(0), c(0), c(1)];
        assert_eq!(resultant(&m, &[p("x1 + x2")]).unwrap(), p("x1 + x2").pow(4));
        assert_eq!(resultant(&[c(3)], &m).unwrap(), c(3).pow(4));
    }

    #[test]
    fn zero_input() {
        assert_eq!(resultant(&[], &[c(1)]), Err(Error::ZeroPolynomial));
        assert_eq!(
            resultant(&[c(0), c(0)], &[c(1)]),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn antisymmetry_sign() {
        // deg a = 3, deg b = 1: Res(a,b) = (-1)^3 Res(b,a)
        let a = [c(1), c(2), c(0), c(1)];
        let b = [p("x1"), p("x2")];
        let ab = resultant(&a, &b).unwrap();
        let ba = resultant(&b, &a).unwrap();
        assert_eq!(ab, -&ba);
    }

    #[test]
    fn numeric_determinant_matches() {
        let m = vec![
            vec![c(2), c(1), c(0)],
            vec![c(1), c(3), c(1)],
            vec![c(0), c(1), c(4)],
        ];
        assert_eq!(poly_det(m, 3), c(18));
        let swapped = vec![vec![c(0), c(1)], vec![c(1), c(0)]];
        assert_eq!(poly_det(swapped, 3), c(-1));
    }
}
