//! Norm forms `N_{K/Q}(l)` of linear forms with coefficients in `K`, and the
//! numeric factorization `f = |g|^2` over the reals.

use std::fmt;

use num_traits::{Signed, Zero};

use super::complex::{eval_rounded, CRat};
use super::roots::{isolate_roots, RootSystem};
use crate::error::{Error, Result};
use crate::exactcore::rational::{round_bits, to_f64, Rational};
use crate::exactcore::resultant::{constant_coeffs, resultant};
use crate::exactcore::unipoly::sturm_real_roots;
use crate::exactcore::{Monomial, Poly, UniPoly};

/// `l = sum_k c_k(alpha) x_{k+1}` with each `c_k` a polynomial in `alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub coeffs: Vec<UniPoly>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<UniPoly>) -> Self {
        LinearForm { coeffs }
    }

    /// `x1 + alpha x2 + ... + alpha^(n-1) xn`.
    pub fn canonical(nvars: usize) -> Self {
        let coeffs = (0..nvars)
            .map(|k| {
                let mut c = vec![Rational::zero(); k + 1];
                c[k] = Rational::from_integer(1.into());
                UniPoly::new(c)
            })
            .collect();
        LinearForm { coeffs }
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficients reduced modulo `m`.
    pub fn reduce(&self, m: &UniPoly) -> LinearForm {
        LinearForm {
            coeffs: self.coeffs.iter().map(|c| c.rem(m)).collect(),
        }
    }

    /// Whether `l` is `x1 + alpha x2 + alpha^2 x3` in `Q[t]/(m)`.
    pub fn is_canonical_mod(&self, m: &UniPoly) -> bool {
        self.nvars() == 3 && self.reduce(m) == LinearForm::canonical(3).reduce(m)
    }

    /// Parses comma-separated coefficients in `t` (or `a`): `1, t, t^2`.
    pub fn parse(s: &str) -> Result<Self> {
        let coeffs = s
            .split([',', ';'])
            .map(|part| {
                let part = part.trim();
                if part.contains('a') {
                    UniPoly::parse_in(part, 'a')
                } else {
                    UniPoly::parse_in(part, 't')
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if coeffs.is_empty() {
            return Err(Error::Parse("empty linear form".into()));
        }
        Ok(LinearForm { coeffs })
    }

    /// Value of each coefficient at a complex point, rounded to `bits`.
    pub fn eval_at(&self, z: &CRat, bits: u32) -> Vec<CRat> {
        self.coeffs
            .iter()
            .map(|c| eval_rounded(c, z, bits))
            .collect()
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(", "))
    }
}

fn check_minpoly(m: &UniPoly) -> Result<()> {
    if m.degree().unwrap_or(0) == 0 {
        return Err(Error::DimensionMismatch(
            "minimal polynomial must have positive degree".into(),
        ));
    }
    if !m.is_monic() {
        return Err(Error::NotMonic);
    }
    if !m.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    Ok(())
}

/// `N_{K/Q}(l) = Res_t(m(t), l(t; x))`, the product of the conjugates of `l`.
pub fn norm_form(m: &UniPoly, l: &LinearForm) -> Result<Poly> {
    check_minpoly(m)?;
    let n = l.nvars();
    let reduced = l.reduce(m);
    let deg = m.degree().unwrap();
    let b: Vec<Poly> = (0..deg)
        .map(|j| {
            let mut p = Poly::zero(n);
            for (k, c) in reduced.coeffs.iter().enumerate() {
                p.add_term(Monomial::var(n, k), c.coeff(j));
            }
            p
        })
        .collect();
    resultant(&constant_coeffs(m.coeffs(), n), &b)
}

/// Polynomial with Gaussian-rational coefficients, kept as two real parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexPoly {
    pub re: Poly,
    pub im: Poly,
}

impl ComplexPoly {
    fn one(n: usize) -> Self {
        ComplexPoly {
            re: Poly::constant(n, Rational::from_integer(1.into())),
            im: Poly::zero(n),
        }
    }

    fn linear(values: &[CRat]) -> Self {
        let n = values.len();
        let mut re = Poly::zero(n);
        let mut im = Poly::zero(n);
        for (k, v) in values.iter().enumerate() {
            re.add_term(Monomial::var(n, k), v.re.clone());
            im.add_term(Monomial::var(n, k), v.im.clone());
        }
        ComplexPoly { re, im }
    }

    fn mul_rounded(&self, o: &ComplexPoly, bits: u32) -> Self {
        let round = |p: Poly| p.map_coeffs(|c| round_bits(c, bits));
        ComplexPoly {
            re: round(&(&self.re * &o.re) - &(&self.im * &o.im)),
            im: round(&(&self.re * &o.im) + &(&self.im * &o.re)),
        }
    }
}

/// Product of `l` over the roots with the given indices.
fn conjugate_product(rs: &RootSystem, l: &LinearForm, indices: &[usize], bits: u32) -> ComplexPoly {
    indices.iter().fold(ComplexPoly::one(l.nvars()), |acc, &i| {
        let values = l.eval_at(&rs.roots[i].center, bits);
        acc.mul_rounded(&ComplexPoly::linear(&values), bits)
    })
}

/// Numeric product of all conjugates of `l`; an oracle for [`norm_form`].
pub fn numeric_norm(m: &UniPoly, l: &LinearForm, precision_bits: u32) -> Result<ComplexPoly> {
    let rs = isolate_roots(m, precision_bits)?;
    let all: Vec<usize> = (0..rs.degree()).collect();
    Ok(conjugate_product(&rs, l, &all, precision_bits))
}

/// Largest coefficient of `p` in absolute value.
pub fn max_abs_coeff(p: &Poly) -> Rational {
    p.terms()
        .map(|(_, c)| c.abs())
        .max()
        .unwrap_or_else(Rational::zero)
}

/// `f = g_re^2 + g_im^2` up to `residual`, with `g` the product of the
/// conjugates of `l` over the roots in the upper half plane.
#[derive(Clone, Debug)]
pub struct RealSos2 {
    pub f: Poly,
    pub g_re: Poly,
    pub g_im: Poly,
    pub residual: Rational,
    pub precision_bits: u32,
}

impl RealSos2 {
    pub fn residual_f64(&self) -> f64 {
        to_f64(&self.residual)
    }
}

pub fn real_sos2_witness(m: &UniPoly, l: &LinearForm, precision_bits: u32) -> Result<RealSos2> {
    check_minpoly(m)?;
    let real = sturm_real_roots(m);
    if real > 0 {
        return Err(Error::NotTotallyImaginary(real));
    }
    let f = norm_form(m, l)?;
    let rs = isolate_roots(m, precision_bits)?;
    let g = conjugate_product(&rs, l, &rs.upper_half(), precision_bits);
    let diff = &(&f - &g.re.square()) - &g.im.square();
    Ok(RealSos2 {
        f,
        residual: max_abs_coeff(&diff),
        g_re: g.re,
        g_im: g.im,
        precision_bits: rs.precision_bits,
    })
}
