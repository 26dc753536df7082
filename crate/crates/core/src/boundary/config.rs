//! Nine points in the projective plane, their Cayley-Bacharach relation and
//! the admissible weight tuples.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactcore::rational::primitive_integer_vector;
use crate::exactcore::{monomials, parse_rational, Matrix, Poly, Rational};

/// Nine points of `P^2` given by nonzero affine representatives in `Q^3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NinePointConfig {
    pub points: Vec<Vec<Rational>>,
}

/// Two nonzero vectors span the same line.
fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    (0..a.len()).all(|i| (i + 1..a.len()).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
}

impl NinePointConfig {
    pub fn new(points: Vec<Vec<Rational>>) -> Result<Self> {
        if points.len() != 9 {
            return Err(Error::DimensionMismatch(format!(
                "expected 9 points, got {}",
                points.len()
            )));
        }
        if let Some(p) = points.iter().find(|p| p.len() != 3) {
            return Err(Error::DimensionMismatch(format!(
                "points need 3 coordinates, got {}",
                p.len()
            )));
        }
        if points.iter().any(|p| p.iter().all(Zero::is_zero)) {
            return Err(Error::Parse(
                "the zero vector is not a projective point".into(),
            ));
        }
        for i in 0..9 {
            for j in i + 1..9 {
                if proportional(&points[i], &points[j]) {
                    return Err(Error::DuplicatePoint(i + 1, j + 1));
                }
            }
        }
        Ok(NinePointConfig { points })
    }

    /// One point per line as `x, y, z`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let points = text
            .lines()
            .map(|l| l.split('#').next().unwrap().trim())
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.split(',')
                    .map(|c| parse_rational(c.trim()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(points)
    }

    /// Rows are points, columns the cubic monomials.
    pub fn evaluation_matrix(&self) -> Matrix {
        let basis = monomials(3, 3);
        Matrix::from_fn(9, basis.len(), |i, j| basis[j].eval(&self.points[i]))
    }

    /// Echelon basis of the cubics vanishing at all nine points.
    pub fn cubics_through(&self) -> Vec<Poly> {
        let basis = monomials(3, 3);
        let null = self.evaluation_matrix().nullspace();
        if null.is_empty() {
            return Vec::new();
        }
        Matrix::from_rows(null, basis.len())
            .row_space()
            .iter()
            .map(|row| primitive_form(&Poly::from_coeffs(3, &basis, row)))
            .collect()
    }
}

impl fmt::Display for NinePointConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.points {
            writeln!(f, "{}, {}, {}", p[0], p[1], p[2])?;
        }
        Ok(())
    }
}

/// Integer coefficients with content 1 and positive leading coefficient.
pub fn primitive_form(p: &Poly) -> Poly {
    let Some(d) = p.degree() else {
        return p.clone();
    };
    let basis = monomials(p.nvars(), d);
    let ints: Vec<Rational> = primitive_integer_vector(&p.coeff_vector(&basis))
        .into_iter()
        .map(Rational::from_integer)
        .collect();
    Poly::from_coeffs(p.nvars(), &basis, &ints)
}

/// The unique linear relation `sum u_i p(xi_i) = 0` over all cubics `p`,
/// as a primitive integer vector with first nonzero entry positive.
pub fn cb_relation(cfg: &NinePointConfig) -> Result<Vec<Rational>> {
    let left = cfg.evaluation_matrix().transpose().nullspace();
    if left.len() != 1 {
        return Err(Error::NotCayleyBacharach(left.len()));
    }
    Ok(primitive_integer_vector(&left[0])
        .into_iter()
        .map(Rational::from_integer)
        .collect())
}

/// Nine nonzero weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightTuple {
    pub a: Vec<Rational>,
}

impl WeightTuple {
    pub fn new(a: Vec<Rational>) -> Result<Self> {
        if a.len() != 9 {
            return Err(Error::DimensionMismatch(format!(
                "expected 9 weights, got {}",
                a.len()
            )));
        }
        if let Some(i) = a.iter().position(Zero::is_zero) {
            return Err(Error::Parse(format!("weight {} is zero", i + 1)));
        }
        Ok(WeightTuple { a })
    }

    /// Comma-separated rationals.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(
            text.split(',')
                .map(|s| parse_rational(s.trim()))
                .collect::<Result<_>>()?,
        )
    }
}

impl fmt::Display for WeightTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join(&self.a))
    }
}

pub(crate) fn join(v: &[Rational]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleCheck {
    pub negative_entries: usize,
    /// `sum u_i^2 / a_i`.
    pub relation: Rational,
}

impl TupleCheck {
    pub fn passes(&self) -> bool {
        self.negative_entries == 1 && self.relation.is_zero()
    }
}

pub fn check_tuple(u: &[Rational], a: &WeightTuple) -> TupleCheck {
    let relation = u
        .iter()
        .zip(&a.a)
        .fold(Rational::zero(), |acc, (ui, ai)| acc + ui * ui / ai);
    TupleCheck {
        negative_entries: a.a.iter().filter(|x| x.is_negative()).count(),
        relation,
    }
}
