//! Exact positive-semidefiniteness by symmetric elimination.
//!
//! Each step takes the leading diagonal entry of the current Schur complement.
//! A negative pivot, or a zero pivot with a nonzero row, refutes PSD and yields
//! a rational vector `v` with `v^T M v < 0`. Otherwise `M = L D L^T` with `L`
//! unit lower triangular and `D >= 0`.

use num_traits::{One, Signed, Zero};

use super::matrix::{Matrix, SymMatrix};
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ldl {
    /// Unit lower-triangular factor.
    pub lower: Matrix,
    /// Nonnegative pivots.
    pub pivots: Vec<Rational>,
}

impl Ldl {
    pub fn rank(&self) -> usize {
        self.pivots.iter().filter(|d| d.is_positive()).count()
    }

    /// Rebuilds `L D L^T`.
    pub fn reconstruct(&self) -> Matrix {
        let n = self.pivots.len();
        Matrix::from_fn(n, n, |i, j| {
            (0..n)
                .map(|k| &self.lower[(i, k)] * &self.pivots[k] * &self.lower[(j, k)])
                .sum()
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PsdVerdict {
    Psd(Ldl),
    /// `v^T M v = value < 0`.
    NotPsd {
        witness: Vec<Rational>,
        value: Rational,
    },
}

impl PsdVerdict {
    pub fn is_psd(&self) -> bool {
        matches!(self, PsdVerdict::Psd(_))
    }

    pub fn rank(&self) -> Option<usize> {
        match self {
            PsdVerdict::Psd(l) => Some(l.rank()),
            PsdVerdict::NotPsd { .. } => None,
        }
    }
}

pub fn psd_check(m: &SymMatrix) -> PsdVerdict {
    let n = m.size();
    let mut s = m.matrix().clone();
    let mut lower = Matrix::identity(n);
    let mut pivots = Vec::with_capacity(n);
    for k in 0..n {
        let d = s[(k, k)].clone();
        if d.is_negative() {
            let mut y = vec![Rational::zero(); n];
            y[k] = Rational::one();
            return refute(m, &lower, k, y);
        }
        if d.is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !s[(k, j)].is_zero()) {
                // On span(e_k, e_j): lam^2*0 + 2*lam*s_kj + s_jj with this lam equals -1.
                let lam = -(&s[(j, j)] + Rational::one())
                    / (&s[(k, j)] * Rational::from_integer(2.into()));
                let mut y = vec![Rational::zero(); n];
                y[k] = lam;
                y[j] = Rational::one();
                return refute(m, &lower, k, y);
            }
            pivots.push(d);
            continue;
        }
        for i in k + 1..n {
            lower[(i, k)] = &s[(i, k)] / &d;
        }
        for i in k + 1..n {
            if s[(i, k)].is_zero() {
                continue;
            }
            for j in k + 1..n {
                let v = &lower[(i, k)] * &s[(k, j)];
                s[(i, j)] -= v;
            }
        }
        for i in k + 1..n {
            s[(i, k)] = Rational::zero();
            s[(k, i)] = Rational::zero();
        }
        pivots.push(d);
    }
    PsdVerdict::Psd(Ldl { lower, pivots })
}

/// Lifts a witness `y` for the trailing Schur complement back through the
/// eliminated columns: `x = L_k^{-T} y` gives `x^T M x = y^T S y`.
fn refute(m: &SymMatrix, lower: &Matrix, _k: usize, y: Vec<Rational>) -> PsdVerdict {
    let n = y.len();
    let mut x = y;
    for i in (0..n).rev() {
        let mut v = x[i].clone();
        for r in i + 1..n {
            v -= &lower[(r, i)] * &x[r];
        }
        x[i] = v;
    }
    let value = m.quadratic_form(&x);
    debug_assert!(value.is_negative());
    PsdVerdict::NotPsd { witness: x, value }
}

/// One weighted square `weight * (vector . X)^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedSquare {
    pub weight: Rational,
    pub vector: Vec<Rational>,
}

/// `M = sum_k d_k v_k v_k^T` with `d_k > 0`; one term per positive pivot.
pub fn ldl_sos(m: &SymMatrix) -> Result<Vec<WeightedSquare>> {
    match psd_check(m) {
        PsdVerdict::NotPsd { .. } => Err(Error::NotPsd),
        PsdVerdict::Psd(ldl) => Ok(ldl
            .pivots
            .iter()
            .enumerate()
            .filter(|(_, d)| d.is_positive())
            .map(|(k, d)| WeightedSquare {
                weight: d.clone(),
                vector: ldl.lower.column(k),
            })
            .collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::{rat, ratio};

    fn sym(rows: &[&[i64]]) -> SymMatrix {
        let n = rows.len();
        SymMatrix::new(Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
            n,
        ))
        .unwrap()
    }

    #[test]
    fn identity_is_psd() {
        let v = psd_check(&SymMatrix::identity(2));
        let PsdVerdict::Psd(l) = v else { panic!() };
        assert_eq!(l.rank(), 2);
        assert_eq!(l.pivots, vec![rat(1), rat(1)]);
    }

    #[test]
    fn swap_matrix_is_refuted() {
        let m = sym(&[&[0, 1], &[1, 0]]);
        match psd_check(&m) {
            PsdVerdict::NotPsd { witness, value } => {
                assert_eq!(m.quadratic_form(&witness), value);
                assert!(value.is_negative());
            }
            _ => panic!("indefinite matrix accepted"),
        }
    }

    #[test]
    fn witness_after_elimination() {
        // Leading block is fine; the Schur complement is negative.
        let m = sym(&[&[1, 2, 0], &[2, 3, 0], &[0, 0, 5]]);
        let PsdVerdict::NotPsd { witness, value } = psd_check(&m) else {
            panic!()
        };
        assert!(value.is_negative());
        assert_eq!(m.quadratic_form(&witness), value);
    }

    #[test]
    fn zero_rows_are_skipped() {
        let m = sym(&[&[0, 0, 0], &[0, 1, 1], &[0, 1, 1]]);
        assert_eq!(psd_check(&m).rank(), Some(1));
    }

    #[test]
    fn ldl_terms() {
        let terms = ldl_sos(&SymMatrix::identity(2)).unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0].vector, vec![rat(1), rat(0)]);
        assert_eq!(terms[1].vector, vec![rat(0), rat(1)]);

        let terms = ldl_sos(&sym(&[&[1, 1], &[1, 1]])).unwrap();
        assert_eq!(
            terms,
            vec![WeightedSquare {
                weight: rat(1),
                vector: vec![rat(1), rat(1)]
            }]
        );

        let terms = ldl_sos(&sym(&[&[2, 1], &[1, 2]])).unwrap();
        assert_eq!(
            terms,
            vec![
                WeightedSquare {
                    weight: rat(2),
                    vector: vec![rat(1), ratio(1, 2)]
                },
                WeightedSquare {
                    weight: ratio(3, 2),
                    vector: vec![rat(0), rat(1)]
                },
            ]
        );
        assert_eq!(ldl_sos(&sym(&[&[0, 1], &[1, 0]])), Err(Error::NotPsd));
    }
}
