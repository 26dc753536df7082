//! Boundary and uniqueness certificates for a form `f` and a functional `alpha`.

use std::fmt;

use num_traits::Zero;

use super::functional::{kernel_u, moment_matrix, LinearFunctional};
use super::ideal::same_span;
use crate::error::{Error, Result};
use crate::exactcore::{psd_check, Poly, Rational, SymMatrix};
use crate::gram::extract::{extract_qsos, QSosWitness};
use crate::gram::face::product_matrix;
use crate::gram::point::{gram_from_squares, is_gram_point, GramPoint, SosRep};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryVerdict {
    Certified,
    /// `b_alpha` is not PSD, so `alpha` is not in the dual cone.
    NotInDualCone,
    /// `rank b_alpha <= 1`.
    PointEvaluation,
    AlphaNonzero,
}

impl fmt::Display for BoundaryVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundaryVerdict::Certified => "certified",
            BoundaryVerdict::NotInDualCone => "rejected: moment matrix is not PSD",
            BoundaryVerdict::PointEvaluation => "rejected: point evaluation (rank <= 1)",
            BoundaryVerdict::AlphaNonzero => "rejected: alpha(f) != 0",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryCert {
    pub psd_rank: Option<usize>,
    pub alpha_f: Rational,
    /// `dim U_alpha`, when `b_alpha` is PSD.
    pub kernel_dim: Option<usize>,
    /// Gram point of `f`, present when certified.
    pub witness: Option<GramPoint>,
    pub verdict: BoundaryVerdict,
}

impl BoundaryCert {
    pub fn certified(&self) -> bool {
        self.verdict == BoundaryVerdict::Certified
    }
}

impl fmt::Display for BoundaryCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.psd_rank {
            Some(r) => writeln!(f, "moment matrix: PSD, rank {r}")?,
            None => writeln!(f, "moment matrix: not PSD")?,
        }
        if let Some(k) = self.kernel_dim {
            writeln!(f, "kernel dimension: {k}")?;
        }
        writeln!(f, "alpha(f): {}", self.alpha_f)?;
        if let Some(w) = &self.witness {
            writeln!(f, "gram witness rank: {}", w.rank())?;
        }
        write!(f, "verdict: {}", self.verdict)
    }
}

struct DualChecks {
    b: SymMatrix,
    psd_rank: Option<usize>,
    alpha_f: Rational,
    verdict: BoundaryVerdict,
}

fn dual_checks(f: &Poly, alpha: &LinearFunctional) -> Result<DualChecks> {
    let b = moment_matrix(alpha)?;
    let alpha_f = alpha.apply(f)?;
    let psd_rank = psd_check(&b).rank();
    let verdict = match psd_rank {
        None => BoundaryVerdict::NotInDualCone,
        Some(r) if r < 2 => BoundaryVerdict::PointEvaluation,
        Some(_) if !alpha_f.is_zero() => BoundaryVerdict::AlphaNonzero,
        Some(_) => BoundaryVerdict::Certified,
    };
    Ok(DualChecks {
        b,
        psd_rank,
        alpha_f,
        verdict,
    })
}

/// `alpha` is a nonzero element of the dual cone that is not a point
/// evaluation and vanishes at `f`; with a Gram witness this puts `f` on the
/// boundary of the SOS cone. Without a supplied witness one is derived
/// from `U_alpha`.
pub fn boundary_cert(
    f: &Poly,
    alpha: &LinearFunctional,
    witness: Option<&GramPoint>,
) -> Result<BoundaryCert> {
    let c = dual_checks(f, alpha)?;
    let kernel_dim = c.psd_rank.map(|r| c.b.size() - r);
    let mut cert = BoundaryCert {
        psd_rank: c.psd_rank,
        alpha_f: c.alpha_f,
        kernel_dim,
        witness: None,
        verdict: c.verdict,
    };
    if !cert.certified() {
        return Ok(cert);
    }
    let w = match witness {
        Some(g) if is_gram_point(g, f)?.is_gram_point() => g.clone(),
        Some(_) => return Err(Error::MissingGramWitness),
        None => {
            let u = kernel_u(&c.b, alpha.n)?;
            let sos = extract_qsos(f, &u).map_err(|_| Error::MissingGramWitness)?;
            gram_from_squares(&SosRep::with_nvars(sos.expanded, alpha.n)?)
        }
    };
    cert.witness = Some(w);
    Ok(cert)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UniquenessVerdict {
    /// `Gram(f)` is the single point given by `gram`.
    Singleton,
    /// The products of the kernel basis are dependent; this route cannot decide.
    Inconclusive,
    /// No PSD Gram matrix supported on `U_alpha` exists, so `f` is not SOS.
    Contradiction,
    PreconditionFailed(BoundaryVerdict),
}

impl fmt::Display for UniquenessVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UniquenessVerdict::Singleton => f.write_str("singleton Gram spectrahedron"),
            UniquenessVerdict::Inconclusive => {
                f.write_str("inconclusive: kernel basis not quadratically independent")
            }
            UniquenessVerdict::Contradiction => {
                f.write_str("contradiction: f is not a sum of squares")
            }
            UniquenessVerdict::PreconditionFailed(v) => write!(f, "precondition failed ({v})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniquenessCert {
    /// Basis of `U_alpha` used for the restricted Gram matrix.
    pub kernel: Vec<Poly>,
    pub quadratically_independent: bool,
    pub witness: Option<QSosWitness>,
    pub verdict: UniquenessVerdict,
}

impl UniquenessCert {
    pub fn is_singleton(&self) -> bool {
        self.verdict == UniquenessVerdict::Singleton
    }

    /// The unique restricted Gram matrix.
    pub fn gram(&self) -> Option<&SymMatrix> {
        self.witness.as_ref().map(|w| &w.gram)
    }
}

impl fmt::Display for UniquenessCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.kernel.iter().map(ToString::to_string).collect();
        writeln!(f, "kernel basis: {}", names.join("; "))?;
        writeln!(
            f,
            "quadratically independent: {}",
            self.quadratically_independent
        )?;
        if let Some(w) = &self.witness {
            writeln!(f, "restricted gram matrix:\n{}", w.gram.matrix())?;
            writeln!(f, "representation: {w}")?;
        }
        write!(f, "verdict: {}", self.verdict)
    }
}

/// Every Gram matrix `G` of `f` has `<G, b_alpha> = alpha(f) = 0`, so its
/// column space lies in `U_alpha`; quadratic independence of `U_alpha` then
/// leaves exactly one candidate. `basis`, when given, must span `U_alpha`.
pub fn uniqueness_cert(
    f: &Poly,
    alpha: &LinearFunctional,
    basis: Option<&[Poly]>,
) -> Result<UniquenessCert> {
    let c = dual_checks(f, alpha)?;
    let n = alpha.n;
    let d = alpha.degree / 2;
    let u = match c.verdict {
        BoundaryVerdict::Certified => kernel_u(&c.b, n)?,
        v => {
            return Ok(UniquenessCert {
                kernel: Vec::new(),
                quadratically_independent: false,
                witness: None,
                verdict: UniquenessVerdict::PreconditionFailed(v),
            })
        }
    };
    let kernel = match basis {
        Some(b) => {
            let b: Vec<Poly> = b.iter().map(|p| p.clone().with_nvars(n)).collect();
            if b.len() != u.len() || !same_span(&b, &u, n, d) {
                return Err(Error::DimensionMismatch(
                    "basis does not span the kernel of the moment matrix".into(),
                ));
            }
            b
        }
        None => u,
    };
    let r = kernel.len();
    let quadratically_independent =
        r > 0 && product_matrix(&kernel, n, d).rank() == r * (r + 1) / 2;
    let mut cert = UniquenessCert {
        kernel,
        quadratically_independent,
        witness: None,
        verdict: UniquenessVerdict::Inconclusive,
    };
    if !quadratically_independent {
        return Ok(cert);
    }
    match extract_qsos(f, &cert.kernel) {
        Ok(w) => {
            cert.witness = Some(w);
            cert.verdict = UniquenessVerdict::Singleton;
        }
        Err(Error::NotPsd | Error::NoSolution) => cert.verdict = UniquenessVerdict::Contradiction,
        Err(e) => return Err(e),
    }
    Ok(cert)
}
