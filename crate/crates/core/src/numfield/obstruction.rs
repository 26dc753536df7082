//! General position of the conjugate lines and the certificate that a norm
//! form is not a sum of squares over `Q`.

use std::fmt;

use super::complex::{eval_ball, Ball};
use super::galois::{quartic_galois, GaloisData};
use super::norm::{norm_form, LinearForm};
use super::roots::{isolate_roots, RootSystem, DEFAULT_PRECISION, MAX_PRECISION};
use crate::error::{Error, Result};
use crate::exactcore::unipoly::sturm_real_roots;
use crate::exactcore::{Poly, UniPoly};
use crate::permgroup::{char_number, CharNumber, GroupDesc, Membership, Perm, DEFAULT_ENUM_BOUND};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneralPosition {
    /// `l = x1 + a x2 + a^2 x3`: every 3x3 minor is a Vandermonde determinant.
    ExactVandermonde,
    /// Every triple determinant was enclosed in a ball avoiding zero.
    NumericCertified {
        precision_bits: u32,
    },
    Inconclusive {
        precision_bits: u32,
    },
}

impl GeneralPosition {
    pub fn holds(&self) -> bool {
        !matches!(self, GeneralPosition::Inconclusive { .. })
    }
}

impl fmt::Display for GeneralPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneralPosition::ExactVandermonde => write!(f, "ExactVandermonde"),
            GeneralPosition::NumericCertified { precision_bits } => {
                write!(f, "NumericCertified ({precision_bits} bits)")
            }
            GeneralPosition::Inconclusive { precision_bits: 0 } => {
                write!(
                    f,
                    "Inconclusive (needs a ternary form and a squarefree minpoly)"
                )
            }
            GeneralPosition::Inconclusive { precision_bits } => {
                write!(f, "Inconclusive (up to {precision_bits} bits)")
            }
        }
    }
}

fn det3(rows: &[Vec<Ball>; 3], bits: u32) -> Ball {
    let m = |a: &Ball, b: &Ball| a.mul(b, bits);
    let minor =
        |r1: &[Ball], r2: &[Ball], i: usize, j: usize| m(&r1[i], &r2[j]).sub(&m(&r1[j], &r2[i]));
    let (a, b, c) = (&rows[0], &rows[1], &rows[2]);
    m(&a[0], &minor(b, c, 1, 2))
        .sub(&m(&a[1], &minor(b, c, 0, 2)))
        .add(&m(&a[2], &minor(b, c, 0, 1)))
}

fn triples_certified(rs: &RootSystem, l: &LinearForm, bits: u32) -> bool {
    let values: Vec<Vec<Ball>> = rs
        .roots
        .iter()
        .map(|z| l.coeffs.iter().map(|c| eval_ball(c, z, bits)).collect())
        .collect();
    let n = values.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let rows = [values[i].clone(), values[j].clone(), values[k].clone()];
                if !det3(&rows, bits).excludes_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether no three conjugates of the ternary form `l` share a nontrivial zero.
pub fn general_position(m: &UniPoly, l: &LinearForm, precision_bits: u32) -> GeneralPosition {
    let cap = precision_bits.max(MAX_PRECISION);
    if !m.is_squarefree() || l.nvars() != 3 {
        return GeneralPosition::Inconclusive { precision_bits: 0 };
    }
    if l.is_canonical_mod(m) {
        return GeneralPosition::ExactVandermonde;
    }
    let mut bits = precision_bits.max(64);
    loop {
        match isolate_roots(m, bits) {
            Ok(rs) if triples_certified(&rs, l, bits) => {
                return GeneralPosition::NumericCertified {
                    precision_bits: bits,
                };
            }
            Ok(_) => {}
            Err(_) => {
                return GeneralPosition::Inconclusive {
                    precision_bits: bits,
                }
            }
        }
        if bits >= cap {
            return GeneralPosition::Inconclusive {
                precision_bits: bits,
            };
        }
        bits = (bits * 2).min(cap);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    /// The norm form is not a sum of squares over `Q`.
    NotQSos,
    NoObstruction,
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conclusion::NotQSos => write!(f, "NotQSos"),
            Conclusion::NoObstruction => write!(f, "NoObstruction"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ObstructionOptions {
    pub precision_bits: u32,
    pub enum_bound: usize,
}

impl Default for ObstructionOptions {
    fn default() -> Self {
        ObstructionOptions {
            precision_bits: DEFAULT_PRECISION,
            enum_bound: DEFAULT_ENUM_BOUND,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ObstructionCert {
    pub minpoly: UniPoly,
    pub linear_form: LinearForm,
    /// Half the field degree.
    pub d: usize,
    pub norm_form: Option<Poly>,
    pub squarefree: bool,
    pub real_roots: usize,
    pub general_position: Option<GeneralPosition>,
    pub galois_label: Option<String>,
    pub group: Option<GroupDesc>,
    pub tau: Option<Perm>,
    pub c: Option<CharNumber>,
    pub conclusion: Conclusion,
    /// The check that failed or was indecisive, when the conclusion is `NoObstruction`.
    pub failed_check: Option<String>,
    pub narrative: Vec<String>,
}

impl ObstructionCert {
    pub fn totally_imaginary(&self) -> bool {
        self.real_roots == 0
    }

    pub fn threshold(&self) -> usize {
        self.d + 1
    }
}

impl fmt::Display for ObstructionCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        writeln!(f, "minpoly: {}", self.minpoly)?;
        writeln!(f, "linear form coefficients: {}", self.linear_form)?;
        writeln!(
            f,
            "degree: {} (d = {})",
            self.minpoly.degree().unwrap_or(0),
            self.d
        )?;
        if let Some(nf) = &self.norm_form {
            writeln!(f, "norm form: {nf}")?;
        }
        writeln!(f, "squarefree: {}", yn(self.squarefree))?;
        writeln!(f, "real roots: {}", self.real_roots)?;
        writeln!(f, "totally imaginary: {}", yn(self.totally_imaginary()))?;
        if let Some(gp) = &self.general_position {
            writeln!(f, "general position: {gp}")?;
        }
        if let Some(label) = &self.galois_label {
            writeln!(f, "galois group: {label}")?;
        }
        if let Some(g) = &self.group {
            writeln!(
                f,
                "generators: {}",
                g.generators
                    .iter()
                    .map(Perm::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            )?;
        }
        if let Some(t) = &self.tau {
            writeln!(f, "tau: {t}")?;
        }
        if let Some(c) = &self.c {
            let verified = match c.membership {
                Membership::Verified => "verified",
                Membership::Unverified => "unverified",
            };
            writeln!(
                f,
                "c: {} (threshold d+1 = {}, membership {verified})",
                c.c,
                self.threshold()
            )?;
        }
        for line in &self.narrative {
            writeln!(f, "check: {line}")?;
        }
        if let Some(fc) = &self.failed_check {
            writeln!(f, "failed check: {fc}")?;
        }
        write!(f, "conclusion: {}", self.conclusion)
    }
}

/// Runs every hypothesis of the obstruction in turn. `galois` is required
/// above degree 4 and derived from the resolvent cubic for quartics.
pub fn obstruction_check(
    m: &UniPoly,
    l: &LinearForm,
    galois: Option<&GaloisData>,
    opts: ObstructionOptions,
) -> Result<ObstructionCert> {
    let degree = m.degree().unwrap_or(0);
    if degree < 4 {
        return Err(Error::DegreeTooSmall(degree));
    }
    if degree > 4 && galois.is_none() {
        return Err(Error::GaloisDataMissing(degree));
    }
    if !m.is_monic() {
        return Err(Error::NotMonic);
    }
    if let Some(g) = galois {
        if g.group.degree != degree {
            return Err(Error::DimensionMismatch(format!(
                "Galois group has degree {} but the field has degree {degree}",
                g.group.degree
            )));
        }
    }
    let mut cert = ObstructionCert {
        minpoly: m.clone(),
        linear_form: l.clone(),
        d: degree / 2,
        norm_form: None,
        squarefree: m.is_squarefree(),
        real_roots: 0,
        general_position: None,
        galois_label: None,
        group: None,
        tau: None,
        c: None,
        conclusion: Conclusion::NoObstruction,
        failed_check: None,
        narrative: Vec::new(),
    };
    let fail = |mut cert: ObstructionCert, check: &str| {
        cert.failed_check = Some(check.to_string());
        Ok(cert)
    };

    if !cert.squarefree {
        cert.narrative
            .push("squarefree (exact gcd with derivative): fails".into());
        return fail(cert, "squarefree");
    }
    cert.narrative
        .push("squarefree (exact gcd with derivative): holds".into());
    cert.real_roots = sturm_real_roots(m);
    if cert.real_roots > 0 {
        cert.narrative.push(format!(
            "totally imaginary (Sturm): fails, {} real roots",
            cert.real_roots
        ));
        return fail(cert, "totally imaginary");
    }
    cert.narrative
        .push("totally imaginary (Sturm): holds, 0 real roots".into());
    cert.norm_form = Some(norm_form(m, l)?);

    let gp = general_position(m, l, opts.precision_bits);
    cert.general_position = Some(gp);
    cert.narrative.push(format!("general position: {gp}"));
    if !gp.holds() {
        return fail(cert, "general position");
    }

    let roots = isolate_roots(m, opts.precision_bits)?;
    let data = match galois {
        Some(g) => {
            cert.galois_label = Some(if g.group.label.is_empty() {
                "supplied".into()
            } else {
                g.group.label.clone()
            });
            if g.tau != roots.tau {
                cert.narrative.push(format!(
                    "supplied tau {} differs from the root pairing {}; using the supplied labeling",
                    g.tau, roots.tau
                ));
            }
            g.clone()
        }
        None => {
            let q = quartic_galois(m)?;
            cert.galois_label = Some(q.label.to_string());
            cert.narrative.push(format!(
                "galois group from resolvent cubic {}: {}",
                q.resolvent.display_in('y'),
                q.label
            ));
            GaloisData::with_roots(q.group, &q.roots)?
        }
    };
    cert.narrative
        .push(format!("tau = {} on roots ordered by argument", data.tau));
    let c = char_number(&data.group, &data.tau, opts.enum_bound)?;
    cert.narrative.push(format!(
        "characteristic number: c = {}, need c >= d+1 = {}",
        c.c,
        cert.d + 1
    ));
    let passes = c.c > cert.d;
    cert.group = Some(data.group);
    cert.tau = Some(data.tau);
    cert.c = Some(c);
    if !passes {
        return fail(cert, "characteristic number");
    }
    cert.conclusion = Conclusion::NotQSos;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(s: &str) -> UniPoly {
        s.parse().unwrap()
    }

    fn lf(s: &str) -> LinearForm {
        LinearForm::parse(s).unwrap()
    }

    #[test]
    fn general_position_verdicts() {
        assert_eq!(
            general_position(&u("t^4 + 2"), &LinearForm::canonical(3), 128),
            GeneralPosition::ExactVandermonde
        );
        assert!(matches!(
            general_position(&u("t^4 + 2"), &lf("1, t, t^3"), 128),
            GeneralPosition::NumericCertified { .. }
        ));
        assert!(!general_position(&u("t^4 + 2"), &lf("1, 0, 0"), 128).holds());
        assert!(!general_position(&u("t^4 + 2"), &lf("1, t"), 128).holds());
    }

    #[test]
    fn s4_field_is_obstructed() {
        let cert = obstruction_check(
            &u("t^4 + t + 1"),
            &LinearForm::canonical(3),
            None,
            Default::default(),
        )
        .unwrap();
        assert_eq!(cert.c.as_ref().unwrap().c, 3);
        assert_eq!(cert.conclusion, Conclusion::NotQSos);
        assert_eq!(cert.galois_label.as_deref(), Some("S4"));
        assert!(cert.to_string().ends_with("conclusion: NotQSos"));
    }

    #[test]
    fn dihedral_field_is_not() {
        let cert = obstruction_check(
            &u("t^4 + 2"),
            &LinearForm::canonical(3),
            None,
            Default::default(),
        )
        .unwrap();
        assert_eq!(cert.c.as_ref().unwrap().c, 2);
        assert_eq!(cert.tau.as_ref().unwrap().to_string(), "(1 4)(2 3)");
        assert_eq!(cert.conclusion, Conclusion::NoObstruction);
        assert_eq!(cert.failed_check.as_deref(), Some("characteristic number"));
    }

    #[test]
    fn failing_hypotheses_are_named() {
        let l = LinearForm::canonical(3);
        let c = obstruction_check(&u("t^4 - t - 1"), &l, None, Default::default()).unwrap();
        assert_eq!(c.failed_check.as_deref(), Some("totally imaginary"));
        let c = obstruction_check(&u("t^4 + 2*t^2 + 1"), &l, None, Default::default()).unwrap();
        assert_eq!(c.failed_check.as_deref(), Some("squarefree"));
        let c =
            obstruction_check(&u("t^4 + t + 1"), &lf("1, 0, 0"), None, Default::default()).unwrap();
        assert_eq!(c.failed_check.as_deref(), Some("general position"));
    }

    #[test]
    fn errors() {
        let l = LinearForm::canonical(3);
        assert_eq!(
            obstruction_check(&u("t^2 + 1"), &l, None, Default::default()).unwrap_err(),
            Error::DegreeTooSmall(2)
        );
        assert_eq!(
            obstruction_check(&u("t^6 + 2"), &l, None, Default::default()).unwrap_err(),
            Error::GaloisDataMissing(6)
        );
    }

    #[test]
    fn sextic_with_supplied_group() {
        let m = u("t^6 + t + 1");
        let rs = isolate_roots(&m, 128).unwrap();
        let s6 = GroupDesc::parse("(1 2 3 4 5 6),(1 2)", Some(6), "S6").unwrap();
        let data = GaloisData::with_roots(s6, &rs).unwrap();
        let cert = obstruction_check(
            &m,
            &LinearForm::canonical(3),
            Some(&data),
            Default::default(),
        )
        .unwrap();
        assert_eq!(cert.c.as_ref().unwrap().c, 5);
        assert_eq!(cert.conclusion, Conclusion::NotQSos);
    }
}
