//! Galois groups of quartic fields and Galois data on root indices.

use std::fmt;

use num_traits::{One, Zero};

use super::complex::Ball;
use super::roots::{isolate_roots, RootSystem, DEFAULT_PRECISION, MAX_PRECISION};
use crate::error::{Error, Result};
use crate::exactcore::rational::{rational_sqrt, Rational};
use crate::exactcore::unipoly::{integral_monic, rational_roots};
use crate::exactcore::UniPoly;
use crate::permgroup::charnum::check_fpf_involution;
use crate::permgroup::{GroupDesc, Perm};

/// A permutation group on the root indices together with complex conjugation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisData {
    pub group: GroupDesc,
    pub tau: Perm,
}

impl GaloisData {
    pub fn new(group: GroupDesc, tau: Perm) -> Result<Self> {
        check_fpf_involution(&tau, group.degree)?;
        Ok(GaloisData { group, tau })
    }

    /// Uses the conjugation pairing of `roots` as `tau`.
    pub fn with_roots(group: GroupDesc, roots: &RootSystem) -> Result<Self> {
        if roots.degree() != group.degree {
            return Err(Error::DimensionMismatch(format!(
                "group has degree {} but the field has degree {}",
                group.degree,
                roots.degree()
            )));
        }
        Self::new(group, roots.tau.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuarticGroup {
    S4,
    A4,
    D4,
    C4,
    V4,
}

impl fmt::Display for QuarticGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            QuarticGroup::S4 => "S4",
            QuarticGroup::A4 => "A4",
            QuarticGroup::D4 => "D4",
            QuarticGroup::C4 => "C4",
            QuarticGroup::V4 => "V4",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct QuarticGalois {
    pub label: QuarticGroup,
    /// Generators act on the indices of `roots`.
    pub group: GroupDesc,
    pub resolvent: UniPoly,
    pub discriminant: Rational,
    /// The rational resolvent root when exactly one exists (D4, C4).
    pub resolvent_root: Option<Rational>,
    pub roots: RootSystem,
}

/// `y^3 - c y^2 + (bd - 4e) y - (b^2 e - 4ce + d^2)` for `t^4 + b t^3 + c t^2 + d t + e`,
/// with roots `a1 a2 + a3 a4`, `a1 a3 + a2 a4`, `a1 a4 + a2 a3`.
pub fn resolvent_cubic(m: &UniPoly) -> UniPoly {
    let m = m.monic();
    let (b, c, d, e) = (m.coeff(3), m.coeff(2), m.coeff(1), m.coeff(0));
    let four = Rational::from_integer(4.into());
    UniPoly::new(vec![
        -(&b * &b * &e - &four * &c * &e + &d * &d),
        &b * &d - &four * &e,
        -c,
        Rational::one(),
    ])
}

/// Discriminant of a monic cubic `y^3 + a y^2 + b y + c`.
pub fn cubic_discriminant(r: &UniPoly) -> Rational {
    let r = r.monic();
    let (a, b, c) = (r.coeff(2), r.coeff(1), r.coeff(0));
    let k = |n: i64| Rational::from_integer(n.into());
    k(18) * &a * &b * &c - k(4) * &a * &a * &a * &c + &a * &a * &b * &b
        - k(4) * &b * &b * &b
        - k(27) * &c * &c
}

fn is_rational_square(q: &Rational) -> bool {
    rational_sqrt(q).is_some()
}

/// Whether `x^2 + p x + q` splits over `Q(sqrt(delta))`.
fn splits_over(p: &Rational, q: &Rational, delta: &Rational) -> bool {
    let disc = p * p - Rational::from_integer(4.into()) * q;
    disc.is_zero() || is_rational_square(&disc) || is_rational_square(&(&disc * delta))
}

/// Rejects quartics with a rational root or a rational quadratic factor.
fn check_irreducible_quartic(m: &UniPoly) -> Result<()> {
    let (big, d) = integral_monic(m);
    if let Some(r) = rational_roots(m).first() {
        return Err(Error::Reducible(format!("rational root {r}")));
    }
    let rs = isolate_roots(&big, DEFAULT_PRECISION)?;
    let dr = Rational::from_integer(d);
    for i in 0..4 {
        for j in i + 1..4 {
            let (zi, zj) = (&rs.roots[i].center, &rs.roots[j].center);
            let s = (zi + zj).re.round();
            let p = (zi * zj).re.round();
            let quad = UniPoly::new(vec![p.clone(), -s.clone(), Rational::one()]);
            if big.rem(&quad).is_zero() {
                let f = UniPoly::new(vec![p / (&dr * &dr), -s / &dr, Rational::one()]);
                return Err(Error::Reducible(format!("quadratic factor {f}")));
            }
        }
    }
    Ok(())
}

const PAIRINGS: [[usize; 4]; 3] = [[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]];

/// The pairing `{a,b},{c,d}` whose `a_a a_b + a_c a_d` equals `r`.
fn pairing_for(m: &UniPoly, r: &Rational) -> Result<(RootSystem, [usize; 4])> {
    let mut bits = DEFAULT_PRECISION;
    loop {
        let rs = isolate_roots(m, bits)?;
        let target = super::complex::CRat::real(r.clone());
        let hits: Vec<[usize; 4]> = PAIRINGS
            .iter()
            .copied()
            .filter(|&[a, b, c, d]| {
                let ab = rs.roots[a].mul(&rs.roots[b], bits);
                let cd = rs.roots[c].mul(&rs.roots[d], bits);
                let theta: Ball = ab.add(&cd);
                theta.contains(&target)
            })
            .collect();
        if hits.len() == 1 {
            return Ok((rs, hits[0]));
        }
        if bits >= MAX_PRECISION {
            return Err(Error::PrecisionExhausted(MAX_PRECISION));
        }
        bits *= 2;
    }
}

fn cycles(spec: &str) -> GroupDesc {
    GroupDesc::parse(spec, Some(4), "").expect("valid generators")
}

/// Galois group of an irreducible quartic, realized on the root indices of
/// [`isolate_roots`].
pub fn quartic_galois(m: &UniPoly) -> Result<QuarticGalois> {
    if m.degree() != Some(4) {
        return Err(Error::DimensionMismatch(format!(
            "expected a quartic, got degree {}",
            m.degree().unwrap_or(0)
        )));
    }
    if !m.is_squarefree() {
        return Err(Error::Reducible("repeated factor".into()));
    }
    check_irreducible_quartic(m)?;
    let resolvent = resolvent_cubic(m);
    let discriminant = cubic_discriminant(&resolvent);
    let disc_square = is_rational_square(&discriminant);
    let rroots = rational_roots(&resolvent);
    let (label, gens, roots, resolvent_root) = match rroots.len() {
        0 => {
            let rs = isolate_roots(m, DEFAULT_PRECISION)?;
            if disc_square {
                (QuarticGroup::A4, "(1 2 3),(2 3 4)".to_string(), rs, None)
            } else {
                (QuarticGroup::S4, "(1 2 3 4),(1 2)".to_string(), rs, None)
            }
        }
        1 => {
            let r = rroots[0].clone();
            let monic = m.monic();
            let (b, c, e) = (monic.coeff(3), monic.coeff(2), monic.coeff(0));
            let cyclic = splits_over(&-r.clone(), &e, &discriminant)
                && splits_over(&b, &(&c - &r), &discriminant);
            let (rs, [a, b, c, d]) = pairing_for(m, &r)?;
            let (a, b, c, d) = (a + 1, b + 1, c + 1, d + 1);
            if cyclic {
                (QuarticGroup::C4, format!("({a} {c} {b} {d})"), rs, Some(r))
            } else {
                (
                    QuarticGroup::D4,
                    format!("({a} {c} {b} {d}),({a} {b})"),
                    rs,
                    Some(r),
                )
            }
        }
        _ => {
            let rs = isolate_roots(m, DEFAULT_PRECISION)?;
            (
                QuarticGroup::V4,
                "(1 2)(3 4),(1 3)(2 4)".to_string(),
                rs,
                None,
            )
        }
    };
    let mut group = cycles(&gens);
    group.label = label.to_string();
    Ok(QuarticGalois {
        label,
        group,
        resolvent,
        discriminant,
        resolvent_root,
        roots,
    })
}
