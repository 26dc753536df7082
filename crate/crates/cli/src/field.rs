use clap::Subcommand;

use crate::outcome::{Outcome, INCONCLUSIVE, SUCCESS};
use crate::Globals;
use sosq_core::numfield::{
    isolate_roots, norm_form, obstruction_check, quartic_galois, Conclusion, GaloisData,
    LinearForm, ObstructionOptions,
};
use sosq_core::permgroup::{GroupDesc, Perm};
use sosq_core::{Error, Result, UniPoly};

#[derive(Subcommand, Debug)]
pub enum FieldCmd {
    /// The norm form N(l) with rational coefficients.
    Normform {
        /// Monic minimal polynomial in t, e.g. "t^4+t+1".
        #[arg(long)]
        minpoly: String,
        /// Coefficients of l in t, separated by `;`; defaults to "1; t; t^2".
        #[arg(long)]
        linform: Option<String>,
    },
    /// Runs every hypothesis of the obstruction and prints the certificate.
    ///
    /// A NotQSos certificate exits 0; NoObstruction exits 2.
    Obstruct {
        #[arg(long)]
        minpoly: String,
        #[arg(long)]
        linform: Option<String>,
        /// Galois group generators on the root indices; required above degree 4.
        #[arg(long)]
        group: Option<String>,
        /// Complex conjugation as a permutation; defaults to the pairing of the certified roots.
        #[arg(long)]
        tau: Option<String>,
    },
    /// Galois group of an irreducible quartic, acting on the sorted roots.
    Galois {
        #[arg(long)]
        minpoly: String,
    },
}

fn parse_minpoly(s: &str) -> Result<UniPoly> {
    UniPoly::parse_in(s.trim(), 't')
}

/// Defaults to the ternary form `x1 + a x2 + a^2 x3`.
fn linear_form(arg: Option<&str>) -> Result<LinearForm> {
    match arg {
        Some(s) => LinearForm::parse(s),
        None => Ok(LinearForm::canonical(3)),
    }
}

pub fn run(cmd: FieldCmd, g: Globals) -> Result<Outcome> {
    match cmd {
        FieldCmd::Normform { minpoly, linform } => {
            let m = parse_minpoly(&minpoly)?;
            let l = linear_form(linform.as_deref())?;
            Ok(Outcome::new(SUCCESS, norm_form(&m, &l)?.to_string()))
        }
        FieldCmd::Obstruct {
            minpoly,
            linform,
            group,
            tau,
        } => {
            let m = parse_minpoly(&minpoly)?;
            let n = m.degree().unwrap_or(0);
            if n < 4 {
                return Err(Error::DegreeTooSmall(n));
            }
            let l = linear_form(linform.as_deref())?;
            let galois = match group {
                Some(gens) => {
                    let grp = GroupDesc::parse(&gens, Some(n), "G")?;
                    Some(match tau {
                        Some(t) => GaloisData::new(grp, Perm::parse(&t, n)?)?,
                        None => GaloisData::with_roots(grp, &isolate_roots(&m, g.precision_bits)?)?,
                    })
                }
                None if tau.is_some() => return Err(Error::Parse("--tau needs --group".into())),
                None => None,
            };
            let opts = ObstructionOptions {
                precision_bits: g.precision_bits,
                enum_bound: g.enum_bound,
            };
            let cert = obstruction_check(&m, &l, galois.as_ref(), opts)?;
            let code = match cert.conclusion {
                Conclusion::NotQSos => SUCCESS,
                Conclusion::NoObstruction => INCONCLUSIVE,
            };
            Ok(Outcome::new(code, cert.to_string()))
        }
        FieldCmd::Galois { minpoly } => {
            let m = parse_minpoly(&minpoly)?;
            let q = quartic_galois(&m)?;
            let gens: Vec<String> = q.group.generators.iter().map(Perm::to_string).collect();
            let mut lines = vec![
                format!("minpoly: {m}"),
                format!("resolvent cubic: {}", q.resolvent.display_in('y')),
                format!("discriminant: {}", q.discriminant),
            ];
            if let Some(r) = &q.resolvent_root {
                lines.push(format!("rational resolvent root: {r}"));
            }
            lines.push(format!("galois group: {}", q.label));
            lines.push(format!("generators: {}", gens.join(",")));
            lines.push(format!("tau: {}", q.roots.tau));
            Ok(Outcome::new(SUCCESS, lines.join("\n")))
        }
    }
}
