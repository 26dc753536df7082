use clap::Subcommand;

use crate::io::{read_file, read_form, read_forms, text_or_file};
use crate::outcome::{Outcome, INCONCLUSIVE, REFUTED, SUCCESS};
use crate::Globals;
use sosq_core::boundary::{
    boundary_cert, construct, demo, uniqueness_cert, Construction, LinearFunctional,
    NinePointConfig, Positivity, UniquenessVerdict, WeightTuple,
};
use sosq_core::gram::GramPoint;
use sosq_core::Result;

#[derive(Subcommand, Debug)]
pub enum BoundaryCmd {
    /// Runs the bundled nine-point example and compares every stage.
    Demo,
    /// The full construction for given points and weights.
    Construct {
        /// File with nine lines `x, y, z`.
        #[arg(long)]
        points: String,
        /// Nine comma-separated weights.
        #[arg(long)]
        tuple: String,
    },
    /// Boundary (and, when certified, uniqueness) certificate for a sextic.
    Certify {
        /// Form, inline or as a file.
        #[arg(long)]
        form: String,
        /// File of `monomial = value` lines or weighted points `w : x, y, z`.
        #[arg(long)]
        functional: String,
        /// Gram matrix file witnessing that the form is SOS.
        #[arg(long)]
        witness: Option<String>,
        /// Basis of the kernel to express the unique Gram matrix in, separated by `;`.
        #[arg(long)]
        basis: Option<String>,
    },
}

fn construction_code(c: &Construction) -> u8 {
    if !c.tuple_check.passes() || !c.boundary.certified() {
        REFUTED
    } else if c.positivity == Positivity::Inconclusive
        || c.uniqueness.verdict == UniquenessVerdict::Inconclusive
    {
        INCONCLUSIVE
    } else if c.passes() {
        SUCCESS
    } else {
        REFUTED
    }
}

pub fn run(cmd: BoundaryCmd, _g: Globals) -> Result<Outcome> {
    match cmd {
        BoundaryCmd::Demo => {
            let r = demo()?;
            let code = if r.passes() { SUCCESS } else { REFUTED };
            Ok(Outcome::new(code, r.to_string()))
        }
        BoundaryCmd::Construct { points, tuple } => {
            let cfg = NinePointConfig::parse(&read_file(&points)?)?;
            let a = WeightTuple::parse(&text_or_file(&tuple)?)?;
            let c = construct(&cfg, &a)?;
            Ok(Outcome::new(construction_code(&c), c.to_string()))
        }
        BoundaryCmd::Certify {
            form,
            functional,
            witness,
            basis,
        } => {
            let f = read_form(&form)?;
            let degree = f.degree().unwrap_or(6);
            let alpha = LinearFunctional::parse(&text_or_file(&functional)?, degree)?;
            let f = f.with_nvars(alpha.n);
            let w = witness
                .map(|p| GramPoint::parse(&read_file(&p)?))
                .transpose()?;
            let cert = boundary_cert(&f, &alpha, w.as_ref())?;
            let mut report = format!("form: {f}\n[boundary]\n{cert}");
            if !cert.certified() {
                return Ok(Outcome::new(REFUTED, report));
            }
            let basis = basis.map(|b| read_forms(&b)).transpose()?;
            let u = uniqueness_cert(&f, &alpha, basis.as_deref())?;
            report.push_str(&format!("\n[uniqueness]\n{u}"));
            let code = match u.verdict {
                UniquenessVerdict::Singleton => SUCCESS,
                UniquenessVerdict::Inconclusive => INCONCLUSIVE,
                _ => REFUTED,
            };
            Ok(Outcome::new(code, report))
        }
    }
}
