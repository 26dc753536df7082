use clap::{Args, Subcommand};

use crate::io::{common_nvars, read_file, read_form, read_forms};
use crate::outcome::{Outcome, INCONCLUSIVE, REFUTED, SUCCESS};
use crate::Globals;
use sosq_core::exactcore::ldl_sos;
use sosq_core::gram::{
    extract_qsos, face_dimension, gram_from_squares, is_gram_point, shrink_span, span_basis,
    walk_to_extreme, GramPoint, ShrinkOutcome, SosRep,
};
use sosq_core::{Error, Poly, Result};

#[derive(Subcommand, Debug)]
pub enum GramCmd {
    /// Checks that a Gram point represents a form and reports its face.
    Verify {
        #[arg(long)]
        form: String,
        #[command(flatten)]
        point: PointArgs,
    },
    /// The rational SOS representation of a form on a quadratically independent subspace.
    ExtractQ {
        #[arg(long)]
        form: String,
        /// Basis of the subspace, separated by `;`.
        #[arg(long)]
        basis: String,
    },
    /// Moves from the first Gram point through the second to the boundary of their face.
    ///
    /// An irrational boundary parameter exits 2 with its isolating interval.
    Shrink {
        /// First Gram matrix file.
        #[arg(long, required_unless_present = "squares1")]
        g1: Option<String>,
        /// Second Gram matrix file.
        #[arg(long, required_unless_present = "squares2")]
        g2: Option<String>,
        /// First representation as squares separated by `;`.
        #[arg(long, conflicts_with = "g1")]
        squares1: Option<String>,
        #[arg(long, conflicts_with = "g2")]
        squares2: Option<String>,
        /// Continue along kernel directions until an extreme point is reached.
        #[arg(long)]
        walk: bool,
    },
}

#[derive(Args, Debug)]
pub struct PointArgs {
    /// Squares separated by `;`.
    #[arg(long, required_unless_present = "gram", conflicts_with = "gram")]
    squares: Option<String>,
    /// Gram matrix file with a `basis:` header.
    #[arg(long)]
    gram: Option<String>,
}

fn squares_point(arg: &str) -> Result<GramPoint> {
    let mut forms = read_forms(arg)?;
    let n = common_nvars(&mut forms);
    Ok(gram_from_squares(&SosRep::with_nvars(forms, n)?))
}

fn load_point(squares: Option<&str>, gram: Option<&str>) -> Result<GramPoint> {
    match (squares, gram) {
        (Some(s), _) => squares_point(s),
        (None, Some(g)) => GramPoint::parse(&read_file(g)?),
        (None, None) => Err(Error::Parse("give squares or a Gram matrix file".into())),
    }
}

/// `w * (q)^2` terms of the LDL decomposition.
fn weighted_squares(g: &GramPoint) -> Result<Vec<String>> {
    let basis = g.basis();
    Ok(ldl_sos(&g.matrix)?
        .into_iter()
        .map(|sq| {
            format!(
                "{} * ({})^2",
                sq.weight,
                Poly::from_coeffs(g.n, &basis, &sq.vector)
            )
        })
        .collect())
}

pub fn run(cmd: GramCmd, _g: Globals) -> Result<Outcome> {
    match cmd {
        GramCmd::Verify { form, point } => {
            let g = load_point(point.squares.as_deref(), point.gram.as_deref())?;
            let f = read_form(&form)?;
            let check = is_gram_point(&g, &f)?;
            let mut lines = vec![
                format!("represents form: {}", check.represents),
                format!("psd: {}", check.psd.is_psd()),
                format!("rank: {}", g.rank()),
            ];
            if check.is_gram_point() {
                let span = span_basis(&g)?;
                let face = face_dimension(&SosRep::with_nvars(span, g.n)?);
                lines.push(format!("span dimension: {}", face.r));
                lines.push(format!("product rank: {}", face.product_rank));
                lines.push(format!("face dimension: {}", face.dim));
                lines.push(format!("extreme: {}", face.is_extreme()));
                lines.push("verdict: valid Gram point".into());
                Ok(Outcome::new(SUCCESS, lines.join("\n")))
            } else {
                lines.push("verdict: not a Gram point of the form".into());
                Ok(Outcome::new(REFUTED, lines.join("\n")))
            }
        }
        GramCmd::ExtractQ { form, basis } => {
            let f = read_form(&form)?;
            let mut u = read_forms(&basis)?;
            let n = common_nvars(&mut u).max(f.nvars());
            let f = f.with_nvars(n);
            let u: Vec<Poly> = u.into_iter().map(|p| p.with_nvars(n)).collect();
            let w = extract_qsos(&f, &u)?;
            let lines = [
                format!("form: {f}"),
                format!("restricted gram matrix:\n{}", w.gram.matrix()),
                format!("{w}"),
                "reconstruction: exact".to_string(),
            ];
            Ok(Outcome::new(SUCCESS, lines.join("\n")))
        }
        GramCmd::Shrink {
            g1,
            g2,
            squares1,
            squares2,
            walk,
        } => {
            let p1 = load_point(squares1.as_deref(), g1.as_deref())?;
            let p2 = load_point(squares2.as_deref(), g2.as_deref())?;
            match shrink_span(&p1, &p2)? {
                ShrinkOutcome::Shrunk {
                    point,
                    s_star,
                    kernel,
                    old_rank,
                    new_rank,
                } => {
                    let mut lines = vec![
                        format!("s*: [{s_star}, {s_star}]"),
                        format!("rank: {old_rank} -> {new_rank}"),
                        format!("kernel dimension: {}", kernel.len()),
                        format!("gram point:\n{point}"),
                        format!("representation: {}", weighted_squares(&point)?.join(" + ")),
                    ];
                    if walk {
                        let w = walk_to_extreme(&point)?;
                        for s in &w.steps {
                            lines.push(format!(
                                "walk step: s = {}, rank {} -> {}",
                                s.s, s.rank_before, s.rank_after
                            ));
                        }
                        lines.push(format!("extreme: {}", w.extreme));
                        lines.push(format!(
                            "extreme representation: {}",
                            weighted_squares(&w.point)?.join(" + ")
                        ));
                        if w.deferred {
                            return Ok(Outcome::new(INCONCLUSIVE, lines.join("\n")));
                        }
                    }
                    Ok(Outcome::new(SUCCESS, lines.join("\n")))
                }
                ShrinkOutcome::DeferredKernel {
                    interval: (lo, hi),
                    det_poly,
                } => {
                    let lines = [
                        format!("s*: ({lo}, {hi}]"),
                        format!("det polynomial: {}", det_poly.display_in('s')),
                        "boundary parameter is irrational; kernel deferred".to_string(),
                    ];
                    Ok(Outcome::new(INCONCLUSIVE, lines.join("\n")))
                }
            }
        }
    }
}
