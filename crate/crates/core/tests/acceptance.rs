//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use sosq_core::boundary::demo::{fermat_sextic, p1, p2, p3};
use sosq_core::boundary::{demo, interior_witness, BoundaryVerdict, UniquenessVerdict, ZeroSet};
use sosq_core::exactcore::rational::{rat, ratio};
use sosq_core::numfield::{
    obstruction_check, quartic_galois, Conclusion, GaloisData, GeneralPosition, LinearForm,
    ObstructionOptions, QuarticGroup,
};
use sosq_core::permgroup::{
    bundled_catalog, char_number, classify_catalog, GroupDesc, Perm, DEFAULT_ENUM_BOUND,
};
use sosq_core::{Poly, SymMatrix, UniPoly};

type Check = Result<String, String>;

/// Name, body, and runtime limit in seconds.
type Criterion = (&'static str, fn() -> Check, Option<u64>);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Check) -> Check {
    let start = Instant::now();
    let detail = f()?;
    let took = start.elapsed();
    ensure(took < limit, format!("took {took:.2?}, limit {limit:?}"))?;
    Ok(format!("{detail} [{took:.2?}]"))
}

fn table() -> Check {
    let want = [(4, 5, 2, 0, 0), (6, 11, 2, 2, 0), (8, 50, 7, 2, 3)];
    let mut got = Vec::new();
    for (degree, ..) in want {
        let cat =
            bundled_catalog(degree).ok_or(format!("no bundled catalog for degree {degree}"))?;
        let row = classify_catalog(&cat, degree, DEFAULT_ENUM_BOUND);
        ensure(
            row.failures.is_empty(),
            format!("degree {degree}: {:?}", row.failures),
        )?;
        if degree == 6 {
            let mut col3 = row.labels[2].clone();
            col3.sort();
            ensure(
                col3 == ["6T11", "6T8"],
                format!("degree 6 column (3) labels {col3:?}"),
            )?;
        }
        got.push(row.tuple());
    }
    ensure(got == want, format!("rows {got:?}"))?;
    Ok(format!("{got:?}"))
}

fn dihedral() -> Check {
    let d4 = GroupDesc::parse("(1 2 3 4),(1 3)", Some(4), "D4").map_err(|e| e.to_string())?;
    let reflection = Perm::parse("(1 2)(3 4)", 4).map_err(|e| e.to_string())?;
    let c = char_number(&d4, &reflection, DEFAULT_ENUM_BOUND).map_err(|e| e.to_string())?;
    ensure(c.c == 2, format!("c = {}", c.c))?;
    let m = UniPoly::from_ints(&[2, 0, 0, 0, 1]);
    let cert = obstruction_check(
        &m,
        &LinearForm::canonical(3),
        None,
        ObstructionOptions::default(),
    )
    .map_err(|e| e.to_string())?;
    ensure(
        cert.conclusion == Conclusion::NoObstruction,
        format!("t^4+2: {:?}", cert.conclusion),
    )?;
    Ok(format!(
        "c(D4, square, reflection) = 2; t^4+2 {:?}",
        cert.conclusion
    ))
}

fn obstruction() -> Check {
    let m = UniPoly::from_ints(&[1, 1, 0, 0, 1]);
    let q = quartic_galois(&m).map_err(|e| e.to_string())?;
    ensure(q.label == QuarticGroup::S4, format!("galois {}", q.label))?;
    let galois = GaloisData::with_roots(q.group, &q.roots).map_err(|e| e.to_string())?;
    let cert = obstruction_check(
        &m,
        &LinearForm::canonical(3),
        Some(&galois),
        ObstructionOptions::default(),
    )
    .map_err(|e| e.to_string())?;
    ensure(
        cert.galois_label.as_deref() == Some("S4"),
        format!("label {:?}", cert.galois_label),
    )?;
    ensure(
        cert.real_roots == 0 && cert.totally_imaginary(),
        format!("{} real roots", cert.real_roots),
    )?;
    ensure(
        cert.general_position == Some(GeneralPosition::ExactVandermonde),
        format!("general position {:?}", cert.general_position),
    )?;
    let c = cert.c.as_ref().ok_or("no characteristic number")?.c;
    ensure(c == 3 && c > cert.d, format!("c = {c}, d = {}", cert.d))?;
    ensure(
        cert.conclusion == Conclusion::NotQSos,
        format!("{:?}", cert.conclusion),
    )?;
    Ok(format!(
        "S4, 0 real roots, ExactVandermonde, c = {c} >= d+1 = {}, NotQSos",
        cert.d + 1
    ))
}

fn demo_chain() -> Check {
    let report = demo().map_err(|e| e.to_string())?;
    let c = &report.construction;
    let mags: Vec<_> =
        c.u.iter()
            .map(|x| if x < &rat(0) { -x } else { x.clone() })
            .collect();
    ensure(
        mags == [1, 1, 1, 1, 2, 2, 2, 2, 4].map(rat),
        format!("|u| = {mags:?}"),
    )?;
    let a = [1, 1, 1, 1, 4, 4, 4, 4, -2].map(rat);
    ensure(c.tuple.a == a, "tuple")?;
    let sum = c.u.iter().zip(&a).fold(rat(0), |s, (u, a)| s + u * u / a);
    ensure(sum == rat(0), format!("sum u^2/a = {sum}"))?;
    ensure(c.tuple_check.passes(), "tuple check")?;
    ensure(
        c.moment_rank == Some(7),
        format!("moment rank {:?}", c.moment_rank),
    )?;
    ensure(
        c.kernel.len() == 3,
        format!("kernel dimension {}", c.kernel.len()),
    )?;
    ensure(
        c.basis == [p1(), p2(), p3()],
        "kernel basis is not p1, p2, p3",
    )?;
    let v = |s: &str| Poly::parse_with_nvars(s, 3).unwrap();
    let (x1, x2, x3) = (v("x1"), v("x2"), v("x3"));
    ensure(p1() == &x1 * &(&x1.square() - &x3.square()), "p1")?;
    ensure(p2() == &x2 * &(&x2.square() - &x3.square()), "p2")?;
    let quad =
        &(&x1.square().scale(&rat(3)) + &x2.square().scale(&rat(3))) - &x3.square().scale(&rat(4));
    ensure(p3() == &quad * &x3, "p3")?;
    let displayed = [
        x1.pow(6),
        x2.pow(6),
        (&(&x1.pow(4) + &x2.pow(4)) * &x3.square()).scale(&rat(7)),
        (&(&x1.square() * &x2.square()) * &x3.square()).scale(&rat(18)),
        (&(&x1.square() + &x2.square()) * &x3.pow(4)).scale(&rat(-23)),
        x3.pow(6).scale(&rat(16)),
    ]
    .into_iter()
    .sum::<Poly>();
    ensure(c.sextic == displayed, format!("sextic {}", c.sextic))?;
    ensure(
        c.hilbert == [1, 3, 6, 7, 6, 3, 1, 0],
        format!("hilbert {:?}", c.hilbert),
    )?;
    ensure(c.zero_set == ZeroSet::Empty, "zero set")?;
    ensure(
        c.ker_alpha_dim == 27 && c.ker_alpha_is_ideal,
        format!("ker alpha {}", c.ker_alpha_dim),
    )?;
    ensure(
        c.boundary.verdict == BoundaryVerdict::Certified,
        format!("{:?}", c.boundary.verdict),
    )?;
    ensure(
        c.uniqueness.verdict == UniquenessVerdict::Singleton,
        format!("{:?}", c.uniqueness.verdict),
    )?;
    ensure(
        c.uniqueness.gram() == Some(&SymMatrix::identity(3)),
        "restricted gram is not the identity",
    )?;
    ensure(report.passes(), "a demo stage failed")?;
    Ok(format!("{} stages exact", report.stages.len()))
}

fn interior() -> Check {
    let w = interior_witness().map_err(|e| e.to_string())?;
    ensure(w.form == fermat_sextic(), "form")?;
    ensure(w.both_represent, "a representation is not a Gram point")?;
    ensure(w.spans_differ, "spans coincide")?;
    ensure(w.alpha_f == rat(42), format!("alpha(f) = {}", w.alpha_f))?;
    ensure(!w.boundary.certified(), "boundary certificate produced")?;
    Ok(format!(
        "alpha(f) = {}, verdict {:?}",
        w.alpha_f, w.boundary.verdict
    ))
}

fn psd_suite() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (mut agree, mut guarded, mut bad) = (0, 0, 0);
    for _ in 0..1000 {
        match compare_psd(&random_symmetric(&mut rng), 1e-6) {
            PsdComparison::Agree => agree += 1,
            PsdComparison::Guarded => guarded += 1,
            PsdComparison::Disagree => bad += 1,
        }
    }
    ensure(bad == 0, format!("{bad} disagreements"))?;
    Ok(format!(
        "1000 matrices: {agree} agree, {guarded} guarded, 0 disagree"
    ))
}

fn char_number_suite() -> Check {
    let mut groups = 0;
    let mut classes = 0;
    for degree in [4, 6, 8] {
        for g in bundled_catalog(degree).unwrap() {
            if !g.is_transitive() {
                continue;
            }
            groups += 1;
            for (t, sizes) in brute_force_char_numbers(&g) {
                classes += 1;
                let t = Perm::from_images(t).unwrap();
                let c = char_number(&g, &t, DEFAULT_ENUM_BOUND).map_err(|e| e.to_string())?;
                ensure(
                    sizes.iter().all(|&s| s == c.c),
                    format!("{} {t}: closure {} vs brute force {sizes:?}", g.label, c.c),
                )?;
            }
        }
    }
    Ok(format!(
        "{groups} groups, {classes} classes, 0 disagreements"
    ))
}

fn norm_suite() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let (m, l) = random_field(&mut rng);
        let r = norm_residual(&m, &l, 256);
        ensure(r < 1e-20, format!("{m}: residual {r:e}"))?;
        worst = worst.max(r);
    }
    Ok(format!("50 fields, worst residual {worst:e}"))
}

fn qsos_suite() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut ok, mut skipped) = (0, 0);
    while ok < 100 {
        let inst = random_qsos_instance(&mut rng);
        match check_qsos(&inst) {
            QsosOutcome::Exact => ok += 1,
            QsosOutcome::Skipped => skipped += 1,
            QsosOutcome::Wrong(e) => return Err(format!("f = {}: {e}", inst.f)),
        }
        ensure(skipped < 10_000, "too few success instances")?;
    }
    Ok(format!(
        "100 exact reconstructions ({skipped} instances not QI)"
    ))
}

fn shrink_suite() -> Check {
    let s = check_shrink(&rat(0), &ratio(1, 2))?;
    ensure(s == rat(2), format!("s* = {s}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut runs = 0;
    while runs < 50 {
        let a0 = ratio(rand::Rng::gen_range(&mut rng, -9..=9), 10);
        let a1 = ratio(rand::Rng::gen_range(&mut rng, -9..=9), 10);
        if a0 != a1 {
            check_shrink(&a0, &a1)?;
            runs += 1;
        }
    }
    Ok("s* = 2 exactly; rank drops on 50 random segments".into())
}

fn property_suites() -> Check {
    let parts = [
        ("psd", psd_suite as fn() -> Check),
        ("char number", char_number_suite),
        ("norm", norm_suite),
        ("extract", qsos_suite),
        ("shrink", shrink_suite),
    ];
    let mut out = Vec::new();
    for (name, f) in parts {
        out.push(format!(
            "{name}: {}",
            f().map_err(|e| format!("{name}: {e}"))?
        ));
    }
    Ok(out.join("; "))
}

fn main() {
    let criteria: [Criterion; 6] = [
        ("1 table reproduction", table, Some(60)),
        ("2 dihedral sharpness", dihedral, Some(1)),
        ("3 obstruction certificate", obstruction, Some(5)),
        ("4 boundary demo chain", demo_chain, Some(10)),
        ("5 interior witness", interior, None),
        ("6 property suites", property_suites, None),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let result = match limit {
            Some(secs) => timed(Duration::from_secs(secs), run),
            None => run(),
        };
        match result {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
