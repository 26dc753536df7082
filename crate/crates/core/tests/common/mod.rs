//! Independent oracles and random instance generators shared by the
//! acceptance and property suites.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use nalgebra::DMatrix;
use num_traits::{Signed, ToPrimitive};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use sosq_core::exactcore::rational::{rat, ratio};
use sosq_core::exactcore::{monomials, psd_check};
use sosq_core::gram::{extract_qsos, GramPoint, ShrinkOutcome};
use sosq_core::numfield::{norm_form, numeric_norm, LinearForm};
use sosq_core::permgroup::GroupDesc;
use sosq_core::{Error, Matrix, Poly, Rational, SymMatrix, UniPoly};

pub fn to_f64(q: &Rational) -> f64 {
    q.numer().to_f64().unwrap() / q.denom().to_f64().unwrap()
}

pub fn small_rational(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    ratio(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, num: i64, den: i64) -> Matrix {
    let entries = (0..rows)
        .map(|_| (0..cols).map(|_| small_rational(rng, num, den)).collect())
        .collect();
    Matrix::from_rows(entries, cols)
}

// ---------------------------------------------------------------------------
// PSD against floating eigenvalues

pub fn eigenvalues(m: &SymMatrix) -> Vec<f64> {
    let n = m.size();
    let a = DMatrix::from_fn(n, n, |i, j| to_f64(m.get(i, j)));
    a.symmetric_eigen().eigenvalues.iter().copied().collect()
}

/// Random symmetric matrices of four shapes: indefinite, full rank PSD,
/// rank deficient PSD, and PSD shifted by a small multiple of the identity.
pub fn random_symmetric(rng: &mut ChaCha8Rng) -> SymMatrix {
    let n = rng.gen_range(1..=6);
    match rng.gen_range(0..4) {
        0 => {
            let m = random_matrix(rng, n, n, 9, 4);
            SymMatrix::from_upper(n, |i, j| m.row(i)[j].clone())
        }
        kind => {
            let k = if kind == 2 {
                rng.gen_range(1..=n)
            } else {
                n + 1
            };
            let b = random_matrix(rng, n, k, 5, 3);
            let g = SymMatrix::new(b.mul(&b.transpose())).unwrap();
            if kind == 3 {
                let shift = ratio(rng.gen_range(-3..=3), 8);
                g.add(&SymMatrix::identity(n).scale(&shift))
            } else {
                g
            }
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
pub enum PsdComparison {
    Agree,
    /// Smallest eigenvalue within the gap guard; no floating verdict.
    Guarded,
    Disagree,
}

pub fn compare_psd(m: &SymMatrix, guard: f64) -> PsdComparison {
    let eig = eigenvalues(m);
    let scale = eig.iter().fold(1.0f64, |a, &e| a.max(e.abs()));
    let min = eig.iter().copied().fold(f64::INFINITY, f64::min);
    let verdict = psd_check(m);
    if eig.iter().any(|e| e.abs() <= guard * scale) {
        return PsdComparison::Guarded;
    }
    let float_psd = min > 0.0;
    if float_psd != verdict.is_psd() {
        return PsdComparison::Disagree;
    }
    if float_psd && verdict.rank() != Some(m.size()) {
        return PsdComparison::Disagree;
    }
    PsdComparison::Agree
}

// ---------------------------------------------------------------------------
// Characteristic number by the conjugacy definition

type Images = Vec<usize>;

fn compose(a: &Images, b: &Images) -> Images {
    // (a b)(x) = a(b(x))
    b.iter().map(|&x| a[x]).collect()
}

fn inverse(a: &Images) -> Images {
    let mut inv = vec![0; a.len()];
    for (x, &y) in a.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

/// All elements by breadth-first closure under the generators.
pub fn elements(group: &GroupDesc) -> Vec<Images> {
    let n = group.degree;
    let gens: Vec<Images> = group
        .generators
        .iter()
        .map(|g| g.images().to_vec())
        .collect();
    let id: Images = (0..n).collect();
    let mut seen: HashSet<Images> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in &gens {
            let h = compose(s, &g);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen.into_iter().collect()
}

fn is_fpf_involution(p: &Images) -> bool {
    p.iter().enumerate().all(|(x, &y)| y != x && p[y] == x)
}

/// `|{g t g^-1 (x) : g in G}|` for every `x`, one entry per conjugacy class
/// of fixed-point-free involutions.
pub fn brute_force_char_numbers(group: &GroupDesc) -> Vec<(Images, Vec<usize>)> {
    let elems = elements(group);
    let inverses: Vec<Images> = elems.iter().map(inverse).collect();
    let mut classified: HashSet<Images> = HashSet::new();
    let mut out = Vec::new();
    for t in elems.iter().filter(|p| is_fpf_involution(p)) {
        if classified.contains(t) {
            continue;
        }
        let class: HashSet<Images> = elems
            .iter()
            .zip(&inverses)
            .map(|(g, gi)| compose(&compose(g, t), gi))
            .collect();
        let sizes = (0..group.degree)
            .map(|x| class.iter().map(|s| s[x]).collect::<HashSet<_>>().len())
            .collect();
        classified.extend(class);
        out.push((t.clone(), sizes));
    }
    out
}

// ---------------------------------------------------------------------------
// Random number fields

pub fn random_field(rng: &mut ChaCha8Rng) -> (UniPoly, LinearForm) {
    loop {
        let n = rng.gen_range(2..=6usize);
        let mut c: Vec<i64> = (0..n).map(|_| rng.gen_range(-4..=4)).collect();
        if c[0] == 0 {
            c[0] = 1;
        }
        c.push(1);
        let m = UniPoly::from_ints(&c);
        if !m.is_squarefree() {
            continue;
        }
        let vars = rng.gen_range(2..=3);
        let l = LinearForm::new(
            (0..vars)
                .map(|_| {
                    UniPoly::from_ints(&(0..n).map(|_| rng.gen_range(-2..=2)).collect::<Vec<_>>())
                })
                .collect(),
        );
        if l.coeffs.iter().all(UniPoly::is_zero) {
            continue;
        }
        return (m, l);
    }
}

/// Largest coefficient gap between the exact norm and the numeric conjugate
/// product, imaginary parts included.
pub fn norm_residual(m: &UniPoly, l: &LinearForm, bits: u32) -> f64 {
    let exact = norm_form(m, l).unwrap();
    let num = numeric_norm(m, l, bits).unwrap();
    let diff = &exact - &num.re;
    diff.terms()
        .chain(num.im.terms())
        .map(|(_, c)| to_f64(&c.abs()))
        .fold(0.0, f64::max)
}

// ---------------------------------------------------------------------------
// Random (f, U) instances for rational extraction

pub struct QsosInstance {
    pub u: Vec<Poly>,
    pub q: SymMatrix,
    pub f: Poly,
}

pub fn random_qsos_instance(rng: &mut ChaCha8Rng) -> QsosInstance {
    let d = rng.gen_range(1..=3u32);
    let basis = monomials(3, d);
    let r = rng.gen_range(1..=basis.len().min(4));
    let u: Vec<Poly> = (0..r)
        .map(|_| {
            let mut coeffs: Vec<Rational> = basis
                .iter()
                .map(|_| {
                    if rng.gen_bool(0.5) {
                        rat(rng.gen_range(-3..=3))
                    } else {
                        rat(0)
                    }
                })
                .collect();
            let k = rng.gen_range(0..coeffs.len());
            coeffs[k] = rat(rng.gen_range(1..=3));
            Poly::from_coeffs(3, &basis, &coeffs)
        })
        .collect();
    let k = rng.gen_range(1..=r);
    let l = random_matrix(rng, r, k, 3, 2);
    let q = SymMatrix::new(l.mul(&l.transpose())).unwrap();
    let mut f = Poly::zero(3);
    for i in 0..r {
        for j in 0..r {
            f = &f + &(&u[i] * &u[j]).scale(q.get(i, j));
        }
    }
    QsosInstance { u, q, f }
}

#[derive(Debug, PartialEq, Eq)]
pub enum QsosOutcome {
    Exact,
    /// `U` dependent or not quadratically independent; not a success instance.
    Skipped,
    Wrong(String),
}

pub fn check_qsos(inst: &QsosInstance) -> QsosOutcome {
    match extract_qsos(&inst.f, &inst.u) {
        Ok(w) => {
            let mut sum = Poly::zero(3);
            for p in &w.expanded {
                sum = &sum + &p.square();
            }
            if w.gram != inst.q {
                QsosOutcome::Wrong(format!("gram {} != {}", w.gram.matrix(), inst.q.matrix()))
            } else if sum != inst.f {
                QsosOutcome::Wrong("squares do not reconstruct f".into())
            } else {
                QsosOutcome::Exact
            }
        }
        Err(Error::LinearlyDependent | Error::NotQuadraticallyIndependent) => QsosOutcome::Skipped,
        Err(e) => QsosOutcome::Wrong(e.to_string()),
    }
}

// ---------------------------------------------------------------------------
// The Gram family of (x1^2 + x2^2)^2

/// Diagonal `(1, 2 - 2a, 1)` and corners `a` on `(x1^2, x1 x2, x2^2)`;
/// PSD exactly for `-1 <= a <= 1`.
pub fn quartic_family(a: &Rational) -> GramPoint {
    let m = SymMatrix::from_upper(3, |i, j| match (i, j) {
        (0, 0) | (2, 2) => rat(1),
        (1, 1) => rat(2) - rat(2) * a,
        (0, 2) => a.clone(),
        _ => rat(0),
    });
    GramPoint::new(2, 2, m).unwrap()
}

/// Runs `shrink_span` from `a0` through `a1` and checks the boundary against
/// the closed form `a0 + s (a1 - a0) = +-1`.
pub fn check_shrink(a0: &Rational, a1: &Rational) -> std::result::Result<Rational, String> {
    let out = sosq_core::gram::shrink_span(&quartic_family(a0), &quartic_family(a1))
        .map_err(|e| e.to_string())?;
    let ShrinkOutcome::Shrunk {
        point,
        s_star,
        old_rank,
        new_rank,
        ..
    } = out
    else {
        return Err("boundary reported irrational".into());
    };
    let end = if a1 > a0 { rat(1) } else { rat(-1) };
    let want = (&end - a0) / (a1 - a0);
    if s_star != want {
        return Err(format!("s* = {s_star}, expected {want}"));
    }
    if new_rank >= old_rank {
        return Err(format!("rank {old_rank} -> {new_rank}"));
    }
    if point != quartic_family(&end) {
        return Err("boundary point is off the family".into());
    }
    Ok(s_star)
}
