//! Certified isolation of the complex roots of a squarefree polynomial and
//! the complex-conjugation involution on them.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::complex::{durand_kerner_f64, eval_exact, Ball, CRat};
use crate::error::{Error, Result};
use crate::exactcore::rational::{sqrt_upper, to_f64, Rational};
use crate::exactcore::unipoly::{real_root_approximations, sturm_real_roots};
use crate::exactcore::UniPoly;
use crate::permgroup::Perm;

pub const DEFAULT_PRECISION: u32 = 128;
/// Isolation gives up beyond this working precision.
pub const MAX_PRECISION: u32 = 1024;

/// Axis-aligned box with rational corners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBox {
    pub re: (Rational, Rational),
    pub im: (Rational, Rational),
}

/// The roots of `minpoly`, each enclosed in a disk containing exactly that
/// root. Roots are ordered by argument in `[0, 2pi)`, then by modulus.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub minpoly: UniPoly,
    pub roots: Vec<Ball>,
    pub precision_bits: u32,
    /// Complex conjugation on root indices; fixes exactly the real roots.
    pub tau: Perm,
    pub real_roots: usize,
}

impl RootSystem {
    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn is_totally_imaginary(&self) -> bool {
        self.real_roots == 0
    }

    pub fn boxes(&self) -> Vec<RootBox> {
        self.roots
            .iter()
            .map(|b| RootBox {
                re: (&b.center.re - &b.radius, &b.center.re + &b.radius),
                im: (&b.center.im - &b.radius, &b.center.im + &b.radius),
            })
            .collect()
    }

    /// Indices of the roots with positive imaginary part.
    pub fn upper_half(&self) -> Vec<usize> {
        (0..self.degree())
            .filter(|&i| self.tau.apply(i) != i && self.roots[i].center.im.is_positive())
            .collect()
    }

    /// Arguments of the root centers in `[0, 2pi)`, as floats for display.
    pub fn arguments(&self) -> Vec<f64> {
        (0..self.degree())
            .map(|i| argument(&self.roots[i].center, self.tau.apply(i) == i))
            .collect()
    }
}

fn argument(z: &CRat, real: bool) -> f64 {
    let (re, im) = z.to_f64();
    if real {
        return if re >= 0.0 { 0.0 } else { std::f64::consts::PI };
    }
    let a = im.atan2(re);
    if a < 0.0 {
        a + 2.0 * std::f64::consts::PI
    } else {
        a
    }
}

/// Complex fixed-point value `(re + i im) / 2^bits`.
#[derive(Clone)]
struct Fx {
    re: BigInt,
    im: BigInt,
}

impl Fx {
    fn from_crat(z: &CRat, bits: u32) -> Fx {
        let s = Rational::from_integer(BigInt::one() << bits as usize);
        Fx {
            re: (&z.re * &s).round().to_integer(),
            im: (&z.im * &s).round().to_integer(),
        }
    }

    fn to_crat(&self, bits: u32) -> CRat {
        let s = BigInt::one() << bits as usize;
        CRat::new(
            Rational::new(self.re.clone(), s.clone()),
            Rational::new(self.im.clone(), s),
        )
    }

    fn sub(&self, o: &Fx) -> Fx {
        Fx {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    fn mul(&self, o: &Fx, bits: u32) -> Fx {
        Fx {
            re: (&self.re * &o.re - &self.im * &o.im) >> bits as usize,
            im: (&self.re * &o.im + &self.im * &o.re) >> bits as usize,
        }
    }

    fn div(&self, o: &Fx, bits: u32) -> Option<Fx> {
        let d = &o.re * &o.re + &o.im * &o.im;
        if d.is_zero() {
            return None;
        }
        Some(Fx {
            re: ((&self.re * &o.re + &self.im * &o.im) << bits as usize) / &d,
            im: ((&self.im * &o.re - &self.re * &o.im) << bits as usize) / &d,
        })
    }

    fn magnitude_bits(&self) -> u64 {
        self.re.bits().max(self.im.bits())
    }
}

/// Weierstrass (Durand-Kerner) iteration in fixed point on the nonreal roots,
/// with the real roots held fixed.
fn refine(m: &UniPoly, fixed: &[CRat], z: Vec<CRat>, bits: u32) -> Vec<CRat> {
    let wb = bits + 32;
    let scale = Rational::from_integer(BigInt::one() << wb as usize);
    let coeffs: Vec<BigInt> = m
        .coeffs()
        .iter()
        .map(|c| (c * &scale).round().to_integer())
        .collect();
    let fixed: Vec<Fx> = fixed.iter().map(|w| Fx::from_crat(w, wb)).collect();
    let mut z: Vec<Fx> = z.iter().map(|w| Fx::from_crat(w, wb)).collect();
    let eval = |w: &Fx| {
        coeffs.iter().rev().fold(
            Fx {
                re: BigInt::zero(),
                im: BigInt::zero(),
            },
            |acc, c| {
                let mut r = acc.mul(w, wb);
                r.re += c;
                r
            },
        )
    };
    for _ in 0..300 {
        let mut largest = 0;
        for i in 0..z.len() {
            let mut den = Fx {
                re: BigInt::one() << wb as usize,
                im: BigInt::zero(),
            };
            let others = z
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, w)| w);
            for w in others.chain(&fixed) {
                den = den.mul(&z[i].sub(w), wb);
            }
            let step = match eval(&z[i]).div(&den, wb) {
                Some(s) => s,
                // coincident iterates: nudge apart
                None => Fx {
                    re: BigInt::from(i as u64 + 1) << (wb as usize - 20),
                    im: BigInt::one() << (wb as usize - 20),
                },
            };
            largest = largest.max(step.magnitude_bits());
            z[i] = z[i].sub(&step);
        }
        if largest <= 40 {
            break;
        }
    }
    z.iter().map(|w| w.to_crat(wb).round(bits)).collect()
}

/// Disk radius `n |m(z)| / |m'(z)|`, which always encloses a root.
fn inclusion_radius(m: &UniPoly, dm: &UniPoly, z: &CRat, bits: u32) -> Option<Rational> {
    let n = Rational::from_integer(m.degree().unwrap().into());
    let v = eval_exact(m, z).norm_sqr();
    let dv = eval_exact(dm, z).norm_sqr();
    if dv.is_zero() {
        return None;
    }
    Some(n * sqrt_upper(&(v / dv), 2 * bits + 32))
}

fn disks_meet(a: &CRat, ra: &Rational, b: &CRat, rb: &Rational) -> bool {
    let r = ra + rb;
    (a - b).norm_sqr() <= &r * &r
}

/// One certification attempt; `None` when the disks are not yet unambiguous.
fn certify(
    m: &UniPoly,
    z: &[CRat],
    bits: u32,
    real_roots: usize,
) -> Option<(Vec<Ball>, Vec<usize>)> {
    let dm = m.derivative();
    let radii: Vec<Rational> = z
        .iter()
        .map(|zi| inclusion_radius(m, &dm, zi, bits))
        .collect::<Option<_>>()?;
    let n = z.len();
    for i in 0..n {
        for j in i + 1..n {
            if disks_meet(&z[i], &radii[i], &z[j], &radii[j]) {
                return None;
            }
        }
    }
    // Disjoint inclusion disks, one per root, hold exactly one root each. The
    // mirror of disk i holds the conjugate root, so it meets the disk owning it.
    let mut pair = vec![0; n];
    for i in 0..n {
        let mirror = z[i].conj();
        let hits: Vec<usize> = (0..n)
            .filter(|&j| disks_meet(&mirror, &radii[i], &z[j], &radii[j]))
            .collect();
        if hits.len() != 1 {
            return None;
        }
        pair[i] = hits[0];
    }
    if (0..n).any(|i| pair[pair[i]] != i) || (0..n).filter(|&i| pair[i] == i).count() != real_roots
    {
        return None;
    }
    let balls = z
        .iter()
        .zip(radii)
        .map(|(c, r)| Ball {
            center: c.clone(),
            radius: r,
        })
        .collect();
    Some((balls, pair))
}

/// Isolates every root of the squarefree polynomial `m`, doubling the working
/// precision from `precision_bits` until the disks and their mirror images
/// are unambiguous.
pub fn isolate_roots(m: &UniPoly, precision_bits: u32) -> Result<RootSystem> {
    let n = m.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::DimensionMismatch(
            "constant polynomial has no roots".into(),
        ));
    }
    if !m.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let monic = m.monic();
    let real_roots = sturm_real_roots(&monic);
    let cap = precision_bits.max(MAX_PRECISION);
    let mut bits = precision_bits.max(32);
    let mut start = durand_kerner_f64(&monic, 500);
    // the real roots come from Sturm bisection; keep the most nonreal guesses
    start.sort_by(|a, b| b.1.abs().partial_cmp(&a.1.abs()).unwrap());
    let mut z: Vec<CRat> = start[..n - real_roots]
        .iter()
        .map(|&(re, im)| CRat::from_f64(re, im))
        .collect();
    loop {
        let fixed: Vec<CRat> = real_root_approximations(&monic, bits)
            .into_iter()
            .map(CRat::real)
            .collect();
        z = refine(&monic, &fixed, z, bits);
        let all: Vec<CRat> = fixed.iter().chain(&z).cloned().collect();
        if let Some((balls, pair)) = certify(&monic, &all, bits, real_roots) {
            return Ok(assemble(m.clone(), balls, pair, bits, real_roots));
        }
        if bits >= cap {
            return Err(Error::PrecisionExhausted(cap));
        }
        bits = (bits * 2).min(cap);
    }
}

fn assemble(
    minpoly: UniPoly,
    balls: Vec<Ball>,
    pair: Vec<usize>,
    bits: u32,
    real_roots: usize,
) -> RootSystem {
    let n = balls.len();
    let mut order: Vec<usize> = (0..n).collect();
    let key = |i: usize| {
        let (re, im) = balls[i].center.to_f64();
        (argument(&balls[i].center, pair[i] == i), re.hypot(im))
    };
    order.sort_by(|&a, &b| key(a).partial_cmp(&key(b)).unwrap());
    let mut position = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        position[old] = new;
    }
    let images: Vec<usize> = order.iter().map(|&old| position[pair[old]]).collect();
    let roots = order.iter().map(|&old| balls[old].clone()).collect();
    RootSystem {
        minpoly,
        roots,
        precision_bits: bits,
        tau: Perm::from_images(images).expect("pairing is a permutation"),
        real_roots,
    }
}

/// Largest disk radius, as a float, for reporting.
pub fn max_radius(rs: &RootSystem) -> f64 {
    rs.roots
        .iter()
        .map(|b| to_f64(&b.radius))
        .fold(0.0, f64::max)
}
