//! Gaussian rationals, fixed-precision rounding, and complex ball arithmetic.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exactcore::rational::{round_bits, sqrt_upper, to_f64, Rational};
use crate::exactcore::UniPoly;

/// `re + i im` with rational parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CRat {
    pub re: Rational,
    pub im: Rational,
}

impl CRat {
    pub fn new(re: Rational, im: Rational) -> Self {
        CRat { re, im }
    }

    pub fn real(re: Rational) -> Self {
        CRat {
            re,
            im: Rational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::real(Rational::zero())
    }

    pub fn one() -> Self {
        Self::real(Rational::one())
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        let conv = |x: f64| Rational::from_float(x).unwrap_or_else(Rational::zero);
        CRat {
            re: conv(re),
            im: conv(im),
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (to_f64(&self.re), to_f64(&self.im))
    }

    pub fn conj(&self) -> Self {
        CRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Rational upper bound on the modulus.
    pub fn abs_upper(&self, bits: u32) -> Rational {
        sqrt_upper(&self.norm_sqr(), bits)
    }

    pub fn div(&self, other: &CRat) -> CRat {
        let d = other.norm_sqr();
        CRat {
            re: (&self.re * &other.re + &self.im * &other.im) / &d,
            im: (&self.im * &other.re - &self.re * &other.im) / &d,
        }
    }

    pub fn round(&self, bits: u32) -> CRat {
        CRat {
            re: round_bits(&self.re, bits),
            im: round_bits(&self.im, bits),
        }
    }

    pub fn scale(&self, c: &Rational) -> CRat {
        CRat {
            re: &self.re * c,
            im: &self.im * c,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl Add for &CRat {
    type Output = CRat;
    fn add(self, o: &CRat) -> CRat {
        CRat {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
}

impl Sub for &CRat {
    type Output = CRat;
    fn sub(self, o: &CRat) -> CRat {
        CRat {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
}

impl Mul for &CRat {
    type Output = CRat;
    fn mul(self, o: &CRat) -> CRat {
        CRat {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for &CRat {
    type Output = CRat;
    fn neg(self) -> CRat {
        CRat {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

/// Exact evaluation of a rational polynomial at a Gaussian rational.
pub fn eval_exact(p: &UniPoly, z: &CRat) -> CRat {
    p.coeffs()
        .iter()
        .rev()
        .fold(CRat::zero(), |acc, c| &(&acc * z) + &CRat::real(c.clone()))
}

/// Evaluation with the accumulator rounded to `bits` after every step.
pub fn eval_rounded(p: &UniPoly, z: &CRat, bits: u32) -> CRat {
    p.coeffs().iter().rev().fold(CRat::zero(), |acc, c| {
        (&(&acc * z) + &CRat::real(c.clone())).round(bits)
    })
}

/// Closed disk `{w : |w - center| <= radius}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    pub center: CRat,
    pub radius: Rational,
}

impl Ball {
    pub fn exact(center: CRat) -> Self {
        Ball {
            center,
            radius: Rational::zero(),
        }
    }

    pub fn real(c: Rational) -> Self {
        Self::exact(CRat::real(c))
    }

    /// Rounds the center to `bits`, absorbing the rounding error into the radius.
    pub fn rounded(&self, bits: u32) -> Ball {
        let c = self.center.round(bits);
        let err = (&c - &self.center).abs_upper(bits);
        Ball {
            center: c,
            radius: &self.radius + err,
        }
    }

    pub fn add(&self, o: &Ball) -> Ball {
        Ball {
            center: &self.center + &o.center,
            radius: &self.radius + &o.radius,
        }
    }

    pub fn sub(&self, o: &Ball) -> Ball {
        Ball {
            center: &self.center - &o.center,
            radius: &self.radius + &o.radius,
        }
    }

    pub fn mul(&self, o: &Ball, bits: u32) -> Ball {
        let a = self.center.abs_upper(bits);
        let b = o.center.abs_upper(bits);
        let radius = &a * &o.radius + &b * &self.radius + &self.radius * &o.radius;
        Ball {
            center: &self.center * &o.center,
            radius,
        }
        .rounded(bits)
    }

    /// True when `0` is certainly outside the disk.
    pub fn excludes_zero(&self) -> bool {
        self.center.norm_sqr() > &self.radius * &self.radius
    }

    pub fn contains(&self, z: &CRat) -> bool {
        (&self.center - z).norm_sqr() <= &self.radius * &self.radius
    }
}

/// Horner evaluation of a rational polynomial over a ball.
pub fn eval_ball(p: &UniPoly, z: &Ball, bits: u32) -> Ball {
    p.coeffs()
        .iter()
        .rev()
        .fold(Ball::real(Rational::zero()), |acc, c| {
            acc.mul(z, bits).add(&Ball::real(c.clone()))
        })
}

/// Durand-Kerner iteration in double precision; a starting point only.
pub fn durand_kerner_f64(p: &UniPoly, iters: usize) -> Vec<(f64, f64)> {
    let n = p.degree().expect("nonzero polynomial");
    let lc = to_f64(p.leading().unwrap());
    let coeffs: Vec<f64> = p.coeffs().iter().map(|c| to_f64(c) / lc).collect();
    let eval = |z: (f64, f64)| {
        coeffs.iter().rev().fold((0.0, 0.0), |(ar, ai), &c| {
            (ar * z.0 - ai * z.1 + c, ar * z.1 + ai * z.0)
        })
    };
    let bound = 1.0 + coeffs[..n].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let ang = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            let r = 0.5 * bound;
            (r * ang.cos(), r * ang.sin())
        })
        .collect();
    for _ in 0..iters {
        let mut delta = 0.0f64;
        for i in 0..n {
            let num = eval(z[i]);
            let mut den = (1.0, 0.0);
            for j in 0..n {
                if i != j {
                    let d = (z[i].0 - z[j].0, z[i].1 - z[j].1);
                    den = (den.0 * d.0 - den.1 * d.1, den.0 * d.1 + den.1 * d.0);
                }
            }
            let dd = den.0 * den.0 + den.1 * den.1;
            if dd == 0.0 {
                continue;
            }
            let q = (
                (num.0 * den.0 + num.1 * den.1) / dd,
                (num.1 * den.0 - num.0 * den.1) / dd,
            );
            z[i] = (z[i].0 - q.0, z[i].1 - q.1);
            delta = delta.max(q.0.abs() + q.1.abs());
        }
        if delta < 1e-15 {
            break;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::{rat, ratio};

    #[test]
    fn gaussian_arithmetic() {
        let i = CRat::new(rat(0), rat(1));
        assert_eq!(&i * &i, CRat::real(rat(-1)));
        let z = CRat::new(rat(1), rat(2));
        assert_eq!(z.div(&z), CRat::one());
        assert_eq!(eval_exact(&"t^2 + 1".parse().unwrap(), &i), CRat::zero());
    }

    #[test]
    fn ball_product_encloses() {
        let a = Ball {
            center: CRat::new(rat(1), rat(1)),
            radius: ratio(1, 100),
        };
        let b = Ball {
            center: CRat::new(rat(2), rat(-1)),
            radius: ratio(1, 50),
        };
        let prod = a.mul(&b, 64);
        // corner of a times corner of b lies in the product ball
        let pa = CRat::new(ratio(101, 100), rat(1));
        let pb = CRat::new(rat(2), ratio(-49, 50));
        assert!(prod.contains(&(&pa * &pb)));
        assert!(prod.excludes_zero());
    }

    #[test]
    fn double_precision_roots() {
        let z = durand_kerner_f64(&"t^4 + 2".parse().unwrap(), 200);
        for (re, im) in z {
            let m = (re * re + im * im).sqrt();
            assert!((m - 2f64.powf(0.25)).abs() < 1e-9);
        }
    }
}
