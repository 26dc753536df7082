//! Dense univariate polynomials over the rationals, with Sturm sequences.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::split_signed_terms;
use super::rational::{common_denominator, parse_rational, Rational};
use crate::error::{Error, Result};

/// Coefficients from the constant term upward. The zero polynomial is empty
/// and the leading coefficient is never zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Euclidean division `self = q * divisor + r`.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lc;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// `self / gcd(self, self')`.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }

    /// Sturm sequence `p, p', -rem(p, p'), ...`.
    pub fn sturm_sequence(&self) -> Vec<UniPoly> {
        let mut seq = vec![self.clone()];
        if self.degree().unwrap_or(0) == 0 {
            return seq;
        }
        seq.push(self.derivative());
        loop {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(r.scale(&-Rational::one()));
        }
        seq
    }

    /// Sign at +infinity (`positive = true`) or -infinity.
    pub fn sign_at_infinity(&self, positive: bool) -> i32 {
        match self.leading() {
            None => 0,
            Some(lc) => {
                let s = if lc.is_positive() { 1 } else { -1 };
                let odd = self.degree().unwrap() % 2 == 1;
                if !positive && odd {
                    -s
                } else {
                    s
                }
            }
        }
    }

    /// Composes with `t -> t + shift`.
    pub fn taylor_shift(&self, shift: &Rational) -> Self {
        let mut out = UniPoly::zero();
        let lin = UniPoly::new(vec![shift.clone(), Rational::one()]);
        for c in self.coeffs.iter().rev() {
            out = out.mul(&lin).add(&UniPoly::constant(c.clone()));
        }
        out
    }

    /// Parses the univariate grammar in the variable `var`, e.g. `t^4+t+1`.
    pub fn parse_in(s: &str, var: char) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut coeffs: Vec<Rational> = Vec::new();
        for (neg, term) in split_signed_terms(s)? {
            let mut c = Rational::one();
            let mut e = 0usize;
            for (k, factor) in term.split('*').enumerate() {
                let factor = factor.trim();
                if let Some(rest) = factor.strip_prefix(var) {
                    let rest = rest.trim();
                    let exp = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|x| x.trim().parse::<usize>().ok())
                            .ok_or_else(|| Error::Parse(format!("bad factor `{factor}`")))?
                    };
                    e += exp;
                } else if k == 0 {
                    c = parse_rational(factor)?;
                } else {
                    return Err(Error::Parse(format!("bad factor `{factor}` in `{term}`")));
                }
            }
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Rational::zero());
            }
            if neg {
                coeffs[e] -= c;
            } else {
                coeffs[e] += c;
            }
        }
        Ok(Self::new(coeffs))
    }

    pub fn display_in(&self, var: char) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (i, c)) in self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .enumerate()
        {
            let neg = c.is_negative();
            out.push_str(match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            let a = c.abs();
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{a}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in('t'))
    }
}

impl FromStr for UniPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse_in(s, 't')
    }
}

fn sign_changes(signs: impl IntoIterator<Item = i32>) -> usize {
    let nz: Vec<i32> = signs.into_iter().filter(|&s| s != 0).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}

fn sign_of(q: &Rational) -> i32 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

/// Number of distinct real roots of `m`.
pub fn sturm_real_roots(m: &UniPoly) -> usize {
    assert!(!m.is_zero(), "Sturm count of the zero polynomial");
    let seq = m.sturm_sequence();
    let at_neg = sign_changes(seq.iter().map(|p| p.sign_at_infinity(false)));
    let at_pos = sign_changes(seq.iter().map(|p| p.sign_at_infinity(true)));
    at_neg - at_pos
}

/// Distinct real roots in the half-open interval `(a, b]`.
pub fn sturm_count_in(seq: &[UniPoly], a: &Rational, b: &Rational) -> usize {
    let va = sign_changes(seq.iter().map(|p| sign_of(&p.eval(a))));
    let vb = sign_changes(seq.iter().map(|p| sign_of(&p.eval(b))));
    va.saturating_sub(vb)
}

/// Distinct real roots in `(a, +infinity)`.
pub fn sturm_count_above(seq: &[UniPoly], a: &Rational) -> usize {
    let va = sign_changes(seq.iter().map(|p| sign_of(&p.eval(a))));
    let vinf = sign_changes(seq.iter().map(|p| p.sign_at_infinity(true)));
    va.saturating_sub(vinf)
}

/// Cauchy bound: every root has absolute value below it.
pub fn root_bound(m: &UniPoly) -> Rational {
    let lc = m.leading().expect("nonzero polynomial").abs();
    let max = m.coeffs[..m.coeffs.len() - 1]
        .iter()
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(Rational::zero);
    max + Rational::one()
}

/// Sign of `m(num / 2^k)` for integer coefficients `c`, by homogenized Horner.
fn dyadic_sign(c: &[BigInt], num: &BigInt, k: usize) -> std::cmp::Ordering {
    let n = c.len() - 1;
    let mut acc = c[n].clone();
    for j in (0..n).rev() {
        acc = acc * num + (&c[j] << (k * (n - j)));
    }
    acc.sign().cmp(&num_bigint::Sign::NoSign)
}

/// Real roots: Sturm isolation on dyadic intervals, then sign bisection
/// until each interval is narrower than `2^-bits`. Returns the midpoints.
pub fn real_root_approximations(m: &UniPoly, bits: u32) -> Vec<Rational> {
    use std::cmp::Ordering::Equal;
    let seq = m.sturm_sequence();
    let den = common_denominator(m.coeffs());
    let c: Vec<BigInt> = m
        .coeffs()
        .iter()
        .map(|x| (x * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let two = Rational::from_integer(2.into());
    let mut b = Rational::one();
    while b < root_bound(m) {
        b *= &two;
    }
    let mut isolated = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        match sturm_count_in(&seq, &lo, &hi) {
            0 => {}
            // a root at `lo` belongs to the interval below, so keep splitting
            1 if !m.eval(&lo).is_zero() => isolated.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / &two;
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    // work on numerators over 2^k
    let k = bits as usize + 2;
    let scale = Rational::from_integer(BigInt::one() << k);
    let mut out = Vec::new();
    for (lo, hi) in isolated.into_iter().rev() {
        let mut lo = (lo * &scale).to_integer();
        let mut hi = (hi * &scale).to_integer();
        let s_lo = dyadic_sign(&c, &lo, k);
        if dyadic_sign(&c, &hi, k) == Equal {
            out.push(Rational::new(hi, BigInt::one() << k));
            continue;
        }
        let mut exact = None;
        while &hi - &lo > BigInt::one() {
            let mid: BigInt = (&lo + &hi) >> 1;
            match dyadic_sign(&c, &mid, k) {
                Equal => {
                    exact = Some(mid);
                    break;
                }
                s if s == s_lo => lo = mid,
                _ => hi = mid,
            }
        }
        let num = exact.unwrap_or_else(|| (lo + hi) >> 1);
        out.push(Rational::new(num, BigInt::one() << k));
    }
    out.sort();
    out
}

/// `D^n m(u / D)`: monic with integer coefficients, roots scaled by `D`.
pub fn integral_monic(m: &UniPoly) -> (UniPoly, BigInt) {
    let m = m.monic();
    let d = common_denominator(m.coeffs());
    let n = m.degree().unwrap();
    let dr = Rational::from_integer(d.clone());
    let mut scale = Rational::one();
    let mut coeffs = vec![Rational::zero(); n + 1];
    for k in (0..=n).rev() {
        coeffs[k] = m.coeff(k) * &scale;
        scale *= &dr;
    }
    (UniPoly::new(coeffs), d)
}

/// All rational roots of a nonzero polynomial, ascending.
pub fn rational_roots(p: &UniPoly) -> Vec<Rational> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let (big, d) = integral_monic(&p.squarefree_part());
    // roots of a monic integer polynomial that are rational are integers
    let d = Rational::from_integer(d);
    real_root_approximations(&big, 2)
        .into_iter()
        .map(|x| x.round())
        .filter(|x| big.eval(x).is_zero())
        .map(|x| x / &d)
        .collect()
}
