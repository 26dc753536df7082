//! Rational scalars.
//!
//! `Rational` is `num_rational::BigRational`, which keeps every value reduced
//! with a positive denominator and represents zero as `0/1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `-3`, `7/2` or `+5`. Whitespace around the value is ignored.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = num.strip_prefix('+').unwrap_or(num);
    if num.is_empty() || den.is_empty() || den.starts_with('-') || den.starts_with('+') {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Scales a rational vector to a primitive integer vector (content 1) whose
/// first nonzero entry is positive. The zero vector is returned unchanged.
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let den = common_denominator(v);
    let mut ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let negate = ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    for x in ints.iter_mut() {
        *x = &*x / &g;
        if negate {
            *x = -&*x;
        }
    }
    ints
}

/// Floor of the square root of a nonnegative integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of a negative integer");
    n.sqrt()
}

/// Returns the square root when `q` is the square of a rational.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = isqrt(q.numer());
    let d = isqrt(q.denom());
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Rational upper bound for `sqrt(q)` with relative slack about `2^-bits`.
pub fn sqrt_upper(q: &Rational, bits: u32) -> Rational {
    if !q.is_positive() {
        return Rational::zero();
    }
    let scale = BigInt::one() << (2 * bits as usize);
    let scaled = (q * Rational::from_integer(scale)).ceil().to_integer();
    let mut r = isqrt(&scaled);
    if &r * &r < scaled {
        r += 1;
    }
    Rational::new(r, BigInt::one() << bits as usize)
}

/// Rounds to the nearest multiple of `2^-bits`.
pub fn round_bits(q: &Rational, bits: u32) -> Rational {
    let scale = BigInt::one() << bits as usize;
    let scaled = q * Rational::from_integer(scale.clone());
    Rational::new(scaled.round().to_integer(), scale)
}

/// Lossy conversion for reporting.
pub fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Simplest rational (smallest denominator) in the closed interval `[lo, hi]`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo <= hi);
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    if &(&fl + Rational::one()) <= hi {
        return fl + Rational::one();
    }
    // lo and hi share the integer part; recurse on the reciprocals of the fractional parts.
    let inner = simplest_between(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("7/2").unwrap(), ratio(7, 2));
        assert_eq!(parse_rational(" -6/4 ").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("+5").unwrap(), rat(5));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn canonical_zero() {
        let z = parse_rational("0/7").unwrap();
        assert_eq!(z.numer(), &BigInt::zero());
        assert_eq!(z.denom(), &BigInt::one());
    }

    #[test]
    fn primitive_vectors() {
        let v = [ratio(-1, 2), ratio(1, 3), rat(0)];
        let p = primitive_integer_vector(&v);
        assert_eq!(p, vec![BigInt::from(3), BigInt::from(-2), BigInt::from(0)]);
    }

    #[test]
    fn square_roots() {
        assert_eq!(rational_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(rational_sqrt(&rat(2)), None);
        let up = sqrt_upper(&rat(2), 40);
        assert!(&up * &up >= rat(2));
        assert!(&up - ratio(14142135623731, 10000000000000) < ratio(1, 1_000_000_000));
    }

    #[test]
    fn simplest_rational() {
        assert_eq!(simplest_between(&ratio(19, 10), &ratio(21, 10)), rat(2));
        assert_eq!(simplest_between(&ratio(3, 10), &ratio(4, 10)), ratio(1, 3));
        assert_eq!(
            simplest_between(&ratio(-4, 10), &ratio(-3, 10)),
            ratio(-1, 3)
        );
    }
}
