//! Four-square decompositions of positive rationals.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::rational::{isqrt, Rational};
use crate::error::{Error, Result};

/// `r = a^2 + b^2 + c^2 + d^2` with rational `a >= b >= c >= d >= 0`.
///
/// Writes `r = (p q) / q^2` and decomposes the integer `p q` by a descending
/// search, so the result is the lexicographically largest integer solution
/// scaled by `1/q`.
pub fn four_squares(r: &Rational) -> Result<[Rational; 4]> {
    if !r.is_positive() {
        return Err(Error::NonPositive(r.to_string()));
    }
    let q = r.denom().clone();
    let n = r.numer() * &q;
    let ints = integer_four_squares(&n);
    Ok(ints.map(|a| Rational::new(a, q.clone())))
}

/// Largest-first decomposition of a nonnegative integer into four squares.
pub fn integer_four_squares(n: &BigInt) -> [BigInt; 4] {
    assert!(!n.is_negative());
    let mut a = isqrt(n);
    loop {
        let rest = n - &a * &a;
        if let Some([b, c, d]) = three_squares(&rest, &a) {
            return [a, b, c, d];
        }
        assert!(
            !a.is_zero(),
            "Lagrange's theorem guarantees a decomposition"
        );
        a -= 1;
    }
}

/// `n = b^2 + c^2 + d^2` with `cap >= b >= c >= d`, largest `b` first.
fn three_squares(n: &BigInt, cap: &BigInt) -> Option<[BigInt; 3]> {
    if is_excluded_from_three_squares(n) {
        return None;
    }
    let mut b = isqrt(n).min(cap.clone());
    loop {
        let rest = n - &b * &b;
        if let Some([c, d]) = two_squares(&rest, &b) {
            return Some([b, c, d]);
        }
        if b.is_zero() {
            return None;
        }
        b -= 1;
    }
}

fn two_squares(n: &BigInt, cap: &BigInt) -> Option<[BigInt; 2]> {
    let mut c = isqrt(n).min(cap.clone());
    loop {
        let rest = n - &c * &c;
        if rest > &c * &c {
            return None;
        }
        let d = isqrt(&rest);
        if &d * &d == rest {
            return Some([c, d]);
        }
        if c.is_zero() {
            return None;
        }
        c -= 1;
    }
}

/// Legendre: `n` is not a sum of three squares iff `n = 4^k (8m + 7)`.
fn is_excluded_from_three_squares(n: &BigInt) -> bool {
    if n.is_zero() {
        return false;
    }
    let four = BigInt::from(4);
    let mut m = n.clone();
    while (&m % &four).is_zero() {
        m /= &four;
    }
    &m % BigInt::from(8) == BigInt::from(7)
}

/// Sum of squares of the four components.
pub fn sum_of_four(parts: &[Rational; 4]) -> Rational {
    parts
        .iter()
        .map(|x| x * x)
        .fold(Rational::zero(), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::{rat, ratio};

    #[test]
    fn examples() {
        assert_eq!(
            four_squares(&rat(1)).unwrap(),
            [rat(1), rat(0), rat(0), rat(0)]
        );
        assert_eq!(
            four_squares(&rat(7)).unwrap(),
            [rat(2), rat(1), rat(1), rat(1)]
        );
        assert_eq!(
            four_squares(&ratio(3, 2)).unwrap(),
            [rat(1), ratio(1, 2), ratio(1, 2), rat(0)]
        );
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(matches!(four_squares(&rat(0)), Err(Error::NonPositive(_))));
        assert!(matches!(
            four_squares(&ratio(-1, 3)),
            Err(Error::NonPositive(_))
        ));
    }

    #[test]
    fn small_integers_exhaustive() {
        for n in 1..2000i64 {
            let parts = four_squares(&rat(n)).unwrap();
            assert_eq!(sum_of_four(&parts), rat(n), "n = {n}");
        }
    }
}
