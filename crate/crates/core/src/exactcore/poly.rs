//! Sparse multivariate polynomials over the rationals.
//!
//! Monomials are ordered graded-lexicographically with `x1 > x2 > ...`. All
//! coefficient vectors, Gram matrices and moment matrices in the crate are
//! indexed by [`monomials`], which lists a graded piece in descending order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::rational::{parse_rational, Rational};
use crate::error::{Error, Result};

/// Exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.nvars().max(other.nvars());
        let get = |m: &Monomial, i: usize| m.0.get(i).copied().unwrap_or(0);
        Monomial((0..n).map(|i| get(self, i) + get(other, i)).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let n = self.nvars().max(other.nvars());
        let get = |m: &Monomial, i: usize| m.0.get(i).copied().unwrap_or(0);
        (0..n)
            .map(|i| get(self, i).checked_sub(get(other, i)))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    fn padded(&self, nvars: usize) -> Monomial {
        let mut e = self.0.clone();
        e.resize(nvars, 0);
        Monomial(e)
    }

    /// Evaluates the monomial at a point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::one();
        for (e, x) in self.0.iter().zip(point) {
            if *e > 0 {
                acc *= num_traits::pow(x.clone(), *e as usize);
            }
        }
        acc
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// All monomials of exact degree `d` in `n` variables, descending in graded-lex order.
pub fn monomials(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    assert!(n >= 1, "need at least one variable");
    let mut out = Vec::new();
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Binomial coefficient for small arguments.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Dimension of the space of forms of degree `d` in `n` variables.
pub fn graded_dim(n: usize, d: u32) -> usize {
    binomial(n - 1 + d as usize, d as usize)
}

/// Sparse polynomial. Zero coefficients are never stored.
#[derive(Clone, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::from_terms(nvars, [(Monomial::one(nvars), c)])
    }

    /// The variable `x_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_terms(nvars, [(Monomial::var(nvars, i), Rational::one())])
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Builds `sum coeffs[k] * basis[k]`.
    pub fn from_coeffs(nvars: usize, basis: &[Monomial], coeffs: &[Rational]) -> Self {
        assert_eq!(basis.len(), coeffs.len());
        Self::from_terms(nvars, basis.iter().cloned().zip(coeffs.iter().cloned()))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        if m.nvars() > self.nvars {
            self.extend_vars(m.nvars());
        }
        let m = m.padded(self.nvars);
        let cancelled = {
            let entry = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
            *entry += c;
            entry.is_zero()
        };
        if cancelled {
            self.terms.remove(&m);
        }
    }

    fn extend_vars(&mut self, n: usize) {
        if n <= self.nvars {
            return;
        }
        let old = std::mem::take(&mut self.terms);
        self.terms = old.into_iter().map(|(m, c)| (m.padded(n), c)).collect();
        self.nvars = n;
    }

    /// Same polynomial viewed in at least `n` variables.
    pub fn with_nvars(mut self, n: usize) -> Self {
        self.extend_vars(n);
        self
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        if m.0.iter().skip(self.nvars).any(|&e| e > 0) {
            return Rational::zero();
        }
        self.terms
            .get(&m.padded(self.nvars))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// True when every term has the same degree (the zero polynomial counts).
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// The graded piece of degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficients against a monomial basis. Terms outside the basis are ignored.
    pub fn coeff_vector(&self, basis: &[Monomial]) -> Vec<Rational> {
        basis.iter().map(|m| self.coeff(m)).collect()
    }

    /// True when every term lies in the given basis.
    pub fn supported_on(&self, basis: &[Monomial]) -> bool {
        self.terms.keys().all(|m| basis.contains(m))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly::from_terms(
            self.nvars.max(m.nvars()),
            self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())),
        )
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::constant(self.nvars, Rational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn square(&self) -> Poly {
        self * self
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.terms.iter().map(|(m, c)| c * m.eval(point)).sum()
    }

    /// Exact division. Returns `None` unless `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (lm, lc) = divisor.leading_term()?;
        let n = self.nvars.max(divisor.nvars);
        let mut rem = self.clone().with_nvars(n);
        let mut quot = Poly::zero(n);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lm)?;
            let qc = c / lc;
            let t = Poly::from_terms(n, [(qm, qc)]);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Maps every coefficient through `f`.
    pub fn map_coeffs(&self, f: impl Fn(&Rational) -> Rational) -> Poly {
        Poly::from_terms(
            self.nvars,
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))),
        )
    }

    /// Parses with at least `nvars` variables.
    pub fn parse_with_nvars(s: &str, nvars: usize) -> Result<Poly> {
        Ok(s.parse::<Poly>()?.with_nvars(nvars))
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        let n = self.nvars.max(other.nvars);
        if self.nvars == other.nvars {
            return self.terms == other.terms;
        }
        self.clone().with_nvars(n).terms == other.clone().with_nvars(n).terms
    }
}

impl Eq for Poly {}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.nvars.max(rhs.nvars);
        let mut out = self.clone().with_nvars(n);
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.nvars.max(rhs.nvars);
        let mut out = self.clone().with_nvars(n);
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let n = self.nvars.max(rhs.nvars);
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb).padded(n);
                *acc.entry(m).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Poly {
            nvars: n,
            terms: acc,
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(1), |acc, p| &acc + &p)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let is_const = m.degree() == 0;
            if is_const {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Splits a sum into signed terms, respecting parentheses.
pub(crate) fn split_signed_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut neg = false;
    let mut pending_sign = true;
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
                pending_sign = false;
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse(format!("unbalanced parentheses in `{s}`")));
                }
                cur.push(ch);
            }
            '+' | '-'
                if depth == 0
                    && !cur.trim_end().ends_with('^')
                    && !cur.trim_end().ends_with('*')
                    && !cur.trim_end().ends_with('/') =>
            {
                if cur.trim().is_empty() {
                    if !pending_sign {
                        return Err(Error::Parse(format!("dangling operator in `{s}`")));
                    }
                    if ch == '-' {
                        neg = !neg;
                    }
                    pending_sign = false;
                    continue;
                }
                out.push((neg, cur.trim().to_string()));
                cur.clear();
                neg = ch == '-';
                pending_sign = false;
            }
            c if c.is_whitespace() => cur.push(c),
            c => {
                cur.push(c);
                pending_sign = false;
            }
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in `{s}`")));
    }
    if cur.trim().is_empty() {
        return Err(Error::Parse(format!("empty term in `{s}`")));
    }
    out.push((neg, cur.trim().to_string()));
    Ok(out)
}

fn parse_term(term: &str) -> Result<(Rational, Vec<(usize, u32)>)> {
    let mut coeff = Rational::one();
    let mut factors = Vec::new();
    for (k, factor) in term.split('*').enumerate() {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in `{term}`")));
        }
        if let Some(rest) = factor.strip_prefix('x') {
            let (idx, exp) = match rest.split_once('^') {
                Some((i, e)) => (i.trim(), e.trim()),
                None => (rest, "1"),
            };
            let idx: usize = idx
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable `{factor}`")))?;
            let exp: u32 = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent `{factor}`")))?;
            if idx == 0 {
                return Err(Error::Parse("variables are numbered from x1".into()));
            }
            factors.push((idx - 1, exp));
        } else if k == 0 {
            coeff = parse_rational(factor)?;
        } else {
            return Err(Error::Parse(format!(
                "coefficient must lead the term `{term}`"
            )));
        }
    }
    Ok((coeff, factors))
}

impl FromStr for Poly {
    type Err = Error;

    /// Grammar: terms joined by `+`/`-`; term = [coefficient `*`] monomial;
    /// coefficient = integer or `p/q`; monomial = `x<i>[^e]` factors joined by `*`.
    fn from_str(s: &str) -> Result<Poly> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut parsed = Vec::new();
        let mut nvars = 1;
        for (neg, term) in split_signed_terms(s)? {
            let (c, factors) = parse_term(&term)?;
            for &(i, _) in &factors {
                nvars = nvars.max(i + 1);
            }
            parsed.push((if neg { -c } else { c }, factors));
        }
        let mut p = Poly::zero(nvars);
        for (c, factors) in parsed {
            let mut m = vec![0u32; nvars];
            for (i, e) in factors {
                m[i] += e;
            }
            p.add_term(Monomial(m), c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::{rat, ratio};

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn grlex_basis_order() {
        let b = monomials(3, 2);
        let shown: Vec<String> = b.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, ["x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"]);
        assert_eq!(monomials(3, 3).len(), 10);
        assert_eq!(monomials(3, 6).len(), 28);
        assert_eq!(graded_dim(3, 7), 36);
    }

    #[test]
    fn display_round_trip() {
        for s in [
            "7/2*x1^4*x3^2 - x2^6",
            "x1^2 + x2^2",
            "-x1 + 3",
            "0",
            "-1/3*x1*x2*x3 + 5/7",
        ] {
            assert_eq!(p(s).to_string(), s);
        }
    }

    #[test]
    fn parse_variants() {
        assert_eq!(p("x1*x1"), p("x1^2"));
        assert_eq!(p("- x1 + x2"), p("-x1 + x2"));
        assert!("x1 - -x2".parse::<Poly>().is_err());
        assert_eq!(p("2*x3 - 2*x3"), Poly::zero(3));
        assert!("x0".parse::<Poly>().is_err());
        assert!("x1 +".parse::<Poly>().is_err());
        assert!("x1 * 2".parse::<Poly>().is_err());
        assert!("x1^a".parse::<Poly>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = p("x1 + x2");
        assert_eq!(a.square(), p("x1^2 + 2*x1*x2 + x2^2"));
        assert_eq!(&a - &a, Poly::zero(2));
        let prod = &p("x1 - x2") * &p("x1 + x2 + x3");
        assert_eq!(prod.div_exact(&p("x1 - x2")).unwrap(), p("x1 + x2 + x3"));
        assert!(p("x1^2 + 1").div_exact(&p("x1 + 1")).is_none());
        assert_eq!(p("x1^2*x2 - 3").eval(&[rat(2), ratio(1, 2)]), rat(-1));
    }

    #[test]
    fn graded_access() {
        let f = p("x1^3 + x1*x2 + 4");
        assert!(!f.is_homogeneous());
        assert_eq!(f.homogeneous_part(2), p("x1*x2"));
        assert_eq!(f.degree(), Some(3));
        assert!(p("x1^2 - x2^2").is_homogeneous());
    }

    #[test]
    fn coefficient_vectors() {
        let b = monomials(2, 2);
        let f = p("x1^2 - 3*x2^2");
        let v = f.coeff_vector(&b);
        assert_eq!(v, vec![rat(1), rat(0), rat(-3)]);
        assert_eq!(Poly::from_coeffs(2, &b, &v), f);
    }
}
