use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, .., n-1}`; printed and parsed 1-based in cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPerm(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Builds from 0-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                if a >= n {
                    return Err(Error::InvalidPerm(format!(
                        "point {} exceeds degree {n}",
                        a + 1
                    )));
                }
                if touched[a] {
                    return Err(Error::InvalidPerm(format!("point {} repeated", a + 1)));
                }
                touched[a] = true;
                images[a] = cyc[(k + 1) % cyc.len()];
            }
        }
        Ok(Perm { images })
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)`, `(1,2)` or `()`.
    pub fn parse(s: &str, degree: usize) -> Result<Self> {
        Self::from_cycles(degree, &parse_cycles(s)?)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Perm { images: inv }
    }

    /// `g self g^{-1}`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.compose(self).compose(&g.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.compose(self).is_identity()
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree())
            .filter(|&i| self.images[i] == i)
            .collect()
    }

    pub fn is_fpf_involution(&self) -> bool {
        self.is_involution() && self.fixed_points().is_empty()
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.images[x];
            }
            out.push(cyc);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

/// 0-based cycles from 1-based text.
fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid cycle notation `{s}`"));
    let mut cycles = Vec::new();
    let mut rest = s;
    if rest.is_empty() {
        return Err(bad());
    }
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(bad)?;
        let close = body.find(')').ok_or_else(bad)?;
        let inner = &body[..close];
        let pts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| match t.parse::<usize>() {
                Ok(p) if p >= 1 => Ok(p - 1),
                _ => Err(bad()),
            })
            .collect::<Result<Vec<_>>>()?;
        if !pts.is_empty() {
            cycles.push(pts);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Splits `(1 2 3 4),(1 3)` into generator strings at top-level commas.
pub fn split_generators(s: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse(format!("unbalanced parentheses in `{s}`")));
                }
                cur.push(ch);
            }
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur).trim().to_string());
            }
            _ => cur.push(ch),
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in `{s}`")));
    }
    out.push(cur.trim().to_string());
    if out.iter().any(String::is_empty) {
        return Err(Error::Parse(format!("empty generator in `{s}`")));
    }
    Ok(out)
}

/// Largest point mentioned in cycle text (1-based), or 0.
pub fn max_point(s: &str) -> usize {
    s.split(|c: char| !c.is_ascii_digit())
        .filter_map(|t| t.parse::<usize>().ok())
        .max()
        .unwrap_or(0)
}
