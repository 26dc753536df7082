use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;

use super::perm::{max_point, split_generators, Perm};
use crate::error::{Error, Result};

/// Default cap on the number of enumerated group elements.
pub const DEFAULT_ENUM_BOUND: usize = 1_000_000;

/// A permutation group given by generators on `{1..degree}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDesc {
    pub degree: usize,
    pub generators: Vec<Perm>,
    pub label: String,
}

impl GroupDesc {
    pub fn new(degree: usize, generators: Vec<Perm>, label: impl Into<String>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPerm("degree must be at least 1".into()));
        }
        if generators.is_empty() {
            return Err(Error::InvalidPerm(
                "at least one generator is required".into(),
            ));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidPerm(format!(
                "generator {g} has degree {} instead of {degree}",
                g.degree()
            )));
        }
        Ok(GroupDesc {
            degree,
            generators,
            label: label.into(),
        })
    }

    /// Parses `(1 2 3 4),(1 3)`. The degree defaults to the largest point named.
    pub fn parse(gens: &str, degree: Option<usize>, label: &str) -> Result<Self> {
        let degree = degree.unwrap_or_else(|| max_point(gens));
        let generators = split_generators(gens)?
            .iter()
            .map(|g| Perm::parse(g, degree))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, generators, label)
    }

    /// Orbit of a point under the generators.
    pub fn orbit_of_point(&self, x: usize) -> Vec<usize> {
        orbit_closure(&self.generators, [x], |g, &p| g.apply(p))
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit_of_point(0).len() == self.degree
    }

    /// True iff the ordered-pair orbit of `(1, 2)` has size `n(n-1)`.
    pub fn is_two_transitive(&self) -> bool {
        let n = self.degree;
        if n < 2 {
            return false;
        }
        orbit_closure(&self.generators, [(0usize, 1usize)], act_ordered_pair).len() == n * (n - 1)
    }

    /// All elements, breadth-first from the identity. Fails once more than
    /// `bound` elements have been found.
    pub fn enumerate(&self, bound: usize) -> Result<Vec<Perm>> {
        self.enumerate_partial(bound)
            .map_err(|(count, _)| Error::OrderExceeded(count))
    }

    /// Like [`enumerate`](Self::enumerate) but hands back the elements found
    /// before the bound was hit.
    pub fn enumerate_partial(
        &self,
        bound: usize,
    ) -> std::result::Result<Vec<Perm>, (usize, Vec<Perm>)> {
        let id = Perm::identity(self.degree);
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut order = vec![id];
        let mut head = 0;
        while head < order.len() {
            let x = order[head].clone();
            head += 1;
            for g in &self.generators {
                let y = g.compose(&x);
                if seen.insert(y.clone()) {
                    order.push(y);
                    if order.len() > bound {
                        return Err((order.len(), order));
                    }
                }
            }
        }
        Ok(order)
    }

    /// Membership by enumeration; `None` when the group exceeds `bound`.
    pub fn contains(&self, p: &Perm, bound: usize) -> Option<bool> {
        if p.degree() != self.degree {
            return Some(false);
        }
        self.enumerate(bound).ok().map(|els| els.contains(p))
    }
}

impl fmt::Display for GroupDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(Perm::to_string).collect();
        write!(f, "{};{};{}", self.degree, self.label, gens.join(","))
    }
}

pub fn act_ordered_pair(g: &Perm, &(a, b): &(usize, usize)) -> (usize, usize) {
    (g.apply(a), g.apply(b))
}

pub fn act_unordered_pair(g: &Perm, &(a, b): &(usize, usize)) -> (usize, usize) {
    let (x, y) = (g.apply(a), g.apply(b));
    (x.min(y), x.max(y))
}

/// Smallest superset of `seeds` closed under every generator, in
/// breadth-first discovery order.
pub fn orbit_closure<T, F>(gens: &[Perm], seeds: impl IntoIterator<Item = T>, act: F) -> Vec<T>
where
    T: Clone + Eq + Hash,
    F: Fn(&Perm, &T) -> T,
{
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for s in seeds {
        if seen.insert(s.clone()) {
            out.push(s.clone());
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = act(g, &x);
            if seen.insert(y.clone()) {
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    out
}
