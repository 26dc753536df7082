//! Classification of transitive groups by their fixed-point-free involutions.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;

use super::charnum::char_number_unchecked;
use super::group::{orbit_closure, GroupDesc};
use super::perm::Perm;
use crate::error::{Error, Result};

/// One conjugacy class of fixed-point-free involutions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpfClass {
    /// Smallest element of the class (by image list).
    pub representative: Perm,
    pub class_size: usize,
    pub c: usize,
    pub satisfies_star: bool,
    pub satisfies_starstar: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAnalysis {
    pub label: String,
    pub degree: usize,
    pub is_transitive: bool,
    pub is_two_transitive: bool,
    pub has_fpf_involution: bool,
    pub fpf_classes: Vec<FpfClass>,
    /// Group order when fully enumerated.
    pub order: Option<usize>,
    /// False when the class list comes from a partial enumeration.
    pub classes_complete: bool,
}

impl GroupAnalysis {
    pub fn any_star(&self) -> bool {
        self.fpf_classes.iter().any(|c| c.satisfies_star)
    }

    pub fn any_starstar(&self) -> bool {
        self.fpf_classes.iter().any(|c| c.satisfies_starstar)
    }

    /// Membership in the four table columns:
    /// (1) has a fpf involution, (2) additionally 2-transitive,
    /// (3) (*) for some involution but not 2-transitive,
    /// (4) (**) for some involution but (*) for none.
    pub fn columns(&self) -> [bool; 4] {
        let fpf = self.has_fpf_involution;
        [
            fpf,
            fpf && self.is_two_transitive,
            fpf && self.any_star() && !self.is_two_transitive,
            fpf && self.any_starstar() && !self.any_star(),
        ]
    }
}

impl fmt::Display for GroupAnalysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        writeln!(f, "group: {} (degree {})", self.label, self.degree)?;
        match self.order {
            Some(o) => writeln!(f, "order: {o}")?,
            None => writeln!(f, "order: not enumerated")?,
        }
        writeln!(f, "transitive: {}", yn(self.is_transitive))?;
        writeln!(f, "2-transitive: {}", yn(self.is_two_transitive))?;
        writeln!(f, "fpf involution: {}", yn(self.has_fpf_involution))?;
        for cl in &self.fpf_classes {
            writeln!(
                f,
                "class {} (size {}): c={}, (*) {}, (**) {}",
                cl.representative,
                cl.class_size,
                cl.c,
                yn(cl.satisfies_star),
                yn(cl.satisfies_starstar)
            )?;
        }
        if !self.classes_complete {
            writeln!(f, "note: class list from partial enumeration")?;
        }
        let cols = self.columns();
        write!(
            f,
            "columns: (1) {} (2) {} (3) {} (4) {}",
            yn(cols[0]),
            yn(cols[1]),
            yn(cols[2]),
            yn(cols[3])
        )
    }
}

fn smallest(perms: impl IntoIterator<Item = Perm>) -> Perm {
    perms.into_iter().min().expect("nonempty class")
}

/// Partitions the fpf involutions among `elements` into conjugacy classes
/// (orbits under conjugation by the generators) with one representative each.
fn classes_among(group: &GroupDesc, elements: &[Perm]) -> Vec<(Perm, usize)> {
    let mut done: HashSet<Perm> = HashSet::new();
    let mut out = Vec::new();
    for t in elements.iter().filter(|p| p.is_fpf_involution()) {
        if done.contains(t) {
            continue;
        }
        let class = orbit_closure(&group.generators, [t.clone()], |g, x| x.conjugate_by(g));
        let size = class.len();
        done.extend(class.iter().cloned());
        out.push((smallest(class), size));
    }
    out.sort();
    out
}

/// Representatives of the conjugacy classes of fixed-point-free involutions.
pub fn fpf_involution_classes(group: &GroupDesc, bound: usize) -> Result<Vec<Perm>> {
    let elements = group.enumerate(bound)?;
    Ok(classes_among(group, &elements)
        .into_iter()
        .map(|(p, _)| p)
        .collect())
}

fn describe(group: &GroupDesc, t: Perm, class_size: usize) -> FpfClass {
    let c = char_number_unchecked(group, &t);
    let n = group.degree;
    FpfClass {
        representative: t,
        class_size,
        c,
        satisfies_star: c + 1 == n,
        satisfies_starstar: 2 * c > n,
    }
}

pub fn classify(group: &GroupDesc, bound: usize) -> Result<GroupAnalysis> {
    let is_transitive = group.is_transitive();
    let is_two_transitive = group.is_two_transitive();
    let (elements, order, complete) = match group.enumerate_partial(bound) {
        Ok(els) => {
            let n = els.len();
            (els, Some(n), true)
        }
        // A 2-transitive group satisfies (*) for every fpf involution, so one
        // involution found before the bound settles all four columns.
        Err((count, partial)) => {
            if is_two_transitive && partial.iter().any(Perm::is_fpf_involution) {
                (partial, None, false)
            } else {
                return Err(Error::OrderExceeded(count));
            }
        }
    };
    let fpf_classes: Vec<FpfClass> = if complete {
        classes_among(group, &elements)
            .into_iter()
            .map(|(t, size)| describe(group, t, size))
            .collect()
    } else {
        let t = elements
            .iter()
            .find(|p| p.is_fpf_involution())
            .cloned()
            .unwrap();
        let class = orbit_closure(&group.generators, [t], |g, x| x.conjugate_by(g));
        let size = class.len();
        vec![describe(group, smallest(class), size)]
    };
    Ok(GroupAnalysis {
        label: group.label.clone(),
        degree: group.degree,
        is_transitive,
        is_two_transitive,
        has_fpf_involution: !fpf_classes.is_empty(),
        fpf_classes,
        order,
        classes_complete: complete,
    })
}

/// Aggregated table row for one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub degree: usize,
    pub counts: [usize; 4],
    /// Labels of the groups counted in each column.
    pub labels: [Vec<String>; 4],
    pub entries: usize,
    pub failures: Vec<(String, Error)>,
    pub intransitive: Vec<String>,
}

impl TableRow {
    pub fn tuple(&self) -> (usize, usize, usize, usize, usize) {
        let [a, b, c, d] = self.counts;
        (self.degree, a, b, c, d)
    }

    /// Aligned text: `4  5  2  0  0`.
    pub fn aligned(&self) -> String {
        let [a, b, c, d] = self.counts;
        format!("{:>2} {:>4} {:>3} {:>3} {:>3}", self.degree, a, b, c, d)
    }
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, a, b, c, d) = self.tuple();
        write!(f, "({n}, {a}, {b}, {c}, {d})")
    }
}

/// Classifies every catalog entry of the given degree (in parallel) and
/// aggregates the column counts. The result does not depend on scheduling.
pub fn classify_catalog(catalog: &[GroupDesc], degree: usize, bound: usize) -> TableRow {
    let entries: Vec<&GroupDesc> = catalog.iter().filter(|g| g.degree == degree).collect();
    let results: Vec<(String, Result<GroupAnalysis>)> = entries
        .par_iter()
        .map(|g| (g.label.clone(), classify(g, bound)))
        .collect();
    let mut counts = [0; 4];
    let mut labels: [Vec<String>; 4] = Default::default();
    let mut failures = Vec::new();
    let mut intransitive = Vec::new();
    for (label, res) in results {
        match res {
            Ok(a) => {
                if !a.is_transitive {
                    intransitive.push(label.clone());
                }
                for (k, hit) in a.columns().into_iter().enumerate() {
                    if hit {
                        counts[k] += 1;
                        labels[k].push(label.clone());
                    }
                }
            }
            Err(e) => failures.push((label, e)),
        }
    }
    TableRow {
        degree,
        counts,
        labels,
        entries: entries.len(),
        failures,
        intransitive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::group::DEFAULT_ENUM_BOUND;

    fn group(gens: &str) -> GroupDesc {
        GroupDesc::parse(gens, None, "test").unwrap()
    }

    #[test]
    fn klein_classes() {
        let cl = fpf_involution_classes(&group("(1 2)(3 4),(1 3)(2 4)"), 100).unwrap();
        assert_eq!(cl.len(), 3);
    }

    #[test]
    fn dihedral_classes() {
        let cl = fpf_involution_classes(&group("(1 2 3 4),(1 3)"), 100).unwrap();
        let shown: Vec<String> = cl.iter().map(Perm::to_string).collect();
        assert_eq!(shown, ["(1 2)(3 4)", "(1 3)(2 4)"]);
    }

    #[test]
    fn odd_degree_has_none() {
        assert!(fpf_involution_classes(&group("(1 2 3)"), 100)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn classify_dihedral() {
        let a = classify(&group("(1 2 3 4),(1 3)"), DEFAULT_ENUM_BOUND).unwrap();
        assert!(a.has_fpf_involution && !a.is_two_transitive);
        let mut cs: Vec<usize> = a.fpf_classes.iter().map(|c| c.c).collect();
        cs.sort();
        assert_eq!(cs, vec![1, 2]);
        assert_eq!(a.columns(), [true, false, false, false]);
        assert_eq!(a.order, Some(8));
    }

    #[test]
    fn classify_s4_and_c6() {
        let a = classify(&group("(1 2 3 4),(1 2)"), DEFAULT_ENUM_BOUND).unwrap();
        assert_eq!(a.columns(), [true, true, false, false]);
        assert!(a.any_star());
        let c6 = classify(&group("(1 2 3 4 5 6)"), DEFAULT_ENUM_BOUND).unwrap();
        assert_eq!(c6.fpf_classes.len(), 1);
        assert_eq!(
            c6.fpf_classes[0].representative.to_string(),
            "(1 4)(2 5)(3 6)"
        );
        assert_eq!(c6.fpf_classes[0].c, 1);
        assert_eq!(c6.columns(), [true, false, false, false]);
    }

    #[test]
    fn partial_enumeration_for_two_transitive() {
        let a = classify(&group("(1 2 3 4),(1 2)"), 12).unwrap();
        assert!(!a.classes_complete);
        assert_eq!(a.columns(), [true, true, false, false]);
        assert!(matches!(
            classify(&group("(1 2 3 4),(1 3)"), 3),
            Err(Error::OrderExceeded(_))
        ));
    }
}
