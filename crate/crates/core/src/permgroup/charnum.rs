//! Characteristic number of a fixed-point-free involution.
//!
//! For `t` in `G` acting on `X`, `M_t(x) = {g t g^-1 x : g in G}`. The pairs
//! `{g z, g t z}` form the `G`-orbit of the seed pairs `{z, t z}`, so
//! `M_t(x)` is the set of partners of `x` in that orbit. The orbit has at most
//! `n(n-1)/2` elements, which avoids enumerating the conjugacy class.

use std::fmt;

use super::group::{act_unordered_pair, orbit_closure, GroupDesc};
use super::perm::Perm;
use crate::error::{Error, Result};

/// Whether `t` was confirmed to lie in the group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Verified,
    /// The group exceeded the enumeration bound, so membership was not checked.
    Unverified,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharNumber {
    pub c: usize,
    pub degree: usize,
    pub membership: Membership,
}

impl CharNumber {
    /// Condition (*): `c = n - 1`.
    pub fn satisfies_star(&self) -> bool {
        self.c + 1 == self.degree
    }

    /// Condition (**): `c > n / 2`.
    pub fn satisfies_starstar(&self) -> bool {
        2 * self.c > self.degree
    }
}

impl fmt::Display for CharNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        write!(
            f,
            "c={}, (*) {}, (**) {}",
            self.c,
            yn(self.satisfies_star()),
            yn(self.satisfies_starstar())
        )
    }
}

/// Checks that `t` is a fixed-point-free involution of the right degree.
pub fn check_fpf_involution(t: &Perm, degree: usize) -> Result<()> {
    if t.degree() != degree {
        return Err(Error::InvalidPerm(format!(
            "involution has degree {} but the group has degree {degree}",
            t.degree()
        )));
    }
    if !t.is_involution() {
        return Err(Error::NotInvolution);
    }
    if let Some(&x) = t.fixed_points().first() {
        return Err(Error::HasFixedPoint(x + 1));
    }
    Ok(())
}

/// `|M_t(x)|` for every base point `x`, computed by pair-orbit closure.
pub fn m_set_sizes(group: &GroupDesc, t: &Perm) -> Vec<usize> {
    let n = group.degree;
    let seeds = (0..n).map(|z| {
        let w = t.apply(z);
        (z.min(w), z.max(w))
    });
    let pairs = orbit_closure(&group.generators, seeds, act_unordered_pair);
    let mut sizes = vec![0; n];
    for (a, b) in pairs {
        sizes[a] += 1;
        sizes[b] += 1;
    }
    sizes
}

/// `M_t(x)` as a sorted list of points (0-based).
pub fn m_set(group: &GroupDesc, t: &Perm, x: usize) -> Vec<usize> {
    let n = group.degree;
    let seeds = (0..n).map(|z| {
        let w = t.apply(z);
        (z.min(w), z.max(w))
    });
    let mut out: Vec<usize> = orbit_closure(&group.generators, seeds, act_unordered_pair)
        .into_iter()
        .filter_map(|(a, b)| match (a == x, b == x) {
            (true, _) => Some(b),
            (_, true) => Some(a),
            _ => None,
        })
        .collect();
    out.sort_unstable();
    out
}

/// The characteristic number `c(G, X, t)`.
///
/// Membership of `t` in `G` is verified when the group enumerates within
/// `bound`, and reported as unverified otherwise.
pub fn char_number(group: &GroupDesc, t: &Perm, bound: usize) -> Result<CharNumber> {
    check_fpf_involution(t, group.degree)?;
    let membership = match group.contains(t, bound) {
        Some(true) => Membership::Verified,
        Some(false) => return Err(Error::NotInGroup(t.to_string())),
        None => Membership::Unverified,
    };
    let c = char_number_unchecked(group, t);
    Ok(CharNumber {
        c,
        degree: group.degree,
        membership,
    })
}

/// `c` without the membership check. Panics if `|M_t(x)|` depends on `x`,
/// which can only happen when `t` is not in a transitive `G`.
pub(crate) fn char_number_unchecked(group: &GroupDesc, t: &Perm) -> usize {
    let sizes = m_set_sizes(group, t);
    let c = sizes[0];
    assert!(
        sizes.iter().all(|&s| s == c),
        "|M_t(x)| depends on x ({sizes:?}); is the group transitive?"
    );
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::group::DEFAULT_ENUM_BOUND;

    fn group(gens: &str) -> GroupDesc {
        GroupDesc::parse(gens, None, "test").unwrap()
    }

    fn perm(s: &str, n: usize) -> Perm {
        Perm::parse(s, n).unwrap()
    }

    #[test]
    fn dihedral_reflection() {
        let g = group("(1 2 3 4),(1 3)");
        let c = char_number(&g, &perm("(1 2)(3 4)", 4), DEFAULT_ENUM_BOUND).unwrap();
        assert_eq!(c.c, 2);
        assert!(!c.satisfies_starstar());
        assert_eq!(c.to_string(), "c=2, (*) no, (**) no");
        // M_t(1) is the two vertices adjacent to 1.
        assert_eq!(m_set(&g, &perm("(1 2)(3 4)", 4), 0), vec![1, 3]);
    }

    #[test]
    fn symmetric_group() {
        let g = group("(1 2 3 4),(1 2)");
        let c = char_number(&g, &perm("(1 2)(3 4)", 4), DEFAULT_ENUM_BOUND).unwrap();
        assert_eq!(c.c, 3);
        assert!(c.satisfies_star() && c.satisfies_starstar());
        assert_eq!(c.membership, Membership::Verified);
    }

    #[test]
    fn klein_regular() {
        let g = group("(1 2)(3 4),(1 3)(2 4)");
        for t in ["(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"] {
            assert_eq!(
                char_number(&g, &perm(t, 4), DEFAULT_ENUM_BOUND).unwrap().c,
                1
            );
        }
    }

    #[test]
    fn errors() {
        let g = group("(1 2 3 4),(1 3)");
        assert_eq!(
            char_number(&g, &perm("(1 2 3)", 4), 100),
            Err(Error::NotInvolution)
        );
        assert_eq!(
            char_number(&g, &perm("(1 3)", 4), 100),
            Err(Error::HasFixedPoint(2))
        );
        let c4 = group("(1 2 3 4)");
        assert!(matches!(
            char_number(&c4, &perm("(1 2)(3 4)", 4), 100),
            Err(Error::NotInGroup(_))
        ));
    }

    #[test]
    fn unverified_membership_beyond_bound() {
        let g = group("(1 2 3 4),(1 2)");
        let c = char_number(&g, &perm("(1 2)(3 4)", 4), 5).unwrap();
        assert_eq!(c.membership, Membership::Unverified);
        assert_eq!(c.c, 3);
    }
}
