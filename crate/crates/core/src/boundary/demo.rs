//! The nine-point construction end to end, the bundled example data, and the
//! interior witness `x1^6 + x2^6 + x3^6`.

use std::fmt;

use num_traits::Zero;

use super::cert::{boundary_cert, uniqueness_cert, BoundaryCert, UniquenessCert};
use super::config::{
    cb_relation, check_tuple, join, primitive_form, NinePointConfig, TupleCheck, WeightTuple,
};
use super::functional::{kernel_u, moment_matrix, LinearFunctional};
use super::ideal::{
    assemble_sextic, empty_zero_check, hilbert_function, ideal_degree_span, in_span, same_span,
    strict_positivity_cert, Positivity, ZeroSet,
};
use crate::error::{Error, Result};
use crate::exactcore::{monomials, psd_check, Matrix, Poly, Rational};
use crate::gram::point::{gram_from_squares, is_gram_point, mu, span_basis, GramPoint, SosRep};

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter()
        .map(|&x| Rational::from_integer(x.into()))
        .collect()
}

fn form(s: &str) -> Poly {
    Poly::parse_with_nvars(s, 3).expect("bundled form")
}

pub fn demo_config() -> NinePointConfig {
    let pts = [
        [1, 1, 1],
        [-1, 1, 1],
        [1, -1, 1],
        [1, 1, -1],
        [0, 1, 1],
        [0, 1, -1],
        [1, 0, 1],
        [1, 0, -1],
        [0, 0, 1],
    ];
    NinePointConfig::new(pts.iter().map(|p| ints(p)).collect()).expect("bundled points")
}

pub fn demo_tuple() -> WeightTuple {
    WeightTuple::new(ints(&[1, 1, 1, 1, 4, 4, 4, 4, -2])).expect("bundled tuple")
}

pub fn p1() -> Poly {
    form("x1^3 - x1*x3^2")
}

pub fn p2() -> Poly {
    form("x2^3 - x2*x3^2")
}

pub fn p3() -> Poly {
    form("3*x1^2*x3 + 3*x2^2*x3 - 4*x3^3")
}

pub fn demo_sextic() -> Poly {
    form("x1^6 + x2^6 + 7*x1^4*x3^2 + 7*x2^4*x3^2 + 18*x1^2*x2^2*x3^2 - 23*x1^2*x3^4 - 23*x2^2*x3^4 + 16*x3^6")
}

pub fn fermat_sextic() -> Poly {
    form("x1^6 + x2^6 + x3^6")
}

/// Two representations of `x1^6 + x2^6 + x3^6` with different spans.
pub fn fermat_representations() -> [SosRep; 2] {
    [
        SosRep::new(vec![form("x1^3"), form("x2^3"), form("x3^3")]).unwrap(),
        SosRep::new(vec![
            form("x1^3 - 2*x1*x2^2"),
            form("2*x1^2*x2 - x2^3"),
            form("x3^3"),
        ])
        .unwrap(),
    ]
}

/// Every intermediate value of the construction.
#[derive(Clone, Debug)]
pub struct Construction {
    pub config: NinePointConfig,
    pub tuple: WeightTuple,
    pub u: Vec<Rational>,
    pub tuple_check: TupleCheck,
    pub alpha: LinearFunctional,
    pub moment_rank: Option<usize>,
    /// Echelon basis of `U_alpha`.
    pub kernel: Vec<Poly>,
    /// `U_alpha` as the cubics through the points, extended by primitive forms.
    pub basis: Vec<Poly>,
    pub sextic: Poly,
    pub hilbert: Vec<usize>,
    pub zero_set: ZeroSet,
    pub positivity: Positivity,
    pub ideal6_dim: usize,
    pub ker_alpha_dim: usize,
    /// `ker alpha = U A_3` as subspaces of `A_6`.
    pub ker_alpha_is_ideal: bool,
    pub boundary: BoundaryCert,
    pub uniqueness: UniquenessCert,
}

impl Construction {
    pub fn passes(&self) -> bool {
        self.tuple_check.passes()
            && self.zero_set == ZeroSet::Empty
            && self.positivity == Positivity::StrictlyPositive
            && self.ker_alpha_is_ideal
            && self.boundary.certified()
            && self.uniqueness.is_singleton()
    }
}

/// The cubics through the points first, then the rest of `U` reduced
/// against them; every element scaled to a primitive integer form.
fn preferred_basis(through: &[Poly], kernel: &[Poly]) -> Vec<Poly> {
    let cubics = monomials(3, 3);
    let mut out: Vec<Poly> = through
        .iter()
        .filter(|p| in_span(kernel, p))
        .cloned()
        .collect();
    let ech = (!out.is_empty()).then(|| {
        Matrix::from_rows(
            out.iter().map(|p| p.coeff_vector(&cubics)).collect(),
            cubics.len(),
        )
        .rref()
    });
    for k in kernel {
        let mut v = k.coeff_vector(&cubics);
        if let Some(e) = &ech {
            for (row, &piv) in e.pivots.iter().enumerate() {
                let c = v[piv].clone();
                if !c.is_zero() {
                    for (j, x) in v.iter_mut().enumerate() {
                        *x -= &c * &e.matrix[(row, j)];
                    }
                }
            }
        }
        let p = Poly::from_coeffs(3, &cubics, &v);
        if !p.is_zero() && !in_span(&out, &p) {
            out.push(primitive_form(&p));
        }
    }
    out
}

pub fn construct(config: &NinePointConfig, tuple: &WeightTuple) -> Result<Construction> {
    let u = cb_relation(config)?;
    let tuple_check = check_tuple(&u, tuple);
    let alpha = LinearFunctional::from_points(&config.points, &tuple.a, 6)?;
    let b = moment_matrix(&alpha)?;
    let moment_rank = psd_check(&b).rank();
    let kernel = kernel_u(&b, 3)?;
    if kernel.len() != 3 {
        return Err(Error::DimensionMismatch(format!(
            "kernel of the moment matrix has dimension {}, expected 3",
            kernel.len()
        )));
    }
    let basis = preferred_basis(&config.cubics_through(), &kernel);
    let sextic = assemble_sextic(&basis)?;
    let hilbert = hilbert_function(&basis)?;
    let zero_set = empty_zero_check(&basis)?;
    let positivity = strict_positivity_cert(&sextic, &basis)?;
    let ideal6 = ideal_degree_span(&basis, 3, 6);
    let ideal6_dim = Matrix::from_rows(
        ideal6
            .iter()
            .map(|p| p.coeff_vector(&monomials(3, 6)))
            .collect(),
        28,
    )
    .rank();
    let ker_alpha = alpha.kernel();
    let ker_alpha_is_ideal = same_span(&ideal6, &ker_alpha, 3, 6);
    let boundary = boundary_cert(&sextic, &alpha, None)?;
    let uniqueness = uniqueness_cert(&sextic, &alpha, Some(&basis))?;
    Ok(Construction {
        config: config.clone(),
        tuple: tuple.clone(),
        u,
        tuple_check,
        alpha,
        moment_rank,
        kernel,
        basis,
        sextic,
        hilbert,
        zero_set,
        positivity,
        ideal6_dim,
        ker_alpha_dim: ker_alpha.len(),
        ker_alpha_is_ideal,
        boundary,
        uniqueness,
    })
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "points:")?;
        for p in &self.config.points {
            writeln!(f, "  ({})", join(p))?;
        }
        writeln!(f, "cayley-bacharach relation u: ({})", join(&self.u))?;
        writeln!(f, "tuple a: ({})", self.tuple)?;
        writeln!(f, "sum u_i^2/a_i: {}", self.tuple_check.relation)?;
        writeln!(f, "negative weights: {}", self.tuple_check.negative_entries)?;
        writeln!(f, "alpha coefficients: ({})", join(&self.alpha.coeffs))?;
        match self.moment_rank {
            Some(r) => writeln!(f, "moment matrix: PSD, rank {r}")?,
            None => writeln!(f, "moment matrix: not PSD")?,
        }
        let names = |v: &[Poly]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("; ")
        };
        writeln!(f, "kernel U (echelon): {}", names(&self.kernel))?;
        writeln!(f, "kernel U (basis): {}", names(&self.basis))?;
        writeln!(f, "sextic: {}", self.sextic)?;
        let h: Vec<String> = self.hilbert.iter().map(ToString::to_string).collect();
        writeln!(f, "hilbert function: ({})", h.join(", "))?;
        writeln!(f, "zero set of U: {}", self.zero_set)?;
        writeln!(f, "positivity: {}", self.positivity)?;
        writeln!(f, "dim U*A3: {}", self.ideal6_dim)?;
        writeln!(f, "dim ker alpha: {}", self.ker_alpha_dim)?;
        writeln!(f, "ker alpha = U*A3: {}", self.ker_alpha_is_ideal)?;
        writeln!(f, "[boundary]\n{}", self.boundary)?;
        write!(f, "[uniqueness]\n{}", self.uniqueness)
    }
}

/// One compared value of the demo.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage {
    pub name: &'static str,
    pub expected: String,
    pub actual: String,
}

impl Stage {
    pub fn passes(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Clone, Debug)]
pub struct DemoReport {
    pub construction: Construction,
    pub stages: Vec<Stage>,
}

impl DemoReport {
    pub fn passes(&self) -> bool {
        self.stages.iter().all(Stage::passes)
    }
}

impl fmt::Display for DemoReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.construction)?;
        writeln!(f, "[stages]")?;
        for s in &self.stages {
            let tag = if s.passes() { "ok" } else { "MISMATCH" };
            writeln!(f, "{tag:>8}  {}: {}", s.name, s.actual)?;
            if !s.passes() {
                writeln!(f, "          expected: {}", s.expected)?;
            }
        }
        write!(
            f,
            "demo: {}",
            if self.passes() {
                "all stages match"
            } else {
                "FAILED"
            }
        )
    }
}

fn stage(name: &'static str, expected: impl ToString, actual: impl ToString) -> Stage {
    Stage {
        name,
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

/// Runs the construction on the bundled points and tuple and compares every
/// stage with its known value.
pub fn demo() -> Result<DemoReport> {
    let c = construct(&demo_config(), &demo_tuple())?;
    let magnitudes: Vec<String> =
        c.u.iter()
            .map(|x| num_traits::Signed::abs(x).to_string())
            .collect();
    let kernel_has = [p1(), p2(), p3()].iter().all(|p| in_span(&c.kernel, p));
    let gram = c
        .uniqueness
        .gram()
        .map(|g| g.matrix().to_string())
        .unwrap_or_default();
    let identity = crate::exactcore::SymMatrix::identity(3)
        .matrix()
        .to_string();
    let stages = vec![
        stage("u", "1, 1, 1, -1, -2, 2, -2, 2, 4", join(&c.u)),
        stage("|u|", "1, 1, 1, 1, 2, 2, 2, 2, 4", magnitudes.join(", ")),
        stage("sum u_i^2/a_i", 0, &c.tuple_check.relation),
        stage("tuple admissible", true, c.tuple_check.passes()),
        stage(
            "moment matrix rank",
            "Some(7)",
            format!("{:?}", c.moment_rank),
        ),
        stage("dim U", 3, c.kernel.len()),
        stage("p1, p2, p3 in U", true, kernel_has),
        stage(
            "basis of U",
            format!("{}; {}; {}", p1(), p2(), p3()),
            c.basis
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("; "),
        ),
        stage("sextic", demo_sextic(), &c.sextic),
        stage(
            "hilbert function",
            "[1, 3, 6, 7, 6, 3, 1, 0]",
            format!("{:?}", c.hilbert),
        ),
        stage("zero set of U", ZeroSet::Empty, c.zero_set),
        stage("positivity", Positivity::StrictlyPositive, c.positivity),
        stage("dim U*A3", 27, c.ideal6_dim),
        stage("ker alpha = U*A3", true, c.ker_alpha_is_ideal),
        stage("boundary certificate", "certified", c.boundary.verdict),
        stage(
            "uniqueness certificate",
            "singleton Gram spectrahedron",
            c.uniqueness.verdict,
        ),
        stage("restricted gram matrix", identity, gram),
    ];
    Ok(DemoReport {
        construction: c,
        stages,
    })
}

/// Evidence that `x1^6 + x2^6 + x3^6` is interior: two Gram points with
/// different spans, and the demo functional does not vanish on it.
#[derive(Clone, Debug)]
pub struct InteriorWitness {
    pub form: Poly,
    pub points: [GramPoint; 2],
    pub both_represent: bool,
    pub spans_differ: bool,
    pub alpha_f: Rational,
    pub boundary: BoundaryCert,
}

impl InteriorWitness {
    pub fn passes(&self) -> bool {
        self.both_represent && self.spans_differ && !self.boundary.certified()
    }
}

pub fn interior_witness() -> Result<InteriorWitness> {
    let form = fermat_sextic();
    let [a, b] = fermat_representations();
    let points = [gram_from_squares(&a), gram_from_squares(&b)];
    let both_represent = points.iter().all(|g| mu(g) == form)
        && points
            .iter()
            .map(|g| is_gram_point(g, &form))
            .collect::<Result<Vec<_>>>()?
            .iter()
            .all(|c| c.is_gram_point());
    let spans_differ = span_basis(&points[0])? != span_basis(&points[1])?;
    let alpha = LinearFunctional::from_points(&demo_config().points, &demo_tuple().a, 6)?;
    let boundary = boundary_cert(&form, &alpha, Some(&points[0]))?;
    Ok(InteriorWitness {
        form,
        points,
        both_represent,
        spans_differ,
        alpha_f: boundary.alpha_f.clone(),
        boundary,
    })
}

impl fmt::Display for InteriorWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "form: {}", self.form)?;
        writeln!(
            f,
            "both Gram points represent the form: {}",
            self.both_represent
        )?;
        writeln!(f, "spans differ: {}", self.spans_differ)?;
        writeln!(f, "alpha(f): {}", self.alpha_f)?;
        write!(f, "boundary certificate: {}", self.boundary.verdict)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::{rat, ratio};

    #[test]
    fn demo_chain() {
        let r = demo().unwrap();
        for s in &r.stages {
            assert!(
                s.passes(),
                "{}: expected {}, got {}",
                s.name,
                s.expected,
                s.actual
            );
        }
        assert!(r.construction.passes());
        let text = r.to_string();
        assert!(text.contains("hilbert function: (1, 3, 6, 7, 6, 3, 1, 0)"));
        assert!(text.ends_with("demo: all stages match"));
    }

    #[test]
    fn weighted_p3_values_are_proportional_to_u() {
        let cfg = demo_config();
        let u = cb_relation(&cfg).unwrap();
        let v: Vec<Rational> = cfg
            .points
            .iter()
            .zip(&demo_tuple().a)
            .map(|(x, a)| a * p3().eval(x))
            .collect();
        for i in 0..9 {
            assert_eq!(&v[i], &(&u[i] * rat(2)));
        }
    }

    #[test]
    fn interior() {
        let w = interior_witness().unwrap();
        assert!(w.passes());
        assert_eq!(w.alpha_f, rat(42));
    }

    #[test]
    fn other_admissible_tuple() {
        // any a with sum u_i^2/a_i = 0 and one negative entry
        let a = WeightTuple::new(vec![
            rat(1),
            rat(1),
            rat(1),
            rat(1),
            rat(2),
            rat(2),
            rat(2),
            rat(2),
            ratio(-4, 3),
        ])
        .unwrap();
        let c = construct(&demo_config(), &a).unwrap();
        assert!(c.tuple_check.passes());
        assert!(c.passes());
        assert_eq!(c.hilbert, vec![1, 3, 6, 7, 6, 3, 1, 0]);
    }
}
