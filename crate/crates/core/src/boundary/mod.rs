//! Strictly positive ternary sextics on the boundary of the SOS cone, built
//! from nine points carrying a Cayley-Bacharach relation.

pub mod cert;
pub mod config;
pub mod demo;
pub mod functional;
pub mod ideal;

pub use cert::{
    boundary_cert, uniqueness_cert, BoundaryCert, BoundaryVerdict, UniquenessCert,
    UniquenessVerdict,
};
pub use config::{cb_relation, check_tuple, NinePointConfig, TupleCheck, WeightTuple};
pub use demo::{
    construct, demo, interior_witness, Construction, DemoReport, InteriorWitness, Stage,
};
pub use functional::{kernel_u, moment_matrix, LinearFunctional};
pub use ideal::{
    assemble_sextic, complete_intersection_series, empty_zero_check, hilbert_function,
    strict_positivity_cert, Positivity, ZeroSet,
};
