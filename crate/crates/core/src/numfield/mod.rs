//! Number fields given by a minimal polynomial: certified complex roots, the
//! conjugation involution, norm forms, quartic Galois groups and the
//! obstruction certificate for norm forms that are not sums of squares over Q.

pub mod complex;
pub mod galois;
pub mod norm;
pub mod obstruction;
pub mod roots;

pub use galois::{quartic_galois, GaloisData, QuarticGalois, QuarticGroup};
pub use norm::{norm_form, numeric_norm, real_sos2_witness, LinearForm, RealSos2};
pub use obstruction::{
    general_position, obstruction_check, Conclusion, GeneralPosition, ObstructionCert,
    ObstructionOptions,
};
pub use roots::{isolate_roots, RootBox, RootSystem, DEFAULT_PRECISION, MAX_PRECISION};
