//! Classical and quantum codes on finite-field geometry: Reed–Solomon and
//! generalized Reed–Solomon codes, the symplectic classical-to-quantum
//! stabilizer construction, holographic tree encoders, surface codes from
//! tilings, and evaluation codes on the projective plane.
//!
//! Everything is exact. Field elements are small integers (see [`field`]),
//! phases are exponents of a root of unity, and every distance reported by
//! the crate comes from exhaustive search.

#![allow(clippy::needless_range_loop)]

pub mod building;
pub mod code;
pub mod field;
pub mod holo;
pub mod linalg;
pub mod proj;
pub mod quantum;
pub mod reproduce;
pub mod tiling;

pub use code::{CodeError, LinearCode};
pub use field::{Elem, Field, FieldElement, FieldError};
pub use linalg::Matrix;
pub use proj::ProjPoint;
pub use quantum::{ErrorOperator, QuantumError, StabilizerCode};

/// Stable machine-readable names for error variants, used by the CLI.
pub trait ErrorCode {
    fn code(&self) -> &'static str;
}

impl ErrorCode for FieldError {
    fn code(&self) -> &'static str {
        match self {
            FieldError::NonPrimeP(_) => "NonPrimeP",
            FieldError::ZeroDegree => "ZeroDegree",
            FieldError::ReducibleModulus(_) => "ReducibleModulus",
            FieldError::FieldTooLarge { .. } => "FieldTooLarge",
            FieldError::DivisionByZero => "DivisionByZero",
            FieldError::FieldMismatch => "FieldMismatch",
            FieldError::ElementOutOfRange(_) => "ElementOutOfRange",
            FieldError::BadCoefficients => "BadCoefficients",
            FieldError::SingularBasis => "SingularBasis",
            FieldError::OddExtensionDegree(_) => "OddExtensionDegree",
            FieldError::NoSubfield { .. } => "NoSubfield",
        }
    }
}
