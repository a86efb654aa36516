//! The right-angled pentagon tiling {5,4}: layer census, disk regions and
//! their homological surface codes, plus the toric code and the vertex
//! polynomial codes over Z/ℓZ attached to triangle groups.

mod census;
mod region;
mod surface;
mod vertex_poly;

use thiserror::Error;

pub use census::{pentagon_census, CensusStep, TilingCensus};
pub use region::{region_build, region_build_bounded, toric_code, SurfaceComplex, DEFAULT_REGION_BOUND};
pub use surface::{surface_code, SurfaceCode};
pub use vertex_poly::{triangle_group_data, vertex_poly_encode, vertex_poly_superposition, TriangleGroup};

use crate::code::CodeError;
use crate::quantum::QuantumError;
use crate::ErrorCode;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TilingError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Quantum(#[from] QuantumError),
    #[error("depth {depth} exceeds the bound {bound}")]
    DepthBoundExceeded { depth: usize, bound: usize },
    #[error("vertex and face incidence rows are not orthogonal")]
    NotOrthogonal,
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("{a} does not divide {l}")]
    NonDivisor { a: u64, l: u64 },
    #[error("1/{a} + 1/{b} + 1/{c} is not below 1")]
    NotHyperbolic { a: u64, b: u64, c: u64 },
}

impl From<crate::field::FieldError> for TilingError {
    fn from(e: crate::field::FieldError) -> Self {
        TilingError::Code(CodeError::Field(e))
    }
}

impl ErrorCode for TilingError {
    fn code(&self) -> &'static str {
        match self {
            TilingError::Code(e) => e.code(),
            TilingError::Quantum(e) => e.code(),
            TilingError::DepthBoundExceeded { .. } => "DepthBoundExceeded",
            TilingError::NotOrthogonal => "NotOrthogonal",
            TilingError::InvalidComplex(_) => "InvalidComplex",
            TilingError::NonDivisor { .. } => "NonDivisor",
            TilingError::NotHyperbolic { .. } => "NotHyperbolic",
        }
    }
}
