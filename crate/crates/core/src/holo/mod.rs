//! Holographic encoders on finite pieces of the Bruhat–Tits tree and on
//! Mumford-curve dual graphs.
//!
//! Every vertex carries a copy of P¹(F_q) labelling its incident legs. The
//! root encodes k symbols with a projective Reed–Solomon code on all q+1
//! legs. Every other vertex receives one symbol from its parent on its ∞ leg
//! and k−1 fresh symbols, and evaluates on its q forward legs.

mod lift;
mod mumford;
mod tree;

use thiserror::Error;

pub use lift::{quantum_tree_lift, EdgeMatch, QuantumTreeLift};
pub use mumford::{mumford_code, mumford_holographic_extend, MumfordCode, MumfordExtension, MumfordGraph};
pub use tree::{encode_matrix, holographic_encode, nonroot_leg_value, tree_build, RootedTree, DEFAULT_DEPTH_BOUND};

use crate::code::CodeError;
use crate::field::FieldError;
use crate::quantum::QuantumError;
use crate::ErrorCode;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HoloError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Quantum(#[from] QuantumError),
    #[error("depth {depth} exceeds the bound {bound}")]
    DepthBoundExceeded { depth: usize, bound: usize },
    #[error("a depth-0 tree has no boundary")]
    NoBoundary,
    #[error("k = {k} is outside [1, {max}]")]
    KOutOfRange { k: usize, max: usize },
    #[error("expected {expected} input symbols, got {got}")]
    InputShapeMismatch { expected: usize, got: usize },
    #[error("invalid gluing: {0}")]
    InvalidGluing(String),
    #[error("k = {k} must exceed 1 + (b1 − 1)/N with b1 = {b1}, N = {components}")]
    KTooSmall { k: usize, b1: usize, components: usize },
}

impl From<FieldError> for HoloError {
    fn from(e: FieldError) -> Self {
        HoloError::Code(CodeError::Field(e))
    }
}

impl ErrorCode for HoloError {
    fn code(&self) -> &'static str {
        match self {
            HoloError::Code(e) => e.code(),
            HoloError::Quantum(e) => e.code(),
            HoloError::DepthBoundExceeded { .. } => "DepthBoundExceeded",
            HoloError::NoBoundary => "NoBoundary",
            HoloError::KOutOfRange { .. } => "KOutOfRange",
            HoloError::InputShapeMismatch { .. } => "InputShapeMismatch",
            HoloError::InvalidGluing(_) => "InvalidGluing",
            HoloError::KTooSmall { .. } => "KTooSmall",
        }
    }
}
