//! Generalized Pauli error operators over F_q, stabilizer codes built from
//! symplectically self-orthogonal classical codes, an exact matrix oracle
//! for small instances, and the qutrit perfect-tensor code.

mod isometry;
mod oracle;
mod pauli;
mod stabilizer;

use thiserror::Error;

pub use isometry::{qutrit_perfect_code, IsometryCode};
pub use oracle::{
    detectability_check, eigenspace_oracle, error_matrix, generator_matrix, Cyclo, Detectability, Monomial,
    DEFAULT_ORACLE_BOUND,
};
pub use pauli::{phi, symplectic_pairing, symplectic_weight, ErrorOperator};
pub use stabilizer::{
    crss_hermitian, crss_nested_pair, crss_self_orthogonal, five_qubit_code, hermitian_expansion_basis, StabilizerCode,
};

use crate::code::CodeError;
use crate::field::FieldError;
use crate::ErrorCode;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuantumError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("vectors have mismatched lengths")]
    LengthMismatch,
    #[error("classical code is not self-orthogonal under the symplectic pairing")]
    NotSelfOrthogonal,
    #[error("first code is not contained in the second")]
    NotNested,
    #[error("code is not contained in its Hermitian dual")]
    NotHermitianSelfOrthogonal,
    #[error("generators {0} and {1} do not commute")]
    NotCommuting(usize, usize),
    #[error("oracle dimension {size} exceeds the bound {bound}")]
    OracleBoundExceeded { size: u64, bound: u64 },
    #[error("generator span has F_p-dimension {0}, not a multiple of the extension degree")]
    NonIntegralDimension(usize),
    #[error("oracle trace sum is not divisible by the group order")]
    OracleInconsistent,
}

impl From<FieldError> for QuantumError {
    fn from(e: FieldError) -> Self {
        QuantumError::Code(CodeError::Field(e))
    }
}

impl ErrorCode for QuantumError {
    fn code(&self) -> &'static str {
        match self {
            QuantumError::Code(e) => e.code(),
            QuantumError::LengthMismatch => "LengthMismatch",
            QuantumError::NotSelfOrthogonal => "NotSelfOrthogonal",
            QuantumError::NotNested => "NotNested",
            QuantumError::NotHermitianSelfOrthogonal => "NotHermitianSelfOrthogonal",
            QuantumError::NotCommuting(..) => "NotCommuting",
            QuantumError::OracleBoundExceeded { .. } => "OracleBoundExceeded",
            QuantumError::NonIntegralDimension(_) => "NonIntegralDimension",
            QuantumError::OracleInconsistent => "OracleInconsistent",
        }
    }
}
