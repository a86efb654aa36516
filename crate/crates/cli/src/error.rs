use holocodes::building::BuildingError;
use holocodes::holo::HoloError;
use holocodes::tiling::TilingError;
use holocodes::{CodeError, ErrorCode, FieldError, QuantumError};

/// A failed command: a machine-readable code, a message, and whether the
/// failure was a usage error (exit 2) or a domain error (exit 1).
#[derive(Debug)]
pub struct CliError {
    pub code: String,
    pub message: String,
    pub usage: bool,
    /// Partial results still worth printing, such as a failed acceptance table.
    pub payload: serde_json::Value,
    pub diagnostics: Vec<String>,
}

impl CliError {
    pub fn domain(code: &str, message: impl Into<String>) -> CliError {
        CliError {
            code: code.into(),
            message: message.into(),
            usage: false,
            payload: serde_json::Value::Null,
            diagnostics: Vec::new(),
        }
    }

    pub fn usage(code: &str, message: impl Into<String>) -> CliError {
        CliError {
            code: code.into(),
            message: message.into(),
            usage: true,
            payload: serde_json::Value::Null,
            diagnostics: Vec::new(),
        }
    }

    pub fn with_report(mut self, payload: serde_json::Value, diagnostics: Vec<String>) -> CliError {
        self.payload = payload;
        self.diagnostics = diagnostics;
        self
    }

    pub fn exit_code(&self) -> i32 {
        if self.usage {
            2
        } else {
            1
        }
    }
}

macro_rules! domain_errors {
    ($($t:ty),*) => {
        $(impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::domain(e.code(), e.to_string())
            }
        })*
    };
}

domain_errors!(FieldError, CodeError, QuantumError, HoloError, TilingError, BuildingError);
