use bfz_core::bfz_quiver::GlueError;
use bfz_core::cartan_graph::GraphError;
use bfz_core::coxeter_words::WordError;
use bfz_core::cylinder_dimer::EmbedError;
use bfz_core::export::FixtureError;
use bfz_core::qp_rigidity::{PotentialError, RigidityError};
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

/// A failure that stops a command before it produces a report.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{code}: {message}")]
pub struct CliError {
    pub code: String,
    pub message: String,
    pub exit: i32,
}

impl CliError {
    pub fn invalid(code: &str, message: impl Into<String>) -> Self {
        CliError {
            code: code.into(),
            message: message.into(),
            exit: EXIT_INVALID,
        }
    }

    pub fn violation(code: &str, message: impl Into<String>) -> Self {
        CliError {
            code: code.into(),
            message: message.into(),
            exit: EXIT_VIOLATION,
        }
    }

    pub fn io(path: &std::path::Path, e: std::io::Error) -> Self {
        CliError::invalid("io", format!("{}: {e}", path.display()))
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({"error": {"code": self.code, "message": self.message}})
    }
}

macro_rules! invalid_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::invalid(e.code(), e.to_string())
            }
        }
    )*};
}

invalid_from!(
    GraphError,
    WordError,
    GlueError,
    FixtureError,
    RigidityError
);

// These indicate a quiver that breaks a structural property, not bad input.
impl From<EmbedError> for CliError {
    fn from(e: EmbedError) -> Self {
        CliError::violation(e.code(), e.to_string())
    }
}

impl From<PotentialError> for CliError {
    fn from(e: PotentialError) -> Self {
        CliError::violation(e.code(), e.to_string())
    }
}
