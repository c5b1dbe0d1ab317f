//! Command-line verification harness for the graded cone computations.

pub mod input;
pub mod report;
pub mod scenarios;

pub use input::{load_ideal, load_parameters, DChoice, IdealFile};
pub use report::{Check, Report};
pub use scenarios::{run_many, run_scenario, Options, SCENARIOS};

use gradedcone_core::{DeformationError, FormatError, IdealError, PolyError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("input: {0}")]
    Input(String),
    /// A core computation refused its arguments.
    #[error("computation: {0}")]
    Compute(String),
}

impl CliError {
    /// Process exit code: 2 for usage and input problems, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}

macro_rules! compute_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Compute(e.to_string())
            }
        }
    )*};
}

compute_error!(DeformationError, FormatError, IdealError, PolyError);
