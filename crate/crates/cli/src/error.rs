use qhsing::catalog::CatalogError;
use qhsing::exactpoly::ParseError;
use qhsing::weights::WeightError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Weights(#[from] WeightError),
    #[error("singularity at the origin is not isolated")]
    NonIsolated,
    #[error("{0}")]
    Catalog(#[from] CatalogError),
    #[error("{0}")]
    Usage(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl CliError {
    /// Process exit code: 2 input errors, 3 not quasihomogeneous, 4
    /// degenerate weights, 5 non-isolated, 1 internal failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) | CliError::Catalog(_) => 2,
            CliError::Weights(WeightError::NotQuasihomogeneous | WeightError::ZeroPolynomial) => 3,
            CliError::Weights(_) => 4,
            CliError::NonIsolated => 5,
            CliError::Internal(_) => 1,
        }
    }
}
