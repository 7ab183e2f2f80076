use thiserror::Error;

/// Errors produced by the library.
///
/// Domain errors mark invalid inputs (bad indices, unsupported axes,
/// out-of-range parameters). Numeric errors mark internal failures such as
/// eigensolver non-convergence and are never expected on valid inputs.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("matrix dimension {0} is not one of 2, 4, 8, 16")]
    InvalidDimension(usize),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("Pauli index {0} is out of range 0..=3")]
    PauliIndex(usize),

    #[error("not a valid density matrix: {0}")]
    InvalidState(String),

    #[error("matrix is not Hermitian: max |M - M^dagger| entry = {0:.3e}")]
    NotHermitian(f64),

    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("{0}")]
    Domain(String),

    #[error("singular interval: cos(phi_i) vanishes, the interval map is undefined")]
    SingularInterval,

    #[error("numeric failure: {0}")]
    Numeric(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for internal numeric failures, false for input/domain errors.
    pub fn is_numeric(&self) -> bool {
        matches!(self, Error::NoConvergence(_) | Error::Numeric(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
