//! Numeric tolerances used across the crate.
//!
//! All matrices here are at most 16 x 16 with entries of order one, so the
//! thresholds are absolute, not relative.

/// Max allowed |M - M^dagger| entry for a density matrix.
pub const HERMITICITY: f64 = 1e-12;

/// Max allowed |tr(rho) - 1| for a density matrix.
pub const TRACE: f64 = 1e-12;

/// Eigenvalues of a density matrix above -PSD_FLOOR are treated as
/// zero-clipped round-off; anything lower fails positivity.
pub const PSD_FLOOR: f64 = 1e-10;

/// Off-diagonal Frobenius norm at which the Jacobi iteration stops.
pub const JACOBI_OFF: f64 = 1e-13;

/// Choi-spectrum threshold for the complete-positivity verdict.
pub const CP_FLOOR: f64 = 1e-10;

/// Entrywise tolerance for checking a separable decomposition against a state.
pub const DECOMPOSITION_MATCH: f64 = 1e-10;

/// Bisection stops when the bracket is narrower than this.
pub const ROOT_INTERVAL: f64 = 1e-14;

/// Correlators with magnitude below this are reported as zero.
pub const CORRELATOR_ZERO: f64 = 1e-10;
