//! Numeric tolerances shared across the crate.
//!
//! Block sizes are small (≤ 16 by default), so dense spectral routines reach
//! roughly 1e-12 accuracy; equality checks run at 1e-10 absolute or 1e-9
//! relative.

/// Absolute tolerance for equality of elements and vectors.
pub const EQ_ABS: f64 = 1e-10;
/// Relative tolerance for equality of norms.
pub const EQ_REL: f64 = 1e-9;
/// Tolerance on the total trace of a state.
pub const TRACE_TOL: f64 = 1e-12;
/// Eigenvalue drift allowed below zero when testing positivity.
pub const PSD_DRIFT: f64 = 1e-10;
/// Relative singular-value threshold for rank decisions.
pub const RANK_TOL: f64 = 1e-10;
/// Values below this are treated as zero.
pub const TINY: f64 = 1e-14;
