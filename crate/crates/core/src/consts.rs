//! Numerical tolerances and iteration limits used across the crate.
//!
//! Everything here is policy for IEEE 754 doubles: construction-time
//! invariant checks sit near machine precision, while tolerances applied
//! to composed results leave headroom for accumulated rounding.

/// Relative asymmetry allowed when constructing a symmetric tensor.
pub const SYM_TOL: f64 = 1e-12;

/// Orthogonality defect allowed when constructing a rotation.
pub const ROT_TOL: f64 = 1e-12;

/// Jacobi sweep convergence: off-diagonal Frobenius norm relative to the input norm.
pub const JACOBI_OFF_TOL: f64 = 1e-15;

/// Hard cap on Jacobi sweeps. A 3x3 converges in a handful; this is a stall guard.
pub const JACOBI_MAX_SWEEPS: usize = 50;

/// Commutation tolerance for treating two stretches as coaxial,
/// relative to the product of their norms.
pub const COMMUTE_TOL: f64 = 1e-10;

/// Below this value of y = tr((dev L)^2) a deformation counts as pure dilatation
/// and the character number is undefined.
pub const Y_EPS: f64 = 1e-14;

/// Slack on the realizability bound zeta <= 1/6 for user-supplied (y, z) pairs.
pub const ZETA_SLACK: f64 = 1e-9;

/// Classification margin on the character number zeta.
pub const CLASS_TOL: f64 = 1e-9;

/// Relative step for central finite differences of potential partials.
pub const FD_PARTIAL_STEP: f64 = 1e-6;

/// Relative step for the full finite-difference stress gradient check.
pub const FD_GRADIENT_STEP: f64 = 1e-5;

/// Grid used to verify a strain family at registration: 41 points on [-2, 2].
pub const FAMILY_GRID_POINTS: usize = 41;
pub const FAMILY_GRID_HALF_WIDTH: f64 = 2.0;
