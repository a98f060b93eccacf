//! Default tolerances shared by the checks.

/// Pointwise closed-form identities.
pub const POINT: f64 = 1e-10;
/// Algebraic identities with no derivative involved.
pub const ALGEBRAIC: f64 = 1e-12;
/// Finite-difference pullbacks and quadratures.
pub const NUMERIC: f64 = 1e-6;
/// Finite-difference symplectomorphism residual.
pub const PULLBACK_FD: f64 = 1e-5;
/// Analytic-Jacobian pullback residual.
pub const PULLBACK_ANALYTIC: f64 = 1e-8;
/// Lagrangian isotropy residual.
pub const ISOTROPY: f64 = 1e-10;
/// Set-membership residual.
pub const MEMBERSHIP: f64 = 1e-10;
/// Relative finite-difference step.
pub const FD_STEP: f64 = 1e-5;
