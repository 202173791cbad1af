//! Every numeric threshold the verification layer depends on.

/// Violation tolerance when every participating term is a closed form.
pub const CLOSED_FORM_VIOLATION: f64 = 1e-12;

/// Violation tolerance when at least one truncated series sum participates.
pub const TRUNCATED_VIOLATION: f64 = 1e-9;

/// Truncation degree is grown until every tail certificate falls below this.
pub const TAIL_TARGET: f64 = 1e-13;

/// Hard cap on the automatic truncation degree.
pub const MAX_TRUNCATION_DEGREE: usize = 200;

/// Default cap on the number of stored coefficients of one expansion.
pub const COEFFICIENT_BUDGET: u128 = 5_000_000;

/// Slack allowed when a torus sample is compared with the unit bound.
pub const TORUS_BOUND_SLACK: f64 = 1e-9;

/// Slack allowed in lemma-level `lhs <= rhs` comparisons.
pub const LEMMA_SLACK: f64 = 1e-10;

/// Guard distance around the poles of the closed-form constant formulas.
pub const POLE_GUARD: f64 = 1e-9;

/// Samples taken before bisecting in a radius search.
pub const MONOTONICITY_SAMPLES: usize = 64;

/// Relative decrease tolerated between consecutive monotonicity samples.
pub const MONOTONICITY_SLACK: f64 = 1e-12;

/// Points of the grid used to count sign changes of a polynomial.
pub const SIGN_GRID_POINTS: usize = 10_000;

/// Bracket width at which root polishing switches from bisection to Newton steps.
pub const POLISH_BRACKET_WIDTH: f64 = 1e-6;

/// Residual tolerance for roots and radii against their published decimals.
pub const ROOT_RESIDUAL: f64 = 1e-6;

/// Residual tolerance for the quadratic-weight constants against their published decimals.
pub const LAMBDA_RESIDUAL: f64 = 1e-3;

/// Residual tolerance for the area weight of the |f| + area inequality.
pub const P_RESIDUAL: f64 = 1e-9;

/// Search radii stop this far short of the domain cap.
pub const CAP_SHRINK: f64 = 1e-9;
