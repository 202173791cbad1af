use thiserror::Error;

pub type Result<T> = std::result::Result<T, BohrError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BohrError {
    /// An argument lies outside the region where the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A rational expression was evaluated at (or within guard distance of) a pole.
    #[error("singularity: {0}")]
    Singularity(String),

    /// Text that does not follow the expected syntax (family strings, ids).
    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// The requested truncation would store more coefficients than allowed.
    #[error("coefficient budget exhausted: {needed} coefficients requested, budget is {budget}")]
    Budget { needed: u128, budget: u128 },

    #[error("no sign change on [{lo}, {hi}]")]
    Bracket { lo: f64, hi: f64 },

    #[error("{changes} sign changes on [{lo}, {hi}], root is not unique")]
    NonUnique { lo: f64, hi: f64, changes: usize },

    #[error("functional is not monotone in the radius: total fell from {before} at r = {r_before} to {after} at r = {r_after}")]
    Monotonicity {
        r_before: f64,
        before: f64,
        r_after: f64,
        after: f64,
    },
}

impl BohrError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        BohrError::Domain(msg.into())
    }
}
