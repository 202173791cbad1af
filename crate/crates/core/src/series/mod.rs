//! Multi-index power series, the extremal function families and their
//! expansions, an independent expansion oracle and a torus boundedness check.

mod coefficients;
mod family;
mod multi_index;
mod oracle;
mod torus;

pub use coefficients::{CoefficientSeries, TailCertificate};
pub use family::{
    expand, expand_certified, slice_coefficients, FamilySpec, MoebiusShape, SliceCoefficients,
};
pub use multi_index::{binomial, coefficient_count, MultiIndex};
pub use oracle::{oracle_expand, oracle_expand_with_budget};
pub use torus::{torus_bound_check, TorusReport};
