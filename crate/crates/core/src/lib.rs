//! Numerical verification of Bohr-type inequalities for bounded holomorphic
//! functions on the unit disk and on the polydisk.
//!
//! The crate is organised bottom-up:
//!
//! * [`series`] — multi-indices, truncated power series, the extremal function
//!   families with their closed-form expansions, an independent division-based
//!   expansion oracle and a boundedness check on the distinguished boundary.
//! * [`functionals`] — majorant series, area-type terms and every Bohr-type
//!   functional, with itemized term breakdowns.
//! * [`constants`] — sharp constants computed from first principles.
//! * [`verify`] — lemma checks, radius searches, sharpness scans and sweeps.
//! * [`cli`] — the `bohr` command-line surface.

// Range checks are written as `!(x >= lo)` so that NaN fails them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod constants;
pub mod error;
pub mod functionals;
pub mod series;
pub mod tolerances;
pub mod verify;

pub use error::{BohrError, Result};
pub use num_complex::Complex64;
