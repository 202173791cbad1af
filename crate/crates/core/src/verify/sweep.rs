use rayon::prelude::*;
use serde::Serialize;

use super::FamilyTemplate;
use crate::constants::ConstantsReport;
use crate::functionals::{evaluate, AreaInterpretation, Preset, RadiusSpec, TermBreakdown};
use crate::tolerances::{CLOSED_FORM_VIOLATION, TRUNCATED_VIOLATION};
use crate::{BohrError, Result};

/// Radius at which a sweep evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum RadiusChoice {
    /// The theorem's own threshold for each `n`.
    Threshold,
    Explicit(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepRow {
    pub theorem: Preset,
    pub n: usize,
    pub a: f64,
    pub r: f64,
    pub breakdown: TermBreakdown,
    /// Tolerance the margin is judged against.
    pub tolerance: f64,
    pub violation: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepReport {
    pub theorem: Preset,
    pub n_list: Vec<usize>,
    /// Rows sorted by `(n, a, r, interpretation)`.
    pub rows: Vec<SweepRow>,
    /// Smallest margin among the literal-interpretation rows.
    pub worst_margin: f64,
    /// Literal-interpretation rows whose margin is below minus their tolerance.
    pub violations: Vec<SweepRow>,
    /// Slice-interpretation rows that would count as violations; advisory only.
    pub slice_exceedances: usize,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Evaluates the theorem's functional at every `(n, a)` pair, at the
/// theorem threshold or an explicit radius. For `n ≥ 2` both area
/// interpretations are evaluated; only the literal one decides violations.
///
/// `tolerance` overrides the default violation tolerances (closed forms
/// versus truncated sums).
pub fn theorem_sweep(
    theorem: Preset,
    constants: &ConstantsReport,
    template: &FamilyTemplate,
    n_list: &[usize],
    a_grid: &[f64],
    radius: RadiusChoice,
    tolerance: Option<f64>,
) -> Result<SweepReport> {
    if n_list.is_empty() || n_list.contains(&0) {
        return Err(BohrError::domain(
            "dimension list must be nonempty and positive",
        ));
    }
    if theorem.single_variable() && n_list.iter().any(|&n| n != 1) {
        return Err(BohrError::Unsupported(format!(
            "theorem {theorem} concerns functions of one variable; use n = 1"
        )));
    }
    if let FamilyTemplate::Fixed(f) = template {
        if n_list.iter().any(|&n| n != f.dim()) {
            return Err(BohrError::domain(format!("{f} has dimension {}", f.dim())));
        }
    }
    let a_values: Vec<f64> = match template {
        FamilyTemplate::Fixed(f) => vec![f.constant_term().norm()],
        _ => {
            if a_grid.is_empty() {
                return Err(BohrError::domain("empty parameter grid"));
            }
            a_grid.to_vec()
        }
    };
    let spec = theorem.spec(constants);

    let mut n_sorted = n_list.to_vec();
    n_sorted.sort_unstable();
    n_sorted.dedup();
    let mut jobs = Vec::new();
    for &n in &n_sorted {
        let r = match radius {
            RadiusChoice::Threshold => theorem.threshold(n),
            RadiusChoice::Explicit(r) => r,
        };
        let interps: &[AreaInterpretation] = if n == 1 {
            &[AreaInterpretation::Literal]
        } else {
            &[AreaInterpretation::Literal, AreaInterpretation::Slice]
        };
        for &a in &a_values {
            for &interp in interps {
                jobs.push((n, a, r, interp));
            }
        }
    }

    let rows = jobs
        .par_iter()
        .map(|&(n, a, r, interp)| {
            let family = template.instantiate(a, n)?;
            let breakdown = evaluate(
                &spec.with_interpretation(interp),
                &family,
                &RadiusSpec::diagonal(n, r)?,
                None,
            )?;
            let tol = tolerance.unwrap_or(if breakdown.truncated {
                TRUNCATED_VIOLATION
            } else {
                CLOSED_FORM_VIOLATION
            });
            let violation = breakdown.margin < -tol || !breakdown.certified;
            Ok(SweepRow {
                theorem,
                n,
                a,
                r,
                breakdown,
                tolerance: tol,
                violation,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let literal = |row: &&SweepRow| row.breakdown.interpretation == AreaInterpretation::Literal;
    let worst_margin = rows
        .iter()
        .filter(literal)
        .map(|r| r.breakdown.margin)
        .fold(f64::INFINITY, f64::min);
    let violations = rows
        .iter()
        .filter(literal)
        .filter(|r| r.violation)
        .cloned()
        .collect();
    let slice_exceedances = rows
        .iter()
        .filter(|r| r.breakdown.interpretation == AreaInterpretation::Slice && r.violation)
        .count();
    Ok(SweepReport {
        theorem,
        n_list: n_sorted,
        rows,
        worst_margin,
        violations,
        slice_exceedances,
    })
}
