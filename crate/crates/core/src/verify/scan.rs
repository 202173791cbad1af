use rayon::prelude::*;
use serde::Serialize;

use crate::functionals::{evaluate, AreaInterpretation, FunctionalSpec, RadiusSpec};
use crate::series::FamilySpec;
use crate::tolerances::{CLOSED_FORM_VIOLATION, TRUNCATED_VIOLATION};
use crate::{BohrError, Result};

/// Maps a parameter `a` and dimension `n` to a family instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum FamilyTemplate {
    /// `ψ_a` for `n = 1`, `(a − s)/(1 − as)` for `n ≥ 2`.
    Extremal,
    /// `(a − s/n)/(1 − as/n)`.
    Scaled,
    /// One fixed function; `a` is ignored.
    Fixed(FamilySpec),
}

impl FamilyTemplate {
    pub fn instantiate(&self, a: f64, n: usize) -> Result<FamilySpec> {
        match self {
            FamilyTemplate::Extremal if n == 1 => FamilySpec::moebius(a),
            FamilyTemplate::Extremal => FamilySpec::extremal_unit(a, n),
            FamilyTemplate::Scaled if n == 1 => FamilySpec::moebius(a),
            FamilyTemplate::Scaled => FamilySpec::extremal_scaled(a, n),
            FamilyTemplate::Fixed(f) => {
                if f.dim() != n {
                    return Err(BohrError::domain(format!(
                        "{f} has dimension {}, requested {n}",
                        f.dim()
                    )));
                }
                Ok(f.clone())
            }
        }
    }
}

/// Which weight a sharpness perturbation increases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum PerturbationTarget {
    AreaSquaredWeight,
    ExtraAreaWeight,
    AreaWeight,
}

impl PerturbationTarget {
    /// The quadratic weight when present, else the extra area weight when
    /// present, else the area weight.
    pub fn for_spec(spec: &FunctionalSpec) -> Self {
        if spec.area_squared_weight > 0.0 {
            PerturbationTarget::AreaSquaredWeight
        } else if spec.extra_area_weight > 0.0 {
            PerturbationTarget::ExtraAreaWeight
        } else {
            PerturbationTarget::AreaWeight
        }
    }

    pub fn id(&self) -> &'static str {
        match self {
            PerturbationTarget::AreaSquaredWeight => "areaSquaredWeight",
            PerturbationTarget::ExtraAreaWeight => "extraAreaWeight",
            PerturbationTarget::AreaWeight => "areaWeight",
        }
    }

    pub fn apply(&self, spec: &FunctionalSpec, epsilon: f64) -> FunctionalSpec {
        let mut out = *spec;
        match self {
            PerturbationTarget::AreaSquaredWeight => out.area_squared_weight += epsilon,
            PerturbationTarget::ExtraAreaWeight => out.extra_area_weight += epsilon,
            PerturbationTarget::AreaWeight => out.area_weight += epsilon,
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanPoint {
    pub a: f64,
    pub total: f64,
    pub perturbed_total: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanReport {
    pub n: usize,
    pub bold_r: f64,
    pub epsilon: f64,
    pub interpretation: AreaInterpretation,
    pub perturbation_target: PerturbationTarget,
    /// Largest total over the grid and the refined local maxima.
    pub max_total: f64,
    pub argmax_a: f64,
    pub perturbed_max: f64,
    pub perturbed_at_argmax: f64,
    /// `1 − total` at `argmax_a` under the literal area term, for `n ≥ 2`
    /// scans run with the slice term.
    pub literal_margin_at_argmax: Option<f64>,
    /// `max_total ≤ 1` up to the violation tolerance.
    pub within_bound: bool,
    pub points: Vec<ScanPoint>,
}

/// Maximizes the total over `a_grid` at fixed radius, refining every grid
/// local maximum by golden-section search, and evaluates the same functional
/// with one weight increased by `epsilon`.
pub fn sharpness_scan(
    spec: &FunctionalSpec,
    template: &FamilyTemplate,
    n: usize,
    a_grid: &[f64],
    bold_r: f64,
    epsilon: f64,
) -> Result<ScanReport> {
    if a_grid.is_empty() {
        return Err(BohrError::domain("empty parameter grid"));
    }
    if let Some(a) = a_grid.iter().find(|a| !(0.0..1.0).contains(*a)) {
        return Err(BohrError::domain(format!(
            "grid value {a} is outside [0, 1)"
        )));
    }
    if !(epsilon >= 0.0) {
        return Err(BohrError::domain(format!(
            "epsilon {epsilon} must be nonnegative"
        )));
    }
    let radius = RadiusSpec::diagonal(n, bold_r)?;
    let target = PerturbationTarget::for_spec(spec);
    let perturbed = target.apply(spec, epsilon);
    let eval = |s: &FunctionalSpec, a: f64| -> Result<(f64, bool)> {
        let t = evaluate(s, &template.instantiate(a, n)?, &radius, None)?;
        Ok((t.total, t.truncated))
    };

    let points = a_grid
        .par_iter()
        .map(|&a| {
            let (total, truncated) = eval(spec, a)?;
            let (perturbed_total, _) = eval(&perturbed, a)?;
            Ok((
                ScanPoint {
                    a,
                    total,
                    perturbed_total,
                },
                truncated,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let truncated = points.iter().any(|p| p.1);
    let points: Vec<ScanPoint> = points.into_iter().map(|p| p.0).collect();

    let mut best = (points[0].total, points[0].a);
    for (i, p) in points.iter().enumerate() {
        if p.total > best.0 {
            best = (p.total, p.a);
        }
        let left = i == 0 || points[i - 1].total <= p.total;
        let right = i + 1 == points.len() || points[i + 1].total <= p.total;
        if left && right && points.len() > 1 {
            let lo = points[i.saturating_sub(1)].a;
            let hi = points[(i + 1).min(points.len() - 1)].a;
            let (v, a) = golden_max(|a| eval(spec, a).map(|x| x.0), lo, hi)?;
            if v > best.0 {
                best = (v, a);
            }
        }
    }
    let (max_total, argmax_a) = best;
    let perturbed_at_argmax = eval(&perturbed, argmax_a)?.0;
    let perturbed_max = points
        .iter()
        .map(|p| p.perturbed_total)
        .fold(perturbed_at_argmax, f64::max);
    let literal_margin_at_argmax =
        if n >= 2 && spec.area_interpretation == AreaInterpretation::Slice {
            let lit = spec.with_interpretation(AreaInterpretation::Literal);
            Some(1.0 - eval(&lit, argmax_a)?.0)
        } else {
            None
        };
    let tol = if truncated {
        TRUNCATED_VIOLATION
    } else {
        CLOSED_FORM_VIOLATION
    };
    Ok(ScanReport {
        n,
        bold_r,
        epsilon,
        interpretation: spec.area_interpretation,
        perturbation_target: target,
        max_total,
        argmax_a,
        perturbed_max,
        perturbed_at_argmax,
        literal_margin_at_argmax,
        within_bound: max_total <= 1.0 + tol,
        points,
    })
}

/// Golden-section maximization of a unimodal function on `[lo, hi]`;
/// returns `(value, argument)`.
fn golden_max(f: impl Fn(f64) -> Result<f64>, mut lo: f64, mut hi: f64) -> Result<(f64, f64)> {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - g * (hi - lo);
    let mut x2 = lo + g * (hi - lo);
    let (mut f1, mut f2) = (f(x1)?, f(x2)?);
    for _ in 0..200 {
        if hi - lo <= 1e-12 {
            break;
        }
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2)?;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1)?;
        }
    }
    Ok(if f1 >= f2 { (f1, x1) } else { (f2, x2) })
}
