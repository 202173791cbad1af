use serde::Serialize;

use crate::functionals::{evaluate, FunctionalSpec, RadiusSpec};
use crate::series::FamilySpec;
use crate::tolerances::{CAP_SHRINK, MONOTONICITY_SAMPLES, MONOTONICITY_SLACK};
use crate::{BohrError, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RadiusResult {
    pub family: String,
    /// Largest radius found with total ≤ 1.
    pub radius: f64,
    pub bracket: (f64, f64),
    pub iterations: usize,
    /// False when the total stays ≤ 1 up to the domain cap.
    pub binding: bool,
    pub certified: bool,
}

/// Largest diagonal radius `R` in `[0, cap)` with total ≤ 1, by bisection.
///
/// The total is sampled at evenly spaced radii first; a decrease between
/// samples aborts the search with [`BohrError::Monotonicity`].
pub fn radius_search(spec: &FunctionalSpec, family: &FamilySpec, tol: f64) -> Result<RadiusResult> {
    if !(tol > 0.0) {
        return Err(BohrError::domain(format!(
            "tolerance {tol} must be positive"
        )));
    }
    family.validate()?;
    let n = family.dim();
    let top = family.domain_radius_cap() * (1.0 - CAP_SHRINK);
    let mut certified = true;
    let mut total = |r: f64| -> Result<f64> {
        let t = evaluate(spec, family, &RadiusSpec::diagonal(n, r)?, None)?;
        certified &= t.certified;
        Ok(t.total)
    };

    let mut prev = (0.0, total(0.0)?);
    for i in 1..=MONOTONICITY_SAMPLES {
        let r = top * i as f64 / MONOTONICITY_SAMPLES as f64;
        let v = total(r)?;
        if v < prev.1 - MONOTONICITY_SLACK * prev.1.abs().max(1.0) {
            return Err(BohrError::Monotonicity {
                r_before: prev.0,
                before: prev.1,
                r_after: r,
                after: v,
            });
        }
        prev = (r, v);
    }

    let result = |radius, bracket, iterations, binding, certified| RadiusResult {
        family: family.to_string(),
        radius,
        bracket,
        iterations,
        binding,
        certified,
    };
    if prev.1 <= 1.0 {
        return Ok(result(top, (top, top), 0, false, certified));
    }
    if total(0.0)? > 1.0 {
        return Ok(result(0.0, (0.0, 0.0), 0, true, certified));
    }
    let (mut lo, mut hi) = (0.0, top);
    let mut iterations = 0;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if total(mid)? <= 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    Ok(result(lo, (lo, hi), iterations, true, certified))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::constants_report;
    use crate::functionals::Preset;
    use num_complex::Complex64;

    #[test]
    fn classic_radius_law() {
        let c = constants_report().unwrap();
        let spec = Preset::Classic.spec(&c);
        for a in [0.1, 0.5, 0.9] {
            let r = radius_search(&spec, &FamilySpec::moebius(a).unwrap(), 1e-12).unwrap();
            assert!(r.binding);
            assert!(
                (r.radius - 1.0 / (1.0 + 2.0 * a)).abs() < 1e-9,
                "{a}: {r:?}"
            );
        }
    }

    #[test]
    fn constant_never_binds() {
        let c = constants_report().unwrap();
        let f = FamilySpec::constant(Complex64::new(0.3, 0.0)).unwrap();
        let r = radius_search(&Preset::Classic.spec(&c), &f, 1e-12).unwrap();
        assert!(!r.binding);
        assert!((r.radius - (1.0 - 1e-9)).abs() < 1e-15);
    }

    #[test]
    fn non_monotone_total_is_refused() {
        let c = constants_report().unwrap();
        let f: FamilySpec = "blaschke:-0.9".parse().unwrap();
        assert!(matches!(
            radius_search(&Preset::ThmB2.spec(&c), &f, 1e-12),
            Err(BohrError::Monotonicity { .. })
        ));
    }

    #[test]
    fn theorem_e_radius_stays_above_threshold() {
        let c = constants_report().unwrap();
        let spec = Preset::ThmE.spec(&c);
        let threshold = 5f64.sqrt() - 2.0;
        for a in [0.0, 0.5, 0.9, 0.999] {
            let r = radius_search(&spec, &FamilySpec::moebius(a).unwrap(), 1e-12).unwrap();
            assert!(r.radius >= threshold - 1e-9, "{a}: {r:?}");
        }
    }

    #[test]
    fn refining_tolerance_is_stable() {
        let c = constants_report().unwrap();
        let spec = Preset::ThmC.spec(&c);
        let f = FamilySpec::moebius(0.3).unwrap();
        let coarse = radius_search(&spec, &f, 1e-6).unwrap();
        let fine = radius_search(&spec, &f, 5e-7).unwrap();
        assert!((coarse.radius - fine.radius).abs() < 1e-6);
    }
}
