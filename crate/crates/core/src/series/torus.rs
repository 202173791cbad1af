use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use super::CoefficientSeries;
use crate::tolerances::TORUS_BOUND_SLACK;
use crate::{BohrError, Result};

/// Outcome of sampling `|f|` on the distinguished boundary `{|z_i| = r}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TorusReport {
    pub radius: f64,
    pub samples_per_axis: usize,
    /// Largest sampled modulus of the truncated series.
    pub sup_modulus: f64,
    pub witness_point: Vec<Complex64>,
    /// Majorant tail bound at the sampled radius, when the series carries one.
    pub tail: Option<f64>,
    pub certified: bool,
    /// `sup_modulus + tail ≤ 1 + slack` (tail taken as zero when absent).
    pub within_bound: bool,
}

impl TorusReport {
    pub fn ok(&self) -> bool {
        self.certified && self.within_bound
    }
}

/// Samples the truncated series on the torus of radius `radius_cap` and
/// compares the largest modulus plus the tail bound with one.
pub fn torus_bound_check(
    series: &CoefficientSeries,
    radius_cap: f64,
    samples_per_axis: usize,
) -> Result<TorusReport> {
    if samples_per_axis < 8 {
        return Err(BohrError::domain(
            "at least 8 samples per axis are required",
        ));
    }
    if !(radius_cap >= 0.0) {
        return Err(BohrError::domain("torus radius must be nonnegative"));
    }
    let n = series.dim();
    let total = (samples_per_axis as u128).pow(n as u32);
    if total > 1 << 24 {
        return Err(BohrError::Budget {
            needed: total,
            budget: 1 << 24,
        });
    }
    let ring: Vec<Complex64> = (0..samples_per_axis)
        .map(|j| Complex64::from_polar(radius_cap, TAU * j as f64 / samples_per_axis as f64))
        .collect();
    let mut best = (f64::NEG_INFINITY, vec![Complex64::default(); n]);
    let mut idx = vec![0usize; n];
    let mut z = vec![Complex64::default(); n];
    for _ in 0..total {
        for (zi, &i) in z.iter_mut().zip(&idx) {
            *zi = ring[i];
        }
        let m = series.eval(&z).norm();
        if m > best.0 {
            best = (m, z.clone());
        }
        for slot in idx.iter_mut() {
            *slot += 1;
            if *slot < samples_per_axis {
                break;
            }
            *slot = 0;
        }
    }
    let tail = series
        .tail_certificate()
        .filter(|t| t.covers(&vec![radius_cap; n]))
        .map(|t| t.majorant);
    Ok(TorusReport {
        radius: radius_cap,
        samples_per_axis,
        sup_modulus: best.0,
        witness_point: best.1,
        tail,
        certified: tail.is_some(),
        within_bound: best.0 + tail.unwrap_or(0.0) <= 1.0 + TORUS_BOUND_SLACK,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{expand, expand_certified, FamilySpec};

    #[test]
    fn moebius_has_unit_boundary_modulus() {
        let f = FamilySpec::moebius(0.5).unwrap();
        let r = 1.0 - 1e-9;
        let s = expand_certified(&f, &[r]).unwrap();
        let rep = torus_bound_check(&s, r, 64).unwrap();
        assert!(rep.ok());
        assert!((rep.sup_modulus - 1.0).abs() < 1e-6);
    }

    #[test]
    fn constant_modulus() {
        let f = FamilySpec::constant(Complex64::new(0.3, 0.0)).unwrap();
        for r in [0.1, 0.5, 1.0] {
            let s = expand_certified(&f, &[r]).unwrap();
            let rep = torus_bound_check(&s, r, 8).unwrap();
            assert!((rep.sup_modulus - 0.3).abs() < 1e-15);
            assert!(rep.ok());
        }
    }

    #[test]
    fn unit_family_on_its_cap() {
        let f = FamilySpec::extremal_unit(0.6, 2).unwrap();
        let s = expand_certified(&f, &[0.5, 0.5]).unwrap();
        let rep = torus_bound_check(&s, 0.5, 32).unwrap();
        assert!(rep.ok(), "{rep:?}");
        assert!(rep.sup_modulus > 0.99);
    }

    #[test]
    fn missing_certificate_is_flagged() {
        let s = expand(&FamilySpec::moebius(0.5).unwrap(), 60).unwrap();
        let rep = torus_bound_check(&s, 0.9, 16).unwrap();
        assert!(!rep.certified);
        assert!(rep.within_bound);
        assert!(!rep.ok());
    }

    #[test]
    fn too_few_samples() {
        let s = expand(&FamilySpec::moebius(0.5).unwrap(), 5).unwrap();
        assert!(torus_bound_check(&s, 0.5, 4).is_err());
    }
}
