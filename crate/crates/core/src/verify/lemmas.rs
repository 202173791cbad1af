//! Coefficient-level bounds for functions bounded by one on the unit
//! polydisk, and the Schwarz–Pick estimate for `|f(z)|`.

use std::f64::consts::{FRAC_1_SQRT_2, TAU};

use num_complex::Complex64;
use serde::Serialize;

use crate::functionals::schwarz_pick;
use crate::series::{expand, slice_coefficients, FamilySpec};
use crate::tolerances::LEMMA_SLACK;
use crate::{BohrError, Result};

/// One degree of a lemma sum, next to the value the series in
/// `s = z_1 + … + z_n` would give for it.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DegreeTerm {
    pub k: usize,
    pub literal: f64,
    pub slice: f64,
}

impl DegreeTerm {
    /// `(slice − literal)/slice`, zero when both vanish.
    pub fn relative_deficit(&self) -> f64 {
        if self.slice == 0.0 {
            0.0
        } else {
            (self.slice - self.literal) / self.slice
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LemmaCheck {
    pub family: String,
    pub bold_r: f64,
    pub truncation_degree: usize,
    /// Truncated left-hand side.
    pub lhs: f64,
    /// Bound on the part of the left-hand side beyond the truncation degree.
    pub lhs_tail: f64,
    pub rhs: f64,
    /// `lhs + lhs_tail ≤ rhs + slack`
    pub ok: bool,
    pub per_degree: Vec<DegreeTerm>,
}

impl LemmaCheck {
    /// `rhs − lhs`; the bound is attained when this is zero.
    pub fn gap(&self) -> f64 {
        self.rhs - self.lhs
    }
}

fn require_unit_polydisk(family: &FamilySpec) -> Result<()> {
    if family.bounded_on_unit_polydisk() {
        Ok(())
    } else {
        Err(BohrError::domain(format!(
            "{family} is not bounded by one on the unit polydisk"
        )))
    }
}

/// `Σ_k c_k Σ_{|α|=k} |a_α|² r^{2α}` at the diagonal coordinate radius `r`,
/// with `c_k = k` when `degree_weighted` and `c_k = 1` otherwise, next to its
/// slice analogue `c_k |b_k|² w^k`.
fn weighted_square_sums(
    family: &FamilySpec,
    coord_radius: f64,
    slice_weight: f64,
    degree_weighted: bool,
    k: Option<usize>,
) -> Result<(usize, f64, f64, Vec<DegreeTerm>)> {
    let n = family.dim();
    let r = vec![coord_radius; n];
    let k = match k {
        Some(k) => k,
        None => family.truncation_degree(&r)?,
    };
    let series = expand(family, k)?;
    let cert = family.tail_bounds(k, &r)?;
    let tail = if degree_weighted {
        cert.area
    } else {
        cert.square_sum
    };
    let slice = slice_coefficients(family, k)?;
    let literal = series.sq_sums_by_degree(&r);
    let per_degree: Vec<DegreeTerm> = (1..=k)
        .map(|d| {
            let c = if degree_weighted { d as f64 } else { 1.0 };
            DegreeTerm {
                k: d,
                literal: c * literal[d],
                slice: c * slice.coeffs[d].norm_sqr() * slice_weight.powi(d as i32),
            }
        })
        .collect();
    let lhs = per_degree.iter().map(|t| t.literal).sum();
    Ok((k, lhs, tail, per_degree))
}

/// `Σ_k k Σ_{|α|=k} |a_α|² R^{2k} ≤ R² (1 − |a₀|²)²/(1 − |a₀|² R²)²` for `0 < R ≤ 1/√2`.
pub fn lemma1a_check(family: &FamilySpec, bold_r: f64, k: Option<usize>) -> Result<LemmaCheck> {
    if !(bold_r > 0.0 && bold_r <= FRAC_1_SQRT_2) {
        return Err(BohrError::domain(format!(
            "radius {bold_r} is outside (0, 1/√2]"
        )));
    }
    require_unit_polydisk(family)?;
    let n = family.dim() as f64;
    let (k, lhs, lhs_tail, per_degree) =
        weighted_square_sums(family, bold_r, (n * bold_r).powi(2), true, k)?;
    let a2 = family.constant_term().norm_sqr();
    let rhs = bold_r * bold_r * (1.0 - a2).powi(2) / (1.0 - a2 * bold_r * bold_r).powi(2);
    Ok(finish(family, bold_r, k, lhs, lhs_tail, rhs, per_degree))
}

/// `Σ_{|α|≥1} |a_α|² R^{|α|} ≤ R (1 − |a₀|²)²/(1 − |a₀|² R)` for `0 < R < 1`.
pub fn lemma1b_check(family: &FamilySpec, bold_r: f64, k: Option<usize>) -> Result<LemmaCheck> {
    if !(bold_r > 0.0 && bold_r < 1.0) {
        return Err(BohrError::domain(format!(
            "radius {bold_r} is outside (0, 1)"
        )));
    }
    require_unit_polydisk(family)?;
    let n = family.dim() as f64;
    let (k, lhs, lhs_tail, per_degree) =
        weighted_square_sums(family, bold_r.sqrt(), n * n * bold_r, false, k)?;
    let a2 = family.constant_term().norm_sqr();
    let rhs = bold_r * (1.0 - a2).powi(2) / (1.0 - a2 * bold_r);
    Ok(finish(family, bold_r, k, lhs, lhs_tail, rhs, per_degree))
}

fn finish(
    family: &FamilySpec,
    bold_r: f64,
    truncation_degree: usize,
    lhs: f64,
    lhs_tail: f64,
    rhs: f64,
    per_degree: Vec<DegreeTerm>,
) -> LemmaCheck {
    LemmaCheck {
        family: family.to_string(),
        bold_r,
        truncation_degree,
        lhs,
        lhs_tail,
        rhs,
        ok: lhs + lhs_tail <= rhs + LEMMA_SLACK,
        per_degree,
    }
}

/// Bound on `Σ_{|α|≥1} |a_α| R^{|α|}`:
/// `√n R (1 − a₀²)/(1 − n a₀ R)` when `a₀ ≥ R`, else `√n R √(1 − a₀²)/√(1 − n R²)`.
pub fn lemma1c_bound(a0: f64, bold_r: f64, n: usize) -> Result<f64> {
    if !(0.0..=1.0).contains(&a0) || !(bold_r >= 0.0) || n == 0 {
        return Err(BohrError::domain(format!(
            "invalid arguments a₀ = {a0}, R = {bold_r}, n = {n}"
        )));
    }
    let nf = n as f64;
    if a0 >= bold_r {
        if nf * a0 * bold_r >= 1.0 {
            return Err(BohrError::domain(format!(
                "n a₀ R = {} is not below 1",
                nf * a0 * bold_r
            )));
        }
        Ok(nf.sqrt() * bold_r * (1.0 - a0 * a0) / (1.0 - nf * a0 * bold_r))
    } else {
        if nf * bold_r * bold_r >= 1.0 {
            return Err(BohrError::domain(format!(
                "n R² = {} is not below 1",
                nf * bold_r * bold_r
            )));
        }
        Ok(nf.sqrt() * bold_r * (1.0 - a0 * a0).sqrt() / (1.0 - nf * bold_r * bold_r).sqrt())
    }
}

/// Compares the majorant tail `Σ_{|α|≥1} |a_α| R^{|α|}` with [`lemma1c_bound`].
pub fn lemma1c_check(family: &FamilySpec, bold_r: f64, k: Option<usize>) -> Result<LemmaCheck> {
    if !(bold_r > 0.0 && bold_r < 1.0) {
        return Err(BohrError::domain(format!(
            "radius {bold_r} is outside (0, 1)"
        )));
    }
    require_unit_polydisk(family)?;
    let n = family.dim();
    let rhs = lemma1c_bound(family.constant_term().norm(), bold_r, n)?;
    let r = vec![bold_r; n];
    let k = match k {
        Some(k) => k,
        None => family.truncation_degree(&r)?,
    };
    let series = expand(family, k)?;
    let lhs_tail = family.tail_bounds(k, &r)?.majorant;
    let slice = slice_coefficients(family, k)?;
    let sums = series.abs_sums_by_degree(&r);
    let per_degree: Vec<DegreeTerm> = (1..=k)
        .map(|d| DegreeTerm {
            k: d,
            literal: sums[d],
            slice: slice.coeffs[d].norm() * (n as f64 * bold_r).powi(d as i32),
        })
        .collect();
    let lhs = sums[1..].iter().sum();
    Ok(finish(family, bold_r, k, lhs, lhs_tail, rhs, per_degree))
}

/// Sampled check of `|f(z)| ≤ (a₀ + R)/(1 + a₀R) ≤ (a₀ + nR)/(1 + a₀nR)` on
/// the torus `{|z_i| = R}` and at the point `(−R, …, −R)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ChainCheck {
    pub family: String,
    pub bold_r: f64,
    pub max_modulus: f64,
    pub witness: Vec<Complex64>,
    /// `(a₀ + R)/(1 + a₀R)`; only a valid bound for functions bounded on the
    /// unit polydisk, otherwise reported but not enforced.
    pub schwarz_pick: f64,
    /// `(a₀ + nR)/(1 + a₀nR)`
    pub schwarz_pick_dilated: f64,
    pub first_link_applies: bool,
    pub ok: bool,
}

pub fn schwarz_pick_chain_check(
    family: &FamilySpec,
    bold_r: f64,
    samples_per_axis: usize,
) -> Result<ChainCheck> {
    family.validate()?;
    let n = family.dim();
    let cap = family.domain_radius_cap();
    if !(bold_r >= 0.0 && bold_r < cap) {
        return Err(BohrError::domain(format!(
            "radius {bold_r} is outside [0, {cap})"
        )));
    }
    if samples_per_axis == 0 || (samples_per_axis as u128).pow(n as u32) > 1 << 22 {
        return Err(BohrError::domain("torus sample count out of range"));
    }
    let a0 = family.constant_term().norm();
    let ring: Vec<Complex64> = (0..samples_per_axis)
        .map(|j| Complex64::from_polar(bold_r, TAU * j as f64 / samples_per_axis as f64))
        .collect();
    let diagonal = vec![Complex64::new(-bold_r, 0.0); n];
    let mut best = (family.value_at(&diagonal)?.norm(), diagonal);
    let mut idx = vec![0usize; n];
    for _ in 0..samples_per_axis.pow(n as u32) {
        let z: Vec<Complex64> = idx.iter().map(|&i| ring[i]).collect();
        let m = family.value_at(&z)?.norm();
        if m > best.0 {
            best = (m, z);
        }
        for slot in idx.iter_mut() {
            *slot += 1;
            if *slot < samples_per_axis {
                break;
            }
            *slot = 0;
        }
    }
    let sp = schwarz_pick(a0, bold_r)?;
    let x = n as f64 * bold_r;
    let sp_dilated = (a0 + x) / (1.0 + a0 * x);
    let first_link_applies = family.bounded_on_unit_polydisk();
    let slack = LEMMA_SLACK;
    let ok = if first_link_applies {
        best.0 <= sp + slack && sp <= sp_dilated + slack
    } else {
        best.0 <= sp_dilated + slack
    };
    Ok(ChainCheck {
        family: family.to_string(),
        bold_r,
        max_modulus: best.0,
        witness: best.1,
        schwarz_pick: sp,
        schwarz_pick_dilated: sp_dilated,
        first_link_applies,
        ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moebius_attains_both_bounds() {
        for a in [0.0, 0.3, 0.8] {
            let f = FamilySpec::moebius(a).unwrap();
            for r in [0.2, 0.5, FRAC_1_SQRT_2] {
                let ca = lemma1a_check(&f, r, None).unwrap();
                assert!(ca.ok && (ca.lhs - ca.rhs).abs() < 1e-10, "{ca:?}");
                let cb = lemma1b_check(&f, r, None).unwrap();
                assert!(cb.ok && (cb.lhs - cb.rhs).abs() < 1e-10, "{cb:?}");
            }
        }
    }

    #[test]
    fn constant_has_zero_lhs() {
        let f = FamilySpec::constant(Complex64::new(0.2, 0.4)).unwrap();
        let c = lemma1a_check(&f, 0.5, None).unwrap();
        assert_eq!(c.lhs, 0.0);
        assert!(c.ok);
        assert!(lemma1b_check(&f, 0.5, None).unwrap().ok);
    }

    #[test]
    fn scaled_family_has_multinomial_deficit() {
        let f = FamilySpec::extremal_scaled(0.6, 2).unwrap();
        let c = lemma1a_check(&f, 0.5, None).unwrap();
        assert!(c.ok && c.rhs - c.lhs > 1e-3);
        let t2 = &c.per_degree[1];
        assert_eq!(t2.k, 2);
        assert!((t2.relative_deficit() - 10.0 / 16.0).abs() < 1e-12);
        // degree one: n terms against n²
        assert!((c.per_degree[0].relative_deficit() - 0.5).abs() < 1e-12);

        let g = FamilySpec::extremal_scaled(0.5, 3).unwrap();
        let cb = lemma1b_check(&g, 0.7, None).unwrap();
        assert!(cb.ok && cb.rhs - cb.lhs > 1e-3);
    }

    #[test]
    fn range_errors() {
        let f = FamilySpec::moebius(0.5).unwrap();
        assert!(lemma1a_check(&f, 0.75, None).is_err());
        assert!(lemma1b_check(&f, 1.0, None).is_err());
        let u = FamilySpec::extremal_unit(0.5, 2).unwrap();
        assert!(lemma1a_check(&u, 0.2, None).is_err());
    }

    #[test]
    fn lemma1c_values() {
        let (a, r) = (0.6, 0.3);
        let b = lemma1c_bound(a, r, 1).unwrap();
        assert!((b - r * (1.0 - a * a) / (1.0 - a * r)).abs() < 1e-16);
        assert_eq!(lemma1c_bound(1.0, 0.0, 3).unwrap(), 0.0);
        let b = lemma1c_bound(0.1, 0.2, 4).unwrap();
        assert!((b - 2.0 * 0.2 * 0.99f64.sqrt() / 0.84f64.sqrt()).abs() < 1e-15);
        assert!(lemma1c_bound(0.9, 0.5, 3).is_err());
        assert!(lemma1c_bound(0.1, 0.6, 3).is_err());

        let f = FamilySpec::moebius(a).unwrap();
        let c = lemma1c_check(&f, r, None).unwrap();
        assert!(c.ok && (c.lhs - c.rhs).abs() < 1e-12);
        let g = FamilySpec::extremal_scaled(0.4, 3).unwrap();
        assert!(lemma1c_check(&g, 0.25, None).unwrap().ok);
    }

    #[test]
    fn chain_holds() {
        let fams = [
            FamilySpec::moebius(0.4).unwrap(),
            FamilySpec::extremal_scaled(0.6, 2).unwrap(),
            FamilySpec::extremal_unit(0.6, 2).unwrap(),
            "blaschke:0.3;-0.5+0.2i".parse().unwrap(),
        ];
        for f in &fams {
            for t in [0.1, 0.5, 0.9] {
                let r = t * f.domain_radius_cap();
                let c = schwarz_pick_chain_check(f, r, 24).unwrap();
                assert!(c.ok, "{c:?}");
            }
        }
        // the unit-cap family reaches the dilated bound exactly at (−R, −R)
        let c = schwarz_pick_chain_check(&fams[2], 0.2, 16).unwrap();
        assert!(!c.first_link_applies);
        assert!((c.max_modulus - c.schwarz_pick_dilated).abs() < 1e-15);
        assert!(c.max_modulus > c.schwarz_pick);
    }
}
