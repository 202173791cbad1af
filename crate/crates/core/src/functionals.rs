//! Majorant series, area-type terms and the Bohr-type functionals built from
//! them, with itemized breakdowns.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::constants::{ConstantsReport, Radii};
use crate::series::{binomial, CoefficientSeries, FamilySpec};
use crate::{BohrError, Result};

/// How the radius is specified: one value for every coordinate, or one per coordinate.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum RadiusMode {
    Diagonal(f64),
    Vector(Vec<f64>),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RadiusSpec {
    n: usize,
    mode: RadiusMode,
}

impl RadiusSpec {
    pub fn diagonal(n: usize, r: f64) -> Result<Self> {
        if n == 0 {
            return Err(BohrError::domain("dimension must be positive"));
        }
        if !(r >= 0.0) || !r.is_finite() {
            return Err(BohrError::domain(format!(
                "radius {r} must be a nonnegative number"
            )));
        }
        Ok(RadiusSpec {
            n,
            mode: RadiusMode::Diagonal(r),
        })
    }

    pub fn vector(r: Vec<f64>) -> Result<Self> {
        if r.is_empty() {
            return Err(BohrError::domain("radius vector is empty"));
        }
        if r.iter().any(|&x| !(x >= 0.0) || !x.is_finite()) {
            return Err(BohrError::domain(
                "radius coordinates must be nonnegative numbers",
            ));
        }
        Ok(RadiusSpec {
            n: r.len(),
            mode: RadiusMode::Vector(r),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> &RadiusMode {
        &self.mode
    }

    pub fn coords(&self) -> Vec<f64> {
        match &self.mode {
            RadiusMode::Diagonal(r) => vec![*r; self.n],
            RadiusMode::Vector(v) => v.clone(),
        }
    }

    /// `‖r‖∞`
    pub fn bold_r(&self) -> f64 {
        match &self.mode {
            RadiusMode::Diagonal(r) => *r,
            RadiusMode::Vector(v) => v.iter().cloned().fold(0.0, f64::max),
        }
    }

    /// Same shape with every coordinate multiplied by `t`.
    pub fn scaled(&self, t: f64) -> Result<Self> {
        match &self.mode {
            RadiusMode::Diagonal(r) => Self::diagonal(self.n, r * t),
            RadiusMode::Vector(v) => Self::vector(v.iter().map(|x| x * t).collect()),
        }
    }

    /// Checks dimension and that every coordinate lies in `[0, cap)`.
    pub fn check_for(&self, family: &FamilySpec) -> Result<()> {
        if self.n != family.dim() {
            return Err(BohrError::domain(format!(
                "radius has dimension {}, family {family} has dimension {}",
                self.n,
                family.dim()
            )));
        }
        let cap = family.domain_radius_cap();
        if self.bold_r() >= cap {
            return Err(BohrError::domain(format!(
                "radius {} is not below the domain cap {cap} of {family}",
                self.bold_r()
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Head {
    /// `|a₀|`
    ConstantTerm,
    /// `|f(z)|`
    AbsF,
    /// `|f(z)|²`
    AbsFSquared,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AreaInterpretation {
    /// `Σ_k k Σ_{|α|=k} |a_α|² r^{2α}` from the true multi-index coefficients.
    Literal,
    /// `Σ_k k |b_k|² ρ^{2k}` from the series in `s = z_1 + … + z_n`, `ρ = n‖r‖∞`.
    Slice,
}

impl fmt::Display for AreaInterpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AreaInterpretation::Literal => "literal",
            AreaInterpretation::Slice => "slice",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FunctionalSpec {
    pub head: Head,
    /// Adds `Σ_{|α|≥1} |a_α| r^α`.
    pub include_majorant_tail: bool,
    pub area_weight: f64,
    pub area_squared_weight: f64,
    pub extra_area_weight: f64,
    pub area_interpretation: AreaInterpretation,
}

impl FunctionalSpec {
    pub fn new(
        head: Head,
        area_weight: f64,
        area_squared_weight: f64,
        extra_area_weight: f64,
    ) -> Self {
        FunctionalSpec {
            head,
            include_majorant_tail: true,
            area_weight,
            area_squared_weight,
            extra_area_weight,
            area_interpretation: AreaInterpretation::Literal,
        }
    }

    pub fn with_interpretation(mut self, interpretation: AreaInterpretation) -> Self {
        self.area_interpretation = interpretation;
        self
    }

    fn uses_area(&self) -> bool {
        self.area_weight != 0.0 || self.area_squared_weight != 0.0 || self.extra_area_weight != 0.0
    }
}

/// The inequalities with named weight presets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Preset {
    Classic,
    ThmA,
    ThmB1,
    ThmB2,
    ThmC,
    ThmD,
    ThmE,
    Thm21,
    Thm22,
    Thm23,
}

impl Preset {
    pub const ALL: [Preset; 10] = [
        Preset::Classic,
        Preset::ThmA,
        Preset::ThmB1,
        Preset::ThmB2,
        Preset::ThmC,
        Preset::ThmD,
        Preset::ThmE,
        Preset::Thm21,
        Preset::Thm22,
        Preset::Thm23,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Preset::Classic => "classic",
            Preset::ThmA => "A",
            Preset::ThmB1 => "B1",
            Preset::ThmB2 => "B2",
            Preset::ThmC => "C",
            Preset::ThmD => "D",
            Preset::ThmE => "E",
            Preset::Thm21 => "T21",
            Preset::Thm22 => "T22",
            Preset::Thm23 => "T23",
        }
    }

    /// Weights of the functional, with `λ₁`, `λ₂`, `p` taken from `constants`.
    pub fn spec(&self, constants: &ConstantsReport) -> FunctionalSpec {
        let area = 16.0 / 9.0;
        match self {
            Preset::Classic => FunctionalSpec::new(Head::ConstantTerm, 0.0, 0.0, 0.0),
            Preset::ThmA => FunctionalSpec::new(Head::ConstantTerm, area, 0.0, 0.0),
            Preset::ThmB1 => FunctionalSpec::new(Head::AbsF, 0.0, 0.0, 0.0),
            Preset::ThmB2 => FunctionalSpec::new(Head::AbsFSquared, 0.0, 0.0, 0.0),
            Preset::ThmC | Preset::Thm21 => {
                FunctionalSpec::new(Head::ConstantTerm, area, constants.lambda1, 0.0)
            }
            Preset::ThmD | Preset::Thm22 => {
                FunctionalSpec::new(Head::AbsFSquared, area, constants.lambda2, 0.0)
            }
            Preset::ThmE => FunctionalSpec::new(Head::AbsF, constants.p, 0.0, 0.0),
            Preset::Thm23 => FunctionalSpec::new(Head::AbsF, 0.0, 0.0, constants.p),
        }
    }

    /// True for the inequalities stated for functions of one variable.
    pub fn single_variable(&self) -> bool {
        !matches!(self, Preset::Thm21 | Preset::Thm22 | Preset::Thm23)
    }

    /// Radius up to which the inequality is claimed, in dimension `n`.
    pub fn threshold(&self, n: usize) -> f64 {
        let radii = Radii::new();
        match self {
            Preset::ThmB1 | Preset::ThmE => radii.thm_e,
            Preset::Thm23 => radii.multi_e(n),
            Preset::Thm21 | Preset::Thm22 => radii.multi(n),
            _ => radii.classic,
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Preset {
    type Err = BohrError;

    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .iter()
            .find(|p| p.id().eq_ignore_ascii_case(s.trim()))
            .copied()
            .ok_or_else(|| {
                BohrError::Parse(format!(
                    "unknown theorem id {s:?}; expected one of classic, A, B1, B2, C, D, E, T21, T22, T23"
                ))
            })
    }
}

/// A nonnegative sum together with how it was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Bounded {
    /// Exact value, or truncated sum plus tail bound when `truncated`.
    pub value: f64,
    /// Tail bound included in `value`; `None` when no bound is available.
    pub tail: Option<f64>,
    pub truncated: bool,
}

impl Bounded {
    fn exact(value: f64) -> Self {
        Bounded {
            value,
            tail: Some(0.0),
            truncated: false,
        }
    }

    fn truncated(partial: f64, tail: Option<f64>) -> Self {
        Bounded {
            value: partial + tail.unwrap_or(0.0),
            tail,
            truncated: true,
        }
    }

    pub fn certified(&self) -> bool {
        self.tail.is_some()
    }
}

/// `Σ_{|α|≤K} |a_α| r^α`, plus the tail bound when the series carries a
/// certificate covering `r`.
pub fn majorant(series: &CoefficientSeries, radius: &RadiusSpec) -> Result<Bounded> {
    let r = series_radius(series, radius)?;
    let partial: f64 = series.abs_sums_by_degree(&r).iter().sum();
    Ok(Bounded::truncated(
        partial,
        tail_of(series, &r, |t| t.majorant),
    ))
}

/// Literal area term `Σ_k k Σ_{|α|=k} |a_α|² r^{2α}` of an expanded series.
pub fn area_term_series(series: &CoefficientSeries, radius: &RadiusSpec) -> Result<Bounded> {
    let r = series_radius(series, radius)?;
    let partial: f64 = series
        .sq_sums_by_degree(&r)
        .iter()
        .enumerate()
        .map(|(k, s)| k as f64 * s)
        .sum();
    Ok(Bounded::truncated(partial, tail_of(series, &r, |t| t.area)))
}

fn series_radius(series: &CoefficientSeries, radius: &RadiusSpec) -> Result<Vec<f64>> {
    if radius.n() != series.dim() {
        return Err(BohrError::domain(format!(
            "radius has dimension {}, series has dimension {}",
            radius.n(),
            series.dim()
        )));
    }
    Ok(radius.coords())
}

fn tail_of(
    series: &CoefficientSeries,
    r: &[f64],
    pick: impl Fn(&crate::series::TailCertificate) -> f64,
) -> Option<f64> {
    series.tail_certificate().filter(|t| t.covers(r)).map(pick)
}

/// `Σ_{|α|≥1} |a_α| r^α` for a family: closed form for the Möbius-type
/// families, certified truncation for Blaschke products.
pub fn majorant_tail_of(family: &FamilySpec, radius: &RadiusSpec) -> Result<Bounded> {
    radius.check_for(family)?;
    let r = radius.coords();
    if let Some(m) = family.moebius_shape() {
        let rho = m.scale * r.iter().sum::<f64>();
        return Ok(Bounded::exact((1.0 - m.a * m.a) * rho / (1.0 - m.a * rho)));
    }
    match family {
        FamilySpec::ConstantFn { .. } => Ok(Bounded::exact(0.0)),
        _ => {
            let series = crate::series::expand_certified(family, &r)?;
            let full = majorant(&series, radius)?;
            Ok(Bounded {
                value: full.value - series.constant_term().norm(),
                ..full
            })
        }
    }
}

/// `M_f(r) = |a₀| + Σ_{|α|≥1} |a_α| r^α` for a family.
pub fn majorant_of(family: &FamilySpec, radius: &RadiusSpec) -> Result<Bounded> {
    let tail = majorant_tail_of(family, radius)?;
    Ok(Bounded {
        value: family.constant_term().norm() + tail.value,
        ..tail
    })
}

/// Area-type term of a family under either interpretation.
pub fn area_term(
    family: &FamilySpec,
    radius: &RadiusSpec,
    interpretation: AreaInterpretation,
) -> Result<Bounded> {
    radius.check_for(family)?;
    match family {
        FamilySpec::ConstantFn { .. } => Ok(Bounded::exact(0.0)),
        FamilySpec::FiniteBlaschke { .. } => {
            let series = crate::series::expand_certified(family, &radius.coords())?;
            area_term_series(&series, radius)
        }
        _ => {
            let m = family.moebius_shape().expect("Möbius-type family");
            let u = 1.0 - m.a * m.a;
            match interpretation {
                AreaInterpretation::Slice => {
                    let rho = m.scale * m.n as f64 * radius.bold_r();
                    let x = m.a * m.a * rho * rho;
                    Ok(Bounded::exact(u * u * rho * rho / ((1.0 - x) * (1.0 - x))))
                }
                AreaInterpretation::Literal if m.n == 1 => {
                    let rho = m.scale * radius.bold_r();
                    let x = m.a * m.a * rho * rho;
                    Ok(Bounded::exact(u * u * rho * rho / ((1.0 - x) * (1.0 - x))))
                }
                AreaInterpretation::Literal => literal_area_moebius(family, radius),
            }
        }
    }
}

/// Literal area term of a Möbius-type family in `n ≥ 2` variables.
///
/// With `|a_α| = c_k |α|!/α!` the degree-`k` square sum is `c_k² h_k` where
/// `h_k = Σ_{|α|=k} (k!/α!)² r^{2α}`; the `h_k` come from convolving one
/// variable at a time, `h_k ← Σ_j C(k, j)² r_i^{2j} h_{k−j}`.
fn literal_area_moebius(family: &FamilySpec, radius: &RadiusSpec) -> Result<Bounded> {
    let m = family.moebius_shape().expect("Möbius-type family");
    let r = radius.coords();
    let k_max = family.truncation_degree(&r)?;
    let cert = family.tail_bounds(k_max, &r)?;
    let h = multinomial_square_sums(&r, k_max);
    let partial: f64 = (1..=k_max)
        .map(|k| {
            let c = m.slice_modulus(k);
            k as f64 * c * c * h[k]
        })
        .sum();
    Ok(Bounded::truncated(partial, Some(cert.area)))
}

/// `h_k = Σ_{|α|=k} (k!/α!)² r^{2α}` for `k = 0..=k_max`.
pub fn multinomial_square_sums(r: &[f64], k_max: usize) -> Vec<f64> {
    let mut h = vec![0.0; k_max + 1];
    h[0] = 1.0;
    for &ri in r {
        let x = ri * ri;
        let powers: Vec<f64> = (0..=k_max).map(|j| x.powi(j as i32)).collect();
        let mut next = vec![0.0; k_max + 1];
        for (k, slot) in next.iter_mut().enumerate() {
            *slot = (0..=k)
                .map(|j| {
                    let b = binomial(k as u64, j as u64);
                    b * b * powers[j] * h[k - j]
                })
                .sum();
        }
        h = next;
    }
    h
}

/// `(a₀ + R)/(1 + a₀R)`, the Schwarz–Pick bound for `|f(z)|` with `‖z‖∞ = R`.
pub fn schwarz_pick(a0: f64, bold_r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&a0) {
        return Err(BohrError::domain(format!(
            "|f(0)| = {a0} is outside [0, 1]"
        )));
    }
    if !(0.0..1.0).contains(&bold_r) {
        return Err(BohrError::domain(format!(
            "radius {bold_r} is outside [0, 1)"
        )));
    }
    Ok((a0 + bold_r) / (1.0 + a0 * bold_r))
}

/// Itemized value of a functional at one radius.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TermBreakdown {
    pub head_value: f64,
    pub majorant_tail: f64,
    pub area_term: f64,
    pub area_term_squared_contribution: f64,
    pub extra_area_contribution: f64,
    pub total: f64,
    /// `1 − total`
    pub margin: f64,
    pub certified: bool,
    /// True when a truncated sum (plus tail bound) entered the total.
    pub truncated: bool,
    pub interpretation: AreaInterpretation,
}

/// Point `(−r_1, …, −r_n)`, where the Möbius-type families attain
/// `|f| = (a + ρ)/(1 + aρ)`.
pub fn default_eval_point(radius: &RadiusSpec) -> Vec<Complex64> {
    radius
        .coords()
        .into_iter()
        .map(|x| Complex64::new(-x, 0.0))
        .collect()
}

/// Evaluates `spec` for `family` at `radius`; the head uses `eval_point`,
/// or [`default_eval_point`] when absent.
///
/// The majorant tail never contains `|a₀|`: the head supplies it (for
/// [`Head::ConstantTerm`]) or replaces it (for `|f|` and `|f|²`).
pub fn evaluate(
    spec: &FunctionalSpec,
    family: &FamilySpec,
    radius: &RadiusSpec,
    eval_point: Option<&[Complex64]>,
) -> Result<TermBreakdown> {
    radius.check_for(family)?;
    let head_value = match spec.head {
        Head::ConstantTerm => family.constant_term().norm(),
        Head::AbsF | Head::AbsFSquared => {
            let v = match eval_point {
                Some(z) => {
                    if z.iter().any(|c| c.norm() >= family.domain_radius_cap()) {
                        return Err(BohrError::domain(
                            "evaluation point lies outside the domain",
                        ));
                    }
                    family.value_at(z)?
                }
                None => family.value_at(&default_eval_point(radius))?,
            }
            .norm();
            if spec.head == Head::AbsF {
                v
            } else {
                v * v
            }
        }
    };
    let tail = if spec.include_majorant_tail {
        majorant_tail_of(family, radius)?
    } else {
        Bounded::exact(0.0)
    };
    let area = if spec.uses_area() {
        area_term(family, radius, spec.area_interpretation)?
    } else {
        Bounded::exact(0.0)
    };
    let s = area.value;
    let area_term_squared_contribution = spec.area_squared_weight * s * s;
    let extra_area_contribution = spec.extra_area_weight * s;
    let total = head_value
        + tail.value
        + spec.area_weight * s
        + area_term_squared_contribution
        + extra_area_contribution;
    Ok(TermBreakdown {
        head_value,
        majorant_tail: tail.value,
        area_term: s,
        area_term_squared_contribution,
        extra_area_contribution,
        total,
        margin: 1.0 - total,
        certified: tail.certified() && area.certified(),
        truncated: tail.truncated || area.truncated,
        interpretation: spec.area_interpretation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::constants_report;
    use crate::series::{expand_certified, oracle_expand};

    fn diag(n: usize, r: f64) -> RadiusSpec {
        RadiusSpec::diagonal(n, r).unwrap()
    }

    #[test]
    fn moebius_majorant_at_classic_radius() {
        let f = FamilySpec::moebius(0.5).unwrap();
        let m = majorant_of(&f, &diag(1, 0.5)).unwrap();
        assert!((m.value - 1.0).abs() < 1e-15);
        let s = expand_certified(&f, &[0.5]).unwrap();
        let t = majorant(&s, &diag(1, 0.5)).unwrap();
        assert!(t.certified() && (t.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn constant_majorant() {
        let f = FamilySpec::constant(Complex64::new(0.3, 0.0)).unwrap();
        for r in [0.0, 0.4, 0.9] {
            assert_eq!(majorant_of(&f, &diag(1, r)).unwrap().value, 0.3);
        }
    }

    #[test]
    fn unit_majorant_spot_value() {
        let a = 0.567284;
        let f = FamilySpec::extremal_unit(a, 2).unwrap();
        let m = majorant_of(&f, &diag(2, 1.0 / 6.0)).unwrap().value;
        assert!((m - (a + (1.0 - a * a) / (3.0 - a))).abs() < 1e-15);
        let s = expand_certified(&f, &[1.0 / 6.0; 2]).unwrap();
        assert!((majorant(&s, &diag(2, 1.0 / 6.0)).unwrap().value - m).abs() < 1e-12);
    }

    #[test]
    fn area_at_zero_parameter() {
        let f = FamilySpec::moebius(0.0).unwrap();
        for interp in [AreaInterpretation::Literal, AreaInterpretation::Slice] {
            let s = area_term(&f, &diag(1, 1.0 / 3.0), interp).unwrap().value;
            assert!((s - 1.0 / 9.0).abs() < 1e-16);
        }
    }

    #[test]
    fn literal_area_matches_coefficients() {
        let f = FamilySpec::extremal_unit(0.6, 2).unwrap();
        let r = diag(2, 1.0 / 6.0);
        let closed = area_term(&f, &r, AreaInterpretation::Literal).unwrap();
        let brute = area_term_series(&oracle_expand(&f, 40).unwrap(), &r).unwrap();
        assert!(closed.truncated && closed.certified());
        assert!((closed.value - brute.value).abs() < 1e-12);
        let slice = area_term(&f, &r, AreaInterpretation::Slice).unwrap();
        assert!(closed.value < slice.value - 1e-4);

        let g = FamilySpec::extremal_scaled(0.5, 3).unwrap();
        let rv = RadiusSpec::vector(vec![0.2, 0.5, 0.35]).unwrap();
        let closed = area_term(&g, &rv, AreaInterpretation::Literal).unwrap();
        let series = expand_certified(&g, &rv.coords()).unwrap();
        let brute = area_term_series(&series, &rv).unwrap();
        assert!((closed.value - brute.value).abs() < 1e-12);
    }

    #[test]
    fn multinomial_square_sums_small_case() {
        // n = 2, k = 2: 1 + 4 + 1
        let h = multinomial_square_sums(&[1.0, 1.0], 3);
        assert_eq!(h, vec![1.0, 2.0, 6.0, 20.0]);
    }

    #[test]
    fn theorem_c_values() {
        let c = constants_report().unwrap();
        let spec = Preset::ThmC.spec(&c);
        let r = diag(1, 1.0 / 3.0);
        let t0 = evaluate(&spec, &FamilySpec::moebius(0.0).unwrap(), &r, None).unwrap();
        let expected = 1.0 / 3.0 + 16.0 / 81.0 + c.lambda1 / 81.0;
        assert!((t0.total - expected).abs() < 1e-15);
        assert!((t0.total - 0.76061).abs() < 1e-5);
        let star = evaluate(&spec, &FamilySpec::moebius(c.a_star1).unwrap(), &r, None).unwrap();
        assert!(star.margin.abs() < 1e-9, "{star:?}");
        assert!(star.certified && !star.truncated);
    }

    #[test]
    fn one_variable_interpretations_agree() {
        for a in [0.0, 0.3, 0.7, 0.95] {
            for r in [0.1, 0.33, 0.8] {
                let f = FamilySpec::moebius(a).unwrap();
                let l = area_term(&f, &diag(1, r), AreaInterpretation::Literal)
                    .unwrap()
                    .value;
                let s = area_term(&f, &diag(1, r), AreaInterpretation::Slice)
                    .unwrap()
                    .value;
                assert!((l - s).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn blaschke_head_and_tail() {
        let f: FamilySpec = "blaschke:0.5".parse().unwrap();
        let g = FamilySpec::moebius(0.5).unwrap();
        let c = constants_report().unwrap();
        for p in Preset::ALL.iter().filter(|p| p.single_variable()) {
            let spec = p.spec(&c);
            let x = evaluate(&spec, &f, &diag(1, 0.3), None).unwrap();
            let y = evaluate(&spec, &g, &diag(1, 0.3), None).unwrap();
            assert!((x.total - y.total).abs() < 1e-12, "{p}");
            assert!(x.truncated && x.certified);
        }
    }

    #[test]
    fn schwarz_pick_values() {
        assert_eq!(schwarz_pick(0.0, 0.4).unwrap(), 0.4);
        assert_eq!(schwarz_pick(1.0, 0.7).unwrap(), 1.0);
        assert_eq!(schwarz_pick(0.5, 0.5).unwrap(), 0.8);
        assert!(schwarz_pick(1.2, 0.5).is_err());
        assert!(schwarz_pick(0.5, 1.0).is_err());
    }

    #[test]
    fn radius_outside_cap_is_rejected() {
        let f = FamilySpec::extremal_unit(0.5, 3).unwrap();
        assert!(majorant_of(&f, &diag(3, 1.0 / 3.0)).is_err());
        assert!(majorant_of(&f, &diag(2, 0.1)).is_err());
    }

    #[test]
    fn preset_ids_round_trip() {
        for p in Preset::ALL {
            assert_eq!(p.id().parse::<Preset>().unwrap(), p);
        }
        assert!("t21".parse::<Preset>().is_ok());
        assert!(matches!("Z".parse::<Preset>(), Err(BohrError::Parse(_))));
    }
}
