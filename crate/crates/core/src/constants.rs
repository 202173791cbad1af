//! Sharp constants computed from first principles: roots of the two defining
//! polynomials, the quadratic-weight formulas evaluated there, the area weight
//! of the `|f| + area` inequality, and every threshold radius. Also hosts the
//! polynomial and rational expressions used to audit the equality cases.

use serde::Serialize;

use crate::tolerances::{
    LAMBDA_RESIDUAL, POLE_GUARD, POLISH_BRACKET_WIDTH, P_RESIDUAL, ROOT_RESIDUAL, SIGN_GRID_POINTS,
};
use crate::{BohrError, Result};

pub const PAPER_A_STAR_1: f64 = 0.567284;
pub const PAPER_A_STAR_2: f64 = 0.537869;
pub const PAPER_LAMBDA_1: f64 = 18.6095;
pub const PAPER_LAMBDA_2: f64 = 16.4618;
pub const PAPER_P: f64 = 2.4721359550;
pub const PAPER_SQRT5_MINUS_2: f64 = 0.236068;

/// Real polynomial with coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolynomialR {
    coeffs: Vec<f64>,
}

impl PolynomialR {
    pub fn new(coeffs: impl Into<Vec<f64>>) -> Self {
        PolynomialR {
            coeffs: coeffs.into(),
        }
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c)
    }

    pub fn derivative(&self) -> PolynomialR {
        PolynomialR {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| i as f64 * c)
                .collect(),
        }
    }
}

/// `ψ₁(t) = −405 + 473t + 402t² + 38t³ + 3t⁴ + t⁵`
pub fn psi1() -> PolynomialR {
    PolynomialR::new([-405.0, 473.0, 402.0, 38.0, 3.0, 1.0])
}

/// `ψ₂(t) = −513 + 910t + 80t² + 2t³ + t⁴`
pub fn psi2() -> PolynomialR {
    PolynomialR::new([-513.0, 910.0, 80.0, 2.0, 1.0])
}

/// Number of sign flips of `poly` on an equispaced grid over `[lo, hi]`,
/// skipping exact zeros.
pub fn sign_changes_on_grid(poly: &PolynomialR, lo: f64, hi: f64, points: usize) -> usize {
    let mut last = 0.0f64;
    let mut changes = 0;
    for i in 0..=points {
        let t = lo + (hi - lo) * i as f64 / points as f64;
        let v = poly.eval(t);
        if v == 0.0 {
            continue;
        }
        if last != 0.0 && v.signum() != last.signum() {
            changes += 1;
        }
        last = v;
    }
    changes
}

/// The unique root of `poly` in `[lo, hi]` to within `tol`.
///
/// Bisection narrows the bracket, Newton steps polish the estimate, and the
/// result is accepted only if `poly` changes sign across `[x − tol, x + tol]`;
/// otherwise bisection runs to completion.
pub fn solve_unique_root(poly: &PolynomialR, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    if !(tol > 0.0) || !(lo < hi) {
        return Err(BohrError::domain(format!(
            "invalid root search: [{lo}, {hi}] with tolerance {tol}"
        )));
    }
    let (flo, fhi) = (poly.eval(lo), poly.eval(hi));
    if !(flo * fhi < 0.0) {
        return Err(BohrError::Bracket { lo, hi });
    }
    let changes = sign_changes_on_grid(poly, lo, hi, SIGN_GRID_POINTS);
    if changes > 1 {
        return Err(BohrError::NonUnique { lo, hi, changes });
    }

    let bisect_to = |mut a: f64, mut b: f64, width: f64| {
        let fa_neg = poly.eval(a) < 0.0;
        while b - a > width {
            let m = 0.5 * (a + b);
            let fm = poly.eval(m);
            if fm == 0.0 {
                return (m, m);
            }
            if (fm < 0.0) == fa_neg {
                a = m;
            } else {
                b = m;
            }
        }
        (a, b)
    };

    let (a, b) = bisect_to(lo, hi, POLISH_BRACKET_WIDTH.max(tol));
    let dpoly = poly.derivative();
    let mut x = 0.5 * (a + b);
    for _ in 0..50 {
        let d = dpoly.eval(x);
        if d == 0.0 {
            break;
        }
        let next = x - poly.eval(x) / d;
        if !(a..=b).contains(&next) {
            break;
        }
        let step = (next - x).abs();
        x = next;
        if step <= f64::EPSILON * x.abs().max(1.0) {
            break;
        }
    }
    let (ca, cb) = ((x - tol).max(lo), (x + tol).min(hi));
    if poly.eval(ca) * poly.eval(cb) <= 0.0 {
        return Ok(x);
    }
    let (a, b) = bisect_to(lo, hi, tol);
    Ok(0.5 * (a + b))
}

fn check_unit_interval(name: &str, t: f64) -> Result<()> {
    if (0.0..=1.0).contains(&t) {
        Ok(())
    } else {
        Err(BohrError::domain(format!("{name} = {t} is outside [0, 1]")))
    }
}

/// `λ₁(a) = 4(486 − 261a − 324a² + 2a³ + 30a⁴ + 3a⁵) / (81(1 + a)³(3 − 5a))`
pub fn lambda1_of(a: f64) -> Result<f64> {
    check_unit_interval("a", a)?;
    if (a - 0.6).abs() < POLE_GUARD {
        return Err(BohrError::Singularity(format!(
            "λ₁ has a pole at a = 3/5, got a = {a}"
        )));
    }
    let num = PolynomialR::new([486.0, -261.0, -324.0, 2.0, 30.0, 3.0]).eval(a);
    Ok(4.0 * num / (81.0 * (1.0 + a).powi(3) * (3.0 - 5.0 * a)))
}

/// `λ₂(a) = (−81 + 1044a + 54a² − 116a³ − 5a⁴) / (162(a + 1)²(2a − 1))`
pub fn lambda2_of(a: f64) -> Result<f64> {
    check_unit_interval("a", a)?;
    if (a - 0.5).abs() < POLE_GUARD {
        return Err(BohrError::Singularity(format!(
            "λ₂ has a pole at a = 1/2, got a = {a}"
        )));
    }
    let num = PolynomialR::new([-81.0, 1044.0, 54.0, -116.0, -5.0]).eval(a);
    Ok(num / (162.0 * (a + 1.0).powi(2) * (2.0 * a - 1.0)))
}

/// Numerator polynomial of the `M_f + 16/9·S + λ·S²` equality case at `r = 1/3`:
/// the total equals `1 − (1 − t)³ Φ(t)/(9 − t²)⁴` for `ψ_t`.
pub fn phi1(t: f64, lambda: f64) -> Result<f64> {
    check_unit_interval("t", t)?;
    let main = PolynomialR::new([3078.0, 1944.0, -522.0, -432.0, 2.0, 24.0, 2.0]).eval(t);
    let block = PolynomialR::new([-81.0, -243.0, -162.0, 162.0, 243.0, 81.0]).eval(t);
    Ok(main + lambda * block)
}

/// Numerator polynomial of the `|f|² + tail + 16/9·S + λ·S²` equality case at
/// `r = 1/3`: the total equals `1 − (1 − t)³(1 + t) Φ(t)/(9 − t²)⁴`.
pub fn phi2(t: f64, lambda: f64) -> Result<f64> {
    check_unit_interval("t", t)?;
    let main = PolynomialR::new([2349.0, 81.0, -522.0, -18.0, 29.0, 1.0]).eval(t);
    let block = PolynomialR::new([-81.0, -162.0, 0.0, 162.0, 81.0]).eval(t);
    Ok(main + lambda * block)
}

/// Factor `g` with `phi1(s, λ₁(s)) = g(s) ψ₁(s)`, namely `2(s² − 9)/(3 − 5s)`.
pub fn phi1_factor(s: f64) -> Result<f64> {
    if (s - 0.6).abs() < POLE_GUARD {
        return Err(BohrError::Singularity(
            "factor has a pole at s = 3/5".into(),
        ));
    }
    Ok(2.0 * (s * s - 9.0) / (3.0 - 5.0 * s))
}

/// Factor `g` with `phi2(s, λ₂(s)) = g(s) ψ₂(s)`, namely `(9 − s²)/(2(2s − 1))`.
pub fn phi2_factor(s: f64) -> Result<f64> {
    if (s - 0.5).abs() < POLE_GUARD {
        return Err(BohrError::Singularity(
            "factor has a pole at s = 1/2".into(),
        ));
    }
    Ok((9.0 - s * s) / (2.0 * (2.0 * s - 1.0)))
}

/// `total − 1` of the `|f| + tail + p·S` functional for `ψ_a` at the
/// threshold radius: `(1 − a)³ (7(4√5 − 9) + 4(21√5 − 47)a + (72√5 − 161)a²) / ((4√5 − 9)a² + 1)²`.
pub fn big_f(a: f64) -> Result<f64> {
    check_unit_interval("a", a)?;
    let s5 = 5f64.sqrt();
    let quad = 7.0 * (4.0 * s5 - 9.0) + 4.0 * (21.0 * s5 - 47.0) * a + (72.0 * s5 - 161.0) * a * a;
    let den = (4.0 * s5 - 9.0) * a * a + 1.0;
    Ok((1.0 - a).powi(3) * quad / (den * den))
}

/// Upper bound used for small `|a_0|` with the constant-term head:
/// `a + √(1 − a²)/√8 + 16(1 − a²)²/(9 − a²)² + 81λ(1 − a²)⁴/(9 − a²)⁴`.
pub fn case_two_bound(a: f64, lambda: f64) -> Result<f64> {
    check_unit_interval("a", a)?;
    Ok(a + case_two_rest(a, lambda))
}

/// Same bound with the squared Schwarz–Pick head `((1 + 3a)/(3 + a))²`.
pub fn case_two_bound_squared(a: f64, lambda: f64) -> Result<f64> {
    check_unit_interval("a", a)?;
    let head = (1.0 + 3.0 * a) / (3.0 + a);
    Ok(head * head + case_two_rest(a, lambda))
}

fn case_two_rest(a: f64, lambda: f64) -> f64 {
    let u = 1.0 - a * a;
    let v = 9.0 - a * a;
    (u.sqrt() / 8f64.sqrt()) + 16.0 * u * u / (v * v) + 81.0 * lambda * u.powi(4) / v.powi(4)
}

/// True when `f` is strictly increasing on an equispaced grid of `points + 1` nodes.
pub fn increasing_on_grid(
    f: impl Fn(f64) -> Result<f64>,
    lo: f64,
    hi: f64,
    points: usize,
) -> Result<bool> {
    let mut prev = f(lo)?;
    for i in 1..=points {
        let v = f(lo + (hi - lo) * i as f64 / points as f64)?;
        if !(v > prev) {
            return Ok(false);
        }
        prev = v;
    }
    Ok(true)
}

/// Threshold radii of every inequality.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Radii {
    pub classic: f64,
    pub thm_e: f64,
}

impl Radii {
    pub fn new() -> Self {
        Radii {
            classic: 1.0 / 3.0,
            thm_e: 5f64.sqrt() - 2.0,
        }
    }

    /// `1/(3n)`
    pub fn multi(&self, n: usize) -> f64 {
        self.classic / n as f64
    }

    /// `(√5 − 2)/n`
    pub fn multi_e(&self, n: usize) -> f64 {
        self.thm_e / n as f64
    }
}

impl Default for Radii {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Residual {
    pub name: String,
    pub computed: f64,
    pub published: f64,
    pub residual: f64,
    pub tolerance: f64,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConstantsReport {
    pub a_star1: f64,
    pub a_star2: f64,
    pub lambda1: f64,
    pub lambda2: f64,
    pub p: f64,
    pub radii: Radii,
    pub multi_radii: Vec<(usize, f64, f64)>,
    pub residuals: Vec<Residual>,
}

impl ConstantsReport {
    pub fn all_within_tolerance(&self) -> bool {
        self.residuals.iter().all(|r| r.ok)
    }

    pub fn breaches(&self) -> impl Iterator<Item = &Residual> {
        self.residuals.iter().filter(|r| !r.ok)
    }

    /// Re-judges every residual against a single tolerance.
    pub fn with_uniform_tolerance(mut self, tol: f64) -> Self {
        for r in &mut self.residuals {
            r.tolerance = tol;
            r.ok = r.residual <= tol;
        }
        self
    }
}

/// Computes every constant and its residual against the published decimals.
pub fn constants_report() -> Result<ConstantsReport> {
    let a_star1 = solve_unique_root(&psi1(), 0.0, 1.0, 1e-12)?;
    let a_star2 = solve_unique_root(&psi2(), 0.0, 1.0, 1e-12)?;
    let lambda1 = lambda1_of(a_star1)?;
    let lambda2 = lambda2_of(a_star2)?;
    let p = 2.0 * (5f64.sqrt() - 1.0);
    let radii = Radii::new();
    let residual = |name: &str, computed: f64, published: f64, tolerance: f64| {
        let residual = (computed - published).abs();
        Residual {
            name: name.to_string(),
            computed,
            published,
            residual,
            tolerance,
            ok: residual <= tolerance,
        }
    };
    let residuals = vec![
        residual("aStar1", a_star1, PAPER_A_STAR_1, ROOT_RESIDUAL),
        residual("aStar2", a_star2, PAPER_A_STAR_2, ROOT_RESIDUAL),
        residual("lambda1", lambda1, PAPER_LAMBDA_1, LAMBDA_RESIDUAL),
        residual("lambda2", lambda2, PAPER_LAMBDA_2, LAMBDA_RESIDUAL),
        residual("p", p, PAPER_P, P_RESIDUAL),
        residual("thmE", radii.thm_e, PAPER_SQRT5_MINUS_2, ROOT_RESIDUAL),
    ];
    Ok(ConstantsReport {
        a_star1,
        a_star2,
        lambda1,
        lambda2,
        p,
        radii,
        multi_radii: (1..=5)
            .map(|n| (n, radii.multi(n), radii.multi_e(n)))
            .collect(),
        residuals,
    })
}
