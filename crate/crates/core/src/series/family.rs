use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use super::{coefficient_count, CoefficientSeries, MultiIndex, TailCertificate};
use crate::tolerances::{COEFFICIENT_BUDGET, MAX_TRUNCATION_DEGREE, TAIL_TARGET};
use crate::{BohrError, Result};

/// Closed-form generators for the test and extremal function families.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "camelCase")]
pub enum FamilySpec {
    /// `ψ_a(z) = (a − z)/(1 − az)` on the unit disk.
    MoebiusDisk {
        a: f64,
    },
    /// `f_a(z) = (a − s)/(1 − as)`, `s = z_1 + … + z_n`; bounded by one on the
    /// polydisk of polyradius `1/n`.
    ExtremalPolydiskUnit {
        a: f64,
        n: usize,
    },
    /// `(a − s/n)/(1 − as/n)`; bounded by one on the unit polydisk.
    ExtremalPolydiskScaled {
        a: f64,
        n: usize,
    },
    /// `Π_j (w_j − z)/(1 − w̄_j z)` on the unit disk.
    FiniteBlaschke {
        zeros: Vec<Complex64>,
    },
    ConstantFn {
        c: Complex64,
    },
}

/// A family of the form `ψ_a(scale · (z_1 + … + z_n))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MoebiusShape {
    pub a: f64,
    pub n: usize,
    pub scale: f64,
}

impl MoebiusShape {
    /// Modulus of the `k`-th slice coefficient, `(1 − a²) a^{k−1} scale^k`.
    pub fn slice_modulus(&self, k: usize) -> f64 {
        if k == 0 {
            self.a
        } else {
            (1.0 - self.a * self.a) * self.a.powi(k as i32 - 1) * self.scale.powi(k as i32)
        }
    }
}

impl FamilySpec {
    pub fn moebius(a: f64) -> Result<Self> {
        let f = FamilySpec::MoebiusDisk { a };
        f.validate()?;
        Ok(f)
    }

    pub fn extremal_unit(a: f64, n: usize) -> Result<Self> {
        let f = FamilySpec::ExtremalPolydiskUnit { a, n };
        f.validate()?;
        Ok(f)
    }

    pub fn extremal_scaled(a: f64, n: usize) -> Result<Self> {
        let f = FamilySpec::ExtremalPolydiskScaled { a, n };
        f.validate()?;
        Ok(f)
    }

    pub fn blaschke(zeros: Vec<Complex64>) -> Result<Self> {
        let f = FamilySpec::FiniteBlaschke { zeros };
        f.validate()?;
        Ok(f)
    }

    pub fn constant(c: Complex64) -> Result<Self> {
        let f = FamilySpec::ConstantFn { c };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        let check_a = |a: f64| {
            if a.is_finite() && (0.0..1.0).contains(&a) {
                Ok(())
            } else {
                Err(BohrError::domain(format!(
                    "family parameter a = {a} is outside [0, 1)"
                )))
            }
        };
        let check_n = |n: usize| {
            if n >= 1 {
                Ok(())
            } else {
                Err(BohrError::domain("dimension must be at least 1"))
            }
        };
        match self {
            FamilySpec::MoebiusDisk { a } => check_a(*a),
            FamilySpec::ExtremalPolydiskUnit { a, n }
            | FamilySpec::ExtremalPolydiskScaled { a, n } => {
                check_a(*a)?;
                check_n(*n)
            }
            FamilySpec::FiniteBlaschke { zeros } => {
                if zeros.is_empty() {
                    return Err(BohrError::domain(
                        "a Blaschke product needs at least one zero",
                    ));
                }
                match zeros.iter().find(|w| !(w.norm() < 1.0)) {
                    Some(w) => Err(BohrError::domain(format!(
                        "Blaschke zero {w} has modulus {} >= 1",
                        w.norm()
                    ))),
                    None => Ok(()),
                }
            }
            FamilySpec::ConstantFn { c } => {
                if c.norm() <= 1.0 {
                    Ok(())
                } else {
                    Err(BohrError::domain(format!(
                        "constant {c} has modulus above 1"
                    )))
                }
            }
        }
    }

    /// Number of variables.
    pub fn dim(&self) -> usize {
        match self {
            FamilySpec::ExtremalPolydiskUnit { n, .. }
            | FamilySpec::ExtremalPolydiskScaled { n, .. } => *n,
            _ => 1,
        }
    }

    /// Polyradius (per coordinate) of the natural domain on which `|f| ≤ 1`.
    pub fn domain_radius_cap(&self) -> f64 {
        match self {
            FamilySpec::ExtremalPolydiskUnit { n, .. } => 1.0 / *n as f64,
            _ => 1.0,
        }
    }

    /// True when the family is bounded by one on the whole unit polydisk.
    pub fn bounded_on_unit_polydisk(&self) -> bool {
        self.domain_radius_cap() >= 1.0
    }

    pub fn moebius_shape(&self) -> Option<MoebiusShape> {
        match *self {
            FamilySpec::MoebiusDisk { a } => Some(MoebiusShape {
                a,
                n: 1,
                scale: 1.0,
            }),
            FamilySpec::ExtremalPolydiskUnit { a, n } => Some(MoebiusShape { a, n, scale: 1.0 }),
            FamilySpec::ExtremalPolydiskScaled { a, n } => Some(MoebiusShape {
                a,
                n,
                scale: 1.0 / n as f64,
            }),
            _ => None,
        }
    }

    /// `f(0)`
    pub fn constant_term(&self) -> Complex64 {
        match self {
            FamilySpec::MoebiusDisk { a }
            | FamilySpec::ExtremalPolydiskUnit { a, .. }
            | FamilySpec::ExtremalPolydiskScaled { a, .. } => Complex64::new(*a, 0.0),
            FamilySpec::FiniteBlaschke { zeros } => zeros.iter().product(),
            FamilySpec::ConstantFn { c } => *c,
        }
    }

    /// Exact value of the function at `z`.
    pub fn value_at(&self, z: &[Complex64]) -> Result<Complex64> {
        if z.len() != self.dim() {
            return Err(BohrError::domain(format!(
                "point has {} coordinates, family has dimension {}",
                z.len(),
                self.dim()
            )));
        }
        Ok(match self {
            FamilySpec::ConstantFn { c } => *c,
            FamilySpec::FiniteBlaschke { zeros } => zeros
                .iter()
                .map(|w| (w - z[0]) / (1.0 - w.conj() * z[0]))
                .product(),
            _ => {
                let m = self.moebius_shape().expect("Möbius-type family");
                let s: Complex64 = z.iter().sum::<Complex64>() * m.scale;
                (m.a - s) / (1.0 - m.a * s)
            }
        })
    }

    /// Upper bounds on everything beyond degree `k` at polyradius `r`.
    pub fn tail_bounds(&self, k: usize, r: &[f64]) -> Result<TailCertificate> {
        if r.len() != self.dim() {
            return Err(BohrError::domain(format!(
                "radius has {} coordinates, family has dimension {}",
                r.len(),
                self.dim()
            )));
        }
        let (majorant, square_sum, area) = match self {
            FamilySpec::ConstantFn { .. } => (0.0, 0.0, 0.0),
            FamilySpec::FiniteBlaschke { zeros } => blaschke_tails(zeros, k, r[0])?,
            _ => {
                let m = self.moebius_shape().expect("Möbius-type family");
                moebius_tails(m, k, r)?
            }
        };
        Ok(TailCertificate {
            radius: r.to_vec(),
            majorant,
            square_sum,
            area,
        })
    }

    /// Smallest truncation degree whose tail certificate at `r` is below the
    /// target, capped at the maximum truncation degree.
    pub fn truncation_degree(&self, r: &[f64]) -> Result<usize> {
        for k in 0..MAX_TRUNCATION_DEGREE {
            if self.tail_bounds(k, r)?.largest() < TAIL_TARGET {
                return Ok(k);
            }
        }
        Ok(MAX_TRUNCATION_DEGREE)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::MoebiusDisk { a } => write!(f, "moebius:{a}"),
            FamilySpec::ExtremalPolydiskUnit { a, n } => write!(f, "unit:{a},{n}"),
            FamilySpec::ExtremalPolydiskScaled { a, n } => write!(f, "scaled:{a},{n}"),
            FamilySpec::FiniteBlaschke { zeros } => {
                write!(f, "blaschke:")?;
                for (i, w) in zeros.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "{}{:+}i", w.re, w.im)?;
                }
                Ok(())
            }
            FamilySpec::ConstantFn { c } => write!(f, "const:{},{}", c.re, c.im),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = BohrError;

    /// Parses `moebius:a`, `unit:a,n`, `scaled:a,n`, `const:re[,im]` and
    /// `blaschke:w1;w2;…` where each zero is `x`, `x+yi` or `x-yi`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = s.split_once(':').unwrap_or((s, ""));
        let bad = || BohrError::Parse(format!("cannot parse family `{s}`"));
        let num = |t: &str| t.trim().parse::<f64>().map_err(|_| bad());
        let fields: Vec<&str> = params.split(',').collect();
        let family = match name.trim().to_ascii_lowercase().as_str() {
            "moebius" | "mobius" | "psi" => FamilySpec::MoebiusDisk { a: num(params)? },
            "unit" | "extremal" => {
                let [a, n] = fields.as_slice() else {
                    return Err(bad());
                };
                FamilySpec::ExtremalPolydiskUnit {
                    a: num(a)?,
                    n: n.trim().parse().map_err(|_| bad())?,
                }
            }
            "scaled" => {
                let [a, n] = fields.as_slice() else {
                    return Err(bad());
                };
                FamilySpec::ExtremalPolydiskScaled {
                    a: num(a)?,
                    n: n.trim().parse().map_err(|_| bad())?,
                }
            }
            "const" | "constant" => match fields.as_slice() {
                [re] => FamilySpec::ConstantFn {
                    c: Complex64::new(num(re)?, 0.0),
                },
                [re, im] => FamilySpec::ConstantFn {
                    c: Complex64::new(num(re)?, num(im)?),
                },
                _ => return Err(bad()),
            },
            "blaschke" => FamilySpec::FiniteBlaschke {
                zeros: params
                    .split(';')
                    .map(|z| parse_complex(z).ok_or_else(bad))
                    .collect::<Result<_>>()?,
            },
            _ => return Err(bad()),
        };
        family.validate()?;
        Ok(family)
    }
}

fn parse_complex(s: &str) -> Option<Complex64> {
    let s = s.trim();
    let Some(body) = s.strip_suffix('i') else {
        return s.parse().ok().map(|re| Complex64::new(re, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&p| (bytes[p] == b'+' || bytes[p] == b'-') && !matches!(bytes[p - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(p) => (body[..p].parse().ok()?, &body[p..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        t => t.parse().ok()?,
    };
    Some(Complex64::new(re, im))
}

fn check_budget(dim: usize, k: usize, budget: u128) -> Result<()> {
    let needed = coefficient_count(dim, k);
    if needed > budget {
        Err(BohrError::Budget { needed, budget })
    } else {
        Ok(())
    }
}

/// All coefficients of degree `≤ k` from the closed forms of the family.
///
/// For the Möbius-type families `a_α = −(1 − a²) a^{|α|−1} scale^{|α|} |α|!/α!`;
/// a finite Blaschke product is the Cauchy product of its factors'
/// geometric expansions.
pub fn expand(family: &FamilySpec, k: usize) -> Result<CoefficientSeries> {
    family.validate()?;
    check_budget(family.dim(), k, COEFFICIENT_BUDGET)?;
    let series = match family {
        FamilySpec::ConstantFn { c } => {
            let mut slices = vec![Vec::new(); k + 1];
            slices[0].push((MultiIndex::zero(1), *c));
            CoefficientSeries::from_slices(1, slices)
        }
        FamilySpec::FiniteBlaschke { zeros } => {
            let coeffs = blaschke_coefficients(zeros, k);
            let slices = coeffs
                .into_iter()
                .enumerate()
                .map(|(d, c)| vec![(MultiIndex::new([d as u16]), c)])
                .collect();
            CoefficientSeries::from_slices(1, slices)
        }
        _ => {
            let m = family.moebius_shape().expect("Möbius-type family");
            let slices = (0..=k)
                .map(|d| {
                    let lead = if d == 0 { m.a } else { -m.slice_modulus(d) };
                    MultiIndex::all_of_degree(m.n, d)
                        .into_iter()
                        .map(|alpha| {
                            let c = lead * alpha.multinomial();
                            (alpha, Complex64::new(c, 0.0))
                        })
                        .collect()
                })
                .collect();
            CoefficientSeries::from_slices(m.n, slices)
        }
    };
    Ok(series)
}

/// Expands with the default truncation policy for evaluation at polyradius
/// `r` and attaches the tail certificate.
pub fn expand_certified(family: &FamilySpec, r: &[f64]) -> Result<CoefficientSeries> {
    family.validate()?;
    let k = family.truncation_degree(r)?;
    let cert = family.tail_bounds(k, r)?;
    Ok(expand(family, k)?.with_tail_certificate(cert))
}

fn blaschke_coefficients(zeros: &[Complex64], k: usize) -> Vec<Complex64> {
    let mut acc = vec![Complex64::default(); k + 1];
    acc[0] = Complex64::new(1.0, 0.0);
    for w in zeros {
        let factor = moebius_factor_coefficients(*w, k);
        acc = truncated_product(&acc, &factor);
    }
    acc
}

/// `(w − z)/(1 − w̄ z) = w − (1 − |w|²) Σ_{k≥1} w̄^{k−1} z^k`
fn moebius_factor_coefficients(w: Complex64, k: usize) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(k + 1);
    out.push(w);
    let lead = 1.0 - w.norm_sqr();
    let mut p = Complex64::new(1.0, 0.0);
    for _ in 1..=k {
        out.push(-lead * p);
        p *= w.conj();
    }
    out
}

fn truncated_product<T>(a: &[T], b: &[T]) -> Vec<T>
where
    T: Copy + Default + std::ops::Mul<Output = T> + std::ops::AddAssign,
{
    let k = a.len().min(b.len());
    let mut out = vec![T::default(); k];
    for (i, &x) in a.iter().enumerate().take(k) {
        for (j, &y) in b.iter().enumerate().take(k - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn moebius_tails(m: MoebiusShape, k: usize, r: &[f64]) -> Result<(f64, f64, f64)> {
    if r.iter().any(|&x| !(x >= 0.0)) {
        return Err(BohrError::domain("radii must be nonnegative"));
    }
    let a = m.a;
    // Σ_{|α|=d} |a_α| r^α = (1 − a²) a^{d−1} ρ^d exactly (multinomial theorem)
    let rho = m.scale * r.iter().sum::<f64>();
    if a * rho >= 1.0 {
        return Err(BohrError::domain(format!(
            "majorant series diverges at ρ = {rho} for a = {a}"
        )));
    }
    let one_minus = 1.0 - a * a;
    let kk = k as i32;
    let majorant = one_minus * a.powi(kk) * rho.powi(kk + 1) / (1.0 - a * rho);
    // Σ (|α|!/α!)² r^{2α} ≤ ρ^{2|α|} bounds the square sums by a geometric series in x
    let x = a * a * rho * rho;
    let lead = one_minus * one_minus * rho * rho;
    let xk = x.powi(kk);
    let square_sum = lead * xk / (1.0 - x);
    let area = lead * xk * ((k + 1) as f64 - k as f64 * x) / ((1.0 - x) * (1.0 - x));
    Ok((majorant, square_sum, area))
}

/// Tails from the coefficientwise majorant `Π_j (|w_j| + (1 − |w_j|²) x/(1 − |w_j| x))`.
fn blaschke_tails(zeros: &[Complex64], k: usize, rho: f64) -> Result<(f64, f64, f64)> {
    let moduli: Vec<f64> = zeros.iter().map(|w| w.norm()).collect();
    if !(rho >= 0.0) || moduli.iter().any(|&m| m * rho >= 1.0) {
        return Err(BohrError::domain(format!(
            "Blaschke majorant diverges at radius {rho}"
        )));
    }
    // majorant coefficients m_d, all nonnegative
    let mut coeffs = vec![0.0; k + 1];
    coeffs[0] = 1.0;
    for &q in &moduli {
        let mut factor = vec![q];
        let mut p = 1.0;
        for _ in 1..=k {
            factor.push((1.0 - q * q) * p);
            p *= q;
        }
        coeffs = truncated_product(&coeffs, &factor);
    }
    let value = |x: f64| {
        moduli
            .iter()
            .map(|&q| q + (1.0 - q * q) * x / (1.0 - q * x))
            .product::<f64>()
    };
    let derivative = |x: f64| {
        (0..moduli.len())
            .map(|j| {
                let q = moduli[j];
                let dj = (1.0 - q * q) / ((1.0 - q * x) * (1.0 - q * x));
                let rest: f64 = moduli
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j)
                    .map(|(_, &p)| p + (1.0 - p * p) * x / (1.0 - p * x))
                    .product();
                dj * rest
            })
            .sum::<f64>()
    };
    let partial = |x: f64, weight: &dyn Fn(usize) -> f64| {
        coeffs
            .iter()
            .enumerate()
            .map(|(d, &c)| weight(d) * c * x.powi(d as i32))
            .sum::<f64>()
    };
    // the subtraction loses absolute accuracy of a few ulps of the full sum
    let guard = |total: f64| 8.0 * f64::EPSILON * total.abs() * (k as f64 + 1.0);
    let full = value(rho);
    let majorant = (full - partial(rho, &|_| 1.0)).max(0.0) + guard(full);
    // |b_d| ≤ 1 so |b_d|² ≤ |b_d| ≤ m_d
    let x = rho * rho;
    let full_sq = value(x);
    let square_sum = (full_sq - partial(x, &|_| 1.0)).max(0.0) + guard(full_sq);
    let full_area = x * derivative(x);
    let area = (full_area - partial(x, &|d| d as f64)).max(0.0) + guard(full_area);
    Ok((majorant, square_sum, area))
}

/// Coefficients of the univariate series in `s = z_1 + … + z_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct SliceCoefficients {
    pub coeffs: Vec<Complex64>,
    /// Present for the Möbius-type families, whose slice series has the
    /// generator `b_k = −(1 − a²) a^{k−1} scale^k`.
    pub shape: Option<MoebiusShape>,
}

pub fn slice_coefficients(family: &FamilySpec, k: usize) -> Result<SliceCoefficients> {
    family.validate()?;
    match family {
        FamilySpec::ConstantFn { c } => {
            let mut coeffs = vec![Complex64::default(); k + 1];
            coeffs[0] = *c;
            Ok(SliceCoefficients {
                coeffs,
                shape: None,
            })
        }
        FamilySpec::FiniteBlaschke { zeros } => Ok(SliceCoefficients {
            coeffs: blaschke_coefficients(zeros, k),
            shape: None,
        }),
        _ => {
            let m = family.moebius_shape().expect("Möbius-type family");
            let coeffs = (0..=k)
                .map(|d| {
                    let v = if d == 0 { m.a } else { -m.slice_modulus(d) };
                    Complex64::new(v, 0.0)
                })
                .collect();
            Ok(SliceCoefficients {
                coeffs,
                shape: Some(m),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn moebius_half_expansion() {
        let s = expand(&FamilySpec::moebius(0.5).unwrap(), 3).unwrap();
        let got: Vec<f64> = s.iter().map(|(_, c)| c.re).collect();
        assert_eq!(got, vec![0.5, -0.75, -0.375, -0.1875]);
    }

    #[test]
    fn constant_expansion() {
        let s = expand(&FamilySpec::constant(re(0.3)).unwrap(), 5).unwrap();
        assert_eq!(s.constant_term(), re(0.3));
        for d in 1..=5 {
            assert_eq!(s.coefficient(&MultiIndex::new([d])), re(0.0));
        }
    }

    #[test]
    fn unit_mixed_coefficient() {
        for a in [0.0, 0.3, 0.6, 0.9] {
            let s = expand(&FamilySpec::extremal_unit(a, 2).unwrap(), 2).unwrap();
            let want = -(1.0 - a * a) * a * 2.0;
            assert!((s.coefficient(&MultiIndex::new([1, 1])).re - want).abs() < 1e-15);
        }
    }

    #[test]
    fn domain_caps() {
        assert_eq!(
            FamilySpec::extremal_unit(0.2, 4)
                .unwrap()
                .domain_radius_cap(),
            0.25
        );
        assert_eq!(
            FamilySpec::extremal_scaled(0.2, 4)
                .unwrap()
                .domain_radius_cap(),
            1.0
        );
        assert_eq!(FamilySpec::moebius(0.2).unwrap().domain_radius_cap(), 1.0);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(FamilySpec::moebius(1.0).is_err());
        assert!(FamilySpec::moebius(-0.1).is_err());
        assert!(FamilySpec::extremal_unit(0.5, 0).is_err());
        assert!(FamilySpec::blaschke(vec![Complex64::new(0.6, 0.8)]).is_err());
        assert!(FamilySpec::blaschke(vec![]).is_err());
        assert!(FamilySpec::constant(re(1.5)).is_err());
        assert!(expand(&FamilySpec::MoebiusDisk { a: 1.2 }, 3).is_err());
    }

    #[test]
    fn budget_is_distinct_from_domain_errors() {
        let e = expand(&FamilySpec::extremal_unit(0.5, 6).unwrap(), 150).unwrap_err();
        assert!(matches!(e, BohrError::Budget { .. }));
    }

    #[test]
    fn single_zero_blaschke_is_moebius() {
        let b = expand(&FamilySpec::blaschke(vec![re(0.4)]).unwrap(), 8).unwrap();
        let m = expand(&FamilySpec::moebius(0.4).unwrap(), 8).unwrap();
        for ((_, x), (_, y)) in b.iter().zip(m.iter()) {
            assert!((x - y).norm() < 1e-15);
        }
    }

    #[test]
    fn slice_coefficients_match_generators() {
        let s = slice_coefficients(&FamilySpec::extremal_scaled(0.5, 2).unwrap(), 3).unwrap();
        assert!((s.coeffs[1].re + 0.375).abs() < 1e-15);
        let z = slice_coefficients(&FamilySpec::extremal_unit(0.0, 3).unwrap(), 4).unwrap();
        assert_eq!(z.coeffs[1].re, -1.0);
        assert!(z.coeffs[2..].iter().all(|c| c.norm() == 0.0));
        let a = 0.7;
        let m = slice_coefficients(&FamilySpec::moebius(a).unwrap(), 6).unwrap();
        for k in 1..=6 {
            assert!((m.coeffs[k].re + (1.0 - a * a) * a.powi(k as i32 - 1)).abs() < 1e-15);
        }
    }

    #[test]
    fn moebius_tail_is_exact_geometric_remainder() {
        let f = FamilySpec::moebius(0.6).unwrap();
        let r = [0.4];
        let full = 0.64 * 0.4 / (1.0 - 0.24);
        for k in 0..12 {
            let s = expand(&f, k).unwrap();
            let head: f64 = (1..=k).map(|d| s.homogeneous_abs_sum(d, &r)).sum();
            let t = f.tail_bounds(k, &r).unwrap();
            assert!((head + t.majorant - full).abs() < 1e-15);
        }
    }

    #[test]
    fn blaschke_tails_dominate_true_tails() {
        let f = FamilySpec::blaschke(vec![Complex64::new(0.3, 0.4), re(-0.5), re(0.2)]).unwrap();
        let rho = 0.6;
        let long = expand(&f, 150).unwrap();
        for k in [0, 3, 10, 25] {
            let t = f.tail_bounds(k, &[rho]).unwrap();
            let true_maj: f64 = (k + 1..=150)
                .map(|d| long.homogeneous_abs_sum(d, &[rho]))
                .sum();
            let true_sq: f64 = (k + 1..=150)
                .map(|d| long.homogeneous_sq_sum(d, &[rho]))
                .sum();
            let true_area: f64 = (k + 1..=150)
                .map(|d| d as f64 * long.homogeneous_sq_sum(d, &[rho]))
                .sum();
            assert!(true_maj <= t.majorant, "k={k}");
            assert!(true_sq <= t.square_sum, "k={k}");
            assert!(true_area <= t.area, "k={k}");
        }
    }

    #[test]
    fn truncation_policy_reaches_target() {
        let f = FamilySpec::extremal_unit(0.99, 5).unwrap();
        let r = vec![1.0 / 15.0; 5];
        let s = expand_certified(&f, &r).unwrap();
        assert!(s.tail_certificate().unwrap().largest() < TAIL_TARGET);
        assert!(s.max_degree() < 40);
    }

    #[test]
    fn parse_and_display() {
        let f: FamilySpec = "scaled:0.6,2".parse().unwrap();
        assert_eq!(f, FamilySpec::ExtremalPolydiskScaled { a: 0.6, n: 2 });
        let b: FamilySpec = "blaschke:0.5;0.2+0.3i;-0.1-0.2i".parse().unwrap();
        let FamilySpec::FiniteBlaschke { zeros } = &b else {
            panic!()
        };
        assert_eq!(zeros[1], Complex64::new(0.2, 0.3));
        assert_eq!(zeros[2], Complex64::new(-0.1, -0.2));
        assert_eq!(b.to_string().parse::<FamilySpec>().unwrap(), b);
        assert!("moebius:1.0".parse::<FamilySpec>().is_err());
        assert!("nope:1".parse::<FamilySpec>().is_err());
        assert_eq!(
            "const:0.3".parse::<FamilySpec>().unwrap(),
            FamilySpec::ConstantFn { c: re(0.3) }
        );
    }
}
