use num_complex::Complex64;
use serde::Serialize;

use super::MultiIndex;
use crate::{BohrError, Result};

/// Upper bounds on the parts of the series beyond the truncation degree,
/// valid at the stated polyradius.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TailCertificate {
    pub radius: Vec<f64>,
    /// `Σ_{|α|>K} |a_α| r^α`
    pub majorant: f64,
    /// `Σ_{|α|>K} |a_α|² r^{2α}`
    pub square_sum: f64,
    /// `Σ_{k>K} k Σ_{|α|=k} |a_α|² r^{2α}`
    pub area: f64,
}

impl TailCertificate {
    pub fn largest(&self) -> f64 {
        self.majorant.max(self.square_sum).max(self.area)
    }

    /// True when the certificate covers `r`, i.e. was issued at a radius
    /// dominating `r` coordinatewise.
    pub fn covers(&self, r: &[f64]) -> bool {
        self.radius.len() == r.len() && self.radius.iter().zip(r).all(|(c, x)| x <= c)
    }
}

/// Truncated power series `Σ_{|α|≤K} a_α z^α` in `n` variables.
///
/// Coefficients are stored sparsely, grouped by total degree, each degree
/// slice sorted in graded-lexicographic order.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSeries {
    dim: usize,
    max_degree: usize,
    slices: Vec<Vec<(MultiIndex, Complex64)>>,
    tail: Option<TailCertificate>,
}

impl CoefficientSeries {
    pub fn zero(dim: usize, max_degree: usize) -> Self {
        CoefficientSeries {
            dim,
            max_degree,
            slices: vec![Vec::new(); max_degree + 1],
            tail: None,
        }
    }

    /// Builds a series from arbitrary `(α, a_α)` pairs. Repeated keys are rejected.
    pub fn from_terms(
        dim: usize,
        max_degree: usize,
        terms: impl IntoIterator<Item = (MultiIndex, Complex64)>,
    ) -> Result<Self> {
        let mut s = Self::zero(dim, max_degree);
        for (alpha, c) in terms {
            if alpha.dim() != dim {
                return Err(BohrError::domain(format!(
                    "multi-index {alpha} has dimension {}, series has {dim}",
                    alpha.dim()
                )));
            }
            let k = alpha.degree();
            if k > max_degree {
                return Err(BohrError::domain(format!(
                    "multi-index {alpha} exceeds truncation degree {max_degree}"
                )));
            }
            s.slices[k].push((alpha, c));
        }
        for slice in &mut s.slices {
            slice.sort_by(|a, b| a.0.cmp(&b.0));
            if let Some(w) = slice.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(BohrError::domain(format!(
                    "repeated multi-index {}",
                    w[0].0
                )));
            }
        }
        Ok(s)
    }

    /// Builds a series from already-sorted degree slices.
    pub(crate) fn from_slices(dim: usize, slices: Vec<Vec<(MultiIndex, Complex64)>>) -> Self {
        debug_assert!(!slices.is_empty());
        CoefficientSeries {
            dim,
            max_degree: slices.len() - 1,
            slices,
            tail: None,
        }
    }

    pub fn with_tail_certificate(mut self, cert: TailCertificate) -> Self {
        self.tail = Some(cert);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Truncation degree `K`.
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn tail_certificate(&self) -> Option<&TailCertificate> {
        self.tail.as_ref()
    }

    pub fn len(&self) -> usize {
        self.slices.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `a_0`
    pub fn constant_term(&self) -> Complex64 {
        self.slices[0].first().map(|(_, c)| *c).unwrap_or_default()
    }

    pub fn coefficient(&self, alpha: &MultiIndex) -> Complex64 {
        let k = alpha.degree();
        if alpha.dim() != self.dim || k > self.max_degree {
            return Complex64::default();
        }
        let slice = &self.slices[k];
        slice
            .binary_search_by(|(a, _)| a.cmp(alpha))
            .map(|i| slice[i].1)
            .unwrap_or_default()
    }

    /// The degree-`k` homogeneous part `P_k`, sorted.
    pub fn slice(&self, k: usize) -> &[(MultiIndex, Complex64)] {
        self.slices.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Iterates over stored coefficients in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = &(MultiIndex, Complex64)> {
        self.slices.iter().flatten()
    }

    /// `Σ_{|α|=k} |a_α| r^α`
    pub fn homogeneous_abs_sum(&self, k: usize, r: &[f64]) -> f64 {
        let pw = PowerTable::new(r, k);
        self.slice(k)
            .iter()
            .map(|(a, c)| c.norm() * pw.monomial(a))
            .sum()
    }

    /// `Σ_{|α|=k} |a_α|² r^{2α}`
    pub fn homogeneous_sq_sum(&self, k: usize, r: &[f64]) -> f64 {
        let pw = PowerTable::new(r, k);
        self.slice(k)
            .iter()
            .map(|(a, c)| {
                let m = pw.monomial(a);
                c.norm_sqr() * m * m
            })
            .sum()
    }

    /// Per-degree `Σ_{|α|=k} |a_α| r^α` for `k = 0..=K`.
    pub fn abs_sums_by_degree(&self, r: &[f64]) -> Vec<f64> {
        let pw = PowerTable::new(r, self.max_degree);
        self.slices
            .iter()
            .map(|s| s.iter().map(|(a, c)| c.norm() * pw.monomial(a)).sum())
            .collect()
    }

    /// Per-degree `Σ_{|α|=k} |a_α|² r^{2α}` for `k = 0..=K`.
    pub fn sq_sums_by_degree(&self, r: &[f64]) -> Vec<f64> {
        let pw = PowerTable::new(r, self.max_degree);
        self.slices
            .iter()
            .map(|s| {
                s.iter()
                    .map(|(a, c)| {
                        let m = pw.monomial(a);
                        c.norm_sqr() * m * m
                    })
                    .sum()
            })
            .collect()
    }

    /// Value of the truncated polynomial at `z`.
    pub fn eval(&self, z: &[Complex64]) -> Complex64 {
        debug_assert_eq!(z.len(), self.dim);
        let powers: Vec<Vec<Complex64>> = z
            .iter()
            .map(|&zi| {
                let mut v = Vec::with_capacity(self.max_degree + 1);
                let mut p = Complex64::new(1.0, 0.0);
                for _ in 0..=self.max_degree {
                    v.push(p);
                    p *= zi;
                }
                v
            })
            .collect();
        self.iter()
            .map(|(a, c)| {
                a.exponents()
                    .iter()
                    .enumerate()
                    .fold(*c, |acc, (i, &e)| acc * powers[i][e as usize])
            })
            .sum()
    }
}

/// Per-axis powers `r_i^e` for `e ≤ max_exp`.
struct PowerTable {
    rows: Vec<Vec<f64>>,
}

impl PowerTable {
    fn new(r: &[f64], max_exp: usize) -> Self {
        let rows = r
            .iter()
            .map(|&ri| {
                let mut v = Vec::with_capacity(max_exp + 1);
                let mut p = 1.0;
                for _ in 0..=max_exp {
                    v.push(p);
                    p *= ri;
                }
                v
            })
            .collect();
        PowerTable { rows }
    }

    fn monomial(&self, alpha: &MultiIndex) -> f64 {
        alpha
            .exponents()
            .iter()
            .zip(&self.rows)
            .map(|(&e, row)| row[e as usize])
            .product()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn lookup_and_sums() {
        let s = CoefficientSeries::from_terms(
            2,
            2,
            [
                (MultiIndex::new([0, 0]), c(0.5)),
                (MultiIndex::new([1, 1]), c(-2.0)),
                (MultiIndex::new([2, 0]), c(1.0)),
                (MultiIndex::new([0, 1]), c(3.0)),
            ],
        )
        .unwrap();
        assert_eq!(s.constant_term(), c(0.5));
        assert_eq!(s.coefficient(&MultiIndex::new([1, 1])), c(-2.0));
        assert_eq!(s.coefficient(&MultiIndex::new([0, 2])), c(0.0));
        let r = [0.5, 0.25];
        assert!((s.homogeneous_abs_sum(2, &r) - (2.0 * 0.125 + 0.25)).abs() < 1e-15);
        assert!((s.homogeneous_sq_sum(1, &r) - 9.0 * 0.0625).abs() < 1e-15);
        let keys: Vec<_> = s.slice(2).iter().map(|(a, _)| a.clone()).collect();
        assert_eq!(keys, vec![MultiIndex::new([1, 1]), MultiIndex::new([2, 0])]);
        let z = [c(0.5), c(0.25)];
        let want = 0.5 + 3.0 * 0.25 - 2.0 * 0.125 + 0.25;
        assert!((s.eval(&z) - c(want)).norm() < 1e-15);
    }

    #[test]
    fn rejects_bad_keys() {
        assert!(CoefficientSeries::from_terms(2, 1, [(MultiIndex::new([1, 1]), c(1.0))]).is_err());
        assert!(CoefficientSeries::from_terms(2, 3, [(MultiIndex::new([1]), c(1.0))]).is_err());
        assert!(CoefficientSeries::from_terms(
            1,
            3,
            [
                (MultiIndex::new([1]), c(1.0)),
                (MultiIndex::new([1]), c(2.0))
            ]
        )
        .is_err());
    }
}
