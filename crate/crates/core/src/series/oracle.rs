//! Brute-force expansion by formal power-series division.
//!
//! Every family is a quotient `N/D` of polynomials with `D(0) ≠ 0`; the
//! quotient is recovered degree by degree from `D·f = N`. Nothing here reads
//! the closed-form coefficient generators used by [`super::expand`].

use std::collections::BTreeMap;

use num_complex::Complex64;

use super::{coefficient_count, CoefficientSeries, FamilySpec, MultiIndex};
use crate::tolerances::COEFFICIENT_BUDGET;
use crate::{BohrError, Result};

type Slice = BTreeMap<MultiIndex, Complex64>;

/// Truncated multivariate series held as one sparse map per degree.
struct Formal {
    dim: usize,
    slices: Vec<Slice>,
}

impl Formal {
    fn zero(dim: usize, k: usize) -> Self {
        Formal {
            dim,
            slices: vec![Slice::new(); k + 1],
        }
    }

    fn constant(dim: usize, k: usize, c: Complex64) -> Self {
        let mut f = Self::zero(dim, k);
        f.slices[0].insert(MultiIndex::zero(dim), c);
        f
    }

    /// `c0 + c1 (z_1 + … + z_n)`
    fn linear(dim: usize, k: usize, c0: Complex64, c1: Complex64) -> Self {
        let mut f = Self::constant(dim, k, c0);
        if k >= 1 {
            for axis in 0..dim {
                f.slices[1].insert(MultiIndex::axis(dim, axis, 1), c1);
            }
        }
        f
    }

    fn max_degree(&self) -> usize {
        self.slices.len() - 1
    }

    fn mul(&self, other: &Formal) -> Formal {
        let k = self.max_degree().min(other.max_degree());
        let mut out = Formal::zero(self.dim, k);
        for i in 0..=k {
            for j in 0..=(k - i) {
                accumulate_product(
                    &mut out.slices[i + j],
                    &self.slices[i],
                    &other.slices[j],
                    1.0,
                );
            }
        }
        out
    }

    /// Solves `den · q = self` for `q` up to the common truncation degree.
    fn div(&self, den: &Formal) -> Result<Formal> {
        let d0 = den.slices[0]
            .get(&MultiIndex::zero(self.dim))
            .copied()
            .unwrap_or_default();
        if d0.norm() == 0.0 {
            return Err(BohrError::domain("denominator vanishes at the origin"));
        }
        let k = self.max_degree().min(den.max_degree());
        let mut q = Formal::zero(self.dim, k);
        for deg in 0..=k {
            let mut rhs = self.slices[deg].clone();
            for j in 1..=deg {
                accumulate_product(&mut rhs, &den.slices[j], &q.slices[deg - j], -1.0);
            }
            for c in rhs.values_mut() {
                *c /= d0;
            }
            q.slices[deg] = rhs;
        }
        Ok(q)
    }

    fn into_series(self) -> CoefficientSeries {
        let dim = self.dim;
        let slices = self
            .slices
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        CoefficientSeries::from_slices(dim, slices)
    }
}

fn accumulate_product(out: &mut Slice, a: &Slice, b: &Slice, sign: f64) {
    for (ea, ca) in a {
        for (eb, cb) in b {
            *out.entry(ea.add(eb)).or_default() += ca * cb * sign;
        }
    }
}

/// Oracle expansion with the default coefficient budget.
pub fn oracle_expand(family: &FamilySpec, k: usize) -> Result<CoefficientSeries> {
    oracle_expand_with_budget(family, k, COEFFICIENT_BUDGET)
}

pub fn oracle_expand_with_budget(
    family: &FamilySpec,
    k: usize,
    budget: u128,
) -> Result<CoefficientSeries> {
    family.validate()?;
    let dim = family.dim();
    let needed = coefficient_count(dim, k);
    if needed > budget {
        return Err(BohrError::Budget { needed, budget });
    }
    let one = Complex64::new(1.0, 0.0);
    let (num, den) = match family {
        FamilySpec::ConstantFn { c } => (Formal::constant(1, k, *c), Formal::constant(1, k, one)),
        FamilySpec::FiniteBlaschke { zeros } => {
            let mut num = Formal::constant(1, k, one);
            let mut den = Formal::constant(1, k, one);
            for w in zeros {
                num = num.mul(&Formal::linear(1, k, *w, -one));
                den = den.mul(&Formal::linear(1, k, one, -w.conj()));
            }
            (num, den)
        }
        FamilySpec::MoebiusDisk { a } => (
            Formal::linear(1, k, Complex64::new(*a, 0.0), -one),
            Formal::linear(1, k, one, Complex64::new(-a, 0.0)),
        ),
        FamilySpec::ExtremalPolydiskUnit { a, n } | FamilySpec::ExtremalPolydiskScaled { a, n } => {
            let scale = if matches!(family, FamilySpec::ExtremalPolydiskScaled { .. }) {
                1.0 / *n as f64
            } else {
                1.0
            };
            (
                Formal::linear(*n, k, Complex64::new(*a, 0.0), Complex64::new(-scale, 0.0)),
                Formal::linear(*n, k, one, Complex64::new(-a * scale, 0.0)),
            )
        }
    };
    Ok(num.div(&den)?.into_series())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::expand;

    #[test]
    fn zero_constant() {
        let s = oracle_expand(&FamilySpec::constant(Complex64::new(0.0, 0.0)).unwrap(), 7).unwrap();
        assert!(s.iter().all(|(_, c)| c.norm() == 0.0));
    }

    #[test]
    fn moebius_matches_closed_form() {
        let f = FamilySpec::moebius(0.5).unwrap();
        let o = oracle_expand(&f, 3).unwrap();
        let e = expand(&f, 3).unwrap();
        for (x, y) in o.iter().zip(e.iter()) {
            assert_eq!(x.0, y.0);
            assert!((x.1 - y.1).norm() < 1e-15);
        }
    }

    #[test]
    fn unit_three_variables() {
        let f = FamilySpec::extremal_unit(0.6, 3).unwrap();
        let o = oracle_expand(&f, 6).unwrap();
        let e = expand(&f, 6).unwrap();
        assert_eq!(o.len(), 84);
        assert_eq!(e.len(), 84);
        for (alpha, c) in e.iter() {
            assert!((o.coefficient(alpha) - c).norm() < 1e-12, "{alpha}");
        }
    }

    #[test]
    fn budget_exhaustion() {
        let f = FamilySpec::extremal_unit(0.6, 3).unwrap();
        match oracle_expand_with_budget(&f, 10, 100) {
            Err(BohrError::Budget { needed, budget }) => {
                assert_eq!(needed, 286);
                assert_eq!(budget, 100);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
