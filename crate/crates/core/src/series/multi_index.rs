use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};
use smallvec::SmallVec;

/// Exponent vector `(α_1, …, α_n)` of a monomial `z^α`.
///
/// Ordering is graded lexicographic: lower total degree first, then
/// lexicographic on the exponents. Coefficient maps iterate in this order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(SmallVec<[u16; 8]>);

impl MultiIndex {
    pub fn new(exponents: impl IntoIterator<Item = u16>) -> Self {
        MultiIndex(exponents.into_iter().collect())
    }

    pub fn zero(dim: usize) -> Self {
        MultiIndex(SmallVec::from_elem(0, dim))
    }

    /// `k` times the `axis`-th unit vector.
    pub fn axis(dim: usize, axis: usize, k: u16) -> Self {
        let mut e = Self::zero(dim);
        e.0[axis] = k;
        e
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    /// `|α|`
    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    /// `α! = α_1! ⋯ α_n!` as a float.
    pub fn factorial(&self) -> f64 {
        self.0
            .iter()
            .map(|&e| (1..=e as u64).map(|i| i as f64).product::<f64>())
            .product()
    }

    /// Multinomial coefficient `|α|! / α!`, built as a product of binomials.
    pub fn multinomial(&self) -> f64 {
        let mut partial = 0u64;
        let mut acc = 1.0;
        for &e in &self.0 {
            partial += e as u64;
            acc *= binomial(partial, e as u64);
        }
        acc
    }

    /// `r^α = Π r_i^{α_i}` for nonnegative radii.
    pub fn monomial(&self, r: &[f64]) -> f64 {
        debug_assert_eq!(r.len(), self.dim());
        self.0
            .iter()
            .zip(r)
            .map(|(&e, &ri)| ri.powi(e as i32))
            .product()
    }

    pub(crate) fn add(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All multi-indices of dimension `dim` and degree `k`, in ascending order.
    pub fn all_of_degree(dim: usize, k: usize) -> Vec<MultiIndex> {
        let mut out = Vec::with_capacity(coefficient_count_of_degree(dim, k) as usize);
        if dim == 0 {
            if k == 0 {
                out.push(MultiIndex(SmallVec::new()));
            }
            return out;
        }
        let mut buf: SmallVec<[u16; 8]> = SmallVec::from_elem(0, dim);
        fill(&mut buf, 0, k, &mut out);
        out
    }
}

fn fill(buf: &mut SmallVec<[u16; 8]>, pos: usize, remaining: usize, out: &mut Vec<MultiIndex>) {
    if pos + 1 == buf.len() {
        buf[pos] = remaining as u16;
        out.push(MultiIndex(buf.clone()));
        return;
    }
    for e in 0..=remaining {
        buf[pos] = e as u16;
        fill(buf, pos + 1, remaining - e, out);
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for MultiIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

/// `C(n, k)` in floating point; exact while the value fits in 53 bits.
pub fn binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    // every partial product is an integer; snap rounding while representable
    if acc < 9.0e15 {
        acc.round()
    } else {
        acc
    }
}

fn coefficient_count_of_degree(dim: usize, k: usize) -> u128 {
    if dim == 0 {
        return u128::from(k == 0);
    }
    binomial_u128((k + dim - 1) as u128, (dim - 1) as u128)
}

/// Number of multi-indices of dimension `dim` with degree at most `max_degree`,
/// i.e. `C(max_degree + dim, dim)`.
pub fn coefficient_count(dim: usize, max_degree: usize) -> u128 {
    binomial_u128((max_degree + dim) as u128, dim as u128)
}

fn binomial_u128(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact: acc * (n - i) is divisible by (i + 1)
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_and_factorial() {
        let a = MultiIndex::new([2, 0, 3]);
        assert_eq!(a.degree(), 5);
        assert_eq!(a.factorial(), 12.0);
        assert_eq!(a.multinomial(), 10.0);
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        for dim in 1..=4 {
            for k in 0..=6 {
                let all = MultiIndex::all_of_degree(dim, k);
                assert_eq!(all.len() as u128, coefficient_count_of_degree(dim, k));
                assert!(all.windows(2).all(|w| w[0] < w[1]));
                assert!(all.iter().all(|a| a.degree() == k && a.dim() == dim));
            }
        }
    }

    #[test]
    fn multinomials_sum_to_power_of_dim() {
        for dim in 1..=4usize {
            for k in 0..=8usize {
                let s: f64 = MultiIndex::all_of_degree(dim, k)
                    .iter()
                    .map(MultiIndex::multinomial)
                    .sum();
                assert_eq!(s, (dim as f64).powi(k as i32));
            }
        }
    }

    #[test]
    fn graded_order() {
        assert!(MultiIndex::new([0, 2]) > MultiIndex::new([1, 0]));
        assert!(MultiIndex::new([0, 2]) < MultiIndex::new([1, 1]));
    }

    #[test]
    fn counts() {
        assert_eq!(coefficient_count(3, 6), 84);
        assert_eq!(coefficient_count(1, 10), 11);
        assert_eq!(binomial(10, 3), 120.0);
        assert_eq!(binomial(4, 5), 0.0);
    }
}
