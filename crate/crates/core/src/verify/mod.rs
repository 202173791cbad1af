//! Lemma-level bound checks, monotone radius searches, theorem sweeps and
//! sharpness scans.

mod lemmas;
mod radius;
mod scan;
mod sweep;

pub use lemmas::{
    lemma1a_check, lemma1b_check, lemma1c_bound, lemma1c_check, schwarz_pick_chain_check,
    ChainCheck, DegreeTerm, LemmaCheck,
};
pub use radius::{radius_search, RadiusResult};
pub use scan::{sharpness_scan, FamilyTemplate, PerturbationTarget, ScanPoint, ScanReport};
pub use sweep::{theorem_sweep, RadiusChoice, SweepReport, SweepRow};

use crate::{BohrError, Result};

/// `start, start + step, …` up to `stop`, each value rounded to 12 decimals so
/// that grid points such as `0.999` come out exact.
pub fn a_grid(start: f64, stop: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || !(start >= 0.0) || !(start <= stop) || !(stop < 1.0) {
        return Err(BohrError::domain(format!(
            "grid {start}:{stop}:{step} needs step > 0 and 0 ≤ start ≤ stop < 1"
        )));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    Ok((0..count)
        .map(|i| ((start + i as f64 * step) * 1e12).round() / 1e12)
        .filter(|&a| a <= stop)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_endpoints() {
        let g = a_grid(0.0, 0.99, 0.01).unwrap();
        assert_eq!(g.len(), 100);
        assert_eq!(g[99], 0.99);
        assert!(a_grid(0.0, 0.9999, 0.0001).unwrap().contains(&0.999));
        assert!(a_grid(0.0, 1.0, 0.1).is_err());
        assert!(a_grid(0.5, 0.4, 0.1).is_err());
        assert!(a_grid(0.0, 0.5, 0.0).is_err());
    }
}
