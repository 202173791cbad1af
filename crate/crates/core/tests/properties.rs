use bohr_core::constants::constants_report;
use bohr_core::functionals::{
    area_term, evaluate, majorant_of, schwarz_pick, AreaInterpretation, Head, Preset, RadiusSpec,
};
use bohr_core::series::{expand, expand_certified, oracle_expand, torus_bound_check, FamilySpec};
use bohr_core::verify::{lemma1c_check, FamilyTemplate};
use bohr_core::Complex64;
use proptest::prelude::*;

fn family() -> impl Strategy<Value = FamilySpec> {
    let a = 0.0..0.99f64;
    let zero =
        (0.0..0.95f64, 0.0..std::f64::consts::TAU).prop_map(|(m, t)| Complex64::from_polar(m, t));
    prop_oneof![
        a.clone().prop_map(|a| FamilySpec::moebius(a).unwrap()),
        (a.clone(), 1..=3usize).prop_map(|(a, n)| FamilySpec::extremal_unit(a, n).unwrap()),
        (a, 1..=3usize).prop_map(|(a, n)| FamilySpec::extremal_scaled(a, n).unwrap()),
        prop::collection::vec(zero.clone(), 1..=3).prop_map(|z| FamilySpec::blaschke(z).unwrap()),
        zero.prop_map(|c| FamilySpec::constant(c).unwrap()),
    ]
}

/// Families parameterized by `a` that the sweeps use.
fn moebius_type() -> impl Strategy<Value = FamilySpec> {
    prop_oneof![
        (0.0..0.999f64).prop_map(|a| FamilySpec::moebius(a).unwrap()),
        (0.0..0.999f64, 2..=4usize).prop_map(|(a, n)| FamilySpec::extremal_unit(a, n).unwrap()),
        (0.0..0.999f64, 2..=4usize).prop_map(|(a, n)| FamilySpec::extremal_scaled(a, n).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn closed_forms_match_the_oracle(f in family(), k in 0usize..=10) {
        let e = expand(&f, k).unwrap();
        let o = oracle_expand(&f, k).unwrap();
        prop_assert_eq!(e.len(), o.len());
        for (alpha, c) in e.iter() {
            prop_assert!((o.coefficient(alpha) - c).norm() <= 1e-12, "{} at {}", f, alpha);
        }
    }

    #[test]
    fn slices_hold_only_their_degree(f in family(), k in 0usize..=8) {
        let e = expand(&f, k).unwrap();
        for d in 0..=k {
            prop_assert!(e.slice(d).iter().all(|(alpha, _)| alpha.degree() == d));
        }
    }

    #[test]
    fn multinomial_identity_on_the_diagonal(a in 0.0..0.99f64, n in 1usize..=4, t in 0.0..1.0f64) {
        let f = FamilySpec::extremal_unit(a, n).unwrap();
        let r = t / n as f64;
        let e = expand(&f, 8).unwrap();
        for (k, sum) in e.abs_sums_by_degree(&vec![r; n]).iter().enumerate().skip(1) {
            let expected = (1.0 - a * a) * a.powi(k as i32 - 1) * (n as f64 * r).powi(k as i32);
            prop_assert!((sum - expected).abs() <= 1e-12, "k = {}", k);
        }
    }

    #[test]
    fn majorant_is_monotone_in_each_coordinate(f in family(), u in prop::collection::vec(0.0..0.9f64, 3), i in 0usize..3, bump in 0.0..0.09f64) {
        let n = f.dim();
        let cap = f.domain_radius_cap();
        let r: Vec<f64> = u[..n].iter().map(|x| x * cap).collect();
        let mut s = r.clone();
        s[i % n] += bump * cap;
        let lo = majorant_of(&f, &RadiusSpec::vector(r).unwrap()).unwrap().value;
        let hi = majorant_of(&f, &RadiusSpec::vector(s).unwrap()).unwrap().value;
        prop_assert!(hi >= lo - 1e-12);
    }

    #[test]
    fn preset_totals_grow_with_the_radius(f in moebius_type(), t in 0.0..0.95f64, dt in 0.0..0.04f64) {
        let c = constants_report().unwrap();
        let n = f.dim();
        let cap = f.domain_radius_cap();
        for p in Preset::ALL {
            for interp in [AreaInterpretation::Literal, AreaInterpretation::Slice] {
                let spec = p.spec(&c).with_interpretation(interp);
                let lo = evaluate(&spec, &f, &RadiusSpec::diagonal(n, t * cap).unwrap(), None).unwrap();
                let hi = evaluate(&spec, &f, &RadiusSpec::diagonal(n, (t + dt) * cap).unwrap(), None).unwrap();
                prop_assert!(hi.total >= lo.total - 1e-9, "{} {}", p, interp);
            }
        }
    }

    #[test]
    fn literal_area_never_exceeds_slice(f in moebius_type(), t in 0.0..0.95f64) {
        let n = f.dim();
        let r = RadiusSpec::diagonal(n, t * f.domain_radius_cap()).unwrap();
        let l = area_term(&f, &r, AreaInterpretation::Literal).unwrap().value;
        let s = area_term(&f, &r, AreaInterpretation::Slice).unwrap().value;
        prop_assert!(l <= s + 1e-12);
        if n == 1 {
            prop_assert!((l - s).abs() <= 1e-12);
        }
    }

    #[test]
    fn head_respects_schwarz_pick(f in family(), t in 0.0..0.99f64) {
        prop_assume!(f.bounded_on_unit_polydisk());
        let n = f.dim();
        let c = constants_report().unwrap();
        let r = RadiusSpec::diagonal(n, t).unwrap();
        let spec = Preset::ThmB1.spec(&c);
        prop_assert_eq!(spec.head, Head::AbsF);
        let head = evaluate(&spec, &f, &r, None).unwrap().head_value;
        prop_assert!(head <= schwarz_pick(f.constant_term().norm(), t).unwrap() + 1e-12);
    }

    #[test]
    fn majorant_tail_obeys_the_coefficient_bound(f in family(), t in 0.01..0.5f64) {
        prop_assume!(f.bounded_on_unit_polydisk());
        let n = f.dim() as f64;
        let a0 = f.constant_term().norm();
        // outside the branch preconditions there is nothing to check
        prop_assume!(if a0 >= t { n * a0 * t < 1.0 } else { n * t * t < 1.0 });
        let check = lemma1c_check(&f, t, None).unwrap();
        prop_assert!(check.ok, "{:?}", check);
    }
}

#[test]
fn sweep_families_are_bounded_at_their_caps() {
    let check = |f: &FamilySpec, radius: f64, samples: usize| {
        let series = expand_certified(f, &vec![radius; f.dim()]).unwrap();
        let rep = torus_bound_check(&series, radius, samples).unwrap();
        assert!(rep.ok(), "{f} at {radius}: {rep:?}");
    };
    // just below the cap; larger a would need more than the maximal
    // truncation degree for a certificate this tight
    for a in [0.0, 0.3, 0.567, 0.8] {
        for n in 1..=2 {
            for t in [FamilyTemplate::Extremal, FamilyTemplate::Scaled] {
                let f = t.instantiate(a, n).unwrap();
                check(&f, f.domain_radius_cap() * (1.0 - 1e-9), 48);
            }
        }
    }
    // three variables at the sweep radii
    for a in [0.0, 0.567, 0.9, 0.99] {
        let f = FamilyTemplate::Extremal.instantiate(a, 3).unwrap();
        for p in [Preset::Thm21, Preset::Thm23] {
            check(&f, p.threshold(3), 16);
        }
    }
    check(&"blaschke:0.5;-0.3+0.4i".parse().unwrap(), 1.0 - 1e-9, 64);
    check(
        &FamilySpec::constant(Complex64::new(0.3, -0.4)).unwrap(),
        1.0,
        8,
    );
}
