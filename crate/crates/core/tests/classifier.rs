use hcmod_core::classify::{
    classify, classify_canonical, classify_spin, slice_parameter, ClassificationReport,
    GenuineFilter, OrbitDatumA, Pair, QuantizationParameterA,
};
use hcmod_core::finite_group::RootOfUnity;
use hcmod_core::pin::{component_group, Model};
use hcmod_core::slices::{a2_outer_verdict, excluded_scalar, QuantizabilityLevel, SlicePeriod};
use hcmod_core::Partition;
use num_rational::Rational64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn valid_up_to(n: usize) -> Vec<Partition> {
    Partition::all_codim4_up_to(n)
}

/// `lambda` with period `p` on the slice at `l` and period 0 elsewhere.
fn lambda_with_period(tau: &Partition, l: usize, p: Rational64) -> QuantizationParameterA {
    let cols = tau.largest();
    QuantizationParameterA::new((1..=cols).map(|c| if c <= l { p } else { q(0, 1) }).collect())
}

fn without_input(r: &ClassificationReport) -> ClassificationReport {
    let mut r = r.clone();
    r.input.lambda.clear();
    r
}

fn random_lambda(rng: &mut ChaCha8Rng, cols: usize) -> QuantizationParameterA {
    QuantizationParameterA::new(
        (0..cols)
            .map(|_| {
                let d = [1i64, 2, 3][rng.random_range(0..3)];
                q(rng.random_range(-6..=6), d)
            })
            .collect(),
    )
}

#[test]
fn diagonal_shifts_do_not_change_reports() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let taus = valid_up_to(10);
    for trial in 0..100 {
        let tau = &taus[trial % taus.len()];
        let lam = random_lambda(&mut rng, tau.largest());
        let c = q(rng.random_range(-50..=50), rng.random_range(1..=12));
        let a = classify_spin(tau, &lam, GenuineFilter::All).unwrap();
        let b = classify_spin(tau, &lam.shifted(c), GenuineFilter::All).unwrap();
        assert_eq!(without_input(&a), without_input(&b), "{tau} shifted by {c}");
    }
}

#[test]
fn canonical_is_lambda_zero() {
    for tau in valid_up_to(10) {
        let zero = QuantizationParameterA::zero(tau.largest());
        assert_eq!(
            classify_canonical(&tau).unwrap(),
            classify_spin(&tau, &zero, GenuineFilter::All).unwrap(),
            "{tau}"
        );
    }
}

#[test]
fn decisions_match_slice_verdicts() {
    let grid = [q(-1, 1), q(-1, 2), q(0, 1), q(1, 2), q(1, 1), q(2, 1)];
    let mut checked = 0;
    for tau in valid_up_to(10) {
        let group = component_group(&tau).unwrap();
        let table = group.group.character_table().unwrap();
        for (&l, &z) in &group.distinguished {
            for &p in &grid {
                let lam = lambda_with_period(&tau, l, p);
                let period = slice_parameter(&tau, &lam, l).unwrap();
                assert_eq!(period, SlicePeriod::Value(p));
                let report = classify_spin(&tau, &lam, GenuineFilter::All).unwrap();
                for row in &report.irreducibles {
                    let s = table.central_scalar(row.id, z).unwrap();
                    assert_eq!(row.scalars[&l.to_string()], s);
                    let ok = a2_outer_verdict(&period, s).unwrap().is_quantizable();
                    assert_eq!(!row.failed.contains(&l), ok, "{tau} l={l} p={p} row {}", row.id);
                    checked += 1;
                }
            }
        }
    }
    assert!(checked >= 200, "{checked}");
}

#[test]
fn odd_shift_swaps_the_excluded_scalar() {
    for tau in valid_up_to(10) {
        let group = component_group(&tau).unwrap();
        for &l in group.distinguished.keys() {
            for p in -2..=2 {
                let before = classify_spin(&tau, &lambda_with_period(&tau, l, q(p, 1)), GenuineFilter::All)
                    .unwrap();
                let after =
                    classify_spin(&tau, &lambda_with_period(&tau, l, q(p + 1, 1)), GenuineFilter::All)
                        .unwrap();
                for (x, y) in before.irreducibles.iter().zip(&after.irreducibles) {
                    let s = x.scalars[&l.to_string()];
                    assert_eq!(x.failed.contains(&l), s == excluded_scalar(p));
                    assert_eq!(y.failed.contains(&l), s == excluded_scalar(p).pow(-1));
                    let others = |r: &Vec<usize>| r.iter().filter(|&&m| m != l).copied().collect::<Vec<_>>();
                    assert_eq!(others(&x.failed), others(&y.failed), "{tau} l={l}");
                }
            }
        }
    }
}

#[test]
fn non_integral_periods_admit_no_more() {
    for tau in valid_up_to(10) {
        let base = classify_canonical(&tau).unwrap().admitted_count();
        let group = component_group(&tau).unwrap();
        for &l in group.distinguished.keys() {
            let lam = lambda_with_period(&tau, l, q(1, 2));
            assert!(classify_spin(&tau, &lam, GenuineFilter::All).unwrap().admitted_count() <= base);
            let marked = QuantizationParameterA::zero(tau.largest()).with_nonintegral([l]);
            assert!(classify_spin(&tau, &marked, GenuineFilter::All).unwrap().admitted_count() <= base);
        }
    }
}

#[test]
fn split_model_admits_everything() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for tau in valid_up_to(10) {
        if component_group(&tau).unwrap().model != Model::Split {
            continue;
        }
        for _ in 0..5 {
            let lam = random_lambda(&mut rng, tau.largest());
            let r = classify_spin(&tau, &lam, GenuineFilter::All).unwrap();
            assert_eq!(r.admitted_count(), r.irreducibles.len(), "{tau}");
            assert!(r
                .irreducibles
                .iter()
                .flat_map(|x| x.scalars.values())
                .all(|s| s.is_real()));
        }
    }
}

#[test]
fn report_shape() {
    for tau in valid_up_to(10) {
        let r = classify_canonical(&tau).unwrap();
        let counts = r.counts.unwrap();
        assert!(counts.hc_modules <= counts.local_systems);
        for row in &r.irreducibles {
            assert_eq!(row.admitted, row.failed.is_empty());
            if !row.admitted {
                assert!(row.rule.starts_with(&format!("excluded at l={}", row.failed[0])));
            }
        }
        let genuine = classify_spin(
            &tau,
            &QuantizationParameterA::zero(tau.largest()),
            GenuineFilter::TrivialOnMinusOne,
        )
        .unwrap();
        assert!(genuine.irreducibles.len() <= r.irreducibles.len());
    }
}

#[test]
fn json_round_trip() {
    for tau in valid_up_to(8) {
        for pair in [Pair::Spin, Pair::Inner(1), Pair::Inner(tau.size().saturating_sub(1).max(1))] {
            let Ok(datum) = OrbitDatumA::new(tau.clone(), pair) else {
                continue;
            };
            let lam = QuantizationParameterA::zero(tau.largest()).with_nonintegral([1]);
            let r = classify(&datum, &lam, GenuineFilter::All).unwrap();
            let text = serde_json::to_string(&r).unwrap();
            let back: ClassificationReport = serde_json::from_str(&text).unwrap();
            assert_eq!(back, r);
        }
    }
}

fn scalar() -> impl Strategy<Value = RootOfUnity> {
    prop::sample::select(vec![
        RootOfUnity::ONE,
        RootOfUnity::I,
        RootOfUnity::MINUS_ONE,
        RootOfUnity::MINUS_I,
    ])
}

proptest! {
    #[test]
    fn strongly_implies_quantizable(n in -20i64..20, d in 1i64..5, s in scalar()) {
        let v = a2_outer_verdict(&SlicePeriod::Value(q(n, d)), s).unwrap();
        prop_assert!(!v.is_strongly_quantizable() || v.is_quantizable());
    }

    #[test]
    fn one_genuine_scalar_excluded_per_integer(p in -50i64..50) {
        let period = SlicePeriod::integer(p);
        let ok: Vec<bool> = [RootOfUnity::I, RootOfUnity::MINUS_I]
            .iter()
            .map(|&s| a2_outer_verdict(&period, s).unwrap().is_quantizable())
            .collect();
        prop_assert_eq!(ok.iter().filter(|&&b| b).count(), 1);
        let next: Vec<bool> = [RootOfUnity::I, RootOfUnity::MINUS_I]
            .iter()
            .map(|&s| a2_outer_verdict(&SlicePeriod::integer(p + 1), s).unwrap().is_quantizable())
            .collect();
        prop_assert_eq!(ok[0], next[1]);
    }

    #[test]
    fn parameter_text_round_trip(v in prop::collection::vec((-30i64..30, 1i64..7), 1..6)) {
        let lam = QuantizationParameterA::new(v.iter().map(|&(n, d)| q(n, d)).collect());
        let text: Vec<String> = lam.entries().iter().map(ToString::to_string).collect();
        prop_assert_eq!(QuantizationParameterA::parse(&text.join(",")).unwrap(), lam);
    }
}

#[test]
fn verdict_levels_at_zero() {
    let v = a2_outer_verdict(&SlicePeriod::integer(0), RootOfUnity::I).unwrap();
    assert_eq!(v.level, QuantizabilityLevel::StronglyQuantizable);
}
