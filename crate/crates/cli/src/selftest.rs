//! Golden checks and a seeded randomized sweep, run by `hcmod selftest`.

use hcmod_core::classify::{
    classify_spin, slice_parameter, ClassificationReport, Counts, GenuineFilter, QuantizationParameterA,
};
use hcmod_core::exceptional::{exceptional_verdict, find_entry, CoverLevel, Split};
use hcmod_core::finite_group::RootOfUnity;
use hcmod_core::pin::component_group;
use hcmod_core::roots::{e6_6_datum, CoweightVector, RootSystem, RootType};
use hcmod_core::slices::{a2_outer_verdict, QuantizabilityLevel, SlicePeriod};
use hcmod_core::Partition;
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

type Outcome = Result<String, String>;

fn check(name: &str, f: impl FnOnce() -> Outcome) -> Check {
    let (passed, detail) = match f() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Check {
        name: name.into(),
        passed,
        detail,
    }
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn sl3() -> Outcome {
    let tau: Partition = "2,1".parse().map_err(|e| format!("{e}"))?;
    let r = classify_spin(&tau, &QuantizationParameterA::zero(2), GenuineFilter::All).map_err(|e| e.to_string())?;
    let label = r.component_group.as_ref().map(|g| g.label.clone()).unwrap_or_default();
    ensure(label == "Z4", format!("group {label}"))?;
    ensure(
        r.counts == Some(Counts { local_systems: 4, hc_modules: 3 }),
        format!("counts {:?}", r.counts),
    )?;
    Ok("Z4, 4 local systems, 3 modules".into())
}

fn dichotomy() -> Outcome {
    let taus = Partition::all_codim4_up_to(10);
    for tau in &taus {
        let c = component_group(tau).map_err(|e| e.to_string())?;
        let split = tau.multiplicities().iter().any(|(&l, &m)| l % 2 == 1 && m > 1);
        let want = 1usize << (tau.largest() - usize::from(split));
        ensure(c.order() == want, format!("{tau}: order {} vs {want}", c.order()))?;
    }
    Ok(format!("{} orbits", taus.len()))
}

fn a2_table() -> Outcome {
    use QuantizabilityLevel::*;
    let scalars = [RootOfUnity::ONE, RootOfUnity::I, RootOfUnity::MINUS_ONE, RootOfUnity::MINUS_I];
    let table = [
        (q(0, 1), [StronglyQuantizable, StronglyQuantizable, StronglyQuantizable, NotQuantizable]),
        (q(2, 1), [StronglyQuantizable, Quantizable, StronglyQuantizable, NotQuantizable]),
        (q(1, 2), [StronglyQuantizable, NotQuantizable, StronglyQuantizable, NotQuantizable]),
    ];
    for (p, levels) in table {
        for (s, want) in scalars.iter().zip(levels) {
            let got = a2_outer_verdict(&SlicePeriod::Value(p), *s).map_err(|e| e.to_string())?.level;
            ensure(got == want, format!("p={p}, scalar {s}: {got}"))?;
        }
    }
    Ok("12 grid points".into())
}

fn e6_6() -> Outcome {
    let rs = RootSystem::new(RootType::E6);
    let theta = CoweightVector::from_coroot_coords(&rs, &[1, 0, 0, -2, 0, 1].map(Rational64::from_integer))
        .map_err(|e| e.to_string())?;
    let v = e6_6_datum().evaluate_weights(&theta).map_err(|e| e.to_string())?;
    ensure(v == [0, 1, 0, -2].map(Rational64::from_integer), format!("weights {v:?}"))?;
    let entry = find_entry("E6(6)", 10).map_err(|e| e.to_string())?;
    let verdict = exceptional_verdict(entry, CoverLevel::Ktilde).map_err(|e| e.to_string())?;
    ensure(
        verdict.counts == Some(Counts { local_systems: 4, hc_modules: 3 }),
        format!("counts {:?}", verdict.counts),
    )?;
    Ok("weights (0,1,0,-2), 4 local systems, 3 modules".into())
}

fn e7_7() -> Outcome {
    let entry = find_entry("E7(7)", 50).map_err(|e| e.to_string())?;
    let v = exceptional_verdict(entry, CoverLevel::Ktilde).map_err(|e| e.to_string())?;
    let want = Split { none: 4, k: 4, kbar: 4, ktilde: 4 };
    ensure(v.split == Some(want), format!("split {:?}", v.split))?;
    Ok("16 -> 4/4/4/4".into())
}

fn without_lambda(r: &ClassificationReport) -> ClassificationReport {
    let mut r = r.clone();
    r.input.lambda.clear();
    r
}

fn random_lambda(rng: &mut ChaCha8Rng, columns: usize) -> QuantizationParameterA {
    QuantizationParameterA::new(
        (0..columns)
            .map(|_| q(rng.random_range(-6..=6), rng.random_range(1..=4)))
            .collect(),
    )
}

fn sweep(seed: u64, cases: usize) -> Outcome {
    let taus = Partition::all_codim4_up_to(10);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut decisions = 0;
    for _ in 0..cases {
        let tau = &taus[rng.random_range(0..taus.len())];
        let lam = random_lambda(&mut rng, tau.largest());
        let c = q(rng.random_range(-20..=20), rng.random_range(1..=8));
        let err = |e: hcmod_core::Error| format!("{tau}: {e}");
        let r = classify_spin(tau, &lam, GenuineFilter::All).map_err(err)?;
        let shifted = classify_spin(tau, &lam.shifted(c), GenuineFilter::All).map_err(err)?;
        ensure(without_lambda(&r) == without_lambda(&shifted), format!("{tau}: shift by {c}"))?;
        let group = component_group(tau).map_err(err)?;
        let table = group.group.character_table().map_err(err)?;
        for (&l, &z) in &group.distinguished {
            let period = slice_parameter(tau, &lam, l).map_err(err)?;
            for row in &r.irreducibles {
                let s = table.central_scalar(row.id, z).map_err(err)?;
                let oracle = a2_outer_verdict(&period, s).map_err(err)?.is_quantizable();
                ensure(oracle == !row.failed.contains(&l), format!("{tau} l={l} row {}", row.id))?;
                decisions += 1;
            }
        }
    }
    Ok(format!("{cases} cases, {decisions} decisions"))
}

/// Runs every check; the random sweep draws `cases` orbits and parameters
/// from `seed`.
pub fn run(seed: u64, cases: usize) -> Vec<Check> {
    vec![
        check("sl3 golden case", sl3),
        check("component-group dichotomy", dichotomy),
        check("a2-outer decision table", a2_table),
        check("E6(6) #10", e6_6),
        check("E7(7) #50 split", e7_7),
        check("random sweep", || sweep(seed, cases)),
    ]
}
