//! Acceptance checks. Each criterion prints one PASS/FAIL line; the test fails
//! if any criterion fails. All comparisons are exact.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use hcmod_core::ab_diagram::{diagrams_with_a_count, enumerate_ab_diagrams};
use hcmod_core::classify::{
    classify_canonical, classify_spin, slice_parameter, ClassificationReport, Counts, GenuineFilter,
    QuantizationParameterA,
};
use hcmod_core::exceptional::{exceptional_verdict, find_entry, CoverLevel, Split};
use hcmod_core::finite_group::{FiniteGroup, RootOfUnity};
use hcmod_core::pin::{component_group, gamma_spin_group, generator_e, pin_mul, PinElement};
use hcmod_core::roots::{e6_6_datum, CoweightVector, RootSystem, RootType};
use hcmod_core::slices::{a2_outer_verdict, QuantizabilityLevel, SlicePeriod};
use hcmod_core::Partition;
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn ints(v: &[i64]) -> Vec<Rational64> {
    v.iter().map(|&x| Rational64::from_integer(x)).collect()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:?}, limit {limit:?}"))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let tau: Partition = "2,1".parse().unwrap();
    let r = classify_spin(&tau, &QuantizationParameterA::zero(2), GenuineFilter::All).unwrap();
    let label = &r.component_group.as_ref().unwrap().label;
    ensure(label == "Z4", format!("group {label}"))?;
    let counts = r.counts.unwrap();
    ensure(
        counts == Counts { local_systems: 4, hc_modules: 3 },
        format!("counts {counts:?}"),
    )?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("Z4, {} systems, {} admitted", counts.local_systems, counts.hc_modules))
}

fn criterion_2() -> Outcome {
    let e = |i| generator_e(i, 78).unwrap();
    let mut checks = 0;
    for i in 1..=12 {
        let expect = if i % 4 <= 1 { PinElement::ONE } else { PinElement::MINUS_ONE };
        ensure(pin_mul(&e(i), &e(i)) == expect, format!("E_{i}^2"))?;
        checks += 1;
        for j in (1..=12).filter(|&j| j != i) {
            let swapped = pin_mul(&e(j), &e(i));
            let rhs = if i * j % 2 == 1 { swapped.negated() } else { swapped };
            ensure(pin_mul(&e(i), &e(j)) == rhs, format!("E_{i} E_{j}"))?;
            checks += 1;
        }
    }
    Ok(format!("{checks} relations, i != j for commutation"))
}

fn brute_gamma_spin_order(tau1: usize) -> usize {
    let n = tau1 * (tau1 + 1) / 2;
    let mut seen = BTreeSet::new();
    for mask in 0u32..(1 << tau1) {
        let s: Vec<usize> = (1..=tau1).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        if s.iter().sum::<usize>() % 2 == 0 {
            let x = s.iter().fold(PinElement::ONE, |acc, &i| pin_mul(&acc, &generator_e(i, n).unwrap()));
            seen.insert(x);
            seen.insert(x.negated());
        }
    }
    seen.len()
}

fn criterion_3() -> Outcome {
    let taus = Partition::all_codim4_up_to(12);
    let mut brute = BTreeMap::new();
    for tau in &taus {
        let c = component_group(tau).map_err(|e| e.to_string())?;
        let split = tau.multiplicities().iter().any(|(&l, &m)| l % 2 == 1 && m > 1);
        let formula = 1usize << (tau.largest() - usize::from(split));
        let b = *brute.entry(tau.largest()).or_insert_with(|| brute_gamma_spin_order(tau.largest()));
        let by_enumeration = if split { b / 2 } else { b };
        ensure(
            c.order() == formula && c.order() == by_enumeration,
            format!("{tau}: order {} vs {formula} / {by_enumeration}", c.order()),
        )?;
    }
    Ok(format!("{} partitions with n <= 12", taus.len()))
}

fn criterion_4() -> Outcome {
    let mut groups: Vec<(String, FiniteGroup)> = vec![
        ("Q8".into(), FiniteGroup::quaternion()),
        ("D8".into(), FiniteGroup::dihedral(4)),
        ("Z4xZ2".into(), FiniteGroup::abelian(&[4, 2])),
        ("Z8xZ2".into(), FiniteGroup::abelian(&[8, 2])),
        ("Z4xZ4".into(), FiniteGroup::abelian(&[4, 4])),
        ("S3".into(), FiniteGroup::dihedral(3)),
    ];
    for tau1 in 1..=9 {
        groups.push((format!("Gamma_spin({tau1})"), gamma_spin_group(tau1).unwrap()));
    }
    let mut largest = 0;
    for (name, g) in &groups {
        let t = g.character_table().map_err(|e| e.to_string())?;
        ensure(t.sum_of_squared_degrees() == g.order(), format!("{name}: sum of squares"))?;
        ensure(t.rows_orthogonal(), format!("{name}: rows"))?;
        ensure(t.columns_orthogonal(), format!("{name}: columns"))?;
        largest = largest.max(g.order());
    }
    let (dq, dd) = (groups[0].1.descriptor(), groups[1].1.descriptor());
    ensure(dq == "Q8" && dd == "D8", format!("labels {dq}, {dd}"))?;
    Ok(format!("{} groups up to order {largest}; Q8 and D8 labelled apart", groups.len()))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let rs = RootSystem::new(RootType::E6);
    let d = e6_6_datum();
    let theta = CoweightVector::from_coroot_coords(&rs, &ints(&[1, 0, 0, -2, 0, 1])).unwrap();
    let v1 = d.evaluate_weights(&theta).unwrap();
    ensure(v1 == ints(&[0, 1, 0, -2]), format!("first tuple {v1:?}"))?;
    let theta2 = CoweightVector::from_integers(&[0, 0, 1, -1, 1, 0]);
    let v2 = d.evaluate_weights(&theta2).unwrap();
    ensure(v2 == vec![q(-1, 2), q(0, 1), q(1, 2), q(0, 1)], format!("second tuple {v2:?}"))?;
    let orders = (d.cover_order(&theta).unwrap(), d.cover_order(&theta2).unwrap());
    ensure(orders == (1, 2), format!("orders {orders:?}"))?;
    let v = exceptional_verdict(find_entry("E6(6)", 10).unwrap(), CoverLevel::Ktilde).unwrap();
    ensure(
        v.counts == Some(Counts { local_systems: 4, hc_modules: 3 }),
        format!("counts {:?}", v.counts),
    )?;
    within(start, Duration::from_secs(1))?;
    Ok("(0,1,0,-2) and (-1/2,0,1/2,0), orders 1 and 2, 4 systems / 3 modules".into())
}

fn criterion_6() -> Outcome {
    use QuantizabilityLevel::*;
    let scalars = [RootOfUnity::ONE, RootOfUnity::I, RootOfUnity::MINUS_ONE, RootOfUnity::MINUS_I];
    // Expected levels per period, in scalar order 1, i, -1, -i.
    let table = [
        (q(-1, 1), [StronglyQuantizable, NotQuantizable, StronglyQuantizable, StronglyQuantizable]),
        (q(0, 1), [StronglyQuantizable, StronglyQuantizable, StronglyQuantizable, NotQuantizable]),
        (q(1, 1), [StronglyQuantizable, NotQuantizable, StronglyQuantizable, StronglyQuantizable]),
        (q(2, 1), [StronglyQuantizable, Quantizable, StronglyQuantizable, NotQuantizable]),
        (q(1, 2), [StronglyQuantizable, NotQuantizable, StronglyQuantizable, NotQuantizable]),
    ];
    for (p, levels) in table {
        for (s, want) in scalars.iter().zip(levels) {
            let got = a2_outer_verdict(&SlicePeriod::Value(p), *s).unwrap().level;
            ensure(got == want, format!("p={p}, scalar {s}: {got} instead of {want}"))?;
            if !s.is_real() && got != NotQuantizable {
                let twist = p + q(3, 2);
                let strong_twist = [q(1, 2), q(3, 2), q(5, 2)].contains(&twist);
                ensure(
                    (got == StronglyQuantizable) == strong_twist,
                    format!("p={p}: strong iff twist in {{1/2,3/2,5/2}}"),
                )?;
            }
        }
    }
    Ok("20 grid points".into())
}

fn without_lambda(r: &ClassificationReport) -> ClassificationReport {
    let mut r = r.clone();
    r.input.lambda.clear();
    r
}

fn criterion_7() -> Outcome {
    let taus = Partition::all_codim4_up_to(10);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for k in 0..100 {
        let tau = &taus[k % taus.len()];
        let lam = QuantizationParameterA::new(
            (0..tau.largest())
                .map(|_| q(rng.random_range(-9..=9), rng.random_range(1..=4)))
                .collect(),
        );
        let c = q(rng.random_range(-99..=99), rng.random_range(1..=16));
        let a = classify_spin(tau, &lam, GenuineFilter::All).unwrap();
        let b = classify_spin(tau, &lam.shifted(c), GenuineFilter::All).unwrap();
        ensure(without_lambda(&a) == without_lambda(&b), format!("{tau}: shift by {c}"))?;
    }
    for tau in &taus {
        let zero = QuantizationParameterA::zero(tau.largest());
        ensure(
            classify_canonical(tau).unwrap() == classify_spin(tau, &zero, GenuineFilter::All).unwrap(),
            format!("{tau}: canonical"),
        )?;
    }
    Ok(format!("100 shifts; canonical on {} partitions", taus.len()))
}

fn criterion_8() -> Outcome {
    let grid = [q(-1, 1), q(-1, 2), q(0, 1), q(1, 2), q(1, 1), q(2, 1)];
    let mut decisions = 0;
    for tau in Partition::all_codim4_up_to(10) {
        let group = component_group(&tau).unwrap();
        let table = group.group.character_table().unwrap();
        for (&l, &z) in &group.distinguished {
            for &p in &grid {
                let lam = QuantizationParameterA::new(
                    (1..=tau.largest()).map(|c| if c <= l { p } else { q(0, 1) }).collect(),
                );
                let period = slice_parameter(&tau, &lam, l).unwrap();
                let r = classify_spin(&tau, &lam, GenuineFilter::All).unwrap();
                for row in &r.irreducibles {
                    let s = table.central_scalar(row.id, z).unwrap();
                    let oracle = a2_outer_verdict(&period, s).unwrap().is_quantizable();
                    ensure(
                        oracle == !row.failed.contains(&l),
                        format!("{tau} l={l} p={p} row {}", row.id),
                    )?;
                    decisions += 1;
                }
            }
        }
    }
    Ok(format!("{decisions} decisions"))
}

fn criterion_9() -> Outcome {
    let e = find_entry("E8(8)", 43).unwrap();
    let v = exceptional_verdict(e, CoverLevel::Ktilde).unwrap();
    ensure(e.ztilde_k == ["Z2"] && v.verdict == "equivalence", "E8(8) #43")?;
    let e = find_entry("E7(7)", 50).unwrap();
    let v = exceptional_verdict(e, CoverLevel::Ktilde).unwrap();
    ensure(e.zbar_k.as_deref() == Some("Z4xZ2"), "E7(7) #50 zbar")?;
    ensure(v.counts.map(|c| c.local_systems) == Some(16), "E7(7) #50 total")?;
    ensure(
        v.split == Some(Split { none: 4, k: 4, kbar: 4, ktilde: 4 }),
        format!("E7(7) #50 split {:?}", v.split),
    )?;
    let e = find_entry("E8(8)", 44).unwrap();
    let got: BTreeSet<&str> = e.ztilde_k.iter().map(String::as_str).collect();
    ensure(got == BTreeSet::from(["Z4xZ2", "D8", "Q8"]), format!("E8(8) #44 {got:?}"))?;
    Ok("E8(8)#43, E7(7)#50, E8(8)#44".into())
}

fn criterion_10() -> Outcome {
    let mut shapes = 0;
    for n in 1..=8 {
        for tau in Partition::all_of(n) {
            let rows = tau.parts();
            let mut oracle: BTreeMap<usize, BTreeSet<Vec<String>>> = BTreeMap::new();
            for mask in 0u32..(1 << rows.len()) {
                let mut labeled: Vec<String> = rows
                    .iter()
                    .enumerate()
                    .map(|(r, &len)| {
                        let first = mask >> r & 1;
                        (0..len).map(|i| if (i as u32 + first).is_multiple_of(2) { 'a' } else { 'b' }).collect()
                    })
                    .collect();
                labeled.sort();
                let a = labeled.iter().flat_map(|r| r.chars()).filter(|&c| c == 'a').count();
                oracle.entry(a).or_default().insert(labeled);
            }
            for k in 0..=n {
                let want = oracle.get(&k).map_or(0, BTreeSet::len);
                let got = if 0 < k && k < n {
                    enumerate_ab_diagrams(&tau, k).unwrap().len()
                } else {
                    diagrams_with_a_count(&tau, k).len()
                };
                ensure(got == want, format!("{tau} k={k}: {got} vs {want}"))?;
            }
            shapes += 1;
        }
    }
    Ok(format!("{shapes} shapes, all k"))
}

// Written to the stdout handle so the lines survive libtest output capture.
fn report(line: String) {
    let _ = writeln!(std::io::stdout().lock(), "{line}");
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        (1, "sl3 golden case", criterion_1),
        (2, "E-relations", criterion_2),
        (3, "component-group dichotomy", criterion_3),
        (4, "character-table integrity", criterion_4),
        (5, "E6(6) #10 reproduction", criterion_5),
        (6, "a2-outer decision table", criterion_6),
        (7, "parameter invariances", criterion_7),
        (8, "oracle equivalence", criterion_8),
        (9, "exceptional catalog fidelity", criterion_9),
        (10, "ab-diagram oracle", criterion_10),
    ];
    let mut failed = Vec::new();
    for (n, name, f) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match outcome {
            Ok(detail) => report(format!("criterion {n:>2} PASS  {name}: {detail} (exact, {t:.2?})")),
            Err(why) => {
                report(format!("criterion {n:>2} FAIL  {name}: {why} ({t:.2?})"));
                failed.push(n);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
