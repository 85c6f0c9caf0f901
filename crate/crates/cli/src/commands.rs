use std::collections::BTreeMap;
use std::io::Write;

use hcmod_core::ab_diagram::{enumerate_ab_diagrams, ABDiagram};
use hcmod_core::classify::{
    classify, ClassificationReport, GenuineFilter, OrbitDatumA, Pair, QuantizationParameterA,
};
use hcmod_core::exceptional::{exceptional_catalog, exceptional_verdict, find_entry, CoverLevel};
use hcmod_core::finite_group::RootOfUnity;
use hcmod_core::pin::{component_group, gamma_census, GammaCensus, Model};
use hcmod_core::roots::{datum, evaluate, CoweightVector, RootSystem, RootType};
use hcmod_core::slices::{
    a2_outer_verdict, catalog, unobstructive, InvolutionClass, SliceKind, SlicePeriod,
};
use hcmod_core::{Error, Partition};
use num_rational::Rational64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::render;
use crate::{
    AbDiagramArgs, Basis, ClassifyArgs, Cli, Command, ComponentGroupArgs, ExceptionalCommand,
    Failure, Format, RootsCommand, SelftestArgs, SlicesCommand,
};

pub(crate) fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let f = cli.format;
    match &cli.command {
        Command::Classify(a) => classify_cmd(a, f, out),
        Command::ComponentGroup(a) => component_group_cmd(a, f, out),
        Command::AbDiagrams(a) => ab_diagrams_cmd(a, f, out),
        Command::Slices(c) => slices_cmd(c, f, out),
        Command::Exceptional(c) => exceptional_cmd(c, f, out),
        Command::Roots(c) => roots_cmd(c, f, out),
        Command::Selftest(a) => selftest_cmd(a, f, out),
    }
}

fn emit<T: Serialize>(
    out: &mut dyn Write,
    format: Format,
    value: &T,
    text: impl FnOnce(&mut dyn Write) -> std::io::Result<()>,
) -> Result<i32, Failure> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, value)?;
            writeln!(out)?;
        }
        Format::Text => text(out)?,
    }
    Ok(0)
}

fn parse_tau(s: &str) -> Result<Partition, Failure> {
    Ok(s.parse::<Partition>()?)
}

fn classify_cmd(a: &ClassifyArgs, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let pair: Pair = a.pair.parse()?;
    let genuine: GenuineFilter = a.genuine.parse()?;
    if a.jobs == 0 {
        return Err(Failure::invalid("--jobs must be at least 1"));
    }
    let lambda = a.lambda.as_deref().map(QuantizationParameterA::parse).transpose()?;
    let mut data = Vec::new();
    for t in &a.tau {
        let tau = parse_tau(t)?;
        let datum = OrbitDatumA::new(tau.clone(), pair)?;
        if pair == Pair::Spin {
            let parts = tau.codim2_parts()?;
            if let Some(&bad) = a.nonintegral.iter().find(|l| !parts.contains(l)) {
                return Err(Error::NotCodim2Part {
                    tau: tau.to_string(),
                    part: bad,
                }
                .into());
            }
        }
        let lam = lambda
            .clone()
            .unwrap_or_else(|| QuantizationParameterA::zero(tau.largest()))
            .with_nonintegral(a.nonintegral.iter().copied());
        data.push((datum, lam));
    }
    let job = |(d, lam): &(OrbitDatumA, QuantizationParameterA)| classify(d, lam, genuine);
    let results: Vec<Result<ClassificationReport, Error>> = if a.jobs > 1 && data.len() > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(a.jobs)
            .build()
            .map_err(|e| Failure::internal(e.to_string()))?;
        pool.install(|| data.par_iter().map(job).collect())
    } else {
        data.iter().map(job).collect()
    };
    let reports = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    let text = |o: &mut dyn Write| {
        for (i, r) in reports.iter().enumerate() {
            if i > 0 {
                writeln!(o)?;
            }
            render::report(o, r)?;
        }
        Ok(())
    };
    if reports.len() == 1 {
        emit(out, format, &reports[0], text)
    } else {
        emit(out, format, &reports, text)
    }
}

/// The component group of one orbit, as printed by `component-group`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentGroupReport {
    pub tau: Partition,
    pub label: String,
    pub order: usize,
    pub model: Model,
    /// Codimension-2 odd part to a representative of its distinguished element.
    pub distinguished: BTreeMap<String, String>,
    pub elements: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub census: Option<GammaCensus>,
}

fn component_group_cmd(a: &ComponentGroupArgs, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let tau = parse_tau(&a.tau)?;
    let c = component_group(&tau)?;
    let report = ComponentGroupReport {
        tau: tau.clone(),
        label: c.descriptor(),
        order: c.order(),
        model: c.model,
        distinguished: c
            .distinguished
            .iter()
            .map(|(l, &z)| (l.to_string(), c.group.label(z).to_string()))
            .collect(),
        elements: c.group.labels().to_vec(),
        census: if a.census {
            Some(gamma_census(tau.largest())?)
        } else {
            None
        },
    };
    emit(out, format, &report, |o| render::component_group(o, &report))
}

#[derive(Serialize)]
struct DiagramRow {
    diagram: ABDiagram,
    levi_blocks: BTreeMap<usize, (usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    covers: Option<Vec<ABDiagram>>,
}

fn ab_diagrams_cmd(a: &AbDiagramArgs, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let tau = parse_tau(&a.tau)?;
    let rows: Vec<DiagramRow> = enumerate_ab_diagrams(&tau, a.k)?
        .into_iter()
        .map(|d| DiagramRow {
            levi_blocks: d.levi_blocks(),
            covers: a.covers.then(|| d.closure_covers()),
            diagram: d,
        })
        .collect();
    emit(out, format, &rows, |o| {
        writeln!(o, "{} ab-diagrams of shape {} with k = {}", rows.len(), tau, a.k)?;
        for r in &rows {
            let blocks: Vec<String> = r
                .levi_blocks
                .iter()
                .rev()
                .map(|(j, (na, nb))| format!("{j}:({na},{nb})"))
                .collect();
            write!(o, "  {:<16} blocks {}", r.diagram.to_string(), blocks.join(" "))?;
            if let Some(c) = &r.covers {
                let c: Vec<String> = c.iter().map(ToString::to_string).collect();
                write!(o, "   covers: {}", if c.is_empty() { "-".into() } else { c.join(", ") })?;
            }
            writeln!(o)?;
        }
        Ok(())
    })
}

#[derive(Serialize)]
struct SliceRow {
    kind: SliceKind,
    name: &'static str,
    description: &'static str,
    inner: String,
    outer: String,
    any: String,
}

#[derive(Serialize)]
struct A2Verdict {
    period: String,
    scalar: RootOfUnity,
    twist: Option<String>,
    level: String,
    reason: String,
}

fn slices_cmd(c: &SlicesCommand, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    match c {
        SlicesCommand::List => {
            let rows: Vec<SliceRow> = catalog()
                .iter()
                .map(|s| SliceRow {
                    kind: s.kind,
                    name: &s.name,
                    description: &s.description,
                    inner: unobstructive(s.kind, InvolutionClass::Inner).to_string(),
                    outer: unobstructive(s.kind, InvolutionClass::Outer).to_string(),
                    any: unobstructive(s.kind, InvolutionClass::Any).to_string(),
                })
                .collect();
            emit(out, format, &rows, |o| {
                for r in &rows {
                    writeln!(o, "{:<10} {}", r.kind.as_str(), r.name)?;
                    writeln!(o, "           {}", r.description)?;
                    writeln!(o, "           inner: {}", r.inner)?;
                    writeln!(o, "           outer: {}", r.outer)?;
                }
                Ok(())
            })
        }
        SlicesCommand::Verdict { period, scalar } => {
            let p: SlicePeriod = period.parse()?;
            let s: RootOfUnity = scalar.parse()?;
            let v = a2_outer_verdict(&p, s)?;
            let row = A2Verdict {
                period: p.to_string(),
                scalar: s,
                twist: p.twist().map(|t| t.to_string()),
                level: v.level.to_string(),
                reason: v.reason,
            };
            emit(out, format, &row, |o| {
                writeln!(o, "period {}, scalar {}: {}", row.period, row.scalar, row.level)?;
                writeln!(o, "  {}", row.reason)
            })
        }
        SlicesCommand::Unobstructive { kind, involution } => {
            let k: SliceKind = kind.parse()?;
            let inv: InvolutionClass = involution.parse()?;
            let u = unobstructive(k, inv);
            #[derive(Serialize)]
            struct Row<'a> {
                kind: SliceKind,
                involution: InvolutionClass,
                unobstructive: Option<bool>,
                status: &'a hcmod_core::slices::Unobstructiveness,
            }
            let row = Row {
                kind: k,
                involution: inv,
                unobstructive: u.as_bool(),
                status: &u,
            };
            emit(out, format, &row, |o| writeln!(o, "{k} ({involution}): {u}"))
        }
    }
}

fn exceptional_cmd(c: &ExceptionalCommand, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    match c {
        ExceptionalCommand::List => {
            let entries = exceptional_catalog();
            emit(out, format, &entries, |o| {
                writeln!(o, "{:<8} {:>5}  {:<8} {:>4}  {:<7} {:<8} Ztilde_K", "form", "orbit", "G-orbit", "case", "Z_K", "Zbar_K")?;
                for e in entries {
                    let tilde = if e.ztilde_k.is_empty() {
                        "?".to_string()
                    } else {
                        e.ztilde_k.join(" | ")
                    };
                    writeln!(
                        o,
                        "{:<8} {:>5}  {:<8} {:>4}  {:<7} {:<8} {}",
                        e.form,
                        e.orbit,
                        e.g_orbit,
                        e.case,
                        e.z_k,
                        e.zbar_k.as_deref().unwrap_or("-"),
                        tilde
                    )?;
                }
                Ok(())
            })
        }
        ExceptionalCommand::Verdict { form, orbit, level } => {
            let entry = find_entry(form, *orbit)?;
            let level: CoverLevel = level.parse()?;
            let v = exceptional_verdict(entry, level)?;
            emit(out, format, &v, |o| render::exceptional(o, &v))
        }
    }
}

fn parse_rationals(s: &str) -> Result<Vec<Rational64>, Failure> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<Rational64>()
                .map_err(|_| Failure::invalid(format!("bad rational {t:?}")))
        })
        .collect()
}

fn strings(v: &[Rational64]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

#[derive(Serialize)]
struct RootsEval {
    root_type: String,
    theta_coweight: Vec<String>,
    theta_coroot: Vec<String>,
    simple_roots: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    datum: Option<DatumEval>,
}

#[derive(Serialize)]
struct DatumEval {
    name: String,
    weights: Vec<String>,
    cover_order: i64,
}

fn roots_cmd(c: &RootsCommand, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    match c {
        RootsCommand::Eval {
            root_type,
            theta,
            datum: name,
            basis,
        } => {
            let t: RootType = root_type.parse()?;
            let rs = RootSystem::new(t);
            let coords = parse_rationals(theta)?;
            let theta = match basis {
                Basis::Coroot => CoweightVector::from_coroot_coords(&rs, &coords)?,
                Basis::Coweight => {
                    if coords.len() != rs.rank() {
                        return Err(Error::DimensionMismatch {
                            expected: rs.rank(),
                            got: coords.len(),
                        }
                        .into());
                    }
                    CoweightVector::new(coords)
                }
            };
            let simple: Vec<Rational64> = (0..rs.rank())
                .map(|i| {
                    let mut alpha = vec![Rational64::from_integer(0); rs.rank()];
                    alpha[i] = Rational64::from_integer(1);
                    evaluate(&alpha, &theta)
                })
                .collect::<Result<_, _>>()?;
            let datum = match name {
                Some(n) => {
                    let d = datum(n)?;
                    if d.root_type != t {
                        return Err(Failure::invalid(format!("datum {n} lives in {}, not {t}", d.root_type)));
                    }
                    Some(DatumEval {
                        name: d.name.clone(),
                        weights: strings(&d.evaluate_weights(&theta)?),
                        cover_order: d.cover_order(&theta)?,
                    })
                }
                None => None,
            };
            let r = RootsEval {
                root_type: t.to_string(),
                theta_coweight: strings(&theta.coords),
                theta_coroot: strings(&theta.coroot_coords(&rs)?),
                simple_roots: strings(&simple),
                datum,
            };
            emit(out, format, &r, |o| {
                writeln!(o, "{} theta, coroot basis:   ({})", r.root_type, r.theta_coroot.join(","))?;
                writeln!(o, "{} theta, coweight basis: ({})", r.root_type, r.theta_coweight.join(","))?;
                if let Some(d) = &r.datum {
                    writeln!(o, "{} weights: ({})", d.name, d.weights.join(","))?;
                    writeln!(o, "cover order: {}", d.cover_order)?;
                }
                Ok(())
            })
        }
        RootsCommand::Cartan { root_type } => {
            let t: RootType = root_type.parse()?;
            let a = hcmod_core::roots::cartan_matrix(t);
            let det = RootSystem::new(t).cartan_determinant();
            emit(out, format, &a, |o| {
                for row in &a {
                    let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
                    writeln!(o, "{}", cells.join(""))?;
                }
                writeln!(o, "determinant {det}")
            })
        }
    }
}

fn selftest_cmd(a: &SelftestArgs, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let checks = crate::selftest::run(a.seed, a.cases);
    let passed = checks.iter().all(|c| c.passed);
    #[derive(Serialize)]
    struct Summary<'a> {
        seed: u64,
        passed: bool,
        checks: &'a [crate::selftest::Check],
    }
    emit(
        out,
        format,
        &Summary {
            seed: a.seed,
            passed,
            checks: &checks,
        },
        |o| {
            for c in &checks {
                writeln!(o, "{} {:<34} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
            }
            writeln!(o, "{} of {} checks passed (seed {})", checks.iter().filter(|c| c.passed).count(), checks.len(), a.seed)
        },
    )?;
    Ok(if passed { 0 } else { 1 })
}
