//! Classification of irreducible Harish-Chandra modules with full support in
//! the closure of a type A nilpotent orbit, for the three families of
//! symmetric pairs of `sl_n`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::ab_diagram::{inner_case_verdict, InnerOrbit};
use crate::error::{Error, Result};
use crate::finite_group::RootOfUnity;
use crate::partition::Partition;
use crate::pin::{component_group, ComponentGroup, Model};
use crate::slices::{excluded_scalar, SlicePeriod};

/// A quantization parameter: one rational per column of `tau`, modulo the
/// diagonal. Slices listed in `nonintegral` are treated as having a
/// non-integral period whatever the entries say.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuantizationParameterA {
    lambda: Vec<Rational64>,
    nonintegral: BTreeSet<usize>,
}

impl QuantizationParameterA {
    pub fn new(lambda: Vec<Rational64>) -> Self {
        QuantizationParameterA {
            lambda,
            nonintegral: BTreeSet::new(),
        }
    }

    pub fn zero(columns: usize) -> Self {
        Self::new(vec![Rational64::from_integer(0); columns])
    }

    /// Parses a comma-separated list of `p/q` tokens.
    pub fn parse(s: &str) -> Result<Self> {
        let lambda = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<Rational64>()
                    .map_err(|_| Error::Parse(format!("bad rational {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(lambda))
    }

    pub fn with_nonintegral<I: IntoIterator<Item = usize>>(mut self, slices: I) -> Self {
        self.nonintegral.extend(slices);
        self
    }

    pub fn entries(&self) -> &[Rational64] {
        &self.lambda
    }

    pub fn nonintegral(&self) -> &BTreeSet<usize> {
        &self.nonintegral
    }

    /// Adds `c` to every entry.
    pub fn shifted(&self, c: Rational64) -> Self {
        QuantizationParameterA {
            lambda: self.lambda.iter().map(|x| x + c).collect(),
            nonintegral: self.nonintegral.clone(),
        }
    }

    /// The representative with last entry zero.
    pub fn canonical(&self) -> Self {
        match self.lambda.last() {
            Some(&last) => self.shifted(-last),
            None => self.clone(),
        }
    }

    /// Entry at column `c` (1-based).
    pub fn column(&self, c: usize) -> Rational64 {
        self.lambda[c - 1]
    }

    fn check_columns(&self, tau: &Partition) -> Result<()> {
        if self.lambda.len() != tau.largest() {
            return Err(Error::DimensionMismatch {
                expected: tau.largest(),
                got: self.lambda.len(),
            });
        }
        Ok(())
    }
}

/// The column `c` such that the period on the slice attached to the
/// codimension-2 part `l` is `lambda_c - lambda_{c+1}`. Changing this one map
/// changes the index convention everywhere.
pub fn slice_column(l: usize) -> usize {
    l
}

/// The period `lambda_l - lambda_{l+1}` of the quantization restricted to
/// the slice at the codimension-2 part `l`.
pub fn slice_parameter(
    tau: &Partition,
    lambda: &QuantizationParameterA,
    l: usize,
) -> Result<SlicePeriod> {
    lambda.check_columns(tau)?;
    let c = slice_column(l);
    if !tau.codim2_parts()?.contains(&l) || c + 1 > tau.largest() {
        return Err(Error::NotCodim2Part {
            tau: tau.to_string(),
            part: l,
        });
    }
    if lambda.nonintegral.contains(&l) {
        return Ok(SlicePeriod::NonIntegral);
    }
    Ok(SlicePeriod::Value(lambda.column(c) - lambda.column(c + 1)))
}

/// Whether a central scalar `s` at a slice of period `p` passes the
/// eigenvalue test: `s = ±1` off the integers, `s != i^(2p-1)` on them.
pub fn criterion_admits(p: &SlicePeriod, s: RootOfUnity) -> bool {
    match p.as_integer() {
        Some(n) => s != excluded_scalar(n),
        None => s.is_real(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenuineFilter {
    #[default]
    All,
    TrivialOnMinusOne,
}

impl FromStr for GenuineFilter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Self::All),
            "trivial_on_minus_one" | "trivial-on-minus-one" => Ok(Self::TrivialOnMinusOne),
            _ => Err(Error::Unknown {
                what: "genuine filter",
                name: s.into(),
            }),
        }
    }
}

/// Which symmetric pair of `sl_n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Pair {
    /// `K = Spin_n` (or `SO_n`, `PSO_n` via the genuine filter).
    Spin,
    /// `K = S(GL_k x GL_{n-k})`.
    Inner(usize),
    /// `K = Sp_n`.
    Symplectic,
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pair::Spin => f.write_str("spin"),
            Pair::Inner(k) => write!(f, "inner:{k}"),
            Pair::Symplectic => f.write_str("symplectic"),
        }
    }
}

impl FromStr for Pair {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "spin" => Ok(Pair::Spin),
            "symplectic" => Ok(Pair::Symplectic),
            t => {
                let k = t
                    .strip_prefix("inner:")
                    .or_else(|| t.strip_prefix("inner="))
                    .ok_or_else(|| Error::Unknown {
                        what: "symmetric pair",
                        name: t.into(),
                    })?;
                k.parse()
                    .map(Pair::Inner)
                    .map_err(|_| Error::Parse(format!("bad inner rank {k:?}")))
            }
        }
    }
}

impl Serialize for Pair {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Pair {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A nilpotent orbit of `sl_n` with a choice of symmetric pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitDatumA {
    pub tau: Partition,
    pub pair: Pair,
}

impl OrbitDatumA {
    pub fn new(tau: Partition, pair: Pair) -> Result<Self> {
        let n = tau.size();
        match pair {
            Pair::Spin => {
                if !tau.boundary_codim_at_least_4() {
                    return Err(Error::BoundaryCodimension(tau.to_string()));
                }
            }
            Pair::Inner(k) => {
                if !tau.boundary_codim_at_least_4() {
                    return Err(Error::BoundaryCodimension(tau.to_string()));
                }
                if k == 0 || k >= n {
                    return Err(Error::KOutOfRange { k, n });
                }
            }
            Pair::Symplectic => {
                if n % 2 == 1 || tau.multiplicities().values().any(|m| m % 2 == 1) {
                    return Err(Error::InvalidDatum(format!(
                        "{tau} is not the Jordan type of a nilpotent in the symplectic pair: every part must occur an even number of times"
                    )));
                }
            }
        }
        Ok(OrbitDatumA { tau, pair })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReportInput {
    pub tau: Partition,
    pub pair: Pair,
    pub lambda: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub nonintegral: Vec<usize>,
    #[serde(default)]
    pub genuine: GenuineFilter,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GroupSummary {
    pub label: String,
    pub order: usize,
    pub model: Model,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IrreducibleRow {
    pub id: usize,
    pub degree: usize,
    /// Odd codimension-2 part to the scalar of its distinguished element.
    pub scalars: BTreeMap<String, RootOfUnity>,
    pub admitted: bool,
    pub rule: String,
    /// Every part at which the eigenvalue test fails; `rule` cites the first.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failed: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Counts {
    pub local_systems: usize,
    pub hc_modules: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub input: ReportInput,
    pub component_group: Option<GroupSummary>,
    pub irreducibles: Vec<IrreducibleRow>,
    pub counts: Option<Counts>,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub orbits: Vec<InnerOrbit>,
    pub notes: Vec<String>,
}

impl ClassificationReport {
    pub fn admitted_count(&self) -> usize {
        self.irreducibles.iter().filter(|r| r.admitted).count()
    }
}

pub const VERDICT_EQUIVALENCE: &str = "equivalence";
pub const VERDICT_NOT_SURJECTIVE: &str = "not essentially surjective";

fn lambda_strings(lambda: &QuantizationParameterA) -> Vec<String> {
    lambda.entries().iter().map(ToString::to_string).collect()
}

/// Classification for `K = Spin_n`: an irreducible representation of the
/// component group is admitted iff at every odd codimension-2 part its
/// distinguished element acts by a scalar passing [`criterion_admits`].
pub fn classify_spin(
    tau: &Partition,
    lambda: &QuantizationParameterA,
    filter: GenuineFilter,
) -> Result<ClassificationReport> {
    let group = component_group(tau)?;
    lambda.check_columns(tau)?;
    let table = group.group.character_table()?;
    let odd_parts: Vec<usize> = group.distinguished.keys().copied().collect();
    let periods: Vec<SlicePeriod> = odd_parts
        .iter()
        .map(|&l| slice_parameter(tau, lambda, l))
        .collect::<Result<_>>()?;

    let mut irreducibles = Vec::new();
    for row in 0..table.len() {
        if filter == GenuineFilter::TrivialOnMinusOne
            && table.central_scalar(row, group.minus_one)? != RootOfUnity::ONE
        {
            continue;
        }
        let mut scalars = BTreeMap::new();
        let mut failed = Vec::new();
        let mut rule = None;
        for (&l, p) in odd_parts.iter().zip(&periods) {
            let s = table.central_scalar(row, group.distinguished[&l])?;
            scalars.insert(l.to_string(), s);
            if !criterion_admits(p, s) {
                failed.push(l);
                rule.get_or_insert_with(|| exclusion_rule(l, p, s));
            }
        }
        irreducibles.push(IrreducibleRow {
            id: row,
            degree: table.degree(row),
            scalars,
            admitted: failed.is_empty(),
            rule: rule.unwrap_or_else(|| admission_rule(&odd_parts)),
            failed,
        });
    }
    let hc = irreducibles.iter().filter(|r| r.admitted).count();
    let counts = Counts {
        local_systems: irreducibles.len(),
        hc_modules: hc,
    };
    Ok(ClassificationReport {
        input: ReportInput {
            tau: tau.clone(),
            pair: Pair::Spin,
            lambda: lambda_strings(lambda),
            nonintegral: lambda.nonintegral().iter().copied().collect(),
            genuine: filter,
        },
        component_group: Some(GroupSummary {
            label: group.descriptor(),
            order: group.order(),
            model: group.model,
        }),
        verdict: if hc == counts.local_systems {
            VERDICT_EQUIVALENCE
        } else {
            VERDICT_NOT_SURJECTIVE
        }
        .into(),
        irreducibles,
        counts: Some(counts),
        orbits: Vec::new(),
        notes: spin_notes(tau, &group, &odd_parts),
    })
}

fn exclusion_rule(l: usize, p: &SlicePeriod, s: RootOfUnity) -> String {
    match p.as_integer() {
        Some(n) => format!(
            "excluded at l={l}: integral slice period {n} forbids eigenvalue i^(2p-1) = {s}"
        ),
        None => format!(
            "excluded at l={l}: slice period {p} is not an integer, so the eigenvalue must be ±1, got {s}"
        ),
    }
}

fn admission_rule(odd_parts: &[usize]) -> String {
    if odd_parts.is_empty() {
        "admitted: no odd codimension-2 part, nothing to check".into()
    } else {
        let ls: Vec<String> = odd_parts.iter().map(ToString::to_string).collect();
        format!("admitted: eigenvalue test passes at l={}", ls.join(","))
    }
}

fn spin_notes(tau: &Partition, group: &ComponentGroup, odd_parts: &[usize]) -> Vec<String> {
    let mut notes = Vec::new();
    if group.model == Model::Split {
        notes.push(
            "split model: an odd part repeats, -1 acts trivially and every central scalar is ±1"
                .into(),
        );
    }
    for &l in tau.codim2_parts().unwrap_or_default().iter() {
        if l % 2 == 0 {
            notes.push(format!(
                "l={l} is even: the Z_4 map is not injective, no condition imposed"
            ));
        }
    }
    for i in tau.codim4_indices().unwrap_or_default() {
        let deg = tau.degeneration(i).expect("index is a codimension-4 index");
        if deg.so_orbit_splits() {
            notes.push(format!(
                "degeneration at index {i} has Jordan type {deg} with all parts even: two K-orbits, identical verdicts"
            ));
        }
    }
    if odd_parts.is_empty() {
        notes.push("no odd codimension-2 part: every irreducible is admitted".into());
    }
    notes
}

/// The canonical quantization, `lambda = 0`.
pub fn classify_canonical(tau: &Partition) -> Result<ClassificationReport> {
    classify_spin(tau, &QuantizationParameterA::zero(tau.largest()), GenuineFilter::All)
}

pub fn classify(
    datum: &OrbitDatumA,
    lambda: &QuantizationParameterA,
    filter: GenuineFilter,
) -> Result<ClassificationReport> {
    let tau = &datum.tau;
    let input = || ReportInput {
        tau: tau.clone(),
        pair: datum.pair,
        lambda: lambda_strings(lambda),
        nonintegral: lambda.nonintegral().iter().copied().collect(),
        genuine: filter,
    };
    match datum.pair {
        Pair::Spin => classify_spin(tau, lambda, filter),
        Pair::Inner(k) => {
            let v = inner_case_verdict(tau, k)?;
            Ok(ClassificationReport {
                input: input(),
                component_group: None,
                irreducibles: Vec::new(),
                counts: None,
                verdict: VERDICT_EQUIVALENCE.into(),
                notes: vec![format!(
                    "inner pair with k={k}: every irreducible of the target category quantizes, for every parameter; {} K-orbits",
                    v.orbits.len()
                )],
                orbits: v.orbits,
            })
        }
        Pair::Symplectic => Ok(ClassificationReport {
            input: input(),
            component_group: None,
            irreducibles: Vec::new(),
            counts: None,
            verdict: VERDICT_EQUIVALENCE.into(),
            orbits: Vec::new(),
            notes: vec![
                "symplectic pair: the orbit closure has no codimension-4 orbits, so the criterion is vacuous".into(),
            ],
        }),
    }
}
