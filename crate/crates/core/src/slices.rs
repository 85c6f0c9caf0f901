//! The five four-dimensional slice singularities, their unobstructiveness,
//! and the quantizability table for the `a2` slice with `K = SO_3`.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite_group::RootOfUnity;

const CATALOG_TOML: &str = include_str!("../data/slices.toml");

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SliceKind {
    A2,
    C2,
    C4ModZ3,
    A2ModS2,
    Chi,
}

impl SliceKind {
    pub const ALL: [SliceKind; 5] = [
        SliceKind::A2,
        SliceKind::C2,
        SliceKind::C4ModZ3,
        SliceKind::A2ModS2,
        SliceKind::Chi,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SliceKind::A2 => "a2",
            SliceKind::C2 => "c2",
            SliceKind::C4ModZ3 => "c4_mod_z3",
            SliceKind::A2ModS2 => "a2_mod_s2",
            SliceKind::Chi => "chi",
        }
    }
}

impl fmt::Display for SliceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SliceKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SliceKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Unknown {
                what: "slice kind",
                name: s.into(),
            })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InvolutionClass {
    Inner,
    Outer,
    Any,
}

impl FromStr for InvolutionClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inner" => Ok(Self::Inner),
            "outer" => Ok(Self::Outer),
            "any" => Ok(Self::Any),
            _ => Err(Error::Unknown {
                what: "involution class",
                name: s.into(),
            }),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Status {
    Unobstructive,
    Obstructive,
    Conditional,
    Special,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SliceSingularity {
    pub kind: SliceKind,
    pub name: String,
    pub description: String,
    inner: Status,
    outer: Status,
    any: Status,
    #[serde(default)]
    condition: Option<String>,
}

#[derive(Deserialize)]
struct CatalogFile {
    slice: Vec<SliceSingularity>,
}

/// The slice list in its fixed order: `a2`, `c2`, `C^4/Z_3`, `a2/S2`, `chi`.
pub fn catalog() -> &'static [SliceSingularity] {
    static CATALOG: OnceLock<Vec<SliceSingularity>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let file: CatalogFile = toml::from_str(CATALOG_TOML).expect("embedded slice catalog parses");
        let kinds: Vec<SliceKind> = file.slice.iter().map(|s| s.kind).collect();
        assert_eq!(kinds, SliceKind::ALL, "slice catalog is out of order");
        file.slice
    })
}

pub fn slice(kind: SliceKind) -> &'static SliceSingularity {
    catalog().iter().find(|s| s.kind == kind).expect("every kind is catalogued")
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "status", content = "condition", rename_all = "lowercase")]
pub enum Unobstructiveness {
    Unobstructive,
    Obstructive,
    Conditional(String),
    Special(String),
}

impl Unobstructiveness {
    /// `Some(bool)` when the answer is unconditional.
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Unobstructiveness::Unobstructive => Some(true),
            Unobstructiveness::Obstructive => Some(false),
            _ => None,
        }
    }
}

impl fmt::Display for Unobstructiveness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unobstructiveness::Unobstructive => f.write_str("unobstructive"),
            Unobstructiveness::Obstructive => f.write_str("obstructive"),
            Unobstructiveness::Conditional(c) => write!(f, "conditional: {c}"),
            Unobstructiveness::Special(c) => write!(f, "special: {c}"),
        }
    }
}

pub fn unobstructive(kind: SliceKind, involution: InvolutionClass) -> Unobstructiveness {
    let s = slice(kind);
    let status = match involution {
        InvolutionClass::Inner => s.inner,
        InvolutionClass::Outer => s.outer,
        InvolutionClass::Any => s.any,
    };
    let condition = || s.condition.clone().unwrap_or_default();
    match status {
        Status::Unobstructive => Unobstructiveness::Unobstructive,
        Status::Obstructive => Unobstructiveness::Obstructive,
        Status::Conditional => Unobstructiveness::Conditional(condition()),
        Status::Special => Unobstructiveness::Special(condition()),
    }
}

/// The period of a quantization restricted to a slice: a rational value, or
/// a slice merely known not to be integral.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SlicePeriod {
    Value(Rational64),
    NonIntegral,
}

impl SlicePeriod {
    pub fn integer(n: i64) -> Self {
        SlicePeriod::Value(Rational64::from_integer(n))
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, SlicePeriod::Value(q) if q.is_integer())
    }

    /// The integer value, if any.
    pub fn as_integer(&self) -> Option<i64> {
        match self {
            SlicePeriod::Value(q) if q.is_integer() => Some(q.to_integer()),
            _ => None,
        }
    }

    /// TDO twist of the slice quantization, `p + 3/2`.
    pub fn twist(&self) -> Option<Rational64> {
        match self {
            SlicePeriod::Value(q) => Some(twist_of_period(*q)),
            SlicePeriod::NonIntegral => None,
        }
    }
}

impl From<Rational64> for SlicePeriod {
    fn from(q: Rational64) -> Self {
        SlicePeriod::Value(q)
    }
}

impl fmt::Display for SlicePeriod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlicePeriod::Value(q) => write!(f, "{q}"),
            SlicePeriod::NonIntegral => f.write_str("non-integral"),
        }
    }
}

impl FromStr for SlicePeriod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "non-integral" | "nonintegral" => Ok(SlicePeriod::NonIntegral),
            t => t
                .parse::<Rational64>()
                .map(SlicePeriod::Value)
                .map_err(|_| Error::Parse(format!("bad rational {t:?}"))),
        }
    }
}

pub fn twist_of_period(p: Rational64) -> Rational64 {
    p + Rational64::new(3, 2)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuantizabilityLevel {
    NotQuantizable,
    Quantizable,
    StronglyQuantizable,
}

impl fmt::Display for QuantizabilityLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuantizabilityLevel::NotQuantizable => "not_quantizable",
            QuantizabilityLevel::Quantizable => "quantizable",
            QuantizabilityLevel::StronglyQuantizable => "strongly_quantizable",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct QuantizabilityVerdict {
    pub level: QuantizabilityLevel,
    pub reason: String,
}

impl QuantizabilityVerdict {
    pub fn is_quantizable(&self) -> bool {
        self.level != QuantizabilityLevel::NotQuantizable
    }

    pub fn is_strongly_quantizable(&self) -> bool {
        self.level == QuantizabilityLevel::StronglyQuantizable
    }
}

/// `i^(2p - 1)` for integral `p`: the one genuine scalar that does not
/// quantize.
pub fn excluded_scalar(p: i64) -> RootOfUnity {
    RootOfUnity::i_pow(2 * p - 1)
}

pub(crate) fn check_z4_scalar(s: RootOfUnity) -> Result<()> {
    if 4 % s.order() == 0 {
        Ok(())
    } else {
        Err(Error::InvalidScalar(s.to_string()))
    }
}

/// Quantizability of the irreducible local system with `Z_4`-monodromy
/// `scalar` on the `a2` slice with `K = SO_3`, for a quantization of period
/// `p`.
pub fn a2_outer_verdict(p: &SlicePeriod, scalar: RootOfUnity) -> Result<QuantizabilityVerdict> {
    use QuantizabilityLevel::*;
    check_z4_scalar(scalar)?;
    let verdict = |level, reason: String| Ok(QuantizabilityVerdict { level, reason });
    if scalar.is_real() {
        return verdict(
            StronglyQuantizable,
            format!("scalar {scalar} is SO_3-equivariant; such systems are strongly quantizable for every period"),
        );
    }
    let Some(n) = p.as_integer() else {
        return verdict(
            NotQuantizable,
            format!("period {p} is not an integer, so only SO_3-equivariant systems quantize"),
        );
    };
    let excluded = excluded_scalar(n);
    if scalar == excluded {
        return verdict(
            NotQuantizable,
            format!("scalar {scalar} equals i^(2p-1) at integral period {n}"),
        );
    }
    if n.abs() <= 1 {
        verdict(
            StronglyQuantizable,
            format!("period {n} has twist {} in {{1/2, 3/2, 5/2}}", twist_of_period(n.into())),
        )
    } else {
        verdict(
            Quantizable,
            format!(
                "scalar {scalar} differs from i^(2p-1) = {excluded}, but twist {} lies outside {{1/2, 3/2, 5/2}}",
                twist_of_period(n.into())
            ),
        )
    }
}
