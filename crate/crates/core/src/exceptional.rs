//! Catalog of exceptional K-orbits meeting an `a2` slice, and the counts of
//! quantizable local systems where the component group is abelian and known.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::classify::{Counts, VERDICT_EQUIVALENCE, VERDICT_NOT_SURJECTIVE};
use crate::error::{Error, Result};
use crate::finite_group::RootOfUnity;
use crate::slices::{a2_outer_verdict, SlicePeriod};

const CATALOG_TOML: &str = include_str!("../data/exceptional.toml");

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverLevel {
    K,
    Kbar,
    #[default]
    Ktilde,
}

impl FromStr for CoverLevel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "k" => Ok(CoverLevel::K),
            "kbar" => Ok(CoverLevel::Kbar),
            "ktilde" => Ok(CoverLevel::Ktilde),
            _ => Err(Error::Unknown {
                what: "cover level",
                name: s.into(),
            }),
        }
    }
}

impl fmt::Display for CoverLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverLevel::K => "k",
            CoverLevel::Kbar => "kbar",
            CoverLevel::Ktilde => "ktilde",
        })
    }
}

/// Irreducibles sorted by the smallest cover they descend to; `none` counts
/// the ones that do not quantize.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Split {
    pub none: usize,
    pub k: usize,
    pub kbar: usize,
    pub ktilde: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct StatedCounts {
    pub local_systems: Option<usize>,
    pub hc_modules: Option<usize>,
    pub none: Option<usize>,
    pub k: Option<usize>,
    pub kbar: Option<usize>,
    pub ktilde: Option<usize>,
}

/// `Z_{n_1} x ... x Z_{n_r}` with the slice generator and kernel generators
/// written as coordinate vectors.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AbelianModel {
    pub factors: Vec<usize>,
    pub slice: Vec<usize>,
    pub kernel_k: Vec<Vec<usize>>,
    #[serde(default)]
    pub kernel_kbar: Option<Vec<Vec<usize>>>,
}

impl AbelianModel {
    fn exponent(&self) -> usize {
        self.factors.iter().fold(1, |acc, n| acc.lcm(n))
    }

    /// All character labels `x`, with `chi_x(g) = exp(2 pi i sum x_j g_j / n_j)`.
    pub fn characters(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for &n in &self.factors {
            out = out
                .into_iter()
                .flat_map(|v: Vec<usize>| {
                    (0..n).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out
    }

    pub fn value(&self, chi: &[usize], g: &[usize]) -> RootOfUnity {
        let e = self.exponent();
        let turn: usize = chi
            .iter()
            .zip(g)
            .zip(&self.factors)
            .map(|((x, y), n)| x * y * (e / n))
            .sum();
        RootOfUnity::from_turn(turn as i64, e as u32)
    }

    fn trivial_on(&self, chi: &[usize], gens: &[Vec<usize>]) -> bool {
        gens.iter().all(|g| self.value(chi, g) == RootOfUnity::ONE)
    }

    /// Classifies every character at slice period `p`.
    pub fn split(&self, p: &SlicePeriod) -> Result<Split> {
        let mut split = Split::default();
        let kbar = self.kernel_kbar.as_ref().unwrap_or(&self.kernel_k);
        for chi in self.characters() {
            let s = self.value(&chi, &self.slice);
            if !a2_outer_verdict(p, s)?.is_quantizable() {
                split.none += 1;
            } else if self.trivial_on(&chi, &self.kernel_k) {
                split.k += 1;
            } else if self.trivial_on(&chi, kbar) {
                split.kbar += 1;
            } else {
                split.ktilde += 1;
            }
        }
        Ok(split)
    }

    pub fn order(&self) -> usize {
        self.factors.iter().product()
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ExceptionalEntry {
    pub form: String,
    pub orbit: u32,
    pub g_orbit: String,
    pub case: u8,
    pub slice: String,
    pub z_k: String,
    #[serde(default)]
    pub zbar_k: Option<String>,
    pub ztilde_k: Vec<String>,
    #[serde(default)]
    pub remark: Option<String>,
    #[serde(default)]
    pub stated: Option<StatedCounts>,
    #[serde(default)]
    pub model: Vec<AbelianModel>,
}

impl ExceptionalEntry {
    /// `form #orbit`, e.g. `E6(6) #10`.
    pub fn key(&self) -> String {
        format!("{} #{}", self.form, self.orbit)
    }

    /// Whether the component group of the universal cover is pinned down.
    pub fn ztilde_determined(&self) -> bool {
        self.ztilde_k.len() == 1
    }
}

#[derive(Deserialize)]
struct CatalogFile {
    entry: Vec<ExceptionalEntry>,
}

pub fn exceptional_catalog() -> &'static [ExceptionalEntry] {
    static CATALOG: OnceLock<Vec<ExceptionalEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let file: CatalogFile =
            toml::from_str(CATALOG_TOML).expect("embedded exceptional catalog parses");
        file.entry
    })
}

fn normalize_form(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_uppercase()
}

pub fn find_entry(form: &str, orbit: u32) -> Result<&'static ExceptionalEntry> {
    let want = normalize_form(form);
    exceptional_catalog()
        .iter()
        .find(|e| normalize_form(&e.form) == want && e.orbit == orbit)
        .ok_or_else(|| Error::Unknown {
            what: "exceptional orbit",
            name: format!("{form} #{orbit}"),
        })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ExceptionalVerdict {
    pub form: String,
    pub orbit: u32,
    pub g_orbit: String,
    pub case: u8,
    pub level: CoverLevel,
    pub z_k: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zbar_k: Option<String>,
    pub ztilde_k: Vec<String>,
    pub verdict: String,
    pub counts: Option<Counts>,
    pub split: Option<Split>,
    pub notes: Vec<String>,
}

/// Counts of local systems and quantizations at `lambda = 0`, restricted to
/// those descending to `level`.
pub fn exceptional_verdict(entry: &ExceptionalEntry, level: CoverLevel) -> Result<ExceptionalVerdict> {
    let mut notes = Vec::new();
    if let Some(r) = &entry.remark {
        notes.push(r.clone());
    }
    let base = |verdict: &str, counts, split, notes| ExceptionalVerdict {
        form: entry.form.clone(),
        orbit: entry.orbit,
        g_orbit: entry.g_orbit.clone(),
        case: entry.case,
        level,
        z_k: entry.z_k.clone(),
        zbar_k: entry.zbar_k.clone(),
        ztilde_k: entry.ztilde_k.clone(),
        verdict: verdict.into(),
        counts,
        split,
        notes,
    };
    if entry.case != 3 {
        notes.push(
            "every irreducible of the target representation category quantizes, for every parameter"
                .into(),
        );
        return Ok(base(VERDICT_EQUIVALENCE, None, None, notes));
    }
    if entry.model.is_empty() {
        notes.push("at least one rank-1 local system does not quantize at lambda = 0".into());
        return Ok(base(VERDICT_NOT_SURJECTIVE, None, None, notes));
    }
    let p = SlicePeriod::integer(0);
    let splits = entry
        .model
        .iter()
        .map(|m| m.split(&p))
        .collect::<Result<Vec<_>>>()?;
    if splits.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::Catalog(format!(
            "{}: candidate groups give different counts",
            entry.key()
        )));
    }
    let split = splits[0];
    let total = entry.model[0].order();
    let counts = match level {
        CoverLevel::K => Counts {
            local_systems: entry.model[0]
                .characters()
                .iter()
                .filter(|c| entry.model[0].trivial_on(c, &entry.model[0].kernel_k))
                .count(),
            hc_modules: split.k,
        },
        CoverLevel::Kbar => {
            let m = &entry.model[0];
            let kbar = m.kernel_kbar.as_ref().unwrap_or(&m.kernel_k);
            Counts {
                local_systems: m.characters().iter().filter(|c| m.trivial_on(c, kbar)).count(),
                hc_modules: split.k + split.kbar,
            }
        }
        CoverLevel::Ktilde => Counts {
            local_systems: total,
            hc_modules: total - split.none,
        },
    };
    if entry.model.len() > 1 {
        notes.push(format!(
            "counts agree for every candidate group: {}",
            entry.ztilde_k.join(", ")
        ));
    }
    let verdict = if split.none == 0 {
        VERDICT_EQUIVALENCE
    } else {
        VERDICT_NOT_SURJECTIVE
    };
    Ok(base(verdict, Some(counts), Some(split), notes))
}
