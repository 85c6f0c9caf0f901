//! ab-diagrams: Young diagrams whose rows carry alternating `a`/`b` labels.
//! They index the nilpotent orbits of `GL_k x GL_{n-k}` on the
//! `(-1)`-eigenspace of the inner involution of `sl_n`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(into = "Vec<String>", try_from = "Vec<String>")]
pub struct ABDiagram {
    rows: Vec<String>,
    shape: Partition,
    a_count: usize,
}

fn alternating(row: &str) -> bool {
    !row.is_empty()
        && row.bytes().all(|c| c == b'a' || c == b'b')
        && row.as_bytes().windows(2).all(|w| w[0] != w[1])
}

fn row_of(first: u8, len: usize) -> String {
    let other = if first == b'a' { b'b' } else { b'a' };
    (0..len)
        .map(|i| if i % 2 == 0 { first } else { other } as char)
        .collect()
}

impl ABDiagram {
    /// Validates and normalizes rows: longest first, equal lengths sorted.
    pub fn new<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let mut rows: Vec<String> = rows.iter().map(|r| r.as_ref().to_string()).collect();
        if let Some(bad) = rows.iter().find(|r| !alternating(r)) {
            return Err(Error::Parse(format!("row {bad:?} is not an alternating a/b word")));
        }
        if rows.is_empty() {
            return Err(Error::Parse("an ab-diagram needs at least one row".into()));
        }
        rows.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| x.cmp(y)));
        let lengths: Vec<usize> = rows.iter().map(String::len).collect();
        let shape = Partition::from_parts(&lengths)?;
        let a_count = rows.iter().map(|r| r.bytes().filter(|&c| c == b'a').count()).sum();
        Ok(ABDiagram {
            rows,
            shape,
            a_count,
        })
    }

    pub fn rows(&self) -> &[String] {
        &self.rows
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn a_count(&self) -> usize {
        self.a_count
    }

    pub fn b_count(&self) -> usize {
        self.shape.size() - self.a_count
    }

    /// For each row length `j`, the number of rows of that length starting
    /// with `a` and with `b`.
    pub fn levi_blocks(&self) -> BTreeMap<usize, (usize, usize)> {
        let mut blocks = BTreeMap::new();
        for r in &self.rows {
            let e = blocks.entry(r.len()).or_insert((0, 0));
            if r.starts_with('a') {
                e.0 += 1;
            } else {
                e.1 += 1;
            }
        }
        blocks
    }

    /// Diagrams obtained by moving the last box of one row onto the end of a
    /// row at least as long, keeping both rows alternating.
    pub fn closure_covers(&self) -> Vec<ABDiagram> {
        let mut out = Vec::new();
        for (s, src) in self.rows.iter().enumerate() {
            let label = *src.as_bytes().last().unwrap();
            for (d, dst) in self.rows.iter().enumerate() {
                if s == d || dst.len() < src.len() || *dst.as_bytes().last().unwrap() == label {
                    continue;
                }
                let mut rows = self.rows.clone();
                rows[d].push(label as char);
                rows[s].pop();
                rows.retain(|r| !r.is_empty());
                out.push(ABDiagram::new(&rows).expect("box move preserves alternation"));
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

impl From<ABDiagram> for Vec<String> {
    fn from(d: ABDiagram) -> Vec<String> {
        d.rows
    }
}

impl TryFrom<Vec<String>> for ABDiagram {
    type Error = Error;
    fn try_from(rows: Vec<String>) -> Result<Self> {
        ABDiagram::new(&rows)
    }
}

impl fmt::Display for ABDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.rows.join("/"))
    }
}

impl FromStr for ABDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<&str> = s.split('/').map(str::trim).collect();
        ABDiagram::new(&rows)
    }
}

/// All diagrams of shape `tau` with `k` labels `a`, for any `0 <= k <= n`.
/// Diagrams with more `a`-initial rows among the longer rows come first.
pub fn diagrams_with_a_count(tau: &Partition, k: usize) -> Vec<ABDiagram> {
    let groups: Vec<(usize, usize)> = tau.multiplicities().into_iter().rev().collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; groups.len()];
    fn rec(
        groups: &[(usize, usize)],
        idx: usize,
        remaining: i64,
        choice: &mut Vec<usize>,
        out: &mut Vec<ABDiagram>,
    ) {
        if idx == groups.len() {
            if remaining == 0 {
                let mut rows = Vec::new();
                for (&(len, mult), &na) in groups.iter().zip(choice.iter()) {
                    rows.extend((0..na).map(|_| row_of(b'a', len)));
                    rows.extend((0..mult - na).map(|_| row_of(b'b', len)));
                }
                out.push(ABDiagram::new(&rows).expect("generated rows alternate"));
            }
            return;
        }
        let (len, mult) = groups[idx];
        for na in (0..=mult).rev() {
            let a = na * len.div_ceil(2) + (mult - na) * (len / 2);
            choice[idx] = na;
            rec(groups, idx + 1, remaining - a as i64, choice, out);
        }
    }
    rec(&groups, 0, k as i64, &mut choice, &mut out);
    out
}

/// Diagrams of shape `tau` with exactly `k` labels `a`, `0 < k < n`.
pub fn enumerate_ab_diagrams(tau: &Partition, k: usize) -> Result<Vec<ABDiagram>> {
    let n = tau.size();
    if k == 0 || k >= n {
        return Err(Error::KOutOfRange { k, n });
    }
    Ok(diagrams_with_a_count(tau, k))
}

/// One K-orbit of the inner case with its Levi block data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InnerOrbit {
    pub diagram: ABDiagram,
    /// Row length to `(n_j^a, n_j^b)`.
    pub levi_blocks: BTreeMap<usize, (usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InnerVerdict {
    pub tau: Partition,
    pub k: usize,
    pub verdict: String,
    pub orbits: Vec<InnerOrbit>,
}

/// For `K = S(GL_k x GL_{n-k})` the restriction functor is an equivalence for
/// every parameter, so only the orbits and their Levi blocks are listed.
pub fn inner_case_verdict(tau: &Partition, k: usize) -> Result<InnerVerdict> {
    if !tau.boundary_codim_at_least_4() {
        return Err(Error::BoundaryCodimension(tau.to_string()));
    }
    let orbits = enumerate_ab_diagrams(tau, k)?
        .into_iter()
        .map(|d| InnerOrbit {
            levi_blocks: d.levi_blocks(),
            diagram: d,
        })
        .collect();
    Ok(InnerVerdict {
        tau: tau.clone(),
        k,
        verdict: "equivalence".into(),
        orbits,
    })
}
