//! Partitions as Jordan types of nilpotent orbits in `sl_n`.
//!
//! A [`Partition`] stores only its positive parts. Index-based queries are
//! 1-based and read past the end as zero, so `part(len + 1) == 0`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates an integer sequence, stripping trailing zeros.
    pub fn new(parts: &[i64]) -> Result<Self> {
        let mut end = parts.len();
        while end > 0 && parts[end - 1] == 0 {
            end -= 1;
        }
        let parts = &parts[..end];
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no positive parts".into()));
        }
        if let Some(bad) = parts.iter().find(|&&p| p <= 0) {
            return Err(Error::InvalidPartition(format!(
                "entry {bad} is not positive"
            )));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{} < {} is not weakly decreasing",
                w[0], w[1]
            )));
        }
        Ok(Partition {
            parts: parts.iter().map(|&p| p as usize).collect(),
        })
    }

    pub fn from_parts(parts: &[usize]) -> Result<Self> {
        let signed: Vec<i64> = parts.iter().map(|&p| p as i64).collect();
        Self::new(&signed)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer `n` being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The largest part, `tau_1`.
    pub fn largest(&self) -> usize {
        self.parts[0]
    }

    /// The `i`-th part (1-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "partition indices are 1-based");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// True iff every successive difference, including the last part minus
    /// zero, is at most one.
    pub fn boundary_codim_at_least_4(&self) -> bool {
        (1..=self.len()).all(|i| self.part(i) - self.part(i + 1) <= 1)
    }

    fn require_codim4(&self) -> Result<()> {
        if self.boundary_codim_at_least_4() {
            Ok(())
        } else {
            Err(Error::BoundaryCodimension(self.to_string()))
        }
    }

    /// Indices `i` with `tau_i = tau_{i+1} + 1 = tau_{i+2} + 2`; these label the
    /// codimension-4 orbits in the orbit closure.
    pub fn codim4_indices(&self) -> Result<Vec<usize>> {
        self.require_codim4()?;
        Ok((1..=self.len()).filter(|&i| self.is_codim4_index(i)).collect())
    }

    fn is_codim4_index(&self, i: usize) -> bool {
        let t = self.part(i);
        t >= 2 && self.part(i + 1) + 1 == t && self.part(i + 2) + 2 == t
    }

    /// The partition of the codimension-4 orbit attached to index `i`: parts
    /// `i` and `i + 2` drop to `tau_i - 1`.
    pub fn degeneration(&self, i: usize) -> Result<Partition> {
        self.require_codim4()?;
        if i == 0 || !self.is_codim4_index(i) {
            return Err(Error::NotCodim4Index {
                tau: self.to_string(),
                index: i,
            });
        }
        let lowered = self.part(i) - 1;
        let mut parts: Vec<usize> = (1..=self.len().max(i + 2)).map(|j| self.part(j)).collect();
        parts[i - 1] = lowered;
        parts[i + 1] = lowered;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Multiplicity `m_l` of each part `l`.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// Parts occurring exactly once and different from `tau_1`, ascending.
    /// Each one labels a codimension-2 orbit of the symmetric subgroup.
    pub fn codim2_parts(&self) -> Result<Vec<usize>> {
        self.require_codim4()?;
        let largest = self.largest();
        Ok(self
            .multiplicities()
            .into_iter()
            .filter(|&(l, m)| m == 1 && l != largest)
            .map(|(l, _)| l)
            .collect())
    }

    /// The codimension-4 index `i` whose middle row `tau_{i+1}` equals `part`.
    pub fn codim4_index_for_part(&self, part: usize) -> Result<usize> {
        self.codim4_indices()?
            .into_iter()
            .find(|&i| self.part(i + 1) == part)
            .ok_or(Error::NotCodim2Part {
                tau: self.to_string(),
                part,
            })
    }

    /// Whether the `O_n`-orbit with this Jordan type splits into two
    /// `SO_n`-orbits, i.e. all parts are even.
    pub fn so_orbit_splits(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    /// The conjugate partition.
    pub fn transpose(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Dominance order on partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 1..=self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }

    /// All partitions of sizes `1..=max_n` passing the boundary test.
    pub fn all_codim4_up_to(max_n: usize) -> Vec<Partition> {
        (1..=max_n)
            .flat_map(Partition::all_of)
            .filter(Partition::boundary_codim_at_least_4)
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad partition entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(&parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(Partition::new(&[3, 2, 1]).unwrap().size(), 6);
        assert!(Partition::new(&[2, 3]).is_err());
        assert_eq!(Partition::new(&[2, 1, 0]).unwrap(), p(&[2, 1]));
        assert!(Partition::new(&[2, 0, 1]).is_err());
        assert!(Partition::new(&[2, -1]).is_err());
        assert!(Partition::new(&[]).is_err());
        assert!(Partition::new(&[0, 0]).is_err());
    }

    #[test]
    fn boundary_test() {
        assert!(p(&[2, 2, 1]).boundary_codim_at_least_4());
        assert!(!p(&[3, 1]).boundary_codim_at_least_4());
        assert!(p(&[3, 2, 1]).boundary_codim_at_least_4());
        assert!(!p(&[2, 2]).boundary_codim_at_least_4());
    }

    #[test]
    fn codim4_indices_examples() {
        assert_eq!(p(&[2, 1]).codim4_indices().unwrap(), vec![1]);
        assert_eq!(p(&[3, 2, 1]).codim4_indices().unwrap(), vec![1, 2]);
        assert_eq!(p(&[3, 2, 2, 1]).codim4_indices().unwrap(), vec![3]);
        assert!(p(&[3, 1]).codim4_indices().is_err());
    }

    #[test]
    fn degeneration_examples() {
        assert_eq!(p(&[3, 2, 1]).degeneration(1).unwrap(), p(&[2, 2, 2]));
        assert_eq!(p(&[2, 1]).degeneration(1).unwrap(), p(&[1, 1, 1]));
        assert_eq!(p(&[3, 2, 2, 1]).degeneration(3).unwrap(), p(&[3, 2, 1, 1, 1]));
        assert!(matches!(
            p(&[3, 2, 2, 1]).degeneration(1),
            Err(Error::NotCodim4Index { index: 1, .. })
        ));
    }

    #[test]
    fn multiplicity_examples() {
        let m = p(&[2, 2, 1]).multiplicities();
        assert_eq!(m, BTreeMap::from([(2, 2), (1, 1)]));
        assert_eq!(p(&[1, 1, 1]).multiplicities(), BTreeMap::from([(1, 3)]));
        assert_eq!(
            p(&[3, 2, 1]).multiplicities(),
            BTreeMap::from([(3, 1), (2, 1), (1, 1)])
        );
    }

    #[test]
    fn codim2_parts_examples() {
        assert_eq!(p(&[2, 1]).codim2_parts().unwrap(), vec![1]);
        assert_eq!(p(&[3, 2, 1]).codim2_parts().unwrap(), vec![1, 2]);
        assert_eq!(p(&[2, 2, 1]).codim2_parts().unwrap(), vec![1]);
    }

    #[test]
    fn splitting_and_transpose() {
        assert!(p(&[2, 2, 2]).so_orbit_splits());
        assert!(!p(&[2, 1]).so_orbit_splits());
        assert!(p(&[4, 4]).so_orbit_splits());
        assert_eq!(p(&[3, 2, 1]).transpose(), p(&[3, 2, 1]));
        assert_eq!(p(&[2, 1]).transpose(), p(&[2, 1]));
        assert_eq!(p(&[2, 2, 1]).transpose(), p(&[3, 2]));
    }

    #[test]
    fn text_form() {
        let t: Partition = "3,2,1".parse().unwrap();
        assert_eq!(t.to_string(), "3,2,1");
        assert!("3,x".parse::<Partition>().is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }
}
