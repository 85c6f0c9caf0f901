//! Small finite groups given by full Cayley tables.
//!
//! Elements are indexed `0..order` with `0` the identity. Groups come from
//! [`close_under_multiplication`] or from the named constructors below.

mod character;
mod cyclotomic;
mod modp;

use std::collections::HashMap;
use std::fmt::Display;
use std::hash::Hash;

use num_integer::Integer;

use crate::error::{Error, Result};

pub use character::{CharacterTable, ConjugacyClass};
pub use cyclotomic::{Cyclotomic, RootOfUnity};

/// Largest group the closure will build. A full table of `n^2` entries is
/// kept, so this is far below what the element enumeration alone could reach.
pub const DEFAULT_SIZE_CAP: usize = 1 << 12;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

/// A group built by closure, together with the generating-set elements it
/// was built from.
#[derive(Clone, Debug)]
pub struct Closure<T> {
    pub group: FiniteGroup,
    pub elements: Vec<T>,
    index: HashMap<T, usize>,
}

impl<T: Eq + Hash> Closure<T> {
    /// Index of an element of the original type, if it lies in the group.
    pub fn index_of(&self, x: &T) -> Option<usize> {
        self.index.get(x).copied()
    }
}

/// Enumerates `<generators>` breadth first and tabulates its multiplication.
/// Element 0 is `identity`; the others appear in discovery order.
pub fn close_under_multiplication<T, F>(
    identity: T,
    generators: &[T],
    mul: F,
    cap: usize,
) -> Result<Closure<T>>
where
    T: Clone + Eq + Hash + Display,
    F: Fn(&T, &T) -> T,
{
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::from([(identity, 0usize)]);
    let mut next = 0;
    while next < elements.len() {
        let x = elements[next].clone();
        next += 1;
        for g in generators {
            let y = mul(&x, g);
            if !index.contains_key(&y) {
                if elements.len() >= cap {
                    return Err(Error::SizeCapExceeded(cap));
                }
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
    }
    let n = elements.len();
    let mut table = vec![0u32; n * n];
    for (a, x) in elements.iter().enumerate() {
        for (b, y) in elements.iter().enumerate() {
            let z = mul(x, y);
            let c = *index.get(&z).ok_or_else(|| {
                Error::CharacterTable(format!("closure is not closed at {x} * {y}"))
            })?;
            table[a * n + b] = c as u32;
        }
    }
    let labels = elements.iter().map(ToString::to_string).collect();
    let group = FiniteGroup::from_table(n, table, labels)?;
    Ok(Closure {
        group,
        elements,
        index,
    })
}

impl FiniteGroup {
    /// Wraps a Cayley table, checking identity and inverses. Associativity is
    /// assumed (see [`FiniteGroup::is_associative`]).
    pub fn from_table(order: usize, table: Vec<u32>, labels: Vec<String>) -> Result<Self> {
        if table.len() != order * order {
            return Err(Error::DimensionMismatch {
                expected: order * order,
                got: table.len(),
            });
        }
        if labels.len() != order {
            return Err(Error::DimensionMismatch {
                expected: order,
                got: labels.len(),
            });
        }
        for a in 0..order {
            if table[a] as usize != a || table[a * order] as usize != a {
                return Err(Error::CharacterTable("element 0 is not the identity".into()));
            }
        }
        let mut inverse = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if table[a * order + b] == 0 {
                    inverse[a] = b;
                    break;
                }
            }
            if inverse[a] == usize::MAX {
                return Err(Error::CharacterTable(format!("element {a} has no inverse")));
            }
        }
        Ok(FiniteGroup {
            order,
            table,
            inverse,
            labels,
        })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `Z_n`, element `k` being `k` times the generator.
    pub fn cyclic(n: usize) -> Self {
        Self::abelian(&[n])
    }

    /// `Z_{n_1} x ... x Z_{n_r}`, elements ordered lexicographically.
    pub fn abelian(factors: &[usize]) -> Self {
        assert!(factors.iter().all(|&f| f >= 1));
        let order: usize = factors.iter().product();
        let decode = |mut x: usize| -> Vec<usize> {
            let mut v = vec![0; factors.len()];
            for (slot, &f) in v.iter_mut().zip(factors).rev() {
                *slot = x % f;
                x /= f;
            }
            v
        };
        let encode = |v: &[usize]| v.iter().zip(factors).fold(0, |acc, (&c, &f)| acc * f + c);
        let mut table = vec![0u32; order * order];
        for a in 0..order {
            let va = decode(a);
            for b in 0..order {
                let vb = decode(b);
                let vc: Vec<usize> = va
                    .iter()
                    .zip(&vb)
                    .zip(factors)
                    .map(|((x, y), f)| (x + y) % f)
                    .collect();
                table[a * order + b] = encode(&vc) as u32;
            }
        }
        let labels = (0..order)
            .map(|x| {
                let v = decode(x);
                if v.len() == 1 {
                    v[0].to_string()
                } else {
                    let s: Vec<String> = v.iter().map(ToString::to_string).collect();
                    format!("({})", s.join(","))
                }
            })
            .collect();
        Self::from_table(order, table, labels).expect("abelian table is valid")
    }

    /// The dihedral group of order `2n`: `r^k` is element `k`, `s r^k` is
    /// element `n + k`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1);
        let order = 2 * n;
        let mul = |a: usize, b: usize| -> usize {
            let (fa, ka) = (a / n, a % n);
            let (fb, kb) = (b / n, b % n);
            // (s^fa r^ka)(s^fb r^kb) = s^(fa+fb) r^(±ka + kb)
            let k = if fb == 1 { (n - ka + kb) % n } else { (ka + kb) % n };
            ((fa + fb) % 2) * n + k
        };
        let table = (0..order * order)
            .map(|x| mul(x / order, x % order) as u32)
            .collect();
        let labels = (0..order)
            .map(|x| match (x / n, x % n) {
                (0, 0) => "1".to_string(),
                (0, k) => format!("r{k}"),
                (_, 0) => "s".to_string(),
                (_, k) => format!("sr{k}"),
            })
            .collect();
        Self::from_table(order, table, labels).expect("dihedral table is valid")
    }

    /// The quaternion group `{±1, ±i, ±j, ±k}`.
    pub fn quaternion() -> Self {
        // Unit quaternions as (sign, basis) with basis 0..4 = 1, i, j, k.
        fn basis_mul(a: usize, b: usize) -> (bool, usize) {
            const T: [[(bool, usize); 4]; 4] = [
                [(false, 0), (false, 1), (false, 2), (false, 3)],
                [(false, 1), (true, 0), (false, 3), (true, 2)],
                [(false, 2), (true, 3), (true, 0), (false, 1)],
                [(false, 3), (false, 2), (true, 1), (true, 0)],
            ];
            T[a][b]
        }
        let names = ["1", "i", "j", "k"];
        let decode = |x: usize| (x >= 4, x % 4);
        let encode = |neg: bool, b: usize| if neg { b + 4 } else { b };
        let table = (0..64)
            .map(|x| {
                let (na, a) = decode(x / 8);
                let (nb, b) = decode(x % 8);
                let (nc, c) = basis_mul(a, b);
                encode(na ^ nb ^ nc, c) as u32
            })
            .collect();
        let labels = (0..8)
            .map(|x| {
                let (neg, b) = decode(x);
                format!("{}{}", if neg { "-" } else { "" }, names[b])
            })
            .collect();
        Self::from_table(8, table, labels).expect("quaternion table is valid")
    }

    /// The direct product, element `(a, b)` at index `a * |H| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (m, n) = (self.order, other.order);
        let order = m * n;
        let mut table = vec![0u32; order * order];
        for x in 0..order {
            for y in 0..order {
                let a = self.mul(x / n, y / n);
                let b = other.mul(x % n, y % n);
                table[x * order + y] = (a * n + b) as u32;
            }
        }
        let labels = (0..order)
            .map(|x| format!("({},{})", self.labels[x / n], other.labels[x % n]))
            .collect();
        Self::from_table(order, table, labels).expect("product table is valid")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::DimensionMismatch {
                expected: self.order,
                got: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1, |acc, a| acc.lcm(&self.element_order(a)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Checks associativity on every triple.
    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = self.mul(a, b);
                (0..n).all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
            })
        })
    }

    pub fn is_central(&self, z: usize) -> bool {
        (0..self.order).all(|g| self.mul(g, z) == self.mul(z, g))
    }

    /// The center, as sorted element indices.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order).filter(|&z| self.is_central(z)).collect()
    }

    /// Conjugacy classes, each sorted, ordered by smallest member (so the
    /// identity class comes first).
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for x in 0..self.order {
            if seen[x] {
                continue;
            }
            let mut class: Vec<usize> = (0..self.order)
                .map(|g| self.mul(self.mul(g, x), self.inverse(g)))
                .collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                seen[y] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// The subgroup generated by `gens`, sorted.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut members = vec![0];
        let mut next = 0;
        while next < members.len() {
            let x = members[next];
            next += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        members
    }

    fn is_subgroup(&self, set: &[usize]) -> bool {
        let mut inside = vec![false; self.order];
        for &x in set {
            if x >= self.order {
                return false;
            }
            inside[x] = true;
        }
        inside[0] && set.iter().all(|&a| set.iter().all(|&b| inside[self.mul(a, b)]))
    }

    pub fn is_normal_subgroup(&self, set: &[usize]) -> bool {
        if !self.is_subgroup(set) {
            return false;
        }
        let mut inside = vec![false; self.order];
        for &x in set {
            inside[x] = true;
        }
        set.iter().all(|&n| {
            (0..self.order).all(|g| inside[self.mul(self.mul(g, n), self.inverse(g))])
        })
    }

    /// `G / N`. Cosets are numbered by their smallest member, so the trivial
    /// coset is 0; each coset is labelled by that member's label.
    pub fn quotient(&self, normal: &[usize]) -> Result<Quotient> {
        if !self.is_normal_subgroup(normal) {
            return Err(Error::NotNormal);
        }
        let mut projection = vec![usize::MAX; self.order];
        let mut representatives = Vec::new();
        for g in 0..self.order {
            if projection[g] != usize::MAX {
                continue;
            }
            let c = representatives.len();
            representatives.push(g);
            for &n in normal {
                projection[self.mul(g, n)] = c;
            }
        }
        let m = representatives.len();
        let mut table = vec![0u32; m * m];
        for (a, &ra) in representatives.iter().enumerate() {
            for (b, &rb) in representatives.iter().enumerate() {
                table[a * m + b] = projection[self.mul(ra, rb)] as u32;
            }
        }
        let labels = representatives
            .iter()
            .map(|&r| self.labels[r].clone())
            .collect();
        Ok(Quotient {
            group: FiniteGroup::from_table(m, table, labels)?,
            projection,
            representatives,
        })
    }

    /// Invariant factors `d_1 >= d_2 >= ...` with `d_{i+1} | d_i`, for an
    /// abelian group; `None` otherwise.
    pub fn abelian_invariants(&self) -> Option<Vec<usize>> {
        if !self.is_abelian() {
            return None;
        }
        let mut n = self.order;
        let mut per_prime: Vec<Vec<usize>> = Vec::new();
        let mut p = 2;
        while n > 1 {
            if n.is_multiple_of(p) {
                while n.is_multiple_of(p) {
                    n /= p;
                }
                per_prime.push(self.elementary_divisors(p));
            }
            p += 1;
        }
        let width = per_prime.iter().map(Vec::len).max().unwrap_or(0);
        Some(
            (0..width)
                .map(|j| per_prime.iter().map(|d| d.get(j).copied().unwrap_or(1)).product())
                .collect(),
        )
    }

    /// Cyclic `p`-power factors of the Sylow `p`-subgroup, descending.
    fn elementary_divisors(&self, p: usize) -> Vec<usize> {
        // s[k] = log_p #{g : g^(p^k) = 1}; factors of order >= p^k number s[k] - s[k-1].
        let log_p = |mut x: usize| {
            let mut e = 0;
            while x > 1 {
                x /= p;
                e += 1;
            }
            e
        };
        let mut s = vec![0usize];
        let mut pk = 1;
        loop {
            pk *= p;
            let count = (0..self.order).filter(|&g| self.pow(g, pk) == 0).count();
            let e = log_p(count);
            if e == *s.last().unwrap() {
                break;
            }
            s.push(e);
        }
        let at_least: Vec<usize> = s.windows(2).map(|w| w[1] - w[0]).collect();
        let mut out = Vec::new();
        for k in (1..=at_least.len()).rev() {
            let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
            out.extend(std::iter::repeat_n(p.pow(k as u32), exactly));
        }
        out
    }

    /// A group realizing a label accepted by [`FiniteGroup::descriptor`], other
    /// than the `nonabelian-order-N` fallback.
    pub fn from_descriptor(label: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown group label {label:?}"));
        match label.trim() {
            "1" => return Ok(Self::trivial()),
            "D8" => return Ok(Self::dihedral(4)),
            "Q8" => return Ok(Self::quaternion()),
            "S3" => return Ok(Self::dihedral(3)),
            _ => {}
        }
        let t = label.trim();
        if let Some(k) = t.strip_prefix("(Z2)^") {
            let k: usize = k.parse().map_err(|_| bad())?;
            return Ok(Self::abelian(&vec![2; k]));
        }
        let factors = t
            .split('x')
            .map(|f| f.strip_prefix('Z').and_then(|n| n.parse::<usize>().ok()).filter(|&n| n >= 1))
            .collect::<Option<Vec<usize>>>()
            .ok_or_else(bad)?;
        Ok(Self::abelian(&factors))
    }

    /// A short structural label: `1`, `Z4`, `Z4xZ2`, `(Z2)^3`, `D8`, `Q8`, `S3`,
    /// or `nonabelian-order-N`.
    pub fn descriptor(&self) -> String {
        if let Some(inv) = self.abelian_invariants() {
            if inv.is_empty() {
                return "1".into();
            }
            if inv.len() >= 2 && inv.iter().all(|&d| d == 2) {
                return format!("(Z2)^{}", inv.len());
            }
            let parts: Vec<String> = inv.iter().map(|d| format!("Z{d}")).collect();
            return parts.join("x");
        }
        let involutions = (1..self.order).filter(|&g| self.mul(g, g) == 0).count();
        match (self.order, involutions) {
            (6, _) => "S3".into(),
            (8, 5) => "D8".into(),
            (8, 1) => "Q8".into(),
            (n, _) => format!("nonabelian-order-{n}"),
        }
    }
}

/// A quotient group together with the projection from the parent.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// Parent element index to coset index.
    pub projection: Vec<usize>,
    /// Smallest parent element in each coset.
    pub representatives: Vec<usize>,
}
