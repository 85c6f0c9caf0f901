//! Exact character tables via the Burnside-Dixon class-algebra method.
//!
//! Central characters are found as common eigenvectors of the class
//! multiplication matrices over a prime field `F_p` with `p = 1 (mod e)`,
//! `e` the exponent. Each character value mod `p` is then lifted to
//! `Q(zeta_e)` by recovering the eigenvalue multiplicities of the
//! representing matrix from the values on powers of the element.

use std::cmp::Reverse;

use num_rational::Rational64;

use super::cyclotomic::{Cyclotomic, RootOfUnity};
use super::modp::{prime_above, primitive_root_of_order, Fp};
use super::FiniteGroup;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub size: usize,
    pub elements: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    group_order: usize,
    exponent: usize,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    inverse_class: Vec<usize>,
    rows: Vec<Vec<Cyclotomic>>,
    /// `spectra[row][class][j]`: multiplicity of `zeta_e^j` as an eigenvalue.
    spectra: Vec<Vec<Vec<u32>>>,
}

impl CharacterTable {
    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    /// The exponent `e`; all values lie in `Q(zeta_e)`.
    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn rows(&self) -> &[Vec<Cyclotomic>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.rows[i]
    }

    pub fn degree(&self, row: usize) -> usize {
        self.spectra[row][0].iter().sum::<u32>() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.rows.len()).map(|r| self.degree(r)).collect()
    }

    /// `chi_row(g)` for an element index `g`.
    pub fn value_at(&self, row: usize, element: usize) -> &Cyclotomic {
        &self.rows[row][self.class_of[element]]
    }

    /// The scalar by which the central element `z` acts in the irreducible
    /// representation `row`.
    pub fn central_scalar(&self, row: usize, z: usize) -> Result<RootOfUnity> {
        let c = self.class_of[z];
        if self.classes[c].size != 1 {
            return Err(Error::NotCentral(z));
        }
        let spectrum = &self.spectra[row][c];
        let support: Vec<usize> = (0..spectrum.len()).filter(|&j| spectrum[j] > 0).collect();
        match support.as_slice() {
            [j] => Ok(RootOfUnity::from_turn(*j as i64, self.exponent as u32)),
            _ => Err(Error::CharacterTable(format!(
                "central element {z} does not act by a scalar in row {row}"
            ))),
        }
    }

    /// Exact first orthogonality: `sum_C |C| chi(C) conj(psi(C)) = |G| delta`.
    pub fn rows_orthogonal(&self) -> bool {
        let n = self.rows.len();
        let Some(ints) = IntegerTable::new(self) else {
            return self.rows_orthogonal_slow();
        };
        (0..n).all(|a| {
            (0..n).all(|b| {
                let expected = if a == b { self.group_order as i64 } else { 0 };
                let terms = self
                    .classes
                    .iter()
                    .enumerate()
                    .map(|(k, class)| (class.size as i64, &ints.values[a][k], &ints.conj[b][k]));
                ints.sum_is(terms, expected)
            })
        })
    }

    fn rows_orthogonal_slow(&self) -> bool {
        let e = self.exponent as u32;
        let n = self.rows.len();
        (0..n).all(|a| {
            (0..n).all(|b| {
                let mut s = Cyclotomic::zero(e);
                for (k, class) in self.classes.iter().enumerate() {
                    let term = self.rows[a][k].clone() * self.rows[b][k].conj();
                    s = s + term.scale(Rational64::from_integer(class.size as i64));
                }
                let expected = if a == b { self.group_order as i64 } else { 0 };
                s == Cyclotomic::from_integer(e, expected)
            })
        })
    }

    /// Exact second orthogonality: `sum_chi chi(C) conj(chi(D)) = |C_G(g)| delta`.
    pub fn columns_orthogonal(&self) -> bool {
        let r = self.classes.len();
        let expected = |c: usize, d: usize| {
            if c == d {
                (self.group_order / self.classes[c].size) as i64
            } else {
                0
            }
        };
        let Some(ints) = IntegerTable::new(self) else {
            let e = self.exponent as u32;
            return (0..r).all(|c| {
                (0..r).all(|d| {
                    let mut s = Cyclotomic::zero(e);
                    for row in &self.rows {
                        s = s + row[c].clone() * row[d].conj();
                    }
                    s == Cyclotomic::from_integer(e, expected(c, d))
                })
            });
        };
        (0..r).all(|c| {
            (0..r).all(|d| {
                let terms = (0..self.rows.len()).map(|row| (1, &ints.values[row][c], &ints.conj[row][d]));
                ints.sum_is(terms, expected(c, d))
            })
        })
    }

    pub fn sum_of_squared_degrees(&self) -> usize {
        self.degrees().iter().map(|d| d * d).sum()
    }

    /// Index of the inverse class of class `k`.
    pub fn inverse_class(&self, k: usize) -> usize {
        self.inverse_class[k]
    }
}

impl FiniteGroup {
    pub fn character_table(&self) -> Result<CharacterTable> {
        build(self)
    }
}

fn build(g: &FiniteGroup) -> Result<CharacterTable> {
    let order = g.order();
    let exponent = g.exponent();
    let class_lists = g.conjugacy_classes();
    let r = class_lists.len();
    let mut class_of = vec![0usize; order];
    for (k, c) in class_lists.iter().enumerate() {
        for &x in c {
            class_of[x] = k;
        }
    }
    let classes: Vec<ConjugacyClass> = class_lists
        .iter()
        .map(|c| ConjugacyClass {
            representative: c[0],
            size: c.len(),
            elements: c.clone(),
        })
        .collect();
    let inverse_class: Vec<usize> = classes
        .iter()
        .map(|c| class_of[g.inverse(c.representative)])
        .collect();

    let p = prime_above(2 * order as u64, exponent as u64);
    let f = Fp { p };

    let vectors = if r == order {
        abelian_central_characters(g, &f, &class_of)
    } else {
        split_class_algebra(g, &f, &classes, &class_of)?
    };
    if vectors.len() != r {
        return Err(Error::CharacterTable(format!(
            "found {} characters for {r} classes",
            vectors.len()
        )));
    }

    let z = primitive_root_of_order(&f, exponent as u64);
    let e_inv = f.inv(exponent as u64 % p);
    let powers: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| {
            let mut x = 0;
            (0..exponent)
                .map(|_| {
                    let k = class_of[x];
                    x = g.mul(x, c.representative);
                    k
                })
                .collect()
        })
        .collect();

    let mut spectra: Vec<Vec<Vec<u32>>> = Vec::with_capacity(r);
    for omega in &vectors {
        // d^2 = |G| / sum_k omega_k omega_{k*} / |C_k|
        let mut s = 0;
        for k in 0..r {
            let t = f.mul(f.mul(omega[k], omega[inverse_class[k]]), f.inv(classes[k].size as u64));
            s = f.add(s, t);
        }
        if s == 0 {
            return Err(Error::CharacterTable("degenerate central character".into()));
        }
        let d2 = f.mul(order as u64 % p, f.inv(s));
        let degree = (1..=order as u64)
            .take_while(|d| d * d <= order as u64)
            .find(|d| d * d % p == d2)
            .ok_or_else(|| Error::CharacterTable("no integral degree".into()))?;
        let chi: Vec<u64> = (0..r)
            .map(|k| f.mul(f.mul(degree, omega[k]), f.inv(classes[k].size as u64)))
            .collect();
        let mut row_spectra = Vec::with_capacity(r);
        for k in 0..r {
            let mut mult = Vec::with_capacity(exponent);
            for j in 0..exponent {
                let mut acc = 0;
                for (l, &kl) in powers[k].iter().enumerate() {
                    let zl = f.pow(z, ((exponent - j) * l % exponent) as u64);
                    acc = f.add(acc, f.mul(chi[kl], zl));
                }
                let m = f.mul(acc, e_inv);
                if m > degree {
                    return Err(Error::CharacterTable(format!(
                        "eigenvalue multiplicity {m} exceeds degree {degree}"
                    )));
                }
                mult.push(m as u32);
            }
            if mult.iter().sum::<u32>() as u64 != degree {
                return Err(Error::CharacterTable("multiplicities do not sum to degree".into()));
            }
            row_spectra.push(mult);
        }
        spectra.push(row_spectra);
    }

    spectra.sort_by_key(|s| (s[0].iter().sum::<u32>(), Reverse(s.clone())));
    let e = exponent as u32;
    let rows = spectra
        .iter()
        .map(|s| s.iter().map(|m| Cyclotomic::from_root_multiplicities(e, m)).collect())
        .collect();
    Ok(CharacterTable {
        group_order: order,
        exponent,
        classes,
        class_of,
        inverse_class,
        rows,
        spectra,
    })
}

/// For abelian groups every class is a point and characters are
/// homomorphisms; they are read off from a basis of cyclic factors.
fn abelian_central_characters(g: &FiniteGroup, f: &Fp, class_of: &[usize]) -> Vec<Vec<u64>> {
    // Greedy basis: repeatedly adjoin an element of maximal order outside the
    // current span, then realize characters on the product of cyclic pieces
    // by solving on the generated subgroup.
    let order = g.order();
    let mut chars: Vec<Vec<u64>> = vec![vec![1; order]];
    let mut span = vec![0usize];
    let mut in_span = vec![false; order];
    in_span[0] = true;
    while span.len() < order {
        let h = (0..order)
            .filter(|&x| !in_span[x])
            .max_by_key(|&x| (g.element_order(x), Reverse(x)))
            .unwrap();
        // smallest t with h^t in span
        let mut t = 1;
        let mut ht = h;
        while !in_span[ht] {
            ht = g.mul(ht, h);
            t += 1;
        }
        let mut new_chars = Vec::with_capacity(chars.len() * t);
        let mut new_span = Vec::with_capacity(span.len() * t);
        let mut pos = vec![usize::MAX; order];
        for (i, &s) in span.iter().enumerate() {
            pos[s] = i;
        }
        for chi in &chars {
            // chi(h)^t must equal chi(h^t); pick each of the t roots.
            let target = chi[ht];
            let roots: Vec<u64> = (1..f.p).filter(|&x| f.pow(x, t as u64) == target).collect();
            for w in roots {
                let mut ext = vec![0u64; order];
                let mut hp = 0;
                let mut wp = 1;
                for _ in 0..t {
                    for &s in &span {
                        ext[g.mul(hp, s)] = f.mul(wp, chi[s]);
                    }
                    hp = g.mul(hp, h);
                    wp = f.mul(wp, w);
                }
                new_chars.push(ext);
            }
        }
        let mut hp = 0;
        for _ in 0..t {
            for &s in &span {
                new_span.push(g.mul(hp, s));
            }
            hp = g.mul(hp, h);
        }
        for &x in &new_span {
            in_span[x] = true;
        }
        span = new_span;
        chars = new_chars;
    }
    // chars are indexed by element; for an abelian group class k is element
    // with class_of[x] = k, and the central character equals the character.
    chars
        .into_iter()
        .map(|chi| {
            let mut v = vec![0u64; order];
            for x in 0..order {
                v[class_of[x]] = chi[x];
            }
            v
        })
        .collect()
}

/// Common eigenvectors of the class multiplication matrices `M_i`, with
/// `(M_i)_{jk} = #{x in C_i : x^-1 g_k in C_j}`, normalized so the identity
/// coordinate is 1.
fn split_class_algebra(
    g: &FiniteGroup,
    f: &Fp,
    classes: &[ConjugacyClass],
    class_of: &[usize],
) -> Result<Vec<Vec<u64>>> {
    let r = classes.len();
    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![identity];

    for i in 1..r {
        if spaces.iter().all(|w| w.len() == 1) {
            break;
        }
        // dense M_i, column k = class counts of x^-1 g_k over x in C_i
        let mut m = vec![vec![0u64; r]; r];
        for (k, ck) in classes.iter().enumerate() {
            for &x in &classes[i].elements {
                let j = class_of[g.mul(g.inverse(x), ck.representative)];
                m[j][k] += 1;
            }
        }
        for row in m.iter_mut() {
            for v in row.iter_mut() {
                *v %= f.p;
            }
        }
        let mut next = Vec::new();
        for w in spaces {
            if w.len() == 1 {
                next.push(w);
                continue;
            }
            let d = w.len();
            let mut pivots = Vec::with_capacity(d);
            for row in &w {
                pivots.push(row.iter().position(|&x| x != 0).unwrap());
            }
            // images M_i w_b, expressed in the basis of W via pivot coordinates
            let images: Vec<Vec<u64>> = w
                .iter()
                .map(|wb| {
                    (0..r)
                        .map(|j| (0..r).fold(0, |acc, k| f.add(acc, f.mul(m[j][k], wb[k]))))
                        .collect()
                })
                .collect();
            let a: Vec<Vec<u64>> = (0..d)
                .map(|row| (0..d).map(|b| images[b][pivots[row]]).collect())
                .collect();
            let roots = f.roots(&f.char_poly(&a));
            if roots.len() <= 1 {
                next.push(w);
                continue;
            }
            let mut total = 0;
            for lam in roots {
                let shifted: Vec<Vec<u64>> = a
                    .iter()
                    .enumerate()
                    .map(|(ri, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(ci, &x)| if ri == ci { f.sub(x, lam) } else { x })
                            .collect()
                    })
                    .collect();
                let kernel = f.null_space(&shifted);
                total += kernel.len();
                let mut sub: Vec<Vec<u64>> = kernel
                    .iter()
                    .map(|c| {
                        (0..r)
                            .map(|col| {
                                (0..d).fold(0, |acc, b| f.add(acc, f.mul(c[b], w[b][col])))
                            })
                            .collect()
                    })
                    .collect();
                f.rref(&mut sub);
                next.push(sub);
            }
            if total != d {
                return Err(Error::CharacterTable(
                    "class matrix is not diagonalizable on an eigenspace".into(),
                ));
            }
        }
        spaces = next;
    }
    spaces
        .into_iter()
        .map(|w| {
            if w.len() != 1 {
                return Err(Error::CharacterTable("eigenspaces did not split".into()));
            }
            let v = &w[0];
            if v[0] == 0 {
                return Err(Error::CharacterTable("eigenvector vanishes at identity".into()));
            }
            let inv = f.inv(v[0]);
            Ok(v.iter().map(|&x| f.mul(x, inv)).collect())
        })
        .collect()
}

/// The table over the power basis of `Z[zeta_e]`, for fast exact sums of
/// products. Products are accumulated unreduced and reduced once.
struct IntegerTable {
    phi: std::sync::Arc<Vec<i64>>,
    values: Vec<Vec<Vec<i64>>>,
    conj: Vec<Vec<Vec<i64>>>,
}

impl IntegerTable {
    fn new(t: &CharacterTable) -> Option<Self> {
        let e = t.exponent as u32;
        let convert = |f: &dyn Fn(&Cyclotomic) -> Cyclotomic| -> Option<Vec<Vec<Vec<i64>>>> {
            t.rows
                .iter()
                .map(|row| row.iter().map(|v| f(v).integer_coefficients(e)).collect())
                .collect()
        };
        Some(IntegerTable {
            phi: super::cyclotomic::cyclotomic_polynomial(e),
            values: convert(&|v| v.clone())?,
            conj: convert(&|v| v.conj())?,
        })
    }

    fn sum_is<'a, I>(&self, terms: I, expected: i64) -> bool
    where
        I: Iterator<Item = (i64, &'a Vec<i64>, &'a Vec<i64>)>,
    {
        let deg = self.phi.len() - 1;
        let mut acc = vec![0i64; 2 * deg.max(1) - 1];
        for (w, x, y) in terms {
            for (i, &xi) in x.iter().enumerate() {
                if xi == 0 {
                    continue;
                }
                let wx = w * xi;
                for (j, &yj) in y.iter().enumerate() {
                    acc[i + j] += wx * yj;
                }
            }
        }
        for k in (deg..acc.len()).rev() {
            let c = acc[k];
            if c != 0 {
                for (j, &pj) in self.phi.iter().enumerate() {
                    acc[k - deg + j] -= c * pj;
                }
            }
        }
        acc.truncate(deg);
        acc.iter().enumerate().all(|(k, &c)| c == if k == 0 { expected } else { 0 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(g: &FiniteGroup) -> CharacterTable {
        let t = g.character_table().unwrap();
        assert_eq!(t.len(), t.classes().len());
        assert_eq!(t.sum_of_squared_degrees(), g.order());
        assert!(t.rows_orthogonal());
        assert!(t.columns_orthogonal());
        t
    }

    #[test]
    fn cyclic_four() {
        let t = check(&FiniteGroup::cyclic(4));
        let on_gen: Vec<String> = (0..4).map(|r| t.value_at(r, 1).to_string()).collect();
        assert_eq!(t.row(0).iter().map(ToString::to_string).collect::<Vec<_>>(), ["1"; 4]);
        let mut sorted = on_gen.clone();
        sorted.sort();
        assert_eq!(sorted, ["-1", "-i", "1", "i"]);
    }

    #[test]
    fn quaternion_and_dihedral() {
        let q = check(&FiniteGroup::quaternion());
        assert_eq!(q.degrees(), vec![1, 1, 1, 1, 2]);
        assert_eq!(q.central_scalar(4, 4).unwrap(), RootOfUnity::MINUS_ONE);
        assert_eq!(q.central_scalar(0, 4).unwrap(), RootOfUnity::ONE);
        assert!(matches!(q.central_scalar(4, 1), Err(Error::NotCentral(1))));
        let d = check(&FiniteGroup::dihedral(4));
        assert_eq!(d.degrees(), vec![1, 1, 1, 1, 2]);
        let s3 = check(&FiniteGroup::dihedral(3));
        assert_eq!(s3.degrees(), vec![1, 1, 2]);
        let d5 = check(&FiniteGroup::dihedral(5));
        assert_eq!(d5.degrees(), vec![1, 1, 2, 2]);
    }

    #[test]
    fn products() {
        check(&FiniteGroup::abelian(&[2, 2]));
        check(&FiniteGroup::abelian(&[4, 2, 3]));
        check(&FiniteGroup::quaternion().direct_product(&FiniteGroup::dihedral(3)));
    }
}
