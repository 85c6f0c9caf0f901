//! Signed monomials in the unit Pin group and the component group of the
//! centralizer for the `Spin_n` symmetric pair.
//!
//! Generators `e_1, ..., e_n` square to 1 and pairwise anticommute; an element
//! is `±e_{i_1} ... e_{i_k}` with `i_1 < ... < i_k`, stored as a bitmask with
//! bit `i - 1` for `e_i`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite_group::{close_under_multiplication, Closure, FiniteGroup, DEFAULT_SIZE_CAP};
use crate::partition::Partition;

/// Largest generator index representable.
pub const MAX_GENERATORS: usize = 128;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PinElement {
    negative: bool,
    support: u128,
}

impl PinElement {
    pub const ONE: PinElement = PinElement {
        negative: false,
        support: 0,
    };
    pub const MINUS_ONE: PinElement = PinElement {
        negative: true,
        support: 0,
    };

    /// `sign * e_{i_1} ... e_{i_k}`, in the given order (so the sign absorbs
    /// the reordering). Indices are 1-based and may repeat.
    pub fn word(sign: i8, indices: &[usize]) -> Result<Self> {
        let mut x = if sign < 0 { Self::MINUS_ONE } else { Self::ONE };
        for &i in indices {
            x = pin_mul(&x, &Self::generator(i)?);
        }
        Ok(x)
    }

    /// The generator `e_i`.
    pub fn generator(i: usize) -> Result<Self> {
        if i == 0 || i > MAX_GENERATORS {
            return Err(Error::AmbientTooSmall {
                i,
                n: MAX_GENERATORS,
                needed: i,
            });
        }
        Ok(PinElement {
            negative: false,
            support: 1u128 << (i - 1),
        })
    }

    pub fn sign(&self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    /// Sorted generator indices.
    pub fn support(&self) -> Vec<usize> {
        (0..MAX_GENERATORS)
            .filter(|&b| self.support >> b & 1 == 1)
            .map(|b| b + 1)
            .collect()
    }

    pub fn degree(&self) -> u32 {
        self.support.count_ones()
    }

    /// Membership in the unit Spin group: even support.
    pub fn is_even(&self) -> bool {
        self.degree().is_multiple_of(2)
    }

    pub fn negated(&self) -> Self {
        PinElement {
            negative: !self.negative,
            support: self.support,
        }
    }
}

impl fmt::Display for PinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        if self.support == 0 {
            return f.write_str("1");
        }
        for i in self.support() {
            write!(f, "e{i}")?;
        }
        Ok(())
    }
}

/// Product in the unit Pin group. Moving each generator of `y` leftwards past
/// the larger generators of `x` costs one sign each.
pub fn pin_mul(x: &PinElement, y: &PinElement) -> PinElement {
    let mut swaps = 0u32;
    let mut ys = y.support;
    while ys != 0 {
        let j = ys.trailing_zeros();
        ys &= ys - 1;
        let above = if j >= 127 { 0 } else { x.support >> (j + 1) };
        swaps += above.count_ones();
    }
    PinElement {
        negative: x.negative ^ y.negative ^ (swaps % 2 == 1),
        support: x.support ^ y.support,
    }
}

/// `E_i = e_{j+1} ... e_{j+i}` with `j = i(i-1)/2`, inside `Pin_{1^n}`.
pub fn generator_e(i: usize, n: usize) -> Result<PinElement> {
    let needed = i * (i + 1) / 2;
    if i == 0 || needed > n || needed > MAX_GENERATORS {
        return Err(Error::AmbientTooSmall { i, n, needed });
    }
    let j = i * (i - 1) / 2;
    let indices: Vec<usize> = (j + 1..=j + i).collect();
    PinElement::word(1, &indices)
}

fn ambient(tau1: usize) -> usize {
    tau1 * (tau1 + 1) / 2
}

fn e(i: usize, tau1: usize) -> PinElement {
    generator_e(i, ambient(tau1)).expect("index within ambient size")
}

/// `Gamma = <E_1, ..., E_tau1, -1>`.
pub fn gamma(tau1: usize) -> Result<Closure<PinElement>> {
    let mut gens = vec![PinElement::MINUS_ONE];
    for i in 1..=tau1 {
        gens.push(generator_e(i, ambient(tau1))?);
    }
    close_under_multiplication(PinElement::ONE, &gens, pin_mul, DEFAULT_SIZE_CAP)
}

/// `Gamma ∩ Spin`, generated by `-1`, the even `E_k` and the products
/// `E_1 E_k` with `k` odd.
pub fn gamma_spin(tau1: usize) -> Result<Closure<PinElement>> {
    if tau1 == 0 {
        return Err(Error::InvalidPartition("largest part must be positive".into()));
    }
    let n = ambient(tau1);
    let mut gens = vec![PinElement::MINUS_ONE];
    let e1 = generator_e(1, n)?;
    for k in 2..=tau1 {
        let ek = generator_e(k, n)?;
        gens.push(if k % 2 == 0 { ek } else { pin_mul(&e1, &ek) });
    }
    close_under_multiplication(PinElement::ONE, &gens, pin_mul, DEFAULT_SIZE_CAP)
}

pub fn gamma_spin_group(tau1: usize) -> Result<FiniteGroup> {
    Ok(gamma_spin(tau1)?.group)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    /// Central extension: `Gamma ∩ Spin` itself.
    Extension,
    /// Some odd part repeats: the quotient by `{±1}`.
    Split,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::Extension => "extension",
            Model::Split => "split",
        })
    }
}

/// The component group of the centralizer, realized inside (a quotient of)
/// `Gamma ∩ Spin`.
#[derive(Clone, Debug)]
pub struct ComponentGroup {
    pub tau: Partition,
    pub group: FiniteGroup,
    pub model: Model,
    /// Odd codimension-2 part `l` to the image of its distinguished element.
    pub distinguished: BTreeMap<usize, usize>,
    /// Image of `-1`; the identity in the split model.
    pub minus_one: usize,
    /// A Pin representative for each element.
    pub representatives: Vec<PinElement>,
}

impl ComponentGroup {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn descriptor(&self) -> String {
        self.group.descriptor()
    }

    /// Element of the group represented by a Pin element of `Gamma ∩ Spin`.
    pub fn element_of(&self, x: &PinElement) -> Option<usize> {
        self.representatives
            .iter()
            .position(|r| r == x || (self.model == Model::Split && *r == x.negated()))
    }

    /// The distinguished element for the odd codimension-2 part `l`.
    pub fn distinguished_element(&self, l: usize) -> Result<usize> {
        check_odd_codim2(&self.tau, l)?;
        Ok(self.distinguished[&l])
    }

    /// Whether `Z_4 -> component group` at `l` is injective; always false for
    /// even `l`. Any part `l < tau_1` is accepted, not only codimension-2
    /// parts, so repeated odd parts can be queried in the split model.
    pub fn z4_hom_injective(&self, l: usize) -> Result<bool> {
        if self.tau.multiplicity(l) == 0 || l >= self.tau.largest() {
            return Err(Error::NotCodim2Part {
                tau: self.tau.to_string(),
                part: l,
            });
        }
        if l.is_multiple_of(2) {
            return Ok(false);
        }
        let x = distinguished_pin_element(l, self.tau.largest());
        let idx = self.element_of(&x).expect("distinguished element lies in the group");
        Ok(self.group.element_order(idx) == 4)
    }
}

/// Parts of multiplicity one below `tau_1`, without the boundary test.
fn single_parts(tau: &Partition) -> Vec<usize> {
    tau.multiplicities()
        .into_iter()
        .filter(|&(l, m)| m == 1 && l != tau.largest())
        .map(|(l, _)| l)
        .collect()
}

fn check_odd_codim2(tau: &Partition, l: usize) -> Result<()> {
    if l.is_multiple_of(2) {
        return Err(Error::EvenPart(l));
    }
    if !single_parts(tau).contains(&l) {
        return Err(Error::NotCodim2Part {
            tau: tau.to_string(),
            part: l,
        });
    }
    Ok(())
}

/// `E_{l-1} E_{l+1}` for `l > 1`, `E_2` for `l = 1`, with sign `+1`.
pub fn distinguished_pin_element(l: usize, tau1: usize) -> PinElement {
    if l == 1 {
        e(2, tau1)
    } else {
        pin_mul(&e(l - 1, tau1), &e(l + 1, tau1))
    }
}

pub fn component_group(tau: &Partition) -> Result<ComponentGroup> {
    tau.codim2_parts()?;
    build_component_group(tau)
}

fn build_component_group(tau: &Partition) -> Result<ComponentGroup> {
    let codim2 = single_parts(tau);
    let tau1 = tau.largest();
    let closure = gamma_spin(tau1)?;
    let split = tau
        .multiplicities()
        .iter()
        .any(|(&part, &m)| part % 2 == 1 && m > 1);
    let minus_one = closure
        .index_of(&PinElement::MINUS_ONE)
        .expect("-1 lies in Gamma ∩ Spin");

    let (group, representatives, project): (FiniteGroup, Vec<PinElement>, Vec<usize>) = if split {
        let q = closure.group.quotient(&[0, minus_one])?;
        let reps: Vec<PinElement> = q
            .representatives
            .iter()
            .map(|&r| {
                let x = closure.elements[r];
                if x.sign() < 0 {
                    x.negated()
                } else {
                    x
                }
            })
            .collect();
        let labels = reps.iter().map(|x| format!("±{x}")).collect();
        (q.group.with_labels(labels)?, reps, q.projection)
    } else {
        let n = closure.group.order();
        (closure.group.clone(), closure.elements.clone(), (0..n).collect())
    };

    let mut distinguished = BTreeMap::new();
    for &l in codim2.iter().filter(|&&l| l % 2 == 1) {
        let x = distinguished_pin_element(l, tau1);
        let idx = closure
            .index_of(&x)
            .expect("distinguished element lies in Gamma ∩ Spin");
        distinguished.insert(l, project[idx]);
    }
    Ok(ComponentGroup {
        tau: tau.clone(),
        group,
        model: if split { Model::Split } else { Model::Extension },
        distinguished,
        minus_one: project[minus_one],
        representatives,
    })
}

/// Element index of the distinguished element in the component group of
/// `tau`. Only needs `l` to be an odd part of multiplicity one below `tau_1`;
/// the boundary test is not applied.
pub fn distinguished_element(tau: &Partition, l: usize) -> Result<usize> {
    check_odd_codim2(tau, l)?;
    build_component_group(tau)?.distinguished_element(l)
}

pub fn z4_hom_injective(tau: &Partition, l: usize) -> Result<bool> {
    component_group(tau)?.z4_hom_injective(l)
}

/// Brute-force orders of the three subgroups of `Gamma` generated by
/// `{E_4i, E_{4i+1} E_{4i+3}}`, `{E_{4i+1}}` and `{E_{4i+2}}`, next to the
/// orders given by the closed forms `2^q`, `|Pin_{1^r}| = 2^{r+1}` and
/// `4^t / 2^{t-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaCensus {
    pub tau1: usize,
    pub gamma0: SubgroupCount,
    pub gamma1: SubgroupCount,
    pub gamma2: SubgroupCount,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupCount {
    pub computed: usize,
    pub formula: usize,
}

impl SubgroupCount {
    pub fn agrees(&self) -> bool {
        self.computed == self.formula
    }
}

impl GammaCensus {
    /// Human-readable lines for each subgroup whose closed form disagrees.
    pub fn discrepancies(&self) -> Vec<String> {
        [("Gamma_0", self.gamma0), ("Gamma_1", self.gamma1), ("Gamma_2", self.gamma2)]
            .iter()
            .filter(|(_, c)| !c.agrees())
            .map(|(name, c)| {
                format!(
                    "{name} for tau_1 = {}: order {} by enumeration, closed form gives {}",
                    self.tau1, c.computed, c.formula
                )
            })
            .collect()
    }
}

pub fn gamma_census(tau1: usize) -> Result<GammaCensus> {
    let t = tau1 as i64;
    let floor4 = |x: i64| x.div_euclid(4);
    let order_of = |gens: Vec<PinElement>| -> Result<usize> {
        Ok(close_under_multiplication(PinElement::ONE, &gens, pin_mul, DEFAULT_SIZE_CAP)?
            .group
            .order())
    };
    let mut g0 = Vec::new();
    let mut g1 = Vec::new();
    let mut g2 = Vec::new();
    for k in 1..=tau1 {
        match k % 4 {
            0 => g0.push(e(k, tau1)),
            1 => {
                g1.push(e(k, tau1));
                if k + 2 <= tau1 {
                    g0.push(pin_mul(&e(k, tau1), &e(k + 2, tau1)));
                }
            }
            2 => g2.push(e(k, tau1)),
            _ => {}
        }
    }
    let pow2 = |x: i64| if x < 0 { 1 } else { 1usize << x };
    let q = floor4(t) + floor4(t - 3);
    let r = floor4(t - 1);
    let tt = floor4(t - 2);
    Ok(GammaCensus {
        tau1,
        gamma0: SubgroupCount {
            computed: order_of(g0)?,
            formula: pow2(q),
        },
        gamma1: SubgroupCount {
            computed: order_of(g1)?,
            formula: pow2(r + 1),
        },
        gamma2: SubgroupCount {
            computed: order_of(g2)?,
            formula: if tt <= 0 { 1 } else { pow2(tt + 1) },
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts).unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let e1 = PinElement::generator(1).unwrap();
        let e2 = PinElement::generator(2).unwrap();
        assert_eq!(pin_mul(&e1, &e2).to_string(), "e1e2");
        assert_eq!(pin_mul(&e2, &e1).to_string(), "-e1e2");
        assert_eq!(pin_mul(&e1, &e1), PinElement::ONE);
        assert_eq!(PinElement::MINUS_ONE.to_string(), "-1");
        assert_eq!(PinElement::word(-1, &[3, 2]).unwrap().to_string(), "e2e3");
    }

    #[test]
    fn e_generators() {
        assert_eq!(generator_e(1, 1).unwrap().to_string(), "e1");
        assert_eq!(generator_e(2, 3).unwrap().to_string(), "e2e3");
        assert_eq!(generator_e(3, 6).unwrap().support(), vec![4, 5, 6]);
        assert!(matches!(
            generator_e(3, 5),
            Err(Error::AmbientTooSmall { needed: 6, .. })
        ));
    }

    #[test]
    fn small_gamma_spin() {
        assert_eq!(gamma_spin_group(1).unwrap().order(), 2);
        assert_eq!(gamma_spin_group(2).unwrap().descriptor(), "Z4");
        assert_eq!(gamma_spin_group(3).unwrap().descriptor(), "Z4xZ2");
        assert_eq!(gamma(3).unwrap().group.order(), 16);
    }

    #[test]
    fn component_group_examples() {
        let c = component_group(&p(&[2, 1])).unwrap();
        assert_eq!((c.model, c.descriptor().as_str()), (Model::Extension, "Z4"));
        assert_eq!(c.representatives[c.distinguished[&1]].to_string(), "e2e3");
        let c = component_group(&p(&[2, 1, 1])).unwrap();
        assert_eq!((c.model, c.descriptor().as_str()), (Model::Split, "Z2"));
        assert_eq!(c.minus_one, 0);
        let c = component_group(&p(&[3, 2, 1])).unwrap();
        assert_eq!(c.descriptor(), "Z4xZ2");
        assert_eq!(c.distinguished.keys().copied().collect::<Vec<_>>(), vec![1]);
        assert!(component_group(&p(&[3, 1])).is_err());
    }

    #[test]
    fn distinguished_examples() {
        let tau = p(&[4, 3, 2]);
        let d = distinguished_element(&tau, 3).unwrap();
        let c = build_component_group(&tau).unwrap();
        assert_eq!(c.representatives[d], pin_mul(&e(2, 4), &e(4, 4)));
        assert!(component_group(&tau).is_err());
        assert!(matches!(distinguished_element(&p(&[2, 1]), 2), Err(Error::EvenPart(2))));
        assert!(matches!(
            distinguished_element(&p(&[2, 2, 1]), 3),
            Err(Error::NotCodim2Part { .. })
        ));
    }

    #[test]
    fn injectivity_examples() {
        assert!(z4_hom_injective(&p(&[2, 1]), 1).unwrap());
        assert!(!z4_hom_injective(&p(&[2, 1, 1]), 1).unwrap());
        assert!(!z4_hom_injective(&p(&[3, 2, 1]), 2).unwrap());
        assert!(z4_hom_injective(&p(&[2, 1]), 2).is_err());
    }

    #[test]
    fn census_small() {
        let c = gamma_census(3).unwrap();
        assert_eq!(c.gamma0.computed, 2);
        assert_eq!(c.gamma0.formula, 1);
        assert!(!c.discrepancies().is_empty());
    }
}
