//! Exact arithmetic in cyclotomic fields `Q(zeta_m)` and roots of unity.
//!
//! A [`Cyclotomic`] is kept in the power basis `1, zeta, ..., zeta^(phi(m)-1)`,
//! reduced modulo the `m`-th cyclotomic polynomial, so structural equality
//! inside one field is value equality. Numbers from different fields are
//! compared after embedding both into `Q(zeta_lcm)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub(crate) fn cyclotomic_polynomial(m: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.clone();
    }
    // x^m - 1 divided by every Phi_d with d | m, d < m. Coefficients low to high.
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            let div = cyclotomic_polynomial(d);
            num = exact_divide(&num, &div);
        }
    }
    let phi = Arc::new(num);
    cache.lock().unwrap().insert(m, phi.clone());
    phi
}

fn exact_divide(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// An element of the cyclotomic field `Q(zeta_m)`, `zeta_m = exp(2 pi i / m)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational64>,
}

impl Cyclotomic {
    /// Builds `sum_k c_k zeta_m^k` for arbitrary exponents `k` (taken mod `m`).
    pub fn from_powers(order: u32, powers: &[(u32, Rational64)]) -> Self {
        assert!(order >= 1);
        let mut full = vec![Rational64::zero(); order as usize];
        for &(k, c) in powers {
            full[(k % order) as usize] += c;
        }
        Self::reduce(order, full)
    }

    fn reduce(order: u32, mut full: Vec<Rational64>) -> Self {
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        for k in (deg..full.len()).rev() {
            let c = full[k];
            if c.is_zero() {
                continue;
            }
            for (j, &pj) in phi.iter().enumerate() {
                full[k - deg + j] -= c * Rational64::from_integer(pj);
            }
        }
        full.truncate(deg);
        full.resize(deg, Rational64::zero());
        Cyclotomic {
            order,
            coeffs: full,
        }
    }

    pub fn zero(order: u32) -> Self {
        Self::from_rational(order, Rational64::zero())
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational64::one())
    }

    pub fn from_rational(order: u32, q: Rational64) -> Self {
        Self::from_powers(order, &[(0, q)])
    }

    pub fn from_integer(order: u32, n: i64) -> Self {
        Self::from_rational(order, Rational64::from_integer(n))
    }

    /// `zeta_m^k`.
    pub fn root_of_unity(order: u32, k: u32) -> Self {
        Self::from_powers(order, &[(k, Rational64::one())])
    }

    /// `sum_j mult[j] * zeta_m^j`, the trace of a matrix with eigenvalue
    /// multiplicities `mult`.
    pub fn from_root_multiplicities(order: u32, mult: &[u32]) -> Self {
        let powers: Vec<(u32, Rational64)> = mult
            .iter()
            .enumerate()
            .map(|(j, &m)| (j as u32, Rational64::from_integer(m as i64)))
            .collect();
        Self::from_powers(order, &powers)
    }

    pub fn field_order(&self) -> u32 {
        self.order
    }

    /// Coefficients in the reduced power basis.
    pub fn coefficients(&self) -> &[Rational64] {
        &self.coeffs
    }

    /// Integer coefficients in the power basis of `Z[zeta_n]`, if the number
    /// is an algebraic integer written over integers there.
    pub(crate) fn integer_coefficients(&self, n: u32) -> Option<Vec<i64>> {
        self.embed(n)
            .coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Re-expresses the number in `Q(zeta_n)`; `n` must be a multiple of the
    /// current field order.
    pub fn embed(&self, n: u32) -> Self {
        assert!(n.is_multiple_of(self.order), "cannot embed Q(zeta_{}) into Q(zeta_{n})", self.order);
        let step = n / self.order;
        let powers: Vec<(u32, Rational64)> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| (k as u32 * step, c))
            .collect();
        Self::from_powers(n, &powers)
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            (self.clone(), other.clone())
        } else {
            let n = self.order.lcm(&other.order);
            (self.embed(n), other.embed(n))
        }
    }

    /// Complex conjugation, `zeta -> zeta^-1`.
    pub fn conj(&self) -> Self {
        let m = self.order;
        let powers: Vec<(u32, Rational64)> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| ((m - k as u32) % m, c))
            .collect();
        Self::from_powers(m, &powers)
    }

    pub fn scale(&self, q: Rational64) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|&c| c * q).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational, if it is one.
    pub fn to_rational(&self) -> Option<Rational64> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    /// The value as `a + b i` with rational `a, b`, if it lies in `Q(i)`.
    pub fn to_gaussian(&self) -> Option<(Rational64, Rational64)> {
        if let Some(q) = self.to_rational() {
            return Some((q, Rational64::zero()));
        }
        if !self.order.is_multiple_of(4) {
            return None;
        }
        let half = Rational64::new(1, 2);
        let re = (self.clone() + self.conj()).scale(half).to_rational()?;
        let minus_i = Cyclotomic::root_of_unity(self.order, 3 * self.order / 4);
        let im = ((self.clone() - self.conj()) * minus_i).scale(half).to_rational()?;
        Some((re, im))
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(&rhs);
        Cyclotomic {
            order: a.order,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        self + (-rhs)
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(&rhs);
        let m = a.order as usize;
        let mut full = vec![Rational64::zero(); m];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    full[(i + j) % m] += x * y;
                }
            }
        }
        Cyclotomic::reduce(a.order, full)
    }
}

fn fmt_rational(q: &Rational64) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn fmt_gaussian(re: Rational64, im: Rational64) -> String {
    let im_part = |b: Rational64| {
        if b.is_one() {
            "i".to_string()
        } else {
            format!("{}i", fmt_rational(&b))
        }
    };
    match (re.is_zero(), im.is_zero()) {
        (_, true) => fmt_rational(&re),
        (true, false) if im == -Rational64::one() => "-i".into(),
        (true, false) => im_part(im),
        (false, false) if im.is_negative() => {
            format!("{}-{}", fmt_rational(&re), im_part(-im))
        }
        (false, false) => format!("{}+{}", fmt_rational(&re), im_part(im)),
    }
}

/// Values in `Q(i)` print as `"1"`, `"-i"`, `"1+2i"`; anything else prints
/// as `cyc<m>[c0,c1,...]` over the reduced power basis.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((re, im)) = self.to_gaussian() {
            return f.write_str(&fmt_gaussian(re, im));
        }
        let cs: Vec<String> = self.coeffs.iter().map(fmt_rational).collect();
        write!(f, "cyc{}[{}]", self.order, cs.join(","))
    }
}

/// A root of unity `exp(2 pi i * num / den)` with `0 <= num < den` in lowest
/// terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    num: u32,
    den: u32,
}

impl RootOfUnity {
    pub const ONE: RootOfUnity = RootOfUnity { num: 0, den: 1 };
    pub const MINUS_ONE: RootOfUnity = RootOfUnity { num: 1, den: 2 };
    pub const I: RootOfUnity = RootOfUnity { num: 1, den: 4 };
    pub const MINUS_I: RootOfUnity = RootOfUnity { num: 3, den: 4 };

    /// `exp(2 pi i k / m)`.
    pub fn from_turn(k: i64, m: u32) -> Self {
        assert!(m >= 1);
        let k = k.rem_euclid(m as i64) as u32;
        let g = k.gcd(&m).max(1);
        RootOfUnity {
            num: k / g,
            den: m / g,
        }
        .normalized()
    }

    fn normalized(self) -> Self {
        if self.num == 0 {
            RootOfUnity::ONE
        } else {
            self
        }
    }

    /// `i^k`.
    pub fn i_pow(k: i64) -> Self {
        Self::from_turn(k, 4)
    }

    pub fn turn(&self) -> (u32, u32) {
        (self.num, self.den)
    }

    /// Multiplicative order.
    pub fn order(&self) -> u32 {
        self.den
    }

    pub fn is_real(&self) -> bool {
        self.den <= 2
    }

    pub fn pow(&self, k: i64) -> Self {
        Self::from_turn(self.num as i64 * k, self.den)
    }

    pub fn to_cyclotomic(&self) -> Cyclotomic {
        Cyclotomic::root_of_unity(self.den, self.num)
    }
}

impl Mul for RootOfUnity {
    type Output = RootOfUnity;
    fn mul(self, rhs: RootOfUnity) -> RootOfUnity {
        let den = self.den.lcm(&rhs.den);
        let k = self.num * (den / self.den) + rhs.num * (den / rhs.den);
        RootOfUnity::from_turn(k as i64, den)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.num, self.den) {
            (0, _) => f.write_str("1"),
            (1, 2) => f.write_str("-1"),
            (1, 4) => f.write_str("i"),
            (3, 4) => f.write_str("-i"),
            (k, m) => write!(f, "e({k}/{m})"),
        }
    }
}

impl FromStr for RootOfUnity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" | "+1" => Ok(Self::ONE),
            "-1" => Ok(Self::MINUS_ONE),
            "i" | "+i" => Ok(Self::I),
            "-i" => Ok(Self::MINUS_I),
            other => {
                let inner = other
                    .strip_prefix("e(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("bad root of unity {other:?}")))?;
                let (k, m) = inner
                    .split_once('/')
                    .ok_or_else(|| Error::Parse(format!("bad root of unity {other:?}")))?;
                let k: i64 = k.trim().parse().map_err(|_| Error::Parse(other.into()))?;
                let m: u32 = m.trim().parse().map_err(|_| Error::Parse(other.into()))?;
                if m == 0 {
                    return Err(Error::Parse(other.into()));
                }
                Ok(Self::from_turn(k, m))
            }
        }
    }
}

impl Serialize for RootOfUnity {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RootOfUnity {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
