//! Exact root data for `E6`, `E7`, `E8` (Bourbaki numbering), coweight
//! evaluation, and the symmetric subalgebra datum used for `E6(6)`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<Rational64>>;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum RootType {
    E6,
    E7,
    E8,
}

impl RootType {
    pub fn rank(&self) -> usize {
        match self {
            RootType::E6 => 6,
            RootType::E7 => 7,
            RootType::E8 => 8,
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E{}", self.rank())
    }
}

impl FromStr for RootType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "E6" => Ok(RootType::E6),
            "E7" => Ok(RootType::E7),
            "E8" => Ok(RootType::E8),
            _ => Err(Error::Unknown {
                what: "root system type",
                name: s.into(),
            }),
        }
    }
}

/// The Cartan matrix `a_ij = <alpha_i^vee, alpha_j>`. Node 2 hangs off node 4;
/// the others form the chain `1 - 3 - 4 - 5 - ...`.
pub fn cartan_matrix(t: RootType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let mut edges = vec![(1, 3), (2, 4)];
    edges.extend((3..n).map(|i| (i, i + 1)));
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in edges {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    }
    a
}

pub fn to_rational(m: &[Vec<i64>]) -> Matrix {
    m.iter()
        .map(|r| r.iter().map(|&x| Rational64::from_integer(x)).collect())
        .collect()
}

pub fn transpose(m: &Matrix) -> Matrix {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|r| r[j]).collect()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .map(|row| {
            (0..b[0].len())
                .map(|j| row.iter().zip(b).map(|(x, brow)| x * brow[j]).sum())
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &Matrix, v: &[Rational64]) -> Vec<Rational64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn determinant(m: &Matrix) -> Rational64 {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Rational64::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Rational64::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= a[c][c];
        for r in c + 1..n {
            let f = a[r][c] / a[c][c];
            for k in c..n {
                let v = f * a[c][k];
                a[r][k] -= v;
            }
        }
    }
    det
}

pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut a: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(p, c);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c];
                for k in 0..2 * n {
                    let v = f * a[c][k];
                    a[r][k] -= v;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub root_type: RootType,
    pub cartan: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(t: RootType) -> Self {
        RootSystem {
            root_type: t,
            cartan: cartan_matrix(t),
        }
    }

    pub fn rank(&self) -> usize {
        self.root_type.rank()
    }

    pub fn cartan_determinant(&self) -> Rational64 {
        determinant(&to_rational(&self.cartan))
    }

    /// Row `j`: the fundamental coweight `omega_j^vee` in the simple coroot
    /// basis, i.e. row `j` of the inverse Cartan matrix.
    pub fn fundamental_coweights(&self) -> Matrix {
        inverse(&to_rational(&self.cartan)).expect("Cartan matrices are invertible")
    }

    /// Row `i`: the coroot `alpha_i^vee` in the fundamental coweight basis,
    /// i.e. row `i` of the Cartan matrix.
    pub fn coroots_in_coweights(&self) -> Matrix {
        to_rational(&self.cartan)
    }
}

/// An element of the coweight space, in the basis of fundamental coweights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoweightVector {
    pub coords: Vec<Rational64>,
}

impl CoweightVector {
    pub fn new(coords: Vec<Rational64>) -> Self {
        CoweightVector { coords }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&x| Rational64::from_integer(x)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(vec![Rational64::zero(); rank])
    }

    /// `sum_i c_i alpha_i^vee`, rewritten in fundamental coweights.
    pub fn from_coroot_coords(rs: &RootSystem, c: &[Rational64]) -> Result<Self> {
        if c.len() != rs.rank() {
            return Err(Error::DimensionMismatch {
                expected: rs.rank(),
                got: c.len(),
            });
        }
        Ok(Self::new(mat_vec(&transpose(&rs.coroots_in_coweights()), c)))
    }

    /// Coordinates in the simple coroot basis.
    pub fn coroot_coords(&self, rs: &RootSystem) -> Result<Vec<Rational64>> {
        if self.coords.len() != rs.rank() {
            return Err(Error::DimensionMismatch {
                expected: rs.rank(),
                got: self.coords.len(),
            });
        }
        Ok(mat_vec(&transpose(&rs.fundamental_coweights()), &self.coords))
    }

    pub fn scaled(&self, m: Rational64) -> Self {
        Self::new(self.coords.iter().map(|x| x * m).collect())
    }
}

/// Pairing of a weight given in simple-root coordinates with a coweight,
/// using `omega_j^vee(alpha_m) = delta_jm`.
pub fn evaluate(weight: &[Rational64], at: &CoweightVector) -> Result<Rational64> {
    if weight.len() != at.coords.len() {
        return Err(Error::DimensionMismatch {
            expected: at.coords.len(),
            got: weight.len(),
        });
    }
    Ok(weight.iter().zip(&at.coords).map(|(w, t)| w * t).sum())
}

/// Least `m >= 1` with every weight integral at `m * theta`.
pub fn cover_order(theta: &CoweightVector, weights: &[Vec<Rational64>]) -> Result<i64> {
    let mut m = 1i64;
    for w in weights {
        m = m.lcm(evaluate(w, theta)?.denom());
    }
    Ok(m)
}

/// Simple roots of a symmetric subalgebra `k` and its fundamental weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubalgebraDatum {
    pub name: String,
    pub root_type: RootType,
    /// Auxiliary roots `beta_0, beta_1, ...` in the `alpha` basis.
    pub beta: Matrix,
    /// The simple roots of `k` as signed indices into `beta`.
    pub simple_roots: Vec<(i64, usize)>,
    /// Row `k`: `varpi_k` in the basis of the simple roots of `k`.
    pub weight_matrix: Matrix,
}

impl SubalgebraDatum {
    /// Row `i`: the `i`-th simple root of `k` in the `alpha` basis.
    pub fn simple_root_matrix(&self) -> Matrix {
        self.simple_roots
            .iter()
            .map(|&(sign, b)| {
                self.beta[b]
                    .iter()
                    .map(|x| x * Rational64::from_integer(sign))
                    .collect()
            })
            .collect()
    }

    /// Row `k`: `varpi_k` in the `alpha` basis.
    pub fn fundamental_weights(&self) -> Matrix {
        mat_mul(&self.weight_matrix, &self.simple_root_matrix())
    }

    pub fn weight_matrix_invertible(&self) -> bool {
        !determinant(&self.weight_matrix).is_zero()
    }

    /// All `varpi_k` evaluated at `theta`.
    pub fn evaluate_weights(&self, theta: &CoweightVector) -> Result<Vec<Rational64>> {
        self.fundamental_weights()
            .iter()
            .map(|w| evaluate(w, theta))
            .collect()
    }

    pub fn cover_order(&self, theta: &CoweightVector) -> Result<i64> {
        cover_order(theta, &self.fundamental_weights())
    }
}

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

/// `k = sp_4` inside `e_6` for the split real form: `beta_1 = alpha_2`,
/// `beta_2 = alpha_4`, `beta_3 = (alpha_3 + alpha_5)/2`,
/// `beta_4 = (alpha_1 + alpha_6)/2`, `beta_0 = beta_1 + 2 beta_2 + 3 beta_3 + 2 beta_4`,
/// with simple roots `(-beta_0, beta_4, beta_3, beta_2)`.
pub fn e6_6_datum() -> SubalgebraDatum {
    let z = r(0, 1);
    let one = r(1, 1);
    let half = r(1, 2);
    let b1 = vec![z, one, z, z, z, z];
    let b2 = vec![z, z, z, one, z, z];
    let b3 = vec![z, z, half, z, half, z];
    let b4 = vec![half, z, z, z, z, half];
    let b0: Vec<Rational64> = (0..6)
        .map(|i| b1[i] + r(2, 1) * b2[i] + r(3, 1) * b3[i] + r(2, 1) * b4[i])
        .collect();
    let ints = |row: [(i64, i64); 4]| row.iter().map(|&(n, d)| r(n, d)).collect::<Vec<_>>();
    SubalgebraDatum {
        name: "e6_6".into(),
        root_type: RootType::E6,
        beta: vec![b0, b1, b2, b3, b4],
        simple_roots: vec![(-1, 0), (1, 4), (1, 3), (1, 2)],
        weight_matrix: vec![
            ints([(1, 1), (1, 1), (1, 1), (1, 2)]),
            ints([(1, 1), (2, 1), (2, 1), (1, 1)]),
            ints([(1, 1), (2, 1), (3, 1), (3, 2)]),
            ints([(1, 1), (2, 1), (3, 1), (2, 1)]),
        ],
    }
}

pub fn datum(name: &str) -> Result<SubalgebraDatum> {
    match name {
        "e6_6" | "E6(6)" => Ok(e6_6_datum()),
        _ => Err(Error::Unknown {
            what: "subalgebra datum",
            name: name.into(),
        }),
    }
}
