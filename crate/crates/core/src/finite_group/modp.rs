//! Linear algebra over a prime field `F_p`, `p < 2^31`.

#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    #[cfg(test)]
    pub fn reduce_i64(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    /// Characteristic polynomial of a square matrix, coefficients low to high
    /// (monic). Reduces to Hessenberg form first.
    pub fn char_poly(&self, mat: &[Vec<u64>]) -> Vec<u64> {
        let n = mat.len();
        let mut h: Vec<Vec<u64>> = mat.to_vec();
        for m in 1..n.saturating_sub(1) {
            let Some(piv) = (m..n).find(|&i| h[i][m - 1] != 0) else {
                continue;
            };
            if piv != m {
                h.swap(piv, m);
                for row in h.iter_mut() {
                    row.swap(piv, m);
                }
            }
            let inv = self.inv(h[m][m - 1]);
            for i in m + 1..n {
                let f = self.mul(h[i][m - 1], inv);
                if f == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = self.mul(f, h[m][j]);
                    h[i][j] = self.sub(h[i][j], v);
                }
                for row in h.iter_mut() {
                    let v = self.mul(f, row[i]);
                    row[m] = self.add(row[m], v);
                }
            }
        }
        // p_k(x) = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 0..n {
            let prev = &polys[k];
            let mut next = vec![0u64; k + 2];
            for (d, &c) in prev.iter().enumerate() {
                next[d + 1] = self.add(next[d + 1], c);
                let v = self.mul(c, h[k][k]);
                next[d] = self.sub(next[d], v);
            }
            let mut prod = 1;
            for i in (0..k).rev() {
                prod = self.mul(prod, h[i + 1][i]);
                if prod == 0 {
                    break;
                }
                let coef = self.mul(h[i][k], prod);
                for (d, &c) in polys[i].iter().enumerate() {
                    let v = self.mul(coef, c);
                    next[d] = self.sub(next[d], v);
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    pub fn eval(&self, poly: &[u64], x: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// All roots in `F_p` of a polynomial, by exhaustion.
    pub fn roots(&self, poly: &[u64]) -> Vec<u64> {
        (0..self.p).filter(|&x| self.eval(poly, x) == 0).collect()
    }

    /// Basis of the null space of a square matrix.
    pub fn null_space(&self, mat: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let n = mat.len();
        let mut a: Vec<Vec<u64>> = mat.to_vec();
        let pivots = self.rref(&mut a);
        let mut is_pivot = vec![false; n];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..n)
            .filter(|&f| !is_pivot[f])
            .map(|free| {
                let mut v = vec![0u64; n];
                v[free] = 1;
                for (r, &c) in pivots.iter().enumerate() {
                    v[c] = self.neg(a[r][free]);
                }
                v
            })
            .collect()
    }

    /// Reduces rows to reduced row echelon form in place, drops zero rows,
    /// and returns the pivot column of each remaining row.
    pub fn rref(&self, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, piv);
            let inv = self.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let f = rows[i][c];
                    for j in 0..cols {
                        let v = self.mul(f, rows[r][j]);
                        rows[i][j] = self.sub(rows[i][j], v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        pivots
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime `p > lower` with `p = 1 (mod e)`.
pub(crate) fn prime_above(lower: u64, e: u64) -> u64 {
    let mut p = lower / e * e + 1;
    while p <= lower || !is_prime(p) {
        p += e;
    }
    p
}

/// An element of exact multiplicative order `e` in `F_p`; needs `e | p - 1`.
pub(crate) fn primitive_root_of_order(f: &Fp, e: u64) -> u64 {
    let primes: Vec<u64> = (2..=e).filter(|&q| e.is_multiple_of(q) && is_prime(q)).collect();
    (2..f.p)
        .map(|g| f.pow(g, (f.p - 1) / e))
        .find(|&z| primes.iter().all(|&q| f.pow(z, e / q) != 1))
        .unwrap_or(1)
}
