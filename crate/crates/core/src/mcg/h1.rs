use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Square integer matrix acting on column homology vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1Matrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl H1Matrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![BigInt::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = BigInt::one();
        }
        H1Matrix { dim, entries }
    }

    pub fn from_columns(cols: &[Vec<i64>]) -> Self {
        let dim = cols.len();
        let mut entries = vec![BigInt::zero(); dim * dim];
        for (j, col) in cols.iter().enumerate() {
            for (i, &x) in col.iter().enumerate() {
                entries[i * dim + j] = BigInt::from(x);
            }
        }
        H1Matrix { dim, entries }
    }

    /// `x ↦ x + e·<c, x>·c` with `<a_i, b_i> = 1`.
    pub fn transvection(c: &[i64], e: i64) -> Self {
        let dim = c.len();
        let mut m = Self::identity(dim);
        // <c, x> = sum_i c_{a_i} x_{b_i} - c_{b_i} x_{a_i}
        let mut row = vec![0i64; dim];
        for i in 0..dim / 2 {
            row[2 * i + 1] = c[2 * i];
            row[2 * i] = -c[2 * i + 1];
        }
        for i in 0..dim {
            for j in 0..dim {
                let v = e * c[i] * row[j];
                if v != 0 {
                    m.entries[i * dim + j] += v;
                }
            }
        }
        m
    }

    /// `self · T_c^e` as a rank-one update.
    pub fn mul_transvection(&self, c: &[i64], e: i64) -> H1Matrix {
        let n = self.dim;
        let mc: Vec<BigInt> = (0..n)
            .map(|i| (0..n).filter(|&k| c[k] != 0).map(|k| &self.entries[i * n + k] * c[k]).sum())
            .collect();
        let mut row = vec![0i64; n];
        for i in 0..n / 2 {
            row[2 * i + 1] = c[2 * i];
            row[2 * i] = -c[2 * i + 1];
        }
        let mut out = self.clone();
        for i in 0..n {
            if mc[i].is_zero() {
                continue;
            }
            let s = &mc[i] * e;
            for j in 0..n {
                if row[j] != 0 {
                    out.entries[i * n + j] += &s * row[j];
                }
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub fn mul(&self, other: &H1Matrix) -> H1Matrix {
        let n = self.dim;
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero() {
                        entries[i * n + j] += a * b;
                    }
                }
            }
        }
        H1Matrix { dim: n, entries }
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        let n = self.dim;
        (0..n)
            .map(|i| {
                let s: BigInt = (0..n).map(|j| &self.entries[i * n + j] * x[j]).sum();
                i64::try_from(s).expect("homology coordinate fits in i64")
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    pub fn preserves_pairing(&self) -> bool {
        let n = self.dim;
        let basis = |i: usize| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v
        };
        (0..n).all(|i| {
            (0..n).all(|j| {
                let (x, y) = (basis(i), basis(j));
                crate::surface::intersection(&self.apply(&x), &self.apply(&y)).ok()
                    == crate::surface::intersection(&x, &y).ok()
            })
        })
    }
}
