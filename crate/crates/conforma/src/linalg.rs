//! Dense symmetric positive-definite linear algebra.
//!
//! Everything downstream (KRR fits, Gaussian process posteriors, conformal
//! residual lines) reduces to factorizing a regularized Gram matrix once and
//! reusing the factor for solves, log-determinants, and inverse diagonals.
//! Sample sizes stay in the low thousands, so plain dense storage without
//! pivoting is enough.

use crate::error::{Error, Result};

/// Dense symmetric matrix with full row-major storage.
#[derive(Debug, Clone)]
pub struct SymMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            entries: vec![0.0; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.entries[i * order + i] = 1.0;
        }
        m
    }

    /// Builds from the lower triangle of `f`; the upper triangle is mirrored
    /// so the result is symmetric by construction.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            for j in 0..=i {
                let v = f(i, j);
                m.entries[i * order + j] = v;
                m.entries[j * order + i] = v;
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set_sym(&mut self, i: usize, j: usize, value: f64) {
        self.entries[i * self.order + j] = value;
        self.entries[j * self.order + i] = value;
    }

    pub fn add_to_diagonal(&mut self, shift: f64) {
        for i in 0..self.order {
            self.entries[i * self.order + i] += shift;
        }
    }

    pub fn mul_vec(&self, v: &[f64]) -> Result<Vec<f64>> {
        if v.len() != self.order {
            return Err(Error::DimensionMismatch {
                expected: self.order,
                got: v.len(),
            });
        }
        Ok((0..self.order)
            .map(|i| {
                let row = &self.entries[i * self.order..(i + 1) * self.order];
                row.iter().zip(v).map(|(a, b)| a * b).sum()
            })
            .collect())
    }
}

/// Lower-triangular Cholesky factor `L` with `L L^T` equal to the source
/// matrix. Immutable once built; safe to share across threads.
#[derive(Debug, Clone)]
pub struct CholFactor {
    order: usize,
    lower: Vec<f64>,
}

/// Factorizes a symmetric positive-definite matrix.
///
/// Fails with [`Error::NotPositiveDefinite`] at the first non-positive
/// pivot; no pivoting is attempted.
pub fn cholesky_factorize(matrix: &SymMatrix) -> Result<CholFactor> {
    let n = matrix.order();
    let mut lower = vec![0.0; n * n];
    for j in 0..n {
        for k in 0..j {
            let mut s = matrix.get(j, k);
            for m in 0..k {
                s -= lower[j * n + m] * lower[k * n + m];
            }
            lower[j * n + k] = s / lower[k * n + k];
        }
        let mut d = matrix.get(j, j);
        for m in 0..j {
            d -= lower[j * n + m] * lower[j * n + m];
        }
        if !(d > 0.0) {
            return Err(Error::NotPositiveDefinite { pivot: j });
        }
        lower[j * n + j] = d.sqrt();
    }
    Ok(CholFactor { order: n, lower })
}

impl CholFactor {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    fn l(&self, i: usize, j: usize) -> f64 {
        self.lower[i * self.order + j]
    }

    /// Solves `L x = b`.
    pub(crate) fn forward(&self, b: &[f64]) -> Vec<f64> {
        let n = self.order;
        let mut x = vec![0.0; n];
        for i in 0..n {
            let mut s = b[i];
            for k in 0..i {
                s -= self.l(i, k) * x[k];
            }
            x[i] = s / self.l(i, i);
        }
        x
    }

    /// Solves `L^T x = b`.
    fn backward(&self, mut x: Vec<f64>) -> Vec<f64> {
        let n = self.order;
        for i in (0..n).rev() {
            let mut s = x[i];
            for k in i + 1..n {
                s -= self.l(k, i) * x[k];
            }
            x[i] = s / self.l(i, i);
        }
        x
    }

    /// Solves `A x = rhs` for the factorized matrix `A`.
    pub fn solve(&self, rhs: &[f64]) -> Result<Vec<f64>> {
        if rhs.len() != self.order {
            return Err(Error::DimensionMismatch {
                expected: self.order,
                got: rhs.len(),
            });
        }
        Ok(self.backward(self.forward(rhs)))
    }

    /// Log-determinant of the factorized matrix: `2 sum_i ln L_ii`.
    pub fn log_det(&self) -> f64 {
        (0..self.order).map(|i| 2.0 * self.l(i, i).ln()).sum()
    }

    /// Diagonal of the inverse of the factorized matrix.
    ///
    /// Column `i` of `L^{-1}` is found by a forward solve against the unit
    /// vector; its squared norm is the `i`-th diagonal entry of `A^{-1}`.
    /// The leading zeros of each column are skipped, giving `O(n^3 / 6)`
    /// total work.
    pub fn inverse_diagonal(&self) -> Vec<f64> {
        let n = self.order;
        let mut diag = vec![0.0; n];
        let mut col = vec![0.0; n];
        for i in 0..n {
            col[i] = 1.0 / self.l(i, i);
            for r in i + 1..n {
                let mut s = 0.0;
                for k in i..r {
                    s += self.l(r, k) * col[k];
                }
                col[r] = -s / self.l(r, r);
            }
            diag[i] = col[i..n].iter().map(|v| v * v).sum();
        }
        diag
    }

    /// Factor of the matrix bordered by one extra row and column.
    ///
    /// For a factorized `A` and border `(k, c)`, returns the factor of
    /// `[[A, k], [k^T, c]]`. The new last row is `(w, s)` with `w = L^{-1} k`
    /// and `s^2 = c - w^T w`; this is exactly the factor a fresh
    /// factorization of the bordered matrix would produce.
    pub fn extended(&self, border: &[f64], corner: f64) -> Result<CholFactor> {
        if border.len() != self.order {
            return Err(Error::DimensionMismatch {
                expected: self.order,
                got: border.len(),
            });
        }
        let n = self.order;
        let w = self.forward(border);
        let s2 = corner - w.iter().map(|v| v * v).sum::<f64>();
        if !(s2 > 0.0) {
            return Err(Error::NotPositiveDefinite { pivot: n });
        }
        let m = n + 1;
        let mut lower = vec![0.0; m * m];
        for i in 0..n {
            lower[i * m..i * m + n].copy_from_slice(&self.lower[i * n..(i + 1) * n]);
        }
        lower[n * m..n * m + n].copy_from_slice(&w);
        lower[n * m + n] = s2.sqrt();
        Ok(CholFactor { order: m, lower })
    }
}
