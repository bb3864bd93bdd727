use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Symmetric positive-definite matrix stored by its lower bands.
///
/// `bands[d][c]` holds entry `(c + d, c)`; `bands[0]` is the main diagonal.
/// Only the lower triangle is stored, symmetry is implied. SPD is a contract:
/// factorization reports indefiniteness instead of falling back to pivoting.
#[derive(Debug, Clone, PartialEq)]
pub struct BandedSpd<S> {
    dim: usize,
    bandwidth: usize,
    bands: Vec<Vec<S>>,
}

impl<S: Scalar> BandedSpd<S> {
    pub fn zeros(dim: usize, bandwidth: usize) -> Self {
        assert!(dim > 0, "empty matrix");
        assert!(bandwidth < dim, "bandwidth must be below the dimension");
        let bands = (0..=bandwidth).map(|d| vec![S::zero(); dim - d]).collect();
        Self { dim, bandwidth, bands }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bandwidth(&self) -> usize {
        self.bandwidth
    }

    /// Entry `(r, c)` of the full symmetric matrix; zero outside the band.
    pub fn get(&self, r: usize, c: usize) -> S {
        let (hi, lo) = if r >= c { (r, c) } else { (c, r) };
        let d = hi - lo;
        if d > self.bandwidth {
            S::zero()
        } else {
            self.bands[d][lo]
        }
    }

    /// Mutable access to the stored lower-triangle entry `(c + d, c)`.
    pub fn band_mut(&mut self, d: usize, c: usize) -> &mut S {
        &mut self.bands[d][c]
    }

    /// Accumulate `w * s s'` for a stencil row `s` supported on
    /// `cols[0]..cols[0]+s.len()`. This is how the weighted Gram products
    /// `D' diag(w) D` are assembled without forming `D`.
    pub fn add_weighted_outer(&mut self, first_col: usize, coeffs: &[S], w: S) {
        for (i, &ci) in coeffs.iter().enumerate() {
            for (j, &cj) in coeffs.iter().enumerate().take(i + 1) {
                let (r, c) = (first_col + i, first_col + j);
                self.bands[r - c][c] += w * ci * cj;
            }
        }
    }

    /// Add `diag` to the main diagonal.
    pub fn add_diag(&mut self, diag: &[S]) {
        assert_eq!(diag.len(), self.dim);
        for (q, &d) in self.bands[0].iter_mut().zip(diag) {
            *q += d;
        }
    }

    /// `y = Q x` using the symmetric band structure.
    pub fn matvec(&self, x: &[S]) -> Vec<S> {
        assert_eq!(x.len(), self.dim);
        let mut y = vec![S::zero(); self.dim];
        for c in 0..self.dim {
            y[c] += self.bands[0][c] * x[c];
            for d in 1..=self.bandwidth {
                if c + d >= self.dim {
                    break;
                }
                let q = self.bands[d][c];
                y[c + d] += q * x[c];
                y[c] += q * x[c + d];
            }
        }
        y
    }

    /// Dense copy, for oracles and small-system checks.
    pub fn to_dense(&self) -> Vec<Vec<S>> {
        let mut m = vec![vec![S::zero(); self.dim]; self.dim];
        for (r, row) in m.iter_mut().enumerate() {
            for (c, v) in row.iter_mut().enumerate() {
                *v = self.get(r, c);
            }
        }
        m
    }

    /// Banded Cholesky `Q = L L'`. `O(dim * bandwidth^2)`.
    pub fn cholesky(&self) -> Result<BandedChol<S>> {
        let n = self.dim;
        let k = self.bandwidth;
        let mut lb: Vec<Vec<S>> = (0..=k).map(|d| vec![S::zero(); n - d]).collect();
        for c in 0..n {
            let mut s = self.bands[0][c];
            for m in 1..=k.min(c) {
                s -= lb[m][c - m] * lb[m][c - m];
            }
            if !(s > S::zero()) || !s.is_finite() {
                return Err(Error::Indefinite { minor: c });
            }
            let ljj = s.sqrt();
            lb[0][c] = ljj;
            for d in 1..=k {
                let r = c + d;
                if r >= n {
                    break;
                }
                let mut s = self.bands[d][c];
                let p0 = r.saturating_sub(k);
                for p in p0..c {
                    s -= lb[r - p][p] * lb[c - p][p];
                }
                lb[d][c] = s / ljj;
            }
        }
        Ok(BandedChol { dim: n, bandwidth: k, bands: lb })
    }

    /// Solve `Q x = rhs` through the Cholesky factor.
    pub fn solve(&self, rhs: &[S]) -> Result<Vec<S>> {
        Ok(self.cholesky()?.solve(rhs))
    }
}

/// Lower-banded Cholesky factor of a [`BandedSpd`].
#[derive(Debug, Clone)]
pub struct BandedChol<S> {
    dim: usize,
    bandwidth: usize,
    bands: Vec<Vec<S>>,
}

impl<S: Scalar> BandedChol<S> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Forward substitution `L y = b`.
    pub fn solve_lower(&self, b: &[S]) -> Vec<S> {
        assert_eq!(b.len(), self.dim);
        let mut y = vec![S::zero(); self.dim];
        for i in 0..self.dim {
            let mut s = b[i];
            for m in 1..=self.bandwidth.min(i) {
                s -= self.bands[m][i - m] * y[i - m];
            }
            y[i] = s / self.bands[0][i];
        }
        y
    }

    /// Back substitution `L' x = y`.
    pub fn solve_upper(&self, y: &[S]) -> Vec<S> {
        assert_eq!(y.len(), self.dim);
        let mut x = vec![S::zero(); self.dim];
        for i in (0..self.dim).rev() {
            let mut s = y[i];
            for m in 1..=self.bandwidth {
                if i + m >= self.dim {
                    break;
                }
                s -= self.bands[m][i] * x[i + m];
            }
            x[i] = s / self.bands[0][i];
        }
        x
    }

    /// Full solve `Q x = b` via `L (L' x) = b`.
    pub fn solve(&self, b: &[S]) -> Vec<S> {
        self.solve_upper(&self.solve_lower(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense_solve(a: &[Vec<f64>], b: &[f64]) -> Vec<f64> {
        // Gaussian elimination with partial pivoting; oracle only.
        let n = b.len();
        let mut m: Vec<Vec<f64>> = a.iter().cloned().collect();
        let mut rhs = b.to_vec();
        for col in 0..n {
            let piv = (col..n)
                .max_by(|&i, &j| m[i][col].abs().partial_cmp(&m[j][col].abs()).unwrap())
                .unwrap();
            m.swap(col, piv);
            rhs.swap(col, piv);
            for r in col + 1..n {
                let f = m[r][col] / m[col][col];
                for c in col..n {
                    m[r][c] -= f * m[col][c];
                }
                rhs[r] -= f * rhs[col];
            }
        }
        let mut x = vec![0.0; n];
        for r in (0..n).rev() {
            let mut s = rhs[r];
            for c in r + 1..n {
                s -= m[r][c] * x[c];
            }
            x[r] = s / m[r][r];
        }
        x
    }

    fn random_spd_tridiag(n: usize, seed: u64) -> BandedSpd<f64> {
        // Diagonally dominant tridiagonal, deterministic from the seed.
        let mut state = seed;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let mut q = BandedSpd::zeros(n, 1);
        let off: Vec<f64> = (0..n - 1).map(|_| next() - 0.5).collect();
        for c in 0..n {
            let mut d = 0.5 + next();
            if c > 0 {
                d += off[c - 1].abs();
            }
            if c < n - 1 {
                d += off[c].abs();
            }
            *q.band_mut(0, c) = d;
        }
        for c in 0..n - 1 {
            *q.band_mut(1, c) = off[c];
        }
        q
    }

    #[test]
    fn identity_solve_is_identity() {
        let mut q = BandedSpd::<f64>::zeros(4, 1);
        for c in 0..4 {
            *q.band_mut(0, c) = 1.0;
        }
        let rhs = [1.0, -2.0, 3.0, 0.5];
        let x = q.solve(&rhs).unwrap();
        assert_eq!(x, rhs.to_vec());
    }

    #[test]
    fn banded_solve_matches_dense_oracle() {
        for seed in [1u64, 7, 42] {
            let q = random_spd_tridiag(50, seed);
            let rhs: Vec<f64> = (0..50).map(|i| ((i * 37 % 11) as f64) - 5.0).collect();
            let x = q.solve(&rhs).unwrap();
            let x_dense = dense_solve(&q.to_dense(), &rhs);
            for (a, b) in x.iter().zip(&x_dense) {
                assert!((a - b).abs() <= 1e-10 * (1.0 + b.abs()), "{a} vs {b}");
            }
            // Residual contract.
            let back = q.matvec(&x);
            let num: f64 = back.iter().zip(&rhs).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt();
            let den: f64 = rhs.iter().map(|b| b * b).sum::<f64>().sqrt();
            assert!(num / den <= 1e-10);
        }
    }

    #[test]
    fn indefinite_reports_leading_minor() {
        let mut q = BandedSpd::<f64>::zeros(3, 1);
        *q.band_mut(0, 0) = 1.0;
        *q.band_mut(0, 1) = 1.0;
        *q.band_mut(1, 0) = 2.0; // makes the 2x2 minor negative
        *q.band_mut(0, 2) = 1.0;
        match q.cholesky() {
            Err(Error::Indefinite { minor }) => assert_eq!(minor, 1),
            other => panic!("expected indefinite, got {other:?}"),
        }
    }

    #[test]
    fn generic_scalar_f32_roundtrip() {
        let mut q = BandedSpd::<f32>::zeros(3, 1);
        *q.band_mut(0, 0) = 2.0;
        *q.band_mut(0, 1) = 2.0;
        *q.band_mut(0, 2) = 2.0;
        *q.band_mut(1, 0) = -1.0;
        *q.band_mut(1, 1) = -1.0;
        let x = q.solve(&[1.0, 0.0, 1.0]).unwrap();
        let back = q.matvec(&x);
        for (a, b) in back.iter().zip(&[1.0f32, 0.0, 1.0]) {
            assert!((a - b).abs() < 1e-5);
        }
    }
}
