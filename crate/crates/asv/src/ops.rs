//! Difference operators.
//!
//! `DiffOp` is the k-th order forward-difference operator `D` mapping a
//! length-`t` vector to its `t - k` differences, paired with the cumulative
//! "un-differencing" operator that inverts it given the first `k` values.
//! Extending `D` with the `k` initial-condition rows (plain identity rows on
//! the first `k` levels) gives the full-rank operator used to assemble
//! banded priors: levels first, stencils after.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Signed stencil of the k-th difference: coefficient of `x[t-k+i]` is
/// `(-1)^(k-i) * C(k, i)`, so the trailing coefficient is always 1.
fn stencil(k: usize) -> Vec<f64> {
    let mut c = vec![1.0f64];
    for _ in 0..k {
        let mut next = vec![0.0; c.len() + 1];
        for (i, &v) in c.iter().enumerate() {
            next[i] -= v;
            next[i + 1] += v;
        }
        c = next;
    }
    c
}

/// k-th order difference operator on length-`t` vectors, `1 <= k <= 3`.
#[derive(Debug, Clone)]
pub struct DiffOp {
    t: usize,
    k: usize,
    stencil: Vec<f64>,
}

/// Validated constructor; the file-level contract is `1 <= k <= 3`, `t > k`.
pub fn diff_matrix(t: usize, k: usize) -> Result<DiffOp> {
    if !(1..=3).contains(&k) || t <= k {
        return Err(Error::BadDiffOrder { k, t });
    }
    Ok(DiffOp { t, k, stencil: stencil(k) })
}

impl DiffOp {
    pub fn len(&self) -> usize {
        self.t
    }

    pub fn order(&self) -> usize {
        self.k
    }

    pub fn stencil_coeffs<S: Scalar>(&self) -> Vec<S> {
        self.stencil.iter().map(|&c| S::from(c).unwrap()).collect()
    }

    /// `D x`: the `t - k` k-th differences.
    pub fn diff<S: Scalar>(&self, x: &[S]) -> Vec<S> {
        assert_eq!(x.len(), self.t);
        let c = self.stencil_coeffs::<S>();
        (self.k..self.t)
            .map(|r| c.iter().zip(&x[r - self.k..=r]).map(|(&a, &b)| a * b).sum())
            .collect()
    }

    /// Full-rank form: the first `k` entries are the levels themselves, the
    /// rest are the differences.
    pub fn apply_full<S: Scalar>(&self, x: &[S]) -> Vec<S> {
        let mut out = x[..self.k].to_vec();
        out.extend(self.diff(x));
        out
    }

    /// The cumulative operator `S`: reconstruct `x` from its first `k` values
    /// and `d = D x`. Inverse of [`DiffOp::apply_full`] split at `k`.
    pub fn undiff<S: Scalar>(&self, init: &[S], d: &[S]) -> Vec<S> {
        assert_eq!(init.len(), self.k);
        assert_eq!(d.len(), self.t - self.k);
        let c = self.stencil_coeffs::<S>();
        let mut x = Vec::with_capacity(self.t);
        x.extend_from_slice(init);
        for (r, &dr) in (self.k..self.t).zip(d) {
            let carry: S = c[..self.k].iter().zip(&x[r - self.k..r]).map(|(&a, &b)| a * b).sum();
            x.push(dr - carry);
        }
        x
    }

    /// Row `r` of the full-rank operator as `(first_col, coefficients)`.
    pub fn full_row<S: Scalar>(&self, r: usize) -> (usize, Vec<S>) {
        if r < self.k {
            (r, vec![S::one()])
        } else {
            (r - self.k, self.stencil_coeffs())
        }
    }

    /// Dense full-rank operator, for oracles.
    pub fn full_dense<S: Scalar>(&self) -> Vec<Vec<S>> {
        (0..self.t)
            .map(|r| {
                let (c0, coeffs) = self.full_row::<S>(r);
                let mut row = vec![S::zero(); self.t];
                row[c0..c0 + coeffs.len()].copy_from_slice(&coeffs);
                row
            })
            .collect()
    }
}
