use crate::error::Result;
use crate::ops::diff_matrix;
use crate::scalar::Scalar;

use super::BandedSpd;

/// Prior precision of the latent path given log evolution variances `v`:
/// `Q_v = D' diag(exp(-v)) D` where `D` is the full-rank k-th difference
/// operator (levels on the first `k` rows, stencils after).
///
/// For `k = 1` this is the familiar tridiagonal with diagonal
/// `exp(-v_t) + exp(-v_{t+1})` (last entry `exp(-v_T)`) and off-diagonal
/// `-exp(-v_{t+1})`.
pub fn build_qv<S: Scalar>(v: &[S], k: usize) -> Result<BandedSpd<S>> {
    let op = diff_matrix(v.len(), k)?;
    let mut q = BandedSpd::zeros(v.len(), k);
    for (t, &vt) in v.iter().enumerate() {
        let (c0, coeffs) = op.full_row::<S>(t);
        q.add_weighted_outer(c0, &coeffs, (-vt).exp());
    }
    Ok(q)
}

/// Prior precision of the log evolution variances under the AR(phi)
/// evolution with Polya-Gamma precisions `xi`:
/// `Q_{xi,phi} = A' diag(xi) A` with `A` mapping `v` to the innovations
/// `(v_1, v_2 - phi v_1, ..., v_T - phi v_{T-1})`.
///
/// Tridiagonal: diagonal `xi_t + phi^2 xi_{t+1}` (last entry `xi_T`),
/// off-diagonal `-phi xi_{t+1}`.
pub fn build_qxi<S: Scalar>(xi: &[S], phi: S) -> BandedSpd<S> {
    let t = xi.len();
    let mut q = BandedSpd::zeros(t, 1);
    q.add_weighted_outer(0, &[S::one()], xi[0]);
    for (tt, &x) in xi.iter().enumerate().skip(1) {
        q.add_weighted_outer(tt - 1, &[-phi, S::one()], x);
    }
    q
}

/// `A' x` for the AR(phi) innovation operator above: entry `t` is
/// `x_t - phi x_{t+1}` (plain `x_T` at the end). Used for the linear term of
/// the `v` draw when the innovation mean shift `(a - b) / (2 xi)` is active.
pub fn ar_transpose_apply<S: Scalar>(phi: S, x: &[S]) -> Vec<S> {
    let t = x.len();
    (0..t).map(|i| if i + 1 < t { x[i] - phi * x[i + 1] } else { x[i] }).collect()
}
