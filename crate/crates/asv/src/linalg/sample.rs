use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::Result;
use crate::scalar::Scalar;

use super::BandedSpd;

/// One-shot draw from `N(Q^{-1} b, Q^{-1})` given the canonical pair
/// `(Q, b)`: banded Cholesky, two substitutions for the mean, one more for
/// the noise. The whole latent path comes out of a single factorization,
/// in `O(dim * bandwidth^2)`.
pub fn sample_gaussian_canonical<S, R>(q: &BandedSpd<S>, linear: &[S], rng: &mut R) -> Result<Vec<S>>
where
    S: Scalar,
    StandardNormal: Distribution<S>,
    R: Rng + ?Sized,
{
    let chol = q.cholesky()?;
    let mut x = chol.solve(linear);
    let z: Vec<S> = (0..q.dim()).map(|_| StandardNormal.sample(rng)).collect();
    // L' w = z gives w ~ N(0, Q^{-1}).
    let w = chol.solve_upper(&z);
    for (xi, wi) in x.iter_mut().zip(w) {
        *xi += wi;
    }
    Ok(x)
}
