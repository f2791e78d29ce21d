//! Cyclic Jacobi eigenvalue iteration for dense symmetric matrices.

use super::{SpectralError, Spectrum, SymmetricMatrix};
use crate::scalar::Scalar;

/// Hard cap on full sweeps.
pub const MAX_SWEEPS: usize = 100;

fn max_off_diagonal<T: Scalar>(a: &[T], n: usize) -> T {
    let mut off = T::zero();
    for i in 0..n {
        for j in i + 1..n {
            off = off.max(a[i * n + j].abs());
        }
    }
    off
}

/// All eigenvalues of `m`, descending.
///
/// Each rotation annihilates one off-diagonal pair; sweeps visit pairs in
/// row order until the largest off-diagonal magnitude is below
/// `T::jacobi_tolerance()` times the max-norm of `m`.
pub fn eigenvalues_sym<T: Scalar>(m: &SymmetricMatrix<T>) -> Result<Spectrum<T>, SpectralError> {
    let n = m.order();
    let mut a = m.as_slice().to_vec();
    let norm = m.max_norm();
    let threshold = T::jacobi_tolerance() * norm;
    let half = T::of(0.5);

    let mut off = max_off_diagonal(&a, n);
    let mut sweeps = 0;
    while off > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(SpectralError::NoConvergence {
                sweeps,
                residual: off.to_f64_lossy(),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == T::zero() {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) * half / apq;
                // t = tan of the rotation angle, the smaller root
                let t = if theta.abs() > T::one() / T::epsilon() {
                    half / theta
                } else {
                    let t = T::one() / (theta.abs() + theta.hypot(T::one()));
                    if theta < T::zero() {
                        -t
                    } else {
                        t
                    }
                };
                let c = T::one() / t.hypot(T::one());
                let s = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = T::zero();
                a[q * n + p] = T::zero();
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
            }
        }
        off = max_off_diagonal(&a, n);
    }

    let diag = (0..n).map(|i| a[i * n + i]).collect();
    Ok(Spectrum::new(diag, off))
}
