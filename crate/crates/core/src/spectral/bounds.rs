use super::{SpectralError, Spectrum, INTERLACING_TOLERANCE};
use crate::scalar::Scalar;

/// Upper bound on the spectral radius of a graph with `n` vertices, `m`
/// edges and minimum degree `δ ≥ 1`:
/// `(δ − 1)/2 + √(2m − nδ + (δ + 1)²/4)`.
pub fn hong_nikiforov_bound(n: usize, m: usize, delta: usize) -> Result<f64, SpectralError> {
    if delta == 0 {
        return Err(SpectralError::InvalidArgument(
            "minimum degree must be at least 1".into(),
        ));
    }
    let d = delta as f64;
    let radicand = 2.0 * m as f64 - (n * delta) as f64 + (d + 1.0) * (d + 1.0) / 4.0;
    if radicand < 0.0 {
        return Err(SpectralError::NegativeRadicand(radicand));
    }
    Ok((d - 1.0) / 2.0 + radicand.sqrt())
}

/// Smaller eigenvalue of the 2×2 quotient `[[a1, r/n1], [r/n2, a2]]`:
/// `½(a1 + a2 − √((a1 − a2)² + 4r²/(n1 n2)))`.
pub fn quotient_lambda2_2part<T: Scalar>(a1: T, a2: T, r: usize, n1: usize, n2: usize) -> Result<T, SpectralError> {
    if n1 == 0 || n2 == 0 {
        return Err(SpectralError::InvalidArgument("part sizes must be positive".into()));
    }
    let r = T::of(r as f64);
    let cross = T::of(4.0) * r * r / T::of((n1 * n2) as f64);
    let diff = a1 - a2;
    Ok(T::of(0.5) * (a1 + a2 - (diff * diff + cross).sqrt()))
}

/// True iff `small` interlaces `big`: `η_i ≥ μ_i ≥ η_{n−m+i}`, within
/// [`INTERLACING_TOLERANCE`].
pub fn check_interlacing<T: Scalar>(small: &Spectrum<T>, big: &Spectrum<T>) -> Result<bool, SpectralError> {
    let (m, n) = (small.len(), big.len());
    if m >= n {
        return Err(SpectralError::InvalidArgument(format!(
            "interlacing needs fewer values in the small spectrum ({m} vs {n})"
        )));
    }
    let tol = T::of(INTERLACING_TOLERANCE);
    let (mu, eta) = (small.values(), big.values());
    Ok((0..m).all(|i| eta[i] + tol >= mu[i] && mu[i] >= eta[n - m + i] - tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn bound_is_tight_on_regular_graphs() {
        assert_abs_diff_eq!(hong_nikiforov_bound(5, 10, 4).unwrap(), 4.0, epsilon = 1e-12);
        assert_abs_diff_eq!(hong_nikiforov_bound(10, 15, 3).unwrap(), 3.0, epsilon = 1e-12);
        assert!(hong_nikiforov_bound(5, 10, 0).is_err());
        assert!(matches!(
            hong_nikiforov_bound(100, 1, 5),
            Err(SpectralError::NegativeRadicand(_))
        ));
    }

    #[test]
    fn two_part_closed_form() {
        assert_eq!(quotient_lambda2_2part(0.0, 0.0, 0, 1, 1).unwrap(), 0.0);
        // K4 split {0} | {1,2,3}: ½(2 − √16) = −1
        assert_abs_diff_eq!(quotient_lambda2_2part(0.0, 2.0, 3, 1, 3).unwrap(), -1.0, epsilon = 1e-12);
        assert!(quotient_lambda2_2part(0.0, 0.0, 1, 0, 1).is_err());
    }

    #[test]
    fn interlacing_examples() {
        let big = Spectrum::new(vec![3.0, -1.0, -1.0, -1.0], 0.0);
        let small = Spectrum::new(vec![3.0, -1.0], 0.0);
        assert!(check_interlacing(&small, &big).unwrap());
        let big = Spectrum::new(vec![2.0, -1.0, -1.0], 0.0);
        assert!(!check_interlacing(&Spectrum::new(vec![5.0], 0.0), &big).unwrap());
        assert!(check_interlacing(&big, &big).is_err());
    }
}
