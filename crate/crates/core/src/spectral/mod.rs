//! Dense symmetric spectra of graph matrices.
//!
//! Everything here is generic over [`Scalar`]; the graph-level helpers
//! [`lambda`] and [`lambda_alpha`] work in `f64`.

mod bounds;
mod jacobi;
mod matrices;

use serde::Serialize;
use thiserror::Error;

use crate::scalar::Scalar;

pub use bounds::{check_interlacing, hong_nikiforov_bound, quotient_lambda2_2part};
pub use jacobi::{eigenvalues_sym, MAX_SWEEPS};
pub use matrices::{
    a_alpha_matrix, adjacency_matrix, lambda, lambda_alpha, quotient_matrix, spectrum,
    spectrum_alpha, QuotientMatrix,
};

/// Two reals closer than this compare as [`BandOrdering::Boundary`].
pub const COMPARISON_BAND: f64 = 1e-9;

/// Slack allowed in interlacing checks.
pub const INTERLACING_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("matrix data has {got} entries, expected {expected}")]
    Shape { got: usize, expected: usize },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },
    #[error("alpha = {0} is outside [0, 1)")]
    AlphaOutOfRange(f64),
    #[error("eigenvalue index {index} out of range 1..={order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("negative radicand {0} in spectral-radius bound")]
    NegativeRadicand(f64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Dense real symmetric matrix, stored row-major. Symmetry is exact.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix<T> {
    order: usize,
    data: Vec<T>,
}

impl<T: Scalar> SymmetricMatrix<T> {
    pub fn zeros(order: usize) -> Self {
        SymmetricMatrix {
            order,
            data: vec![T::zero(); order * order],
        }
    }

    /// Builds from the upper triangle: `f(i, j)` is evaluated for `i ≤ j`
    /// and mirrored.
    pub fn from_upper<F>(order: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> T,
    {
        let mut m = Self::zeros(order);
        for i in 0..order {
            for j in i..order {
                let x = f(i, j);
                m.data[i * order + j] = x;
                m.data[j * order + i] = x;
            }
        }
        m
    }

    /// Row-major data; rejects anything not exactly symmetric.
    pub fn from_row_major(order: usize, data: Vec<T>) -> Result<Self, SpectralError> {
        if data.len() != order * order {
            return Err(SpectralError::Shape {
                got: data.len(),
                expected: order * order,
            });
        }
        for i in 0..order {
            for j in i + 1..order {
                if data[i * order + j] != data[j * order + i] {
                    return Err(SpectralError::NotSymmetric(i, j));
                }
            }
        }
        Ok(SymmetricMatrix { order, data })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.order + j]
    }

    /// Sets `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, x: T) {
        self.data[i * self.order + j] = x;
        self.data[j * self.order + i] = x;
    }

    pub fn trace(&self) -> T {
        (0..self.order).fold(T::zero(), |acc, i| acc + self.get(i, i))
    }

    /// Largest absolute entry.
    pub fn max_norm(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, x| acc.max(x.abs()))
    }

    /// Principal submatrix on the given (sorted, distinct) indices.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Self {
        Self::from_upper(indices.len(), |a, b| self.get(indices[a], indices[b]))
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn eigenvalues(&self) -> Result<Spectrum<T>, SpectralError> {
        eigenvalues_sym(self)
    }
}

/// Eigenvalues sorted in descending order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum<T> {
    values: Vec<T>,
    /// Largest off-diagonal magnitude when the solver stopped.
    pub residual: T,
}

impl<T: Scalar> Spectrum<T> {
    /// Sorts the given values descending.
    pub fn new(mut values: Vec<T>, residual: T) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
        Spectrum { values, residual }
    }

    #[inline]
    pub fn values(&self) -> &[T] {
        &self.values
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `i`-th largest, 1-based.
    pub fn nth(&self, i: usize) -> Result<T, SpectralError> {
        if i == 0 || i > self.values.len() {
            return Err(SpectralError::IndexOutOfRange {
                index: i,
                order: self.values.len(),
            });
        }
        Ok(self.values[i - 1])
    }

    pub fn largest(&self) -> T {
        self.values[0]
    }
}

/// Outcome of a floating-point comparison with a tie band.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BandOrdering {
    Less,
    Boundary,
    Greater,
}

/// Compares `a` with `b`, reporting `Boundary` when `|a − b| < band`.
pub fn compare_banded(a: f64, b: f64, band: f64) -> BandOrdering {
    if (a - b).abs() < band {
        BandOrdering::Boundary
    } else if a < b {
        BandOrdering::Less
    } else {
        BandOrdering::Greater
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_row_major_checks_symmetry() {
        assert!(SymmetricMatrix::from_row_major(2, vec![0.0, 1.0, 1.0, 0.0]).is_ok());
        assert_eq!(
            SymmetricMatrix::from_row_major(2, vec![0.0, 1.0, 1.0 + 1e-15, 0.0]),
            Err(SpectralError::NotSymmetric(0, 1))
        );
        assert!(SymmetricMatrix::<f64>::from_row_major(2, vec![0.0; 3]).is_err());
    }

    #[test]
    fn banded_comparison() {
        assert_eq!(compare_banded(1.0, 1.0 + 1e-12, COMPARISON_BAND), BandOrdering::Boundary);
        assert_eq!(compare_banded(1.0, 2.0, COMPARISON_BAND), BandOrdering::Less);
        assert_eq!(compare_banded(2.0, 1.0, COMPARISON_BAND), BandOrdering::Greater);
    }

    #[test]
    fn spectrum_indexing() {
        let s = Spectrum::new(vec![-1.0, 2.0, -1.0], 0.0);
        assert_eq!(s.values(), &[2.0, -1.0, -1.0]);
        assert_eq!(s.nth(1).unwrap(), 2.0);
        assert!(s.nth(0).is_err());
        assert!(s.nth(4).is_err());
    }
}
