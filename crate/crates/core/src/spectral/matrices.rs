use super::{SpectralError, Spectrum, SymmetricMatrix};
use crate::graph::{Graph, VertexPartition};
use crate::scalar::Scalar;

/// `A(G)`: 0/1 entries, zero diagonal.
pub fn adjacency_matrix<T: Scalar>(g: &Graph) -> SymmetricMatrix<T> {
    let mut m = SymmetricMatrix::zeros(g.order());
    for &(u, v) in g.edges() {
        m.set(u, v, T::one());
    }
    m
}

/// `A_α(G) = αD(G) + (1 − α)A(G)` for `α ∈ [0, 1)`.
pub fn a_alpha_matrix<T: Scalar>(g: &Graph, alpha: T) -> Result<SymmetricMatrix<T>, SpectralError> {
    if !(alpha >= T::zero() && alpha < T::one()) {
        return Err(SpectralError::AlphaOutOfRange(alpha.to_f64_lossy()));
    }
    let off = T::one() - alpha;
    let mut m = SymmetricMatrix::zeros(g.order());
    for v in 0..g.order() {
        m.set(v, v, alpha * T::of(g.degree(v) as f64));
    }
    for &(u, v) in g.edges() {
        m.set(u, v, off);
    }
    Ok(m)
}

pub fn spectrum(g: &Graph) -> Result<Spectrum<f64>, SpectralError> {
    adjacency_matrix::<f64>(g).eigenvalues()
}

pub fn spectrum_alpha(g: &Graph, alpha: f64) -> Result<Spectrum<f64>, SpectralError> {
    a_alpha_matrix(g, alpha)?.eigenvalues()
}

/// `λ_i(G)`, 1-based.
pub fn lambda(g: &Graph, i: usize) -> Result<f64, SpectralError> {
    check_index(g, i)?;
    spectrum(g)?.nth(i)
}

/// `λ_{α,i}(G)`, 1-based.
pub fn lambda_alpha(g: &Graph, alpha: f64, i: usize) -> Result<f64, SpectralError> {
    check_index(g, i)?;
    spectrum_alpha(g, alpha)?.nth(i)
}

fn check_index(g: &Graph, i: usize) -> Result<(), SpectralError> {
    if i == 0 || i > g.order() {
        Err(SpectralError::IndexOutOfRange {
            index: i,
            order: g.order(),
        })
    } else {
        Ok(())
    }
}

/// Quotient of `A(G)` by a vertex partition: `b_ij = e(V_i, V_j)/|V_i|`
/// off the diagonal and `b_ii = 2e(G[V_i])/|V_i|`. Generally nonsymmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientMatrix<T> {
    order: usize,
    // e(V_i, V_j) for i ≠ j, 2e(G[V_i]) on the diagonal
    block_sums: Vec<usize>,
    part_sizes: Vec<usize>,
    _scalar: std::marker::PhantomData<T>,
}

impl<T: Scalar> QuotientMatrix<T> {
    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        T::of(self.block_sums[i * self.order + j] as f64) / T::of(self.part_sizes[i] as f64)
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// The similar symmetric matrix `S^{1/2} B S^{-1/2}` with
    /// `S = diag(|V_i|)`, i.e. `s_ij = e(V_i, V_j)/√(|V_i||V_j|)`.
    pub fn symmetrized(&self) -> SymmetricMatrix<T> {
        SymmetricMatrix::from_upper(self.order, |i, j| {
            let num = T::of(self.block_sums[i * self.order + j] as f64);
            if i == j {
                num / T::of(self.part_sizes[i] as f64)
            } else {
                num / T::of((self.part_sizes[i] * self.part_sizes[j]) as f64).sqrt()
            }
        })
    }

    /// Eigenvalues (all real) via the symmetrized form.
    pub fn eigenvalues(&self) -> Result<Spectrum<T>, SpectralError> {
        self.symmetrized().eigenvalues()
    }
}

pub fn quotient_matrix<T: Scalar>(
    g: &Graph,
    partition: &VertexPartition,
) -> Result<QuotientMatrix<T>, SpectralError> {
    if partition.universe() != g.order() {
        return Err(SpectralError::InvalidArgument(format!(
            "partition covers {} vertices, graph has {}",
            partition.universe(),
            g.order()
        )));
    }
    let p = partition.len();
    let labels = partition.labels();
    let mut sums = vec![0usize; p * p];
    for &(u, v) in g.edges() {
        let (a, b) = (labels[u], labels[v]);
        if a == b {
            sums[a * p + a] += 2;
        } else {
            sums[a * p + b] += 1;
            sums[b * p + a] += 1;
        }
    }
    Ok(QuotientMatrix {
        order: p,
        block_sums: sums,
        part_sizes: partition.parts().iter().map(|s| s.len()).collect(),
        _scalar: std::marker::PhantomData,
    })
}
