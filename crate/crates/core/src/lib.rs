//! Spanning-tree packing, fractional packing numbers and adjacency /
//! `A_α` spectra for small undirected graphs, plus a decision procedure
//! for "k spanning trees and one more constrained forest".

mod exact;
pub mod graph;
pub mod packing;
pub mod property_p;
pub mod scalar;
pub mod spectral;
pub mod theorems;

pub use exact::{parse_rational, ExactValue};
pub use graph::{Edge, Graph, GraphError, VertexPartition, VertexSet};
pub use packing::{ForestDecomposition, PartitionCertificate};
pub use scalar::Scalar;
pub use spectral::{SpectralError, Spectrum, SymmetricMatrix};

/// Double-precision symmetric matrix.
pub type SymmetricMatrix64 = SymmetricMatrix<f64>;
/// Single-precision symmetric matrix.
pub type SymmetricMatrix32 = SymmetricMatrix<f32>;
pub type Spectrum64 = Spectrum<f64>;
pub type Spectrum32 = Spectrum<f32>;

/// Exact rational used for every packing threshold and `ν_f` value.
pub type Rational = num_rational::Ratio<i64>;
