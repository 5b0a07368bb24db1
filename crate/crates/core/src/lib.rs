//! Exact determinants and characteristic polynomials of threshold graphs.
//!
//! A threshold graph on `n` vertices is given by its creation sequence
//! `b_1 … b_(n-1)`. Its adjacency matrix, and more generally any matrix
//! whose `(i, j)` entry depends only on `min(i, j)` off the diagonal, admits
//! a linear-time determinant recurrence. Written as a product of 2×2
//! polynomial matrices and multiplied as a balanced tree, the same
//! recurrence yields the characteristic polynomial in `O(n log² n)`
//! arithmetic operations.

pub mod charpoly;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod poly;

pub use charpoly::{
    balanced_product, build_factor, charpoly_auto, charpoly_balanced, charpoly_balanced_with,
    charpoly_eval, charpoly_quadratic, charpoly_weighted, charpoly_weighted_with, det_weighted,
    graph_factors, weighted_factor, weighted_factors, BalancedOptions, WeightedThresholdMatrix,
    DEFAULT_AUTO_CROSSOVER,
};
pub use error::{Error, Result};
pub use graph::{parse_sequence, CreationSequence, ThresholdGraph};
pub use oracle::{
    bareiss_det, charpoly_interpolation, dense_charpoly, dense_charpoly_capped, derangements,
    triangle_count, DenseIntMatrix, DEFAULT_ORACLE_CAP,
};
pub use poly::{mul_kronecker, Degree, IntPolynomial, PolyMatrix2, DEFAULT_KRONECKER_CUTOFF};
