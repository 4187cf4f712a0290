//! Exact sparse integer linear algebra.

mod rank;
mod smith;
mod sparse;

pub use rank::{bareiss_rank, rank, try_rank, DENSE_CUTOFF};
pub use smith::{dense_smith, invariant_factors};
pub use sparse::{SparseMatrix, Triplet};
