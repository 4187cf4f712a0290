//! Exact computation of the framed (Viro) Khovanov homology of knot and link
//! diagrams, the Kauffman bracket it categorifies, and the Tait-graph cycle
//! ranks that control the bracket's extreme coefficients.

#![allow(clippy::needless_range_loop)]

pub mod adequacy;
pub mod corpus;
pub mod diagram;
pub mod error;
pub mod gaussian;
pub mod homology;
pub mod linalg;
pub mod poly;
pub mod scalar;
pub mod skein;
pub mod state;
pub mod tait;
pub mod theorem;

pub use diagram::{parse_corpus, parse_pd, Crossing, Diagram, Smoothing};
pub use error::{Error, Result};
pub use scalar::Scalar;

/// Bracket polynomial with machine-word coefficients.
pub type Bracket = poly::BracketPolynomial<i64>;
/// Bracket polynomial with unbounded coefficients.
pub type BigBracket = poly::BracketPolynomial<num_bigint::BigInt>;
pub type Gaussian = gaussian::GaussianInt<i64>;
pub type BigGaussian = gaussian::GaussianInt<num_bigint::BigInt>;
pub type Matrix = linalg::SparseMatrix<i64>;
pub type BigMatrix = linalg::SparseMatrix<num_bigint::BigInt>;
