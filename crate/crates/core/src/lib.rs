//! Exact-arithmetic toolkit for Seidel, conference, EW and tournament
//! matrices.
//!
//! The [`linalg`] layer is generic over the scalar type (`i64`, `i128`,
//! [`num_bigint::BigInt`], and their rational fields). Everything above it
//! works on the concrete aliases defined here.

pub mod constructions;
pub mod error;
pub mod generators;
pub mod linalg;
pub mod scalar;
pub mod seidel;

use num_rational::Ratio;

pub use error::{Error, Result};
pub use linalg::{charpoly, det, psd_check, rank, FactoredPoly, Matrix, Poly};
pub use scalar::{IntScalar, Scalar};

/// The integer type used by the design-matrix layers.
pub type Int = i128;
pub type IntMatrix = Matrix<Int>;
pub type IntPoly = Poly<Int>;
pub type IntFactoredPoly = FactoredPoly<Int>;
pub type RatScalar = Ratio<Int>;
pub type RatPoly = Poly<RatScalar>;

pub type BigMatrix = Matrix<num_bigint::BigInt>;
pub type BigPoly = Poly<num_bigint::BigInt>;
