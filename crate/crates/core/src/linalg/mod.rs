//! Exact integer and rational linear algebra.

mod charpoly;
mod elimination;
mod matrix;
mod poly;
mod psd;
pub mod rational;

pub use charpoly::charpoly;
pub use elimination::{det, rank};
pub use matrix::{dot, Matrix};
pub use poly::{FactoredPoly, Poly};
pub use psd::psd_check;
