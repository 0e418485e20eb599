//! Division-free characteristic polynomial (Berkowitz).
//!
//! The characteristic polynomial of each trailing principal submatrix is
//! obtained from the next smaller one by a lower-triangular Toeplitz
//! product, so only ring operations are used and every intermediate is
//! an exact integer when the input is.

use crate::error::Result;
use crate::linalg::{dot, Matrix, Poly};
use crate::scalar::Scalar;

/// `det(xI - M)`, monic of degree `n`.
pub fn charpoly<T: Scalar>(m: &Matrix<T>) -> Result<Poly<T>> {
    let n = m.order()?;
    // descending coefficients of the charpoly of m[k.., k..]
    let mut desc = vec![T::one(), -m[(n - 1, n - 1)].clone()];
    for k in (0..n - 1).rev() {
        let size = n - k - 1;
        let row: Vec<T> = (k + 1..n).map(|j| m[(k, j)].clone()).collect();
        let mut col: Vec<T> = (k + 1..n).map(|i| m[(i, k)].clone()).collect();
        let mut toeplitz = Vec::with_capacity(size + 2);
        toeplitz.push(T::one());
        toeplitz.push(-m[(k, k)].clone());
        for step in 0..size {
            toeplitz.push(-dot(&row, &col)?);
            if step + 1 < size {
                col = (0..size)
                    .map(|i| {
                        (0..size).try_fold(T::zero(), |acc, j| {
                            acc.try_add(&m[(k + 1 + i, k + 1 + j)].try_mul(&col[j])?)
                        })
                    })
                    .collect::<Result<_>>()?;
            }
        }
        let mut next = Vec::with_capacity(size + 2);
        for i in 0..size + 2 {
            let mut acc = T::zero();
            for (j, c) in desc.iter().enumerate().take(i + 1) {
                acc = acc.try_add(&toeplitz[i - j].try_mul(c)?)?;
            }
            next.push(acc);
        }
        desc = next;
    }
    desc.reverse();
    Ok(Poly::new(desc))
}
