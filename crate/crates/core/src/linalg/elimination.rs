//! Fraction-free (Bareiss) elimination: determinant and rank.

use crate::error::Result;
use crate::linalg::Matrix;
use crate::scalar::IntScalar;

/// Exact determinant via Bareiss elimination with row pivoting.
pub fn det<T: IntScalar>(m: &Matrix<T>) -> Result<T> {
    let n = m.order()?;
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(p) => {
                    a.swap_rows(k, p);
                    negate = !negate;
                }
                None => return Ok(T::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[(i, j)].try_mul(&a[(k, k)])?.try_sub(&a[(i, k)].try_mul(&a[(k, j)])?)?;
                a[(i, j)] = v.try_div_exact(&prev)?;
            }
            a[(i, k)] = T::zero();
        }
        prev = a[(k, k)].clone();
    }
    let d = a[(n - 1, n - 1)].clone();
    Ok(if negate { -d } else { d })
}

/// Rank over the rationals.
pub fn rank<T: IntScalar>(m: &Matrix<T>) -> Result<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = a[(i, j)].try_mul(&a[(r, c)])?.try_sub(&a[(i, c)].try_mul(&a[(r, j)])?)?;
                a[(i, j)] = v.try_div_exact(&prev)?;
            }
            a[(i, c)] = T::zero();
        }
        prev = a[(r, c)].clone();
        r += 1;
    }
    Ok(r)
}
