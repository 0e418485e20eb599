//! Exact rational elimination: square solves, nullspaces, and their
//! conversion back to primitive integer vectors.

use num_rational::Ratio;
use num_traits::{CheckedDiv, One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{IntScalar, Scalar};

fn ratio_div<T: IntScalar>(a: &Ratio<T>, b: &Ratio<T>) -> Result<Ratio<T>> {
    if b.is_zero() {
        return Err(Error::Singular("division by zero".into()));
    }
    a.checked_div(b).ok_or(Error::Overflow)
}

/// Solves `A y = b` for square nonsingular `A`.
pub fn solve<T: IntScalar>(a: &Matrix<Ratio<T>>, b: &[Ratio<T>]) -> Result<Vec<Ratio<T>>> {
    let n = a.order()?;
    if b.len() != n {
        return Err(Error::Dimension(format!("right-hand side of length {} for order {n}", b.len())));
    }
    let mut m = a.clone();
    let mut rhs = b.to_vec();
    for k in 0..n {
        let p = (k..n)
            .find(|&i| !m[(i, k)].is_zero())
            .ok_or_else(|| Error::Singular(format!("no pivot in column {k}")))?;
        m.swap_rows(k, p);
        rhs.swap(k, p);
        for i in 0..n {
            if i == k || m[(i, k)].is_zero() {
                continue;
            }
            let f = ratio_div(&m[(i, k)], &m[(k, k)])?;
            for j in k..n {
                m[(i, j)] = m[(i, j)].try_sub(&f.try_mul(&m[(k, j)])?)?;
            }
            rhs[i] = rhs[i].try_sub(&f.try_mul(&rhs[k])?)?;
        }
    }
    (0..n).map(|i| ratio_div(&rhs[i], &m[(i, i)])).collect()
}

/// A basis of the right nullspace of an integer matrix, one vector per
/// free column of the reduced row echelon form.
pub fn nullspace<T: IntScalar>(m: &Matrix<T>) -> Result<Vec<Vec<Ratio<T>>>> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Matrix<Ratio<T>> = m.map(|v| Ratio::from_integer(v.clone()));
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let lead = a[(r, c)].clone();
        for j in c..cols {
            a[(r, j)] = ratio_div(&a[(r, j)], &lead)?;
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..cols {
                a[(i, j)] = a[(i, j)].try_sub(&f.try_mul(&a[(r, j)])?)?;
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![Ratio::zero(); cols];
            v[f] = Ratio::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[(row, f)].clone();
            }
            v
        })
        .collect();
    Ok(basis)
}

/// Scales a rational vector to the primitive integer vector on the same
/// ray (positive multiple, entries with gcd 1).
pub fn primitive_integer_vector<T: IntScalar>(v: &[Ratio<T>]) -> Result<Vec<T>> {
    let lcm = v.iter().fold(T::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<T> = v
        .iter()
        .map(|x| x.numer().try_mul(&lcm)?.try_div_exact(x.denom()))
        .collect::<Result<_>>()?;
    let g = scaled.iter().fold(T::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return Err(Error::InvalidArgument("zero vector has no primitive form".into()));
    }
    scaled.iter().map(|x| x.try_div_exact(&g)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{IntMatrix, RatScalar};

    fn r(n: i128, d: i128) -> RatScalar {
        RatScalar::new(n, d)
    }

    #[test]
    fn solves_vandermonde() {
        // y0 + y1 = 6, -9 y0 - 3 y1 = -38
        let a = Matrix::from_rows(vec![vec![r(1, 1), r(1, 1)], vec![r(-9, 1), r(-3, 1)]]).unwrap();
        let y = solve(&a, &[r(6, 1), r(-38, 1)]).unwrap();
        assert_eq!(y, vec![r(10, 3), r(8, 3)]);
        let sing = Matrix::from_rows(vec![vec![r(1, 1), r(1, 1)], vec![r(2, 1), r(2, 1)]]).unwrap();
        assert!(matches!(solve(&sing, &[r(1, 1), r(1, 1)]), Err(Error::Singular(_))));
    }

    #[test]
    fn nullspace_of_rank_one() {
        let m = IntMatrix::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6]]).unwrap();
        let basis = nullspace(&m).unwrap();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            let ints = primitive_integer_vector(v).unwrap();
            assert!(m.mul_vec(&ints).unwrap().iter().all(|x| *x == 0));
        }
    }

    #[test]
    fn primitive_vectors() {
        let v = vec![r(3, 2), r(-1, 2), r(1, 2)];
        assert_eq!(primitive_integer_vector(&v).unwrap(), vec![3, -1, 1]);
    }
}
