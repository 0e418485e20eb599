use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major matrix over an exact scalar.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Order of a square matrix.
    pub fn order(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.cols)
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U>(&self, f: impl FnMut(&T) -> Result<U>) -> Result<Matrix<U>> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }
}

impl<T: Clone> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension("matrix must have at least one row and column".into()));
        }
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self::new(rows, cols, data)
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.row_iter().map(<[T]>::to_vec).collect()
    }

    /// Submatrix on the given row and column index lists, in that order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        if let Some(&bad) = rows.iter().find(|&&i| i >= self.rows) {
            return Err(Error::InvalidArgument(format!("row index {bad} out of range")));
        }
        if let Some(&bad) = cols.iter().find(|&&j| j >= self.cols) {
            return Err(Error::InvalidArgument(format!("column index {bad} out of range")));
        }
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// The all-ones matrix `J`.
    pub fn ones(rows: usize, cols: usize) -> Result<Self> {
        Self::from_fn(rows, cols, |_, _| T::one())
    }

    pub fn diagonal(diag: &[T]) -> Result<Self> {
        Self::from_fn(diag.len(), diag.len(), |i, j| if i == j { diag[i].clone() } else { T::zero() })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| T::from_i64(v)).collect()).collect())
    }

    fn same_shape(&self, rhs: &Self) -> Result<()> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.try_add(b)).collect::<Result<_>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.try_sub(b)).collect::<Result<_>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    let a = &self[(i, k)];
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc.try_add(&a.try_mul(&rhs[(k, j)])?)?;
                }
                data.push(acc);
            }
        }
        Ok(Matrix { rows: self.rows, cols: rhs.cols, data })
    }

    pub fn scale(&self, c: &T) -> Result<Self> {
        self.try_map(|a| a.try_mul(c))
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a.clone())
    }

    /// `self + c·I`.
    pub fn add_scalar_identity(&self, c: &T) -> Result<Self> {
        let n = self.order()?;
        let mut out = self.clone();
        for i in 0..n {
            out[(i, i)] = out[(i, i)].try_add(c)?;
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        self.row_iter().map(|row| dot(row, v)).collect()
    }

    /// `k`-th power of a square matrix.
    pub fn checked_pow(&self, k: u32) -> Result<Self> {
        let mut out = Self::identity(self.order()?)?;
        for _ in 0..k {
            out = out.checked_mul(self)?;
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<T> {
        let n = self.order()?;
        (0..n).try_fold(T::zero(), |acc, i| acc.try_add(&self[(i, i)]))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Skew-symmetric in the usual sense: `M = -Mᵀ`.
    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..=i).all(|j| self[(i, j)] == -self[(j, i)].clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn row_sums(&self) -> Result<Vec<T>> {
        self.row_iter().map(|row| row.iter().try_fold(T::zero(), |acc, a| acc.try_add(a))).collect()
    }
}



/// Inner product with checked arithmetic.
pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> Result<T> {
    if a.len() != b.len() {
        return Err(Error::Dimension(format!("dot of lengths {} and {}", a.len(), b.len())));
    }
    a.iter().zip(b).try_fold(T::zero(), |acc, (x, y)| acc.try_add(&x.try_mul(y)?))
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.row_iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IntMatrix;

    #[test]
    fn rejects_empty_and_ragged() {
        assert!(IntMatrix::from_rows(vec![]).is_err());
        assert!(IntMatrix::from_rows(vec![vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn product_and_transpose() {
        let a = IntMatrix::from_rows(vec![vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        let g = a.checked_mul(&a.transpose()).unwrap();
        assert_eq!(g, IntMatrix::from_rows(vec![vec![14, 32], vec![32, 77]]).unwrap());
        assert!(a.checked_mul(&a).is_err());
    }

    #[test]
    fn overflow_is_an_error() {
        let a = Matrix::<i64>::from_rows(vec![vec![i64::MAX, 1], vec![1, 1]]).unwrap();
        assert_eq!(a.checked_add(&a), Err(Error::Overflow));
        assert_eq!(a.checked_mul(&a), Err(Error::Overflow));
    }

    #[test]
    fn symmetry_predicates() {
        let s = IntMatrix::from_rows(vec![vec![0, 1], vec![-1, 0]]).unwrap();
        assert!(s.is_skew_symmetric());
        assert!(!s.is_symmetric());
        assert!(IntMatrix::ones(3, 3).unwrap().is_symmetric());
    }
}
