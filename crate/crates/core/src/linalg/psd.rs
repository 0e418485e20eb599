
use crate::error::{Error, Result};
use crate::linalg::{charpoly, Matrix};
use crate::scalar::Scalar;

/// Positive semidefiniteness of a symmetric matrix, decided from the signs
/// of its characteristic polynomial: a real-rooted monic polynomial has all
/// roots nonnegative iff `(-1)^(n-i) c_i >= 0` for every coefficient.
pub fn psd_check<T: Scalar + PartialOrd>(m: &Matrix<T>) -> Result<bool> {
    let n = m.order()?;
    if !m.is_symmetric() {
        return Err(Error::InvalidMatrix("positive semidefiniteness needs a symmetric matrix".into()));
    }
    let chi = charpoly(m)?;
    let zero = T::zero();
    Ok((0..=n).all(|i| {
        let c = chi.coeff(i);
        if (n - i) % 2 == 0 {
            c >= zero
        } else {
            c <= zero
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IntMatrix;

    #[test]
    fn examples() {
        assert!(psd_check(&IntMatrix::identity(3).unwrap()).unwrap());
        assert!(psd_check(&IntMatrix::from_i64_rows(&[&[3, 3], &[3, 3]]).unwrap()).unwrap());
        assert!(!psd_check(&IntMatrix::from_i64_rows(&[&[1, 2], &[2, 1]]).unwrap()).unwrap());
        assert!(psd_check(&IntMatrix::zeros(2, 2).unwrap()).unwrap());
    }

    #[test]
    fn rejects_non_symmetric() {
        let m = IntMatrix::from_i64_rows(&[&[1, 2], &[0, 1]]).unwrap();
        assert!(psd_check(&m).is_err());
    }
}
