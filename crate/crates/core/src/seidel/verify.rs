//! Defining identities of the design-matrix families.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::det;
use crate::seidel::{Certificate, Kind, SeidelMatrix, Tournament};
use crate::{Int, IntMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    Hadamard,
    SkewType,
    Ew,
    Conference,
    DoublyRegular,
    TwoSquaresNecessary,
    DetMod4,
}

impl Property {
    pub fn name(&self) -> &'static str {
        match self {
            Property::Hadamard => "hadamard",
            Property::SkewType => "skew_type",
            Property::Ew => "ew",
            Property::Conference => "conference",
            Property::DoublyRegular => "doubly_regular",
            Property::TwoSquaresNecessary => "two_squares_necessary",
            Property::DetMod4 => "det_mod4",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        [
            Property::Hadamard,
            Property::SkewType,
            Property::Ew,
            Property::Conference,
            Property::DoublyRegular,
            Property::TwoSquaresNecessary,
            Property::DetMod4,
        ]
        .into_iter()
        .find(|p| p.name() == key || (key == "two_squares" && *p == Property::TwoSquaresNecessary))
        .ok_or_else(|| Error::InvalidArgument(format!("unknown property '{s}'")))
    }
}

fn require_pm1(m: &IntMatrix, property: Property) -> Result<usize> {
    let n = m.order()?;
    if let Some(v) = m.entries().find(|v| v.abs() != 1) {
        return Err(Error::InvalidMatrix(format!("{property} needs a ±1 matrix, found entry {v}")));
    }
    Ok(n)
}

fn first_mismatch(a: &IntMatrix, b: &IntMatrix) -> Option<(usize, usize)> {
    (0..a.rows()).flat_map(|i| (0..a.cols()).map(move |j| (i, j))).find(|&(i, j)| a[(i, j)] != b[(i, j)])
}

fn gram_check(name: &str, gram: &IntMatrix, expected: &IntMatrix) -> Option<String> {
    first_mismatch(gram, expected)
        .map(|(i, j)| format!("{name} has {} at ({i}, {j}), expected {}", gram[(i, j)], expected[(i, j)]))
}

/// The Gram matrix `diag((n-2)I + 2J, (n-2)I + 2J)` with blocks of order `n/2`.
pub fn ew_gram(n: usize) -> Result<IntMatrix> {
    let half = n / 2;
    let d = n as Int - 2;
    IntMatrix::from_fn(n, n, |i, j| {
        let same = (i < half) == (j < half);
        Int::from(i == j) * d + if same { 2 } else { 0 }
    })
}

/// `2(n-1)(n-2)^((n-2)/2)` for even `n ≥ 2`.
pub fn ew_bound(n: usize) -> Result<Int> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("EW bound needs even order, got {n}")));
    }
    let base = n as Int - 2;
    let mut out = 2 * (n as Int - 1);
    for _ in 0..(n - 2) / 2 {
        out = out.checked_mul(base).ok_or(Error::Overflow)?;
    }
    Ok(out)
}

/// Whether `v` is a sum of two integer squares, with a witness.
pub fn two_squares(v: Int) -> Option<(Int, Int)> {
    if v < 0 {
        return None;
    }
    let mut a: Int = 0;
    while 2 * a * a <= v {
        let rest = v - a * a;
        let b = rest.isqrt();
        if b * b == rest {
            return Some((a, b));
        }
        a += 1;
    }
    None
}

pub fn verify(property: Property, m: &IntMatrix) -> Result<Certificate> {
    let name = property.name();
    match property {
        Property::Hadamard => {
            let n = require_pm1(m, property)?;
            let gram = m.checked_mul(&m.transpose())?;
            let expected = IntMatrix::identity(n)?.scale(&(n as Int))?;
            let d = det(m)?;
            let cert = match gram_check("HHᵀ", &gram, &expected) {
                None => Certificate::pass(name),
                Some(r) => Certificate::fail(name, r),
            };
            Ok(cert.with_witness("order", n).with_witness("abs_det", d.abs()))
        }
        Property::SkewType => {
            let n = require_pm1(m, property)?;
            let sum = m.checked_add(&m.transpose())?;
            let expected = IntMatrix::identity(n)?.scale(&2)?;
            Ok(match gram_check("X + Xᵀ", &sum, &expected) {
                None => Certificate::pass(name),
                Some(r) => Certificate::fail(name, r),
            })
        }
        Property::Ew => {
            let n = require_pm1(m, property)?;
            if n % 4 != 2 {
                return Ok(Certificate::fail(name, format!("order {n} is not 2 mod 4")));
            }
            let expected = ew_gram(n)?;
            let left = m.checked_mul(&m.transpose())?;
            let right = m.transpose().checked_mul(m)?;
            let failure = gram_check("BBᵀ", &left, &expected).or_else(|| gram_check("BᵀB", &right, &expected));
            let cert = match failure {
                None => Certificate::pass(name),
                Some(r) => Certificate::fail(name, r),
            };
            Ok(cert
                .with_t((n as i64 - 2) / 4)
                .with_witness("abs_det", det(m)?.abs())
                .with_witness("bound", ew_bound(n)?))
        }
        Property::Conference => {
            let s = SeidelMatrix::new(m.clone())?;
            let n = s.order();
            let gram = m.checked_mul(&m.transpose())?;
            let expected = IntMatrix::identity(n)?.scale(&(n as Int - 1))?;
            let cert = match gram_check("SSᵀ", &gram, &expected) {
                None => Certificate::pass(name),
                Some(r) => Certificate::fail(name, r),
            };
            Ok(cert.with_witness("kind", s.kind()).with_witness("gram", format!("{}I", n - 1)))
        }
        Property::DoublyRegular => {
            let a = Tournament::new(m.clone())?;
            let n = a.order();
            if n < 2 {
                return Ok(Certificate::fail(name, "order 1 has no off-diagonal entries"));
            }
            let gram = m.checked_mul(&m.transpose())?;
            let t = gram[(0, 1)];
            let expected = IntMatrix::from_fn(n, n, |i, j| t + Int::from(i == j) * (t + 1))?;
            let cert = match gram_check("AAᵀ", &gram, &expected) {
                None => Certificate::pass(name),
                Some(r) => Certificate::fail(name, r),
            };
            Ok(cert.with_t(t as i64))
        }
        Property::TwoSquaresNecessary => two_squares_necessary(m.order()?),
        Property::DetMod4 => {
            let s = SeidelMatrix::new(m.clone())?;
            if s.kind() != Kind::Symmetric {
                return Err(Error::InvalidMatrix("det_mod4 applies to symmetric Seidel matrices".into()));
            }
            let n = s.order() as Int;
            let d = det(m)?;
            let ok = (d - (1 - n)).rem_euclid(4) == 0;
            let cert = Certificate::from_check(name, ok, || format!("det {d} is not 1 - {n} mod 4"));
            Ok(cert.with_witness("det", d))
        }
    }
}

/// Necessary condition for EW matrices of order `n`: `2(n-1)` is a sum of two squares.
pub fn two_squares_necessary(n: usize) -> Result<Certificate> {
    let name = Property::TwoSquaresNecessary.name();
    if n < 2 {
        return Err(Error::InvalidArgument(format!("order {n} is too small")));
    }
    let v = 2 * (n as Int - 1);
    let cert = match two_squares(v) {
        Some((a, b)) => Certificate::pass(name).with_witness("decomposition", format!("{v}={}+{}", a * a, b * b)),
        None => Certificate::fail(name, format!("{v} is not a sum of two squares")),
    };
    Ok(if n % 4 == 2 { cert.with_t((n as i64 - 2) / 4) } else { cert })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn hadamard_and_ew_order_two() {
        let h = m(&[&[1, 1], &[1, -1]]);
        assert!(verify(Property::Hadamard, &h).unwrap().is_pass());
        assert!(verify(Property::Ew, &h).unwrap().is_pass());
        assert!(!verify(Property::SkewType, &h).unwrap().is_pass());
        assert!(verify(Property::Hadamard, &m(&[&[1, 0], &[1, 1]])).is_err());
    }

    #[test]
    fn doubly_regular_three_cycle() {
        let a = m(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        let cert = verify(Property::DoublyRegular, &a).unwrap();
        assert!(cert.is_pass());
        assert_eq!(cert.t, Some(0));
        let transitive = m(&[&[0, 1, 1], &[0, 0, 1], &[0, 0, 0]]);
        assert!(!verify(Property::DoublyRegular, &transitive).unwrap().is_pass());
    }

    #[test]
    fn two_squares_examples() {
        let cert = two_squares_necessary(6).unwrap();
        assert!(cert.is_pass());
        assert_eq!(cert.witness("decomposition"), Some("10=1+9"));
        // 2·21 = 42 = 2·3·7 is not a sum of two squares
        assert!(!two_squares_necessary(22).unwrap().is_pass());
        assert_eq!(two_squares(0), Some((0, 0)));
    }

    #[test]
    fn det_mod4_symmetric_only() {
        let j = m(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        let cert = verify(Property::DetMod4, &j).unwrap();
        assert!(cert.is_pass());
        assert_eq!(cert.witness("det"), Some("2"));
        assert!(verify(Property::DetMod4, &m(&[&[0, 1], &[-1, 0]])).is_err());
    }

    #[test]
    fn ew_bound_values() {
        assert_eq!(ew_bound(6).unwrap(), 160);
        assert_eq!(ew_bound(2).unwrap(), 2);
        assert_eq!(ew_bound(10).unwrap(), 18 * 8i128.pow(4));
    }
}
