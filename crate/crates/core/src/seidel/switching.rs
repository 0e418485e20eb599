use crate::error::{Error, Result};
use crate::seidel::{Kind, SeidelMatrix, SignedPermutation, Tournament};
use crate::IntMatrix;

/// `PᵀMP`.
pub fn apply_switching(p: &SignedPermutation, m: &IntMatrix) -> Result<IntMatrix> {
    p.apply(m)
}

/// Switches `s` so that every off-diagonal entry of the first row is `+1`.
pub fn normalize(s: &SeidelMatrix) -> Result<(SignedPermutation, SeidelMatrix)> {
    let n = s.order();
    if n < 2 {
        return Err(Error::InvalidArgument("normalization needs order at least 2".into()));
    }
    let signs = (0..n).map(|j| if j == 0 || s.entry(0, j) > 0 { 1 } else { -1 }).collect();
    let p = SignedPermutation::from_signs(signs)?;
    let body = p.apply(s.body())?;
    Ok((p, SeidelMatrix::with_kind(s.kind(), body)?))
}

/// `S = J - I - 2A`.
pub fn seidel_from_tournament(a: &Tournament) -> Result<SeidelMatrix> {
    let n = a.order();
    let body = IntMatrix::from_fn(n, n, |i, j| if i == j { 0 } else { 1 - 2 * a.body()[(i, j)] })?;
    SeidelMatrix::with_kind(Kind::Skew, body)
}

/// `A = (J - I - S) / 2`.
pub fn tournament_from_seidel(s: &SeidelMatrix) -> Result<Tournament> {
    if s.kind() != Kind::Skew {
        return Err(Error::InvalidArgument("a symmetric Seidel matrix has no tournament".into()));
    }
    let n = s.order();
    let body = IntMatrix::from_fn(n, n, |i, j| if i == j { 0 } else { (1 - s.entry(i, j)) / 2 })?;
    Tournament::new(body)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn two_by_two_conversions() {
        let a = Tournament::new(m(&[&[0, 1], &[0, 0]])).unwrap();
        let s = seidel_from_tournament(&a).unwrap();
        assert_eq!(s.body(), &m(&[&[0, -1], &[1, 0]]));
        assert_eq!(tournament_from_seidel(&s).unwrap(), a);
        let sym = SeidelMatrix::new(m(&[&[0, 1], &[1, 0]])).unwrap();
        assert!(tournament_from_seidel(&sym).is_err());
    }

    #[test]
    fn three_cycle() {
        let a = Tournament::new(m(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])).unwrap();
        let s = seidel_from_tournament(&a).unwrap();
        assert_eq!(charpoly(s.body()).unwrap(), crate::IntPoly::from_i64(&[0, 3, 0, 1]));
    }

    #[test]
    fn normalize_two_by_two() {
        let s = SeidelMatrix::new(m(&[&[0, -1], &[1, 0]])).unwrap();
        let (p, n) = normalize(&s).unwrap();
        assert_eq!(p.signs(), &[1, -1]);
        assert_eq!(n.body(), &m(&[&[0, 1], &[-1, 0]]));
    }

    #[test]
    fn switching_examples() {
        let s = m(&[&[0, 1], &[-1, 0]]);
        assert_eq!(apply_switching(&SignedPermutation::identity(2), &s).unwrap(), s);
        let flip = SignedPermutation::from_signs(vec![-1, 1]).unwrap();
        assert_eq!(apply_switching(&flip, &s).unwrap(), m(&[&[0, -1], &[1, 0]]));
        assert!(apply_switching(&SignedPermutation::identity(3), &s).is_err());
    }
}
