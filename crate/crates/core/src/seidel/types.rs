use std::fmt;

use crate::error::{Error, Result};
use crate::{Int, IntMatrix};

/// Symmetric (`S = Sᵀ`) or skew-symmetric (`S = -Sᵀ`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Symmetric,
    Skew,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Symmetric => "symmetric",
            Kind::Skew => "skew",
        })
    }
}

/// A `{0, ±1}` matrix with zero diagonal, nonzero off-diagonal entries,
/// and `S = ±Sᵀ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeidelMatrix {
    kind: Kind,
    body: IntMatrix,
}

fn seidel_shape(body: &IntMatrix) -> Result<usize> {
    let n = body.order()?;
    for i in 0..n {
        for j in 0..n {
            let v = body[(i, j)];
            if i == j && v != 0 {
                return Err(Error::InvalidMatrix(format!("nonzero diagonal entry at ({i}, {j})")));
            }
            if i != j && v != 1 && v != -1 {
                return Err(Error::InvalidMatrix(format!("off-diagonal entry {v} at ({i}, {j})")));
            }
        }
    }
    Ok(n)
}

impl SeidelMatrix {
    /// Validates `body` and detects its kind. Order 1 counts as symmetric.
    pub fn new(body: IntMatrix) -> Result<Self> {
        seidel_shape(&body)?;
        let kind = if body.is_symmetric() {
            Kind::Symmetric
        } else if body.is_skew_symmetric() {
            Kind::Skew
        } else {
            return Err(Error::InvalidMatrix("neither symmetric nor skew-symmetric".into()));
        };
        Ok(SeidelMatrix { kind, body })
    }

    pub fn with_kind(kind: Kind, body: IntMatrix) -> Result<Self> {
        seidel_shape(&body)?;
        let ok = match kind {
            Kind::Symmetric => body.is_symmetric(),
            Kind::Skew => body.is_skew_symmetric(),
        };
        if !ok {
            return Err(Error::InvalidMatrix(format!("matrix is not {kind}")));
        }
        Ok(SeidelMatrix { kind, body })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn body(&self) -> &IntMatrix {
        &self.body
    }

    pub fn into_body(self) -> IntMatrix {
        self.body
    }

    pub fn order(&self) -> usize {
        self.body.rows()
    }

    pub fn entry(&self, i: usize, j: usize) -> Int {
        self.body[(i, j)]
    }
}

/// A `{0, 1}` matrix with `A + Aᵀ = J - I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    body: IntMatrix,
}

impl Tournament {
    pub fn new(body: IntMatrix) -> Result<Self> {
        let n = body.order()?;
        for i in 0..n {
            for j in 0..n {
                let v = body[(i, j)];
                if v != 0 && v != 1 {
                    return Err(Error::InvalidMatrix(format!("entry {v} at ({i}, {j}) is not 0 or 1")));
                }
                let expected = if i == j { 0 } else { 1 };
                if v + body[(j, i)] != expected {
                    return Err(Error::InvalidMatrix(format!("A + Aᵀ ≠ J - I at ({i}, {j})")));
                }
            }
        }
        Ok(Tournament { body })
    }

    pub fn body(&self) -> &IntMatrix {
        &self.body
    }

    pub fn into_body(self) -> IntMatrix {
        self.body
    }

    pub fn order(&self) -> usize {
        self.body.rows()
    }

    /// Out-degrees `A·1`.
    pub fn scores(&self) -> Vec<Int> {
        self.body.row_iter().map(|r| r.iter().sum()).collect()
    }
}

/// A signed permutation matrix `P`.
///
/// Column `j` of `P` is `signs[j] · e_{perm[j]}`, so the switching action
/// `PᵀMP` has entries `signs[i]·signs[j]·M[perm[i]][perm[j]]`: new index
/// `i` is old index `perm[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(Error::Dimension(format!("{} signs for {n} indices", signs.len())));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument(format!("{perm:?} is not a permutation")));
            }
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidArgument("signs must be ±1".into()));
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { perm: (0..n).collect(), signs: vec![1; n] }
    }

    pub fn from_signs(signs: Vec<i8>) -> Result<Self> {
        Self::new((0..signs.len()).collect(), signs)
    }

    pub fn from_perm(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        Self::new(perm, vec![1; n])
    }

    pub fn order(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.signs.iter().all(|&s| s == 1)
    }

    /// The product `self · then`: applying the result equals applying
    /// `self` first and `then` second.
    pub fn then(&self, then: &SignedPermutation) -> Result<Self> {
        if self.order() != then.order() {
            return Err(Error::Dimension("signed permutations of different orders".into()));
        }
        let perm = then.perm.iter().map(|&q| self.perm[q]).collect();
        let signs = then.perm.iter().zip(&then.signs).map(|(&q, &s)| s * self.signs[q]).collect();
        Ok(SignedPermutation { perm, signs })
    }

    pub fn inverse(&self) -> Self {
        let n = self.order();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for (j, &p) in self.perm.iter().enumerate() {
            perm[p] = j;
            signs[p] = self.signs[j];
        }
        SignedPermutation { perm, signs }
    }

    /// The matrix `P`.
    pub fn to_matrix(&self) -> IntMatrix {
        let n = self.order();
        let mut p = IntMatrix::zeros(n, n).expect("nonempty");
        for (j, (&r, &s)) in self.perm.iter().zip(&self.signs).enumerate() {
            p[(r, j)] = Int::from(s);
        }
        p
    }

    /// `PᵀMP`.
    pub fn apply(&self, m: &IntMatrix) -> Result<IntMatrix> {
        let n = m.order()?;
        if n != self.order() {
            return Err(Error::Dimension(format!(
                "switching of order {} applied to order {n}",
                self.order()
            )));
        }
        IntMatrix::from_fn(n, n, |i, j| {
            Int::from(self.signs[i] * self.signs[j]) * m[(self.perm[i], self.perm[j])]
        })
    }

    /// `Pᵀv`: the coordinates of `v` after switching.
    pub fn apply_vec(&self, v: &[Int]) -> Result<Vec<Int>> {
        if v.len() != self.order() {
            return Err(Error::Dimension("vector length does not match".into()));
        }
        Ok(self.perm.iter().zip(&self.signs).map(|(&p, &s)| Int::from(s) * v[p]).collect())
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self
            .perm
            .iter()
            .zip(&self.signs)
            .map(|(p, s)| format!("{}{p}", if *s < 0 { '-' } else { '+' }))
            .collect();
        f.write_str(&cells.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn seidel_validation() {
        assert_eq!(SeidelMatrix::new(m(&[&[0, 1], &[-1, 0]])).unwrap().kind(), Kind::Skew);
        assert_eq!(SeidelMatrix::new(m(&[&[0, 1], &[1, 0]])).unwrap().kind(), Kind::Symmetric);
        assert!(SeidelMatrix::new(m(&[&[1, 1], &[1, 0]])).is_err());
        assert!(SeidelMatrix::new(m(&[&[0, 0], &[0, 0]])).is_err());
        assert!(SeidelMatrix::new(m(&[&[0, 1, 1], &[1, 0, 1], &[-1, 1, 0]])).is_err());
        assert!(SeidelMatrix::with_kind(Kind::Skew, m(&[&[0, 1], &[1, 0]])).is_err());
    }

    #[test]
    fn tournament_validation() {
        assert!(Tournament::new(m(&[&[0, 1], &[0, 0]])).is_ok());
        assert!(Tournament::new(m(&[&[0, 1], &[1, 0]])).is_err());
        assert!(Tournament::new(m(&[&[1, 0], &[1, 0]])).is_err());
    }

    #[test]
    fn switching_algebra() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let p = SignedPermutation::new(vec![2, 0, 1], vec![1, -1, 1]).unwrap();
        let q = SignedPermutation::new(vec![1, 2, 0], vec![-1, -1, 1]).unwrap();
        let pm = p.to_matrix();
        let direct = pm.transpose().checked_mul(&a).unwrap().checked_mul(&pm).unwrap();
        assert_eq!(p.apply(&a).unwrap(), direct);
        let pq = p.then(&q).unwrap();
        assert_eq!(pq.apply(&a).unwrap(), q.apply(&p.apply(&a).unwrap()).unwrap());
        assert_eq!(pq.to_matrix(), pm.checked_mul(&q.to_matrix()).unwrap());
        assert_eq!(p.inverse().apply(&p.apply(&a).unwrap()).unwrap(), a);
        assert!(p.then(&p.inverse()).unwrap().is_identity());
        let v = vec![10, 20, 30];
        let pv = pm.transpose().mul_vec(&v).unwrap();
        assert_eq!(p.apply_vec(&v).unwrap(), pv);
    }

    #[test]
    fn invalid_permutations() {
        assert!(SignedPermutation::new(vec![0, 0], vec![1, 1]).is_err());
        assert!(SignedPermutation::new(vec![0, 1], vec![1, 2]).is_err());
        assert!(SignedPermutation::new(vec![0, 2], vec![1, 1]).is_err());
    }
}
