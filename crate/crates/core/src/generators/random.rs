//! Seeded scramblers. Every function is a pure function of its seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::seidel::{Kind, SeidelMatrix, SignedPermutation, Tournament};
use crate::{Int, IntMatrix};

pub fn random_signed_permutation<R: Rng>(n: usize, rng: &mut R) -> SignedPermutation {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let signs = (0..n).map(|_| if rng.gen::<bool>() { 1 } else { -1 }).collect();
    SignedPermutation::new(perm, signs).expect("shuffled identity is a permutation")
}

/// Conjugates `m` by a seeded random signed permutation `P`, returning
/// `(P, PᵀMP)`.
pub fn random_switch(m: &IntMatrix, seed: u64) -> Result<(SignedPermutation, IntMatrix)> {
    let n = m.order()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = random_signed_permutation(n, &mut rng);
    let out = p.apply(m)?;
    Ok((p, out))
}

pub fn random_tournament(n: usize, seed: u64) -> Result<Tournament> {
    if n == 0 {
        return Err(Error::InvalidArgument("tournament order must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = IntMatrix::zeros(n, n)?;
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen::<bool>() {
                a[(i, j)] = 1;
            } else {
                a[(j, i)] = 1;
            }
        }
    }
    Tournament::new(a)
}

pub fn random_seidel(n: usize, kind: Kind, seed: u64) -> Result<SeidelMatrix> {
    if n == 0 {
        return Err(Error::InvalidArgument("Seidel order must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = IntMatrix::zeros(n, n)?;
    for i in 0..n {
        for j in i + 1..n {
            let v: Int = if rng.gen::<bool>() { 1 } else { -1 };
            s[(i, j)] = v;
            s[(j, i)] = if kind == Kind::Skew { -v } else { v };
        }
    }
    SeidelMatrix::with_kind(kind, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::charpoly;

    #[test]
    fn deterministic_per_seed() {
        let m = random_seidel(7, Kind::Skew, 3).unwrap();
        assert_eq!(m, random_seidel(7, Kind::Skew, 3).unwrap());
        let (p1, a) = random_switch(m.body(), 11).unwrap();
        let (p2, b) = random_switch(m.body(), 11).unwrap();
        assert_eq!((p1, a.clone()), (p2, b));
        assert_eq!(charpoly(&a).unwrap(), charpoly(m.body()).unwrap());
    }

    #[test]
    fn tournaments_are_valid() {
        for seed in 0..20 {
            let a = random_tournament(6, seed).unwrap();
            let sq = a.body().checked_mul(a.body()).unwrap();
            assert_eq!(sq.trace().unwrap(), 0);
        }
        assert!(random_tournament(0, 0).is_err());
    }
}
