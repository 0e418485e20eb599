//! Positive semidefinite `{0,±1}` matrices with unit diagonal are switching
//! equivalent to `diag(J, …, J)`; the `3×3` `{±1,±3}` case is enumerated.

use crate::error::{Error, Result};
use crate::linalg::psd_check;
use crate::seidel::SignedPermutation;
use crate::{Int, IntMatrix};

/// Connected components of the nonzero off-diagonal pattern, each sorted,
/// in order of smallest index.
fn components(m: &IntMatrix) -> Vec<Vec<usize>> {
    let n = m.rows();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 0..n {
                if !seen[j] && m[(i, j)] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Switches a PSD `{0,±1}` matrix with unit diagonal to
/// `diag(J_{k₁}, …, J_{k_c})` with `k₁ ≥ … ≥ k_c`.
pub fn psd_block_normalize(m: &IntMatrix) -> Result<(SignedPermutation, Vec<usize>)> {
    let n = m.order()?;
    if !m.is_symmetric() {
        return Err(Error::InvalidMatrix("block normalization needs a symmetric matrix".into()));
    }
    if (0..n).any(|i| m[(i, i)] != 1) || m.entries().any(|v| v.abs() > 1) {
        return Err(Error::InvalidMatrix("block normalization needs a {0,±1} matrix with unit diagonal".into()));
    }
    if !psd_check(m)? {
        return Err(Error::Precondition("matrix is not positive semidefinite".into()));
    }
    let mut comps = components(m);
    // stable: equal sizes keep smallest-index order
    comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut perm = Vec::with_capacity(n);
    let mut signs = Vec::with_capacity(n);
    for comp in &comps {
        let r = comp[0];
        for &j in comp {
            perm.push(j);
            signs.push(if m[(r, j)] > 0 { 1 } else { -1 });
        }
    }
    let p = SignedPermutation::new(perm, signs)?;
    let sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
    let got = p.apply(m)?;
    if got != block_diag_ones(&sizes)? {
        return Err(Error::Normalization("switched matrix is not block diagonal in J".into()));
    }
    Ok((p, sizes))
}

fn block_diag_ones(sizes: &[usize]) -> Result<IntMatrix> {
    let owner: Vec<usize> = sizes.iter().enumerate().flat_map(|(b, &k)| std::iter::repeat_n(b, k)).collect();
    let n = owner.len();
    IntMatrix::from_fn(n, n, |i, j| Int::from(owner[i] == owner[j]))
}

fn sym3(a: Int, b: Int, c: Int) -> IntMatrix {
    IntMatrix::from_rows(vec![vec![3, a, b], vec![a, 3, c], vec![b, c, 3]]).expect("3×3")
}

fn upper(m: &IntMatrix) -> (Int, Int, Int) {
    (m[(0, 1)], m[(0, 2)], m[(1, 2)])
}

/// The positive semidefinite `3×3` matrices with diagonal `3` and
/// off-diagonal entries in `{±1, ±3}`, in lexicographic order of the
/// upper triangle.
pub fn psd_33_patterns() -> Vec<IntMatrix> {
    const VALUES: [Int; 4] = [-3, -1, 1, 3];
    let mut out = Vec::new();
    for a in VALUES {
        for b in VALUES {
            for c in VALUES {
                let m = sym3(a, b, c);
                if psd_check(&m).expect("symmetric") {
                    out.push(m);
                }
            }
        }
    }
    out
}

fn signed_perms3() -> Vec<SignedPermutation> {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = Vec::with_capacity(48);
    for p in PERMS {
        for bits in 0..8 {
            let signs = (0..3).map(|k| if bits >> k & 1 == 1 { -1 } else { 1 }).collect();
            out.push(SignedPermutation::new(p.to_vec(), signs).expect("valid"));
        }
    }
    out
}

/// Switching-class representatives of [`psd_33_patterns`]: the
/// lexicographically largest upper triangle of each class, ordered by
/// `Σ|entries|`.
pub fn enumerate_33psd() -> Vec<IntMatrix> {
    let group = signed_perms3();
    let mut reps: Vec<(Int, Int, Int)> = Vec::new();
    for m in psd_33_patterns() {
        let best = group.iter().map(|p| upper(&p.apply(&m).expect("order 3"))).max().expect("nonempty group");
        if !reps.contains(&best) {
            reps.push(best);
        }
    }
    reps.sort_by(|x, y| {
        let weight = |r: &(Int, Int, Int)| r.0.abs() + r.1.abs() + r.2.abs();
        weight(x).cmp(&weight(y)).then(y.cmp(x))
    });
    reps.into_iter().map(|(a, b, c)| sym3(a, b, c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j4_is_one_block() {
        let j = IntMatrix::ones(4, 4).unwrap();
        let (p, sizes) = psd_block_normalize(&j).unwrap();
        assert!(p.is_identity());
        assert_eq!(sizes, vec![4]);
    }

    #[test]
    fn rank_one_signs() {
        let v = [1, -1, 1];
        let m = IntMatrix::from_fn(3, 3, |i, j| v[i] * v[j]).unwrap();
        let (p, sizes) = psd_block_normalize(&m).unwrap();
        assert_eq!(p.signs(), &[1, -1, 1]);
        assert_eq!(sizes, vec![3]);
    }

    #[test]
    fn smaller_block_first_is_reordered() {
        let m = IntMatrix::from_fn(5, 5, |i, j| Int::from((i < 2) == (j < 2))).unwrap();
        let (p, sizes) = psd_block_normalize(&m).unwrap();
        assert_eq!(sizes, vec![3, 2]);
        assert_eq!(p.perm(), &[2, 3, 4, 0, 1]);
    }

    #[test]
    fn non_psd_rejected() {
        // a frustrated triangle: eigenvalue -1
        let m = IntMatrix::from_i64_rows(&[&[1, 1, 1], &[1, 1, -1], &[1, -1, 1]]).unwrap();
        assert!(psd_block_normalize(&m).is_err());
        let m = IntMatrix::from_i64_rows(&[&[1, 1, 0], &[1, 1, 1], &[0, 1, 1]]).unwrap();
        assert!(psd_block_normalize(&m).is_err());
    }

    #[test]
    fn four_classes_in_order() {
        let reps = enumerate_33psd();
        let uppers: Vec<_> = reps.iter().map(upper).collect();
        assert_eq!(uppers, vec![(1, 1, 1), (1, 1, -1), (3, 1, 1), (3, 3, 3)]);
    }
}
