use crate::error::{Error, Result};
use crate::seidel::Tournament;
use crate::{Int, IntMatrix, IntPoly};

fn permutations(n: usize) -> Vec<(Vec<usize>, i8)> {
    // Heap's algorithm; each swap flips the sign
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    let mut sign = 1i8;
    let mut out = vec![(p.clone(), sign)];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            sign = -sign;
            out.push((p.clone(), sign));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// `det(xI − M)` by the Leibniz permutation sum; exponential, for tests.
pub fn oracle_charpoly(m: &IntMatrix) -> Result<IntPoly> {
    let n = m.order()?;
    if n > 6 {
        return Err(Error::InvalidArgument(format!("Leibniz oracle is limited to order 6, got {n}")));
    }
    let entry = |i: usize, j: usize| {
        if i == j {
            IntPoly::new(vec![-m[(i, j)], 1])
        } else {
            IntPoly::constant(-m[(i, j)])
        }
    };
    let mut total = IntPoly::zero();
    for (p, sign) in permutations(n) {
        let mut term = IntPoly::constant(Int::from(sign));
        for (i, &j) in p.iter().enumerate() {
            term = term.checked_mul(&entry(i, j))?;
        }
        total = total.checked_add(&term)?;
    }
    Ok(total)
}

/// Every labelled tournament of order `n ≤ 6`, in the order of the bit
/// pattern over the upper triangle.
pub fn enumerate_tournaments(n: usize) -> Result<Vec<Tournament>> {
    if n == 0 || n > 6 {
        return Err(Error::InvalidArgument(format!("tournament enumeration needs 1 ≤ n ≤ 6, got {n}")));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u32..1 << pairs.len())
        .map(|bits| {
            let mut a = IntMatrix::zeros(n, n)?;
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if bits >> k & 1 == 1 {
                    a[(i, j)] = 1;
                } else {
                    a[(j, i)] = 1;
                }
            }
            Tournament::new(a)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_count_and_parity() {
        let ps = permutations(4);
        assert_eq!(ps.len(), 24);
        assert_eq!(ps.iter().filter(|(_, s)| *s == 1).count(), 12);
    }

    #[test]
    fn oracle_small_cases() {
        let i3 = IntMatrix::identity(3).unwrap();
        assert_eq!(oracle_charpoly(&i3).unwrap(), IntPoly::from_i64(&[-1, 3, -3, 1]));
        let s = IntMatrix::from_i64_rows(&[&[0, 1], &[-1, 0]]).unwrap();
        assert_eq!(oracle_charpoly(&s).unwrap(), IntPoly::from_i64(&[1, 0, 1]));
        assert!(oracle_charpoly(&IntMatrix::identity(7).unwrap()).is_err());
    }

    #[test]
    fn tournament_counts() {
        assert_eq!(enumerate_tournaments(3).unwrap().len(), 8);
        assert_eq!(enumerate_tournaments(5).unwrap().len(), 1024);
    }
}
