//! Bordering principal submatrices of conference matrices back up the
//! chain, one row and column at a time.

use crate::constructions::{square_form, Stage};
use crate::error::{Error, Result};
use crate::seidel::{spectrum_check, target_charpoly, verify, Kind, Property, SeidelMatrix};
use crate::{Int, IntMatrix};

/// The principal submatrix on the complement of `indices`.
pub fn delete_principal(m: &IntMatrix, indices: &[usize]) -> Result<IntMatrix> {
    let n = m.order()?;
    let mut drop = vec![false; n];
    for &i in indices {
        if i >= n {
            return Err(Error::InvalidArgument(format!("index {i} out of range for order {n}")));
        }
        if std::mem::replace(&mut drop[i], true) {
            return Err(Error::InvalidArgument(format!("index {i} repeated")));
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&i| !drop[i]).collect();
    if keep.is_empty() {
        return Err(Error::InvalidArgument("cannot delete every index".into()));
    }
    m.select(&keep, &keep)
}

fn border(s: &IntMatrix, x: &[Int], kind: Kind) -> Result<IntMatrix> {
    let n = s.rows();
    let low: Int = if kind == Kind::Skew { -1 } else { 1 };
    IntMatrix::from_fn(n + 1, n + 1, |i, j| match (i == n, j == n) {
        (false, false) => s[(i, j)],
        (false, true) => x[i],
        (true, false) => low * x[j],
        (true, true) => 0,
    })
}

fn neg(v: &[Int]) -> Vec<Int> {
    v.iter().map(|x| -x).collect()
}

/// One bordering step: a Seidel matrix of order `n + 1` one stage closer
/// to a conference matrix, expressed in the switched coordinates of
/// [`square_form`].
pub fn complete_step(s: &SeidelMatrix) -> Result<SeidelMatrix> {
    let class = square_form(s)?;
    let next = class
        .stage
        .up()
        .ok_or_else(|| Error::Precondition("already a conference matrix".into()))?;
    let kind = class.kind;
    let n = s.order();
    let sc = class.switching.apply(s.body())?;
    let ones = vec![1 as Int; n];
    let candidates: Vec<Vec<Int>> = match (class.stage, kind) {
        (Stage::Minus1, _) => vec![ones],
        (Stage::Minus2, Kind::Skew) => {
            let x = neg(&sc.mul_vec(&ones)?);
            if sc.mul_vec(&x)? == ones {
                vec![x]
            } else {
                vec![neg(&x)]
            }
        }
        (Stage::Minus2, Kind::Symmetric) => {
            let star: Vec<Int> = (0..n).map(|i| if i < n / 2 { 1 } else { -1 }).collect();
            let s1 = sc.mul_vec(&ones)?;
            vec![ones.clone(), neg(&ones), star.clone(), neg(&star), s1.clone(), neg(&s1)]
        }
        (Stage::Minus3, _) => {
            let rows = class.block_rows.as_ref().expect("set at minus3");
            (2..=4).flat_map(|j| {
                let x = rows.half_difference(j);
                [x.clone(), neg(&x)]
            })
            .collect()
        }
        (Stage::Full, _) => unreachable!("handled above"),
    };
    let target = target_charpoly(next.family(kind, false), class.t)?;
    for x in candidates {
        if x.iter().any(|v| v.abs() != 1) {
            continue;
        }
        let b = border(&sc, &x, kind)?;
        if spectrum_check(&b, &target)?.is_pass() {
            return SeidelMatrix::with_kind(kind, b);
        }
    }
    Err(Error::Normalization(format!(
        "no completion vector reaches the {next} target {target}; input is not in the claimed class"
    )))
}

/// Borders `s` up to a conference matrix; a conference matrix is returned
/// unchanged.
pub fn complete_to_conference(s: &SeidelMatrix) -> Result<SeidelMatrix> {
    let mut cur = s.clone();
    while square_form(&cur)?.stage != Stage::Full {
        cur = complete_step(&cur)?;
    }
    let cert = verify(Property::Conference, cur.body())?;
    if !cert.is_pass() {
        return Err(Error::Normalization(format!("completion is not conference: {}", cert.reason.unwrap_or_default())));
    }
    Ok(cur)
}
