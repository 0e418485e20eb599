//! Conversions between skew conference / Hadamard matrices, skew-type EW
//! matrices and tournaments.

use crate::constructions::psd_block_normalize;
use crate::error::{Error, Result};
use crate::linalg::{charpoly, det};
use crate::seidel::{
    ew_bound, normalize, seidel_from_tournament, spectrum_check, target_charpoly, tournament_from_seidel, verify,
    Family, Kind, Property, SeidelMatrix, SignedPermutation, Tournament,
};
use crate::{Int, IntMatrix};

fn require(property: Property, m: &IntMatrix, what: &str) -> Result<()> {
    let cert = verify(property, m)?;
    if cert.is_pass() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what}: {}", cert.reason.unwrap_or_default())))
    }
}

/// `C + I` for a skew conference matrix `C`.
pub fn hadamard_from_conference(c: &SeidelMatrix) -> Result<IntMatrix> {
    if c.kind() != Kind::Skew {
        return Err(Error::InvalidMatrix("C + I is Hadamard only for skew conference matrices".into()));
    }
    require(Property::Conference, c.body(), "not a conference matrix")?;
    let h = c.body().add_scalar_identity(&1)?;
    require(Property::Hadamard, &h, "C + I is not Hadamard")?;
    require(Property::SkewType, &h, "C + I is not of skew type")?;
    Ok(h)
}

fn theorem1_target(n: usize) -> Result<(u32, crate::IntFactoredPoly)> {
    if n < 5 || n % 4 != 1 {
        return Err(Error::Precondition(format!("tournament order must be 4t+1 with t ≥ 1, got {n}")));
    }
    let t = ((n - 1) / 4) as u32;
    Ok((t, target_charpoly(Family::Theorem1, t)?))
}

/// The tournament of order `4t+1` hidden in a skew-type EW matrix of order
/// `4t+2`: normalize `M − I`, take `(J − I − S)/2`, drop vertex 0.
pub fn ew_to_tournament(m: &IntMatrix) -> Result<Tournament> {
    require(Property::Ew, m, "not an EW matrix")?;
    require(Property::SkewType, m, "not of skew type")?;
    let n = m.rows();
    let s = SeidelMatrix::with_kind(Kind::Skew, m.add_scalar_identity(&-1)?)?;
    let (_, s) = normalize(&s)?;
    let full = tournament_from_seidel(&s)?;
    let keep: Vec<usize> = (1..n).collect();
    let a = Tournament::new(full.body().select(&keep, &keep)?)?;
    let (_, target) = theorem1_target(n - 1)?;
    if charpoly(a.body())? != target.expand()? {
        return Err(Error::Normalization(format!("tournament polynomial is not {target}")));
    }
    Ok(a)
}

/// A skew-type EW matrix in two-block Gram form built from a tournament of
/// order `4t+1` with the characteristic polynomial of the `theorem1` family.
pub fn tournament_to_ew(a: &Tournament) -> Result<IntMatrix> {
    let n = a.order();
    let (t, target) = theorem1_target(n)?;
    let chi = charpoly(a.body())?;
    if chi != target.expand()? {
        return Err(Error::Precondition(format!("tournament polynomial {chi} is not {target}")));
    }
    let inner = seidel_from_tournament(a)?;
    let body = IntMatrix::from_fn(n + 1, n + 1, |i, j| match (i, j) {
        (0, 0) => 0,
        (0, _) => 1,
        (_, 0) => -1,
        _ => inner.body()[(i - 1, j - 1)],
    })?;
    let cert = spectrum_check(&body, &target_charpoly(Family::EwSeidel, t)?)?;
    if !cert.is_pass() {
        return Err(Error::Normalization(format!("bordered matrix: {}", cert.reason.unwrap_or_default())));
    }
    let (_, tmat) = switching_form(&SeidelMatrix::with_kind(Kind::Skew, body)?)?;
    let ew = tmat.body().add_scalar_identity(&1)?;
    require(Property::Ew, &ew, "T + I is not EW")?;
    require(Property::SkewType, &ew, "T + I is not of skew type")?;
    let d: Int = det(&ew)?;
    if d.abs() != ew_bound(n + 1)? {
        return Err(Error::Normalization(format!("|det| = {} misses the EW bound", d.abs())));
    }
    Ok(ew)
}

/// Switches a skew Seidel matrix with the EW-Seidel spectrum so that
/// `SSᵀ − (4t−1)I = diag(2J_{2t+1}, 2J_{2t+1})`.
pub fn switching_form(s: &SeidelMatrix) -> Result<(SignedPermutation, SeidelMatrix)> {
    if s.kind() != Kind::Skew {
        return Err(Error::InvalidMatrix("switching form needs a skew Seidel matrix".into()));
    }
    let n = s.order();
    if n < 6 || n % 4 != 2 {
        return Err(Error::Precondition(format!("switching form needs order 4t+2 with t ≥ 1, got {n}")));
    }
    let t = (n - 2) / 4;
    let target = target_charpoly(Family::EwSeidel, t as u32)?;
    if charpoly(s.body())? != target.expand()? {
        return Err(Error::Precondition(format!("characteristic polynomial is not {target}")));
    }
    let gram = s.body().checked_mul(&s.body().transpose())?;
    let m = gram.add_scalar_identity(&-(4 * t as Int - 1))?;
    if let Some(v) = m.entries().find(|v| ![-2, 0, 2].contains(*v)) {
        return Err(Error::Normalization(format!("SSᵀ − (4t−1)I has entry {v} outside {{0, ±2}}")));
    }
    let (p, sizes) = psd_block_normalize(&m.try_map(|v| Ok(v / 2))?)?;
    if sizes != [2 * t + 1, 2 * t + 1] {
        return Err(Error::Normalization(format!("block sizes {sizes:?}, expected two of {}", 2 * t + 1)));
    }
    let switched = SeidelMatrix::with_kind(Kind::Skew, p.apply(s.body())?)?;
    Ok((p, switched))
}
