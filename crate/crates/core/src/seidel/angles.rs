//! Main angles from power sums, and the rank-one `J` perturbation identities
//! they feed.
//!
//! Eigenprojections are never formed. For a matrix `S` with spectrum `θ`,
//! `𝟙ᵀSᵏ𝟙 = Σ θᵏ α_θ`, so grouping eigenvalues by `θ²` gives two
//! Vandermonde systems (even and odd `k`) with rational solutions.

use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{charpoly, rational::solve, Matrix};
use crate::scalar::Scalar;
use crate::seidel::{Eigenvalue, Kind, SeidelMatrix, Spectrum};
use crate::{Int, IntMatrix, IntPoly, RatPoly, RatScalar};

/// `𝟙ᵀMᵏ𝟙` for `k = 0..=kmax`.
pub fn walk_sums(m: &IntMatrix, kmax: usize) -> Result<Vec<Int>> {
    let n = m.order()?;
    let mut v = vec![1 as Int; n];
    let mut out = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        if k > 0 {
            v = m.mul_vec(&v)?;
        }
        out.push(v.iter().try_fold(0 as Int, |acc, x| acc.checked_add(*x).ok_or(Error::Overflow))?);
    }
    Ok(out)
}

pub fn power_sums(s: &SeidelMatrix, kmax: usize) -> Result<Vec<Int>> {
    walk_sums(s.body(), kmax)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MainAngle {
    pub eigenvalue: Eigenvalue,
    pub multiplicity: u32,
    /// `‖P_θ𝟙‖²` over the whole eigenspace.
    pub alpha: RatScalar,
}

impl MainAngle {
    /// `α_θ / m_θ`, the share of each unit of multiplicity.
    pub fn per_multiplicity(&self) -> RatScalar {
        self.alpha / Int::from(self.multiplicity)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MainAngles {
    chi: IntPoly,
    entries: Vec<MainAngle>,
}

fn rat(v: Int) -> RatScalar {
    Ratio::from_integer(v)
}

pub fn to_rat_poly(p: &IntPoly) -> RatPoly {
    RatPoly::new(p.coeffs().iter().map(|&c| rat(c)).collect())
}

pub fn to_int_poly(p: &RatPoly) -> Result<IntPoly> {
    p.coeffs()
        .iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::InvalidArgument(format!("coefficient {c} is not an integer")))
            }
        })
        .collect::<Result<Vec<_>>>()
        .map(IntPoly::new)
}

impl MainAngles {
    pub fn entries(&self) -> &[MainAngle] {
        &self.entries
    }

    /// The characteristic polynomial the angles were computed against.
    pub fn charpoly(&self) -> &IntPoly {
        &self.chi
    }

    pub fn get(&self, e: &Eigenvalue) -> Option<&MainAngle> {
        self.entries.iter().find(|a| a.eigenvalue == *e)
    }

    /// `α_θ`, zero for eigenvalues outside the spectrum.
    pub fn alpha(&self, e: &Eigenvalue) -> RatScalar {
        self.get(e).map_or_else(RatScalar::zero, |a| a.alpha)
    }

    pub fn per_multiplicity(&self, e: &Eigenvalue) -> RatScalar {
        self.get(e).map_or_else(RatScalar::zero, MainAngle::per_multiplicity)
    }

    pub fn total(&self) -> RatScalar {
        self.entries.iter().fold(RatScalar::zero(), |acc, a| acc + a.alpha)
    }

    /// `N(x) = Σ α_θ χ(x)/(x − θ) = 𝟙ᵀ adj(xI − S) 𝟙`.
    ///
    /// Conjugate pairs are combined into `(u x + v)/(x² − θ²)` with
    /// `u = α_θ + α_{−θ}` and `v = θ(α_θ − α_{−θ})`, which stays rational.
    pub fn resolvent_numerator(&self) -> Result<RatPoly> {
        let chi = to_rat_poly(&self.chi);
        let mut out = RatPoly::zero();
        let mut done = vec![false; self.entries.len()];
        for (i, a) in self.entries.iter().enumerate() {
            if done[i] {
                continue;
            }
            done[i] = true;
            let term = if let Some(c) = a.eigenvalue.as_integer() {
                let q = chi.div_exact_monic(&RatPoly::linear_root(rat(c)))?;
                q.scale(&a.alpha)?
            } else {
                let j = self
                    .entries
                    .iter()
                    .position(|b| b.eigenvalue == a.eigenvalue.conjugate())
                    .ok_or_else(|| Error::Precondition(format!("eigenvalue {} has no conjugate", a.eigenvalue)))?;
                done[j] = true;
                let b = &self.entries[j];
                let u = a.alpha + b.alpha;
                if a.alpha != b.alpha {
                    return Err(Error::Precondition(format!("unequal main angles on ±{}", a.eigenvalue)));
                }
                let quad = RatPoly::new(vec![rat(-a.eigenvalue.squared()), rat(0), rat(1)]);
                let q = chi.div_exact_monic(&quad)?;
                q.checked_mul(&RatPoly::new(vec![rat(0), u]))?
            };
            out = out.checked_add(&term)?;
        }
        Ok(out)
    }
}

impl fmt::Display for MainAngles {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|a| format!("{}^{}:{}", a.eigenvalue, a.multiplicity, a.alpha))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

fn vandermonde_solve(nodes: &[Int], rhs: &[Int]) -> Result<Vec<RatScalar>> {
    let g = nodes.len();
    let mut a = Matrix::zeros(g, g)?;
    for (j, &y) in nodes.iter().enumerate() {
        let mut pw = RatScalar::one();
        for k in 0..g {
            a[(k, j)] = pw;
            pw = pw.try_mul(&rat(y))?;
        }
    }
    let b: Vec<RatScalar> = rhs.iter().map(|&v| rat(v)).collect();
    solve(&a, &b).map_err(|_| Error::Singular("coincident squared eigenvalues".into()))
}

/// Main angles of `S` for its verified spectrum.
///
/// Errors if `spectrum` is not the spectrum of `S`, or if an angle would be
/// irrational (a symmetric surd pair `±√r` with unequal angles).
pub fn main_angles(s: &SeidelMatrix, spectrum: &Spectrum) -> Result<MainAngles> {
    main_angles_of(s.body(), spectrum).and_then(|a| {
        if s.kind() == Kind::Skew {
            for e in &a.entries {
                if a.alpha(&e.eigenvalue.conjugate()) != e.alpha {
                    return Err(Error::Normalization(format!("α not symmetric at {}", e.eigenvalue)));
                }
            }
        }
        Ok(a)
    })
}

/// [`main_angles`] for any square integer matrix with a surd spectrum.
pub fn main_angles_of(m: &IntMatrix, spectrum: &Spectrum) -> Result<MainAngles> {
    let chi = charpoly(m)?;
    if spectrum.to_factored()?.expand()? != chi {
        return Err(Error::Precondition(format!("spectrum {spectrum} does not match χ = {chi}")));
    }
    // distinct θ² values and their members
    let mut groups: Vec<(Int, Vec<(Eigenvalue, u32)>)> = Vec::new();
    for &(e, mult) in spectrum.entries() {
        match groups.iter_mut().find(|(y, _)| *y == e.squared()) {
            Some((_, members)) => members.push((e, mult)),
            None => groups.push((e.squared(), vec![(e, mult)])),
        }
    }
    let g = groups.len();
    let sums = walk_sums(m, 2 * g)?;
    let ys: Vec<Int> = groups.iter().map(|(y, _)| *y).collect();
    let even: Vec<Int> = (0..g).map(|k| sums[2 * k]).collect();
    let u = vandermonde_solve(&ys, &even)?;
    let nonzero: Vec<usize> = (0..g).filter(|&i| ys[i] != 0).collect();
    let odd_nodes: Vec<Int> = nonzero.iter().map(|&i| ys[i]).collect();
    let odd: Vec<Int> = (0..nonzero.len()).map(|k| sums[2 * k + 1]).collect();
    let v_nz = vandermonde_solve(&odd_nodes, &odd)?;
    let mut v = vec![RatScalar::zero(); g];
    for (slot, &i) in nonzero.iter().enumerate() {
        v[i] = v_nz[slot];
    }

    let mut entries = Vec::new();
    for (gi, (_, members)) in groups.iter().enumerate() {
        let (ug, vg) = (u[gi], v[gi]);
        match members.as_slice() {
            [(e, mult)] => {
                // v = θ·α must hold; only checkable exactly for integer θ
                let consistent = match e.as_integer() {
                    Some(c) => vg == ug * c,
                    None => vg.is_zero() && ug.is_zero(),
                };
                if !consistent {
                    return Err(Error::Precondition(format!("power sums inconsistent at {e}")));
                }
                entries.push(MainAngle { eigenvalue: *e, multiplicity: *mult, alpha: ug });
            }
            [(e1, m1), (e2, m2)] => {
                let half = Ratio::new(1, 2);
                let (a1, a2) = if vg.is_zero() {
                    (ug * half, ug * half)
                } else {
                    let c = e1.as_integer().ok_or_else(|| {
                        Error::Precondition(format!("main angles at ±{e1} are irrational"))
                    })?;
                    ((ug + vg / c) * half, (ug - vg / c) * half)
                };
                entries.push(MainAngle { eigenvalue: *e1, multiplicity: *m1, alpha: a1 });
                entries.push(MainAngle { eigenvalue: *e2, multiplicity: *m2, alpha: a2 });
            }
            _ => unreachable!("at most two eigenvalues share a square"),
        }
    }
    if let Some(a) = entries.iter().find(|a| a.alpha.is_negative()) {
        return Err(Error::Normalization(format!("negative main angle at {}", a.eigenvalue)));
    }
    let out = MainAngles { chi, entries };
    debug_assert_eq!(out.total(), rat(m.rows() as Int));
    Ok(out)
}

/// `χ_{S+cJ}(x) = χ_S(x) − c·N(x)`.
pub fn charpoly_shift_j(chi: &IntPoly, angles: &MainAngles, c: &RatScalar) -> Result<RatPoly> {
    let n = chi.degree().unwrap_or(0) as Int;
    if *chi != angles.chi || angles.total() != rat(n) {
        return Err(Error::Precondition("main angles do not belong to this polynomial".into()));
    }
    let shift = angles.resolvent_numerator()?.scale(c)?;
    to_rat_poly(chi).checked_sub(&shift)
}

/// `x·χ_S(x) + N(x)`, the characteristic polynomial of the bordered matrix
/// `[[0, 𝟙ᵀ], [−𝟙, S]]`.
pub fn border_charpoly(angles: &MainAngles) -> Result<IntPoly> {
    let n = angles.resolvent_numerator()?;
    to_int_poly(&to_rat_poly(&angles.chi).shift(1).checked_add(&n)?)
}

/// `N(x) = 𝟙ᵀ adj(xI − M) 𝟙` from walk counts alone: the coefficient of
/// `xᵐ` is `Σ_{i>m} cᵢ·𝟙ᵀM^{i−m−1}𝟙`.
pub fn main_polynomial(m: &IntMatrix) -> Result<IntPoly> {
    let chi = charpoly(m)?;
    let n = m.order()?;
    if n == 0 {
        return Ok(IntPoly::zero());
    }
    let p = walk_sums(m, n - 1)?;
    let mut out = vec![0 as Int; n];
    for (mdeg, slot) in out.iter_mut().enumerate() {
        for i in mdeg + 1..=n {
            *slot = slot.try_add(&chi.coeff(i).try_mul(&p[i - mdeg - 1])?)?;
        }
    }
    Ok(IntPoly::new(out))
}

/// `χ_A(x) = (−1/2)ⁿ χ_{S−J}(−2x − 1)`.
fn from_shifted(chi_s_minus_j: &RatPoly, n: usize) -> Result<IntPoly> {
    let composed = chi_s_minus_j.compose_linear(&rat(-2), &rat(-1))?;
    let mut factor = RatScalar::one();
    for _ in 0..n {
        factor = factor.try_mul(&Ratio::new(-1, 2))?;
    }
    to_int_poly(&composed.scale(&factor)?)
}

fn require_skew(s: &SeidelMatrix) -> Result<()> {
    if s.kind() != Kind::Skew {
        return Err(Error::InvalidMatrix("expected a skew Seidel matrix".into()));
    }
    Ok(())
}

/// Tournament polynomial through the main angles of `S = J − I − 2A`.
pub fn tournament_charpoly_via_conv(s: &SeidelMatrix, angles: &MainAngles) -> Result<IntPoly> {
    require_skew(s)?;
    let chi = charpoly(s.body())?;
    let shifted = charpoly_shift_j(&chi, angles, &rat(-1))?;
    from_shifted(&shifted, s.order())
}

/// Tournament polynomial through walk counts; needs no spectrum, so it
/// applies to every tournament.
pub fn tournament_charpoly_via_walks(s: &SeidelMatrix) -> Result<IntPoly> {
    require_skew(s)?;
    let chi = charpoly(s.body())?;
    let shifted = chi.checked_add(&main_polynomial(s.body())?)?;
    from_shifted(&to_rat_poly(&shifted), s.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seidel::{seidel_from_tournament, Tournament};

    fn seidel(rows: &[&[i64]]) -> SeidelMatrix {
        SeidelMatrix::new(IntMatrix::from_i64_rows(rows).unwrap()).unwrap()
    }

    fn three_cycle() -> SeidelMatrix {
        let a = Tournament::new(IntMatrix::from_i64_rows(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]).unwrap()).unwrap();
        seidel_from_tournament(&a).unwrap()
    }

    fn spectrum_of(m: &IntMatrix, f: crate::IntFactoredPoly) -> Spectrum {
        let s = Spectrum::from_factored(&f).unwrap();
        assert_eq!(s.to_factored().unwrap().expand().unwrap(), charpoly(m).unwrap());
        s
    }

    #[test]
    fn three_cycle_angles_and_conversion() {
        let s = three_cycle();
        let f = crate::IntFactoredPoly::from_factors([(IntPoly::x(), 1), (IntPoly::from_i64(&[3, 0, 1]), 1)]);
        let spec = spectrum_of(s.body(), f);
        let a = main_angles(&s, &spec).unwrap();
        assert_eq!(a.alpha(&Eigenvalue::ZERO), rat(3));
        assert_eq!(a.total(), rat(3));
        let shifted = charpoly_shift_j(a.charpoly(), &a, &rat(-1)).unwrap();
        assert_eq!(to_int_poly(&shifted).unwrap(), IntPoly::from_i64(&[9, 3, 3, 1]));
        let expected = IntPoly::from_i64(&[-1, 0, 0, 1]);
        assert_eq!(tournament_charpoly_via_conv(&s, &a).unwrap(), expected);
        assert_eq!(tournament_charpoly_via_walks(&s).unwrap(), expected);
    }

    #[test]
    fn shift_by_j_two_by_two() {
        let s = seidel(&[&[0, 1], &[-1, 0]]);
        let f = crate::IntFactoredPoly::from_factors([(IntPoly::from_i64(&[1, 0, 1]), 1)]);
        let a = main_angles(&s, &spectrum_of(s.body(), f)).unwrap();
        let chi = a.charpoly().clone();
        assert_eq!(to_int_poly(&charpoly_shift_j(&chi, &a, &rat(0)).unwrap()).unwrap(), chi);
        let plus_j = to_int_poly(&charpoly_shift_j(&chi, &a, &rat(1)).unwrap()).unwrap();
        assert_eq!(plus_j, IntPoly::from_i64(&[1, -2, 1]));
    }

    #[test]
    fn main_polynomial_matches_resolvent() {
        let s = three_cycle();
        assert_eq!(main_polynomial(s.body()).unwrap(), IntPoly::from_i64(&[9, 0, 3]));
    }

    #[test]
    fn symmetric_integral_spectrum() {
        // J₃ − I: eigenvalues 2 (on 𝟙) and −1 twice
        let s = seidel(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        let f = crate::IntFactoredPoly::from_factors([(IntPoly::from_i64(&[-2, 1]), 1), (IntPoly::from_i64(&[1, 1]), 2)]);
        let a = main_angles(&s, &spectrum_of(s.body(), f)).unwrap();
        assert_eq!(a.alpha(&Eigenvalue::from_integer(2)), rat(3));
        assert_eq!(a.alpha(&Eigenvalue::from_integer(-1)), rat(0));
        assert_eq!(border_charpoly(&a).unwrap(), charpoly(&IntMatrix::from_i64_rows(&[
            &[0, 1, 1, 1], &[-1, 0, 1, 1], &[-1, 1, 0, 1], &[-1, 1, 1, 0],
        ]).unwrap()).unwrap());
    }

    #[test]
    fn wrong_spectrum_rejected() {
        let s = three_cycle();
        let f = crate::IntFactoredPoly::from_factors([(IntPoly::x(), 1), (IntPoly::from_i64(&[7, 0, 1]), 1)]);
        assert!(main_angles(&s, &Spectrum::from_factored(&f).unwrap()).is_err());
    }
}
