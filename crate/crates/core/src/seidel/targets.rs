//! Target characteristic polynomials in factored form.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::charpoly;
use crate::seidel::Certificate;
use crate::{Int, IntFactoredPoly, IntMatrix, IntPoly};

/// A named family of characteristic polynomials indexed by `t ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `(x³ - (2t-1)x² - t(4t-1)) (x² + x + t)^(2t-1)`, order `4t+1` tournaments.
    Theorem1,
    /// `(x² + 4t+3)^(2t+2)`: skew conference matrices of order `4t+4`.
    SkewI,
    /// `x (x² + 4t+3)^(2t+1)`.
    SkewII,
    /// `(x² + 1)(x² + 4t+3)^(2t)`.
    SkewIII,
    /// `x (x² + 3)(x² + 4t+3)^(2t-1)`.
    SkewIV,
    /// `(x² - 4t-1)^(2t+1)`: symmetric conference matrices of order `4t+2`.
    SymA,
    /// `x (x² - 4t-1)^(2t)`.
    SymB,
    /// `(x² - 1)(x² - 4t-1)^(2t-1)`.
    SymC,
    /// `(x - 2)(x + 1)² (x² - 4t-1)^(2t-2)`.
    SymD,
    /// `(x + 2)(x - 1)² (x² - 4t-1)^(2t-2)`, the sign variant of [`Family::SymD`].
    SymDAlt,
    /// `(x² + 8t+1)(x² + 4t-1)^(2t)`: Seidel matrices `M - I` of skew EW matrices.
    EwSeidel,
    /// `x (x² + 8t-1)(x² + 4t-1)^(2t-1)`: `J - I - 2A` for a tournament with the
    /// [`Family::Theorem1`] polynomial.
    ArmarioIntermediate,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::Theorem1,
        Family::SkewI,
        Family::SkewII,
        Family::SkewIII,
        Family::SkewIV,
        Family::SymA,
        Family::SymB,
        Family::SymC,
        Family::SymD,
        Family::SymDAlt,
        Family::EwSeidel,
        Family::ArmarioIntermediate,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Theorem1 => "theorem1",
            Family::SkewI => "skew_i",
            Family::SkewII => "skew_ii",
            Family::SkewIII => "skew_iii",
            Family::SkewIV => "skew_iv",
            Family::SymA => "sym_a",
            Family::SymB => "sym_b",
            Family::SymC => "sym_c",
            Family::SymD => "sym_d",
            Family::SymDAlt => "sym_d_alt",
            Family::EwSeidel => "ew_seidel",
            Family::ArmarioIntermediate => "armario_intermediate",
        }
    }

    /// Matrix order of the family at `t`.
    pub fn order(&self, t: u32) -> usize {
        let t = t as usize;
        match self {
            Family::Theorem1 | Family::SkewIV | Family::SymB | Family::ArmarioIntermediate => 4 * t + 1,
            Family::SkewI => 4 * t + 4,
            Family::SkewII => 4 * t + 3,
            Family::SkewIII | Family::SymA | Family::EwSeidel => 4 * t + 2,
            Family::SymC => 4 * t,
            Family::SymD | Family::SymDAlt => (4 * t).saturating_sub(1),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family '{s}'")))
    }
}

fn quad(c: Int) -> IntPoly {
    IntPoly::new(vec![c, 0, 1])
}

fn lin(c: Int) -> IntPoly {
    IntPoly::new(vec![c, 1])
}

/// The factored target polynomial of `family` at `t`.
pub fn target_charpoly(family: Family, t: u32) -> Result<IntFactoredPoly> {
    if t == 0 {
        return Err(Error::InvalidArgument(format!("{family} needs t >= 1")));
    }
    let ti = Int::from(t);
    let x = IntPoly::x();
    let factors = match family {
        Family::Theorem1 => vec![
            (IntPoly::new(vec![-ti * (4 * ti - 1), 0, -(2 * ti - 1), 1]), 1),
            (IntPoly::new(vec![ti, 1, 1]), 2 * t - 1),
        ],
        Family::SkewI => vec![(quad(4 * ti + 3), 2 * t + 2)],
        Family::SkewII => vec![(x, 1), (quad(4 * ti + 3), 2 * t + 1)],
        Family::SkewIII => vec![(quad(1), 1), (quad(4 * ti + 3), 2 * t)],
        Family::SkewIV => vec![(x, 1), (quad(3), 1), (quad(4 * ti + 3), 2 * t - 1)],
        Family::SymA => vec![(quad(-4 * ti - 1), 2 * t + 1)],
        Family::SymB => vec![(x, 1), (quad(-4 * ti - 1), 2 * t)],
        Family::SymC => vec![(quad(-1), 1), (quad(-4 * ti - 1), 2 * t - 1)],
        Family::SymD => vec![(lin(-2), 1), (lin(1), 2), (quad(-4 * ti - 1), 2 * (t - 1))],
        Family::SymDAlt => vec![(lin(2), 1), (lin(-1), 2), (quad(-4 * ti - 1), 2 * (t - 1))],
        Family::EwSeidel => vec![(quad(8 * ti + 1), 1), (quad(4 * ti - 1), 2 * t)],
        Family::ArmarioIntermediate => {
            vec![(x, 1), (quad(8 * ti - 1), 1), (quad(4 * ti - 1), 2 * t - 1)]
        }
    };
    Ok(IntFactoredPoly::from_factors(factors))
}

/// PASS iff `charpoly(m)` equals the expanded target exactly.
pub fn spectrum_check(m: &IntMatrix, target: &IntFactoredPoly) -> Result<Certificate> {
    let n = m.order()?;
    let expected = target.expand()?;
    if target.degree() != n {
        return Ok(Certificate::fail(
            "spectrum",
            format!("target has degree {} but the matrix has order {n}", target.degree()),
        ));
    }
    let chi = charpoly(m)?;
    let cert = Certificate::from_check("spectrum", chi == expected, || {
        format!("characteristic polynomial {chi} differs from {target}")
    });
    Ok(cert.with_charpoly(chi).with_witness("target", target))
}

/// Families whose target at the `t` implied by `n` equals `chi`.
pub fn identify(chi: &IntPoly) -> Result<Vec<(Family, u32)>> {
    let n = chi.degree().unwrap_or(0);
    let mut found = Vec::new();
    for family in Family::ALL {
        for t in 1..=(n as u32 / 4 + 1) {
            if family.order(t) == n && target_charpoly(family, t)?.expand()? == *chi {
                found.push((family, t));
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_instances() {
        let f = target_charpoly(Family::Theorem1, 1).unwrap();
        assert_eq!(f.to_string(), "(x^3 - x^2 - 3) (x^2 + x + 1)");
        assert_eq!(f.expand().unwrap(), IntPoly::from_i64(&[-3, -3, -4, 0, 0, 1]));
        let f = target_charpoly(Family::SkewIV, 1).unwrap();
        assert_eq!(f.to_string(), "x (x^2 + 3) (x^2 + 7)");
        let f = target_charpoly(Family::SymD, 3).unwrap();
        assert_eq!(f.to_string(), "(x - 2) (x + 1)^2 (x^2 - 13)^4");
        let f = target_charpoly(Family::Theorem1, 2).unwrap();
        assert_eq!(f.to_string(), "(x^3 - 3x^2 - 14) (x^2 + x + 2)^3");
    }

    #[test]
    fn degrees_match_orders() {
        for family in Family::ALL {
            for t in 1..5 {
                assert_eq!(target_charpoly(family, t).unwrap().degree(), family.order(t), "{family} t={t}");
            }
        }
    }

    #[test]
    fn degenerate_sym_d() {
        let f = target_charpoly(Family::SymD, 1).unwrap();
        assert_eq!(f.factors().len(), 2);
        assert_eq!(f.expand().unwrap(), IntPoly::from_i64(&[-2, -3, 0, 1]));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(target_charpoly(Family::SkewI, 0).is_err());
        assert!("skew_v".parse::<Family>().is_err());
        assert_eq!("sym-d-alt".parse::<Family>().unwrap(), Family::SymDAlt);
    }

    #[test]
    fn spectrum_check_examples() {
        let j = IntMatrix::ones(3, 3).unwrap().checked_sub(&IntMatrix::identity(3).unwrap()).unwrap();
        assert!(spectrum_check(&j, &target_charpoly(Family::SymD, 1).unwrap()).unwrap().is_pass());
        let cyc = IntMatrix::from_i64_rows(&[&[0, -1, 1], &[1, 0, -1], &[-1, 1, 0]]).unwrap();
        let cert = spectrum_check(&cyc, &target_charpoly(Family::SkewI, 1).unwrap()).unwrap();
        assert!(!cert.is_pass());
        assert!(cert.reason.unwrap().contains("degree"));
    }
}
