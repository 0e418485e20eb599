//! Exact spectra made of quadratic surds.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::seidel::Certificate;
use crate::{Int, IntFactoredPoly, IntPoly};

/// `sign·√radicand`, times `i` when `imaginary`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Eigenvalue {
    sign: i8,
    radicand: Int,
    imaginary: bool,
}

impl Eigenvalue {
    pub const ZERO: Eigenvalue = Eigenvalue { sign: 0, radicand: 0, imaginary: false };

    pub fn new(sign: i8, radicand: Int, imaginary: bool) -> Result<Self> {
        if radicand < 0 || !(-1..=1).contains(&sign) || ((sign == 0) != (radicand == 0)) {
            return Err(Error::InvalidArgument(format!("invalid eigenvalue sign {sign}, radicand {radicand}")));
        }
        Ok(if sign == 0 { Self::ZERO } else { Eigenvalue { sign, radicand, imaginary } })
    }

    pub fn real(sign: i8, radicand: Int) -> Result<Self> {
        Self::new(sign, radicand, false)
    }

    pub fn imaginary(sign: i8, radicand: Int) -> Result<Self> {
        Self::new(sign, radicand, true)
    }

    pub fn from_integer(c: Int) -> Self {
        Eigenvalue { sign: c.signum() as i8, radicand: c * c, imaginary: false }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn radicand(&self) -> Int {
        self.radicand
    }

    pub fn is_imaginary(&self) -> bool {
        self.imaginary
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// `θ²`, always an integer.
    pub fn squared(&self) -> Int {
        if self.imaginary {
            -self.radicand
        } else {
            self.radicand
        }
    }

    /// `-θ`.
    pub fn conjugate(&self) -> Self {
        Eigenvalue { sign: -self.sign, ..*self }
    }

    /// The integer value, when `θ` is one.
    pub fn as_integer(&self) -> Option<Int> {
        if self.imaginary && self.sign != 0 {
            return None;
        }
        let r = self.radicand.isqrt();
        (r * r == self.radicand).then_some(Int::from(self.sign) * r)
    }

    /// The eigenvalue of `i·S` matching the eigenvalue `θ` of `S`.
    pub fn times_i(&self) -> Self {
        if self.imaginary {
            Eigenvalue { sign: -self.sign, radicand: self.radicand, imaginary: false }
        } else {
            Eigenvalue { sign: self.sign, radicand: self.radicand, imaginary: self.sign != 0 }
        }
    }

    /// Exact order on real values; `None` if either value is imaginary.
    pub fn cmp_real(&self, other: &Self) -> Option<Ordering> {
        if (self.imaginary && self.sign != 0) || (other.imaginary && other.sign != 0) {
            return None;
        }
        Some(match self.sign.cmp(&other.sign) {
            Ordering::Equal => match self.sign {
                1 => self.radicand.cmp(&other.radicand),
                -1 => other.radicand.cmp(&self.radicand),
                _ => Ordering::Equal,
            },
            unequal => unequal,
        })
    }

    fn sort_key(&self) -> (bool, Int, i8) {
        (self.imaginary, self.radicand, -self.sign)
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == 0 {
            return write!(f, "0");
        }
        let r = self.radicand.isqrt();
        let mag = if r * r == self.radicand { r.to_string() } else { format!("√{}", self.radicand) };
        let neg = if self.sign < 0 { "-" } else { "" };
        let unit = if self.imaginary { "i" } else { "" };
        write!(f, "{neg}{mag}{unit}")
    }
}

/// Distinct eigenvalues with algebraic multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Spectrum {
    entries: Vec<(Eigenvalue, u32)>,
}

impl Spectrum {
    pub fn new(entries: impl IntoIterator<Item = (Eigenvalue, u32)>) -> Self {
        let mut merged: Vec<(Eigenvalue, u32)> = Vec::new();
        for (e, m) in entries {
            if m == 0 {
                continue;
            }
            match merged.iter_mut().find(|(x, _)| *x == e) {
                Some((_, k)) => *k += m,
                None => merged.push((e, m)),
            }
        }
        merged.sort_by_key(|(e, _)| e.sort_key());
        Spectrum { entries: merged }
    }

    /// Reads the spectrum off a factored polynomial whose factors are `x - c`
    /// or `x² + c` (or quadratics with integer roots).
    pub fn from_factored(f: &IntFactoredPoly) -> Result<Self> {
        let mut entries = Vec::new();
        for (p, m) in f.factors() {
            if !p.is_monic() {
                return Err(Error::InvalidArgument(format!("factor {p} is not monic")));
            }
            match p.degree() {
                Some(1) => entries.push((Eigenvalue::from_integer(-p.coeff(0)), *m)),
                Some(2) if p.coeff(1) == 0 => {
                    let c = p.coeff(0);
                    let root = match c.cmp(&0) {
                        Ordering::Greater => Eigenvalue::imaginary(1, c)?,
                        Ordering::Less => Eigenvalue::real(1, -c)?,
                        Ordering::Equal => Eigenvalue::ZERO,
                    };
                    entries.push((root, *m));
                    entries.push((root.conjugate(), *m));
                }
                Some(2) => {
                    let (b, c) = (p.coeff(1), p.coeff(0));
                    let disc = b * b - 4 * c;
                    let r = if disc >= 0 { disc.isqrt() } else { -1 };
                    if r < 0 || r * r != disc || (r - b) % 2 != 0 {
                        return Err(Error::InvalidArgument(format!("factor {p} has no surd roots")));
                    }
                    entries.push((Eigenvalue::from_integer((-b + r) / 2), *m));
                    entries.push((Eigenvalue::from_integer((-b - r) / 2), *m));
                }
                _ => return Err(Error::InvalidArgument(format!("unsupported factor {p}"))),
            }
        }
        Ok(Self::new(entries))
    }

    pub fn entries(&self) -> &[(Eigenvalue, u32)] {
        &self.entries
    }

    pub fn order(&self) -> usize {
        self.entries.iter().map(|(_, m)| *m as usize).sum()
    }

    pub fn multiplicity(&self, e: &Eigenvalue) -> u32 {
        self.entries.iter().find(|(x, _)| x == e).map_or(0, |(_, m)| *m)
    }

    /// The monic polynomial with this spectrum, as rational factors.
    pub fn to_factored(&self) -> Result<IntFactoredPoly> {
        let mut out = IntFactoredPoly::new();
        for (e, m) in &self.entries {
            if let Some(c) = e.as_integer() {
                out.push(IntPoly::linear_root(c), *m);
            } else if e.sign() > 0 {
                if self.multiplicity(&e.conjugate()) != *m {
                    return Err(Error::InvalidArgument(format!("{e} and its conjugate differ in multiplicity")));
                }
                out.push(IntPoly::new(vec![-e.squared(), 0, 1]), *m);
            } else if self.multiplicity(&e.conjugate()) == 0 {
                return Err(Error::InvalidArgument(format!("{e} has no conjugate")));
            }
        }
        Ok(out)
    }

    /// Real spectrum of the Hermitean matrix: the values themselves when
    /// real, the spectrum of `i·S` when imaginary. Sorted descending.
    fn hermitean_values(&self, imaginary: bool) -> Result<Vec<Eigenvalue>> {
        let mut values = Vec::with_capacity(self.order());
        for (e, m) in &self.entries {
            let v = if imaginary { e.times_i() } else { *e };
            if v.is_imaginary() && !v.is_zero() {
                return Err(Error::InvalidArgument("spectrum mixes real and imaginary values".into()));
            }
            values.extend(std::iter::repeat_n(v, *m as usize));
        }
        values.sort_by(|a, b| b.cmp_real(a).expect("real values"));
        Ok(values)
    }

    fn has_imaginary(&self) -> bool {
        self.entries.iter().any(|(e, _)| e.is_imaginary() && !e.is_zero())
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|(e, m)| format!("[{e}]^{m}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Cauchy interlacing between the spectrum of a Hermitean matrix (or of
/// `i·S` for skew inputs) and that of a principal submatrix.
pub fn interlacing_check(big: &Spectrum, small: &Spectrum) -> Result<Certificate> {
    let (n, m) = (big.order(), small.order());
    if m > n {
        return Err(Error::InvalidArgument(format!("submatrix order {m} exceeds {n}")));
    }
    let imaginary = big.has_imaginary() || small.has_imaginary();
    let lambda = big.hermitean_values(imaginary)?;
    let mu = small.hermitean_values(imaginary)?;
    for i in 0..m {
        let upper = lambda[i].cmp_real(&mu[i]).expect("real");
        let lower = mu[i].cmp_real(&lambda[n - m + i]).expect("real");
        if upper == Ordering::Less || lower == Ordering::Less {
            let reason = format!(
                "position {}: need {} >= {} >= {}",
                i + 1,
                lambda[i],
                mu[i],
                lambda[n - m + i]
            );
            return Ok(Certificate::fail("interlacing", reason));
        }
    }
    Ok(Certificate::pass("interlacing").with_witness("orders", format!("{n},{m}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(sign: i8, rad: Int) -> Eigenvalue {
        Eigenvalue::real(sign, rad).unwrap()
    }

    #[test]
    fn eigenvalue_order_and_display() {
        assert_eq!(r(1, 7).cmp_real(&r(1, 4)), Some(Ordering::Greater));
        assert_eq!(r(-1, 7).cmp_real(&r(-1, 4)), Some(Ordering::Less));
        assert_eq!(r(-1, 7).cmp_real(&Eigenvalue::ZERO), Some(Ordering::Less));
        assert_eq!(Eigenvalue::imaginary(1, 7).unwrap().cmp_real(&r(1, 1)), None);
        assert_eq!(Eigenvalue::imaginary(-1, 7).unwrap().to_string(), "-√7i");
        assert_eq!(Eigenvalue::from_integer(-2).to_string(), "-2");
        assert!(Eigenvalue::new(0, 3, false).is_err());
        assert_eq!(Eigenvalue::imaginary(1, 7).unwrap().times_i(), r(-1, 7));
    }

    #[test]
    fn spectrum_from_factors() {
        let f = IntFactoredPoly::from_factors([
            (IntPoly::from_i64(&[0, 1]), 1),
            (IntPoly::from_i64(&[7, 0, 1]), 3),
        ]);
        let s = Spectrum::from_factored(&f).unwrap();
        assert_eq!(s.order(), 7);
        assert_eq!(s.multiplicity(&Eigenvalue::imaginary(-1, 7).unwrap()), 3);
        assert_eq!(s.to_factored().unwrap().expand().unwrap(), f.expand().unwrap());
        let sym = IntFactoredPoly::from_factors([
            (IntPoly::from_i64(&[-2, 1]), 1),
            (IntPoly::from_i64(&[1, 1]), 2),
            (IntPoly::from_i64(&[-13, 0, 1]), 4),
        ]);
        let s = Spectrum::from_factored(&sym).unwrap();
        assert_eq!(s.order(), 11);
        assert_eq!(s.to_factored().unwrap().expand().unwrap(), sym.expand().unwrap());
        let bad = IntFactoredPoly::from_factors([(IntPoly::from_i64(&[-3, 0, -1, 1]), 1)]);
        assert!(Spectrum::from_factored(&bad).is_err());
    }

    #[test]
    fn interlacing_examples() {
        let big = Spectrum::new([(r(1, 7), 4), (r(-1, 7), 4)]);
        let small = Spectrum::new([(r(1, 7), 3), (r(-1, 7), 3), (Eigenvalue::ZERO, 1)]);
        assert!(interlacing_check(&big, &small).unwrap().is_pass());
        assert!(interlacing_check(&big, &big).unwrap().is_pass());
        let big = Spectrum::new([(r(1, 1), 1), (r(-1, 1), 1)]);
        let small = Spectrum::new([(r(1, 4), 1)]);
        assert!(!interlacing_check(&big, &small).unwrap().is_pass());
        assert!(interlacing_check(&small, &big).is_err());
    }

    #[test]
    fn interlacing_on_imaginary_spectra() {
        let i7 = Eigenvalue::imaginary(1, 7).unwrap();
        let big = Spectrum::new([(i7, 4), (i7.conjugate(), 4)]);
        let small = Spectrum::new([(i7, 3), (i7.conjugate(), 3), (Eigenvalue::ZERO, 1)]);
        assert!(interlacing_check(&big, &small).unwrap().is_pass());
        let mixed = Spectrum::new([(r(1, 7), 1), (r(-1, 7), 1)]);
        assert!(interlacing_check(&big, &mixed).is_err());
    }
}
