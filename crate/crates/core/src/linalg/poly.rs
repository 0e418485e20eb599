use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Univariate polynomial with coefficients stored ascending by degree.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial
/// has an empty coefficient list and structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `x - root`.
    pub fn linear_root(root: T) -> Self {
        Self::new(vec![-root, T::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Multiplicity of `0` as a root (the index of the lowest nonzero coefficient).
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        (0..len).map(|i| self.coeff(i).try_add(&rhs.coeff(i))).collect::<Result<_>>().map(Self::new)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        (0..len).map(|i| self.coeff(i).try_sub(&rhs.coeff(i))).collect::<Result<_>>().map(Self::new)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].try_add(&a.try_mul(b)?)?;
            }
        }
        Ok(Self::new(out))
    }

    pub fn checked_pow(&self, k: u32) -> Result<Self> {
        let mut out = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = out.checked_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &T) -> Result<Self> {
        self.coeffs.iter().map(|a| a.try_mul(c)).collect::<Result<_>>().map(Self::new)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|a| -a.clone()).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    pub fn eval(&self, x: &T) -> Result<T> {
        self.coeffs.iter().rev().try_fold(T::zero(), |acc, c| acc.try_mul(x)?.try_add(c))
    }

    /// Substitute `x ↦ a·x + b`.
    pub fn compose_linear(&self, a: &T, b: &T) -> Result<Self> {
        let inner = Self::new(vec![b.clone(), a.clone()]);
        self.coeffs.iter().rev().try_fold(Self::zero(), |acc, c| {
            acc.checked_mul(&inner)?.checked_add(&Self::constant(c.clone()))
        })
    }

    /// Division by a monic divisor, returning `(quotient, remainder)`.
    pub fn div_rem_monic(&self, divisor: &Self) -> Result<(Self, Self)> {
        if !divisor.is_monic() {
            return Err(Error::InvalidArgument("divisor must be monic".into()));
        }
        let d = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = rem[k + d].clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].try_sub(&c.try_mul(dc)?)?;
            }
            quot[k] = c;
        }
        rem.truncate(d);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient by a monic divisor; errors on a nonzero remainder.
    pub fn div_exact_monic(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem_monic(divisor)?;
        if !r.is_zero() {
            return Err(Error::InvalidArgument(format!("{divisor} does not divide {self}")));
        }
        Ok(q)
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (negative, mag) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag == "1";
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "{mag}x")?,
                _ if unit => write!(f, "x^{i}")?,
                _ => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// A polynomial given as a product of factors with multiplicities.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FactoredPoly<T> {
    factors: Vec<(Poly<T>, u32)>,
}

impl<T: Scalar> FactoredPoly<T> {
    pub fn new() -> Self {
        FactoredPoly { factors: Vec::new() }
    }

    /// Builds from `(factor, multiplicity)` pairs; zero multiplicities are dropped.
    pub fn from_factors(factors: impl IntoIterator<Item = (Poly<T>, u32)>) -> Self {
        let mut out = Self::new();
        for (p, m) in factors {
            out.push(p, m);
        }
        out
    }

    pub fn push(&mut self, factor: Poly<T>, multiplicity: u32) {
        if multiplicity > 0 {
            self.factors.push((factor, multiplicity));
        }
    }

    pub fn factors(&self) -> &[(Poly<T>, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|(p, m)| p.degree().unwrap_or(0) * *m as usize).sum()
    }

    /// The product of the factors, raised to their multiplicities.
    pub fn expand(&self) -> Result<Poly<T>> {
        self.factors
            .iter()
            .try_fold(Poly::one(), |acc, (p, m)| acc.checked_mul(&p.checked_pow(*m)?))
    }

    /// Concatenation of factor lists, i.e. the product.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.factors.extend(other.factors.iter().cloned());
        out
    }
}

impl<T: Scalar> Default for FactoredPoly<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> fmt::Display for FactoredPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, m)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let bare = p.coeffs().len() == 2 && p.coeff(0).is_zero();
            match (bare, *m) {
                (true, 1) => write!(f, "{p}")?,
                (true, m) => write!(f, "{p}^{m}")?,
                (false, 1) => write!(f, "({p})")?,
                (false, m) => write!(f, "({p})^{m}")?,
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for FactoredPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FactoredPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IntPoly;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn trims_and_degrees() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(p(&[0, 0]).degree(), None);
        assert!(p(&[0]).is_zero());
    }

    #[test]
    fn expand_examples() {
        let x = IntPoly::x();
        let f = FactoredPoly::from_factors([(x.clone(), 1), (p(&[7, 0, 1]), 1)]);
        assert_eq!(f.expand().unwrap(), p(&[0, 7, 0, 1]));
        let f = FactoredPoly::from_factors([(p(&[7, 0, 1]), 4)]);
        assert_eq!(f.expand().unwrap(), p(&[2401, 0, 1372, 0, 294, 0, 28, 0, 1]));
        let f = FactoredPoly::from_factors([(p(&[-3, 0, -1, 1]), 1), (p(&[1, 1, 1]), 1)]);
        assert_eq!(f.expand().unwrap(), p(&[-3, -3, -4, 0, 0, 1]));
        assert_eq!(f.degree(), 5);
    }

    #[test]
    fn zero_multiplicity_factors_vanish() {
        let f = FactoredPoly::from_factors([(p(&[-2, 1]), 1), (p(&[1, 1]), 2), (p(&[-13, 0, 1]), 0)]);
        assert_eq!(f.factors().len(), 2);
        assert_eq!(f.expand().unwrap(), p(&[-2, -3, 0, 1]));
    }

    #[test]
    fn division_and_composition() {
        let a = p(&[2401, 0, 1372, 0, 294, 0, 28, 0, 1]);
        assert_eq!(a.div_exact_monic(&p(&[7, 0, 1])).unwrap(), p(&[343, 0, 147, 0, 21, 0, 1]));
        assert!(a.div_exact_monic(&p(&[1, 1])).is_err());
        // (x+1)^3 + 8 at x = -2y - 1 is 8 - 8y^3
        let c = p(&[9, 3, 3, 1]);
        assert_eq!(c.compose_linear(&-2, &-1).unwrap(), p(&[8, 0, 0, -8]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-3, -3, -4, 0, 0, 1]).to_string(), "x^5 - 4x^2 - 3x - 3");
        assert_eq!(p(&[0, 1]).to_string(), "x");
        let f = FactoredPoly::from_factors([(p(&[0, 1]), 1), (p(&[7, 0, 1]), 3)]);
        assert_eq!(f.to_string(), "x (x^2 + 7)^3");
    }
}
