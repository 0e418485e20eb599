use crate::error::{Error, Result};
use crate::seidel::{verify, Property, SeidelMatrix};
use crate::{Int, IntMatrix};

pub fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Legendre symbol `(a/p)` for an odd prime `p`, by Euler's criterion.
pub fn legendre(a: i64, p: u64) -> i8 {
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    let (mut base, mut exp, mut acc) = (a as u128, (p - 1) / 2, 1u128);
    let m = p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    if acc == 1 {
        1
    } else {
        -1
    }
}

/// The Paley conference matrix of order `q + 1` for an odd prime `q`:
/// skew when `q ≡ 3 (mod 4)`, symmetric when `q ≡ 1 (mod 4)`.
pub fn paley(q: u64) -> Result<SeidelMatrix> {
    if q.is_multiple_of(2) || !is_prime(q) {
        return Err(Error::InvalidArgument(format!("Paley construction needs an odd prime, got {q}")));
    }
    let n = q as usize + 1;
    let edge: Int = if q % 4 == 3 { -1 } else { 1 };
    let body = IntMatrix::from_fn(n, n, |i, j| match (i, j) {
        (0, 0) => 0,
        (0, _) => 1,
        (_, 0) => edge,
        _ => Int::from(legendre(j as i64 - i as i64, q)),
    })?;
    let s = SeidelMatrix::new(body)?;
    let cert = verify(Property::Conference, s.body())?;
    if !cert.is_pass() {
        return Err(Error::Normalization(format!(
            "Paley output for q={q} is not a conference matrix: {}",
            cert.reason.unwrap_or_default()
        )));
    }
    Ok(s)
}
