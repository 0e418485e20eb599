//! Row-sum profiles of tournaments of order `4t+1` and Seidel matrices of
//! order `4t+2` attached to skew EW matrices.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::seidel::{Certificate, SeidelMatrix, Tournament};
use crate::{Int, IntMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScoreMode {
    Tournament,
    Seidel,
}

impl fmt::Display for ScoreMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScoreMode::Tournament => "tournament",
            ScoreMode::Seidel => "seidel",
        })
    }
}

impl FromStr for ScoreMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tournament" => Ok(ScoreMode::Tournament),
            "seidel" => Ok(ScoreMode::Seidel),
            _ => Err(Error::InvalidArgument(format!("unknown score mode '{s}'"))),
        }
    }
}

fn expand(profile: &[(Int, usize)]) -> Vec<Int> {
    let mut out: Vec<Int> = profile.iter().flat_map(|&(v, k)| std::iter::repeat_n(v, k)).collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn join(v: &[Int]) -> String {
    v.iter().map(Int::to_string).collect::<Vec<_>>().join(" ")
}

/// Checks the row-sum multiset forced by the EW spectrum.
pub fn score_profile(m: &IntMatrix, mode: ScoreMode) -> Result<Certificate> {
    let (n, sums, offset) = match mode {
        ScoreMode::Tournament => {
            let a = Tournament::new(m.clone())?;
            (a.order(), a.scores(), 1)
        }
        ScoreMode::Seidel => {
            let s = SeidelMatrix::new(m.clone())?;
            (s.order(), m.row_sums()?, 2)
        }
    };
    if n < 4 + offset || (n - offset) % 4 != 0 {
        return Err(Error::Precondition(format!("{mode} score profile needs order 4t+{offset} with t ≥ 1, got {n}")));
    }
    let t = ((n - offset) / 4) as Int;
    let tu = t as usize;
    let expected = match mode {
        ScoreMode::Tournament => expand(&[(2 * t + 1, tu), (2 * t, 2 * tu + 1), (2 * t - 1, tu)]),
        ScoreMode::Seidel => expand(&[(4 * t + 1, 1), (1, tu), (-1, 2 * tu + 1), (-3, tu)]),
    };
    let mut got = sums;
    got.sort_unstable_by(|a, b| b.cmp(a));
    let name = format!("score_profile_{mode}");
    let cert = if got == expected {
        Certificate::pass(name)
    } else {
        Certificate::fail(name, format!("row sums {{{}}} differ from {{{}}}", join(&got), join(&expected)))
    };
    Ok(cert.with_t(t as i64).with_witness("multiset", join(&got)))
}
