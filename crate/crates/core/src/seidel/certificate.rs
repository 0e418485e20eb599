use std::fmt;

use crate::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

/// Outcome of a verification, with the data that witnesses it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub property: String,
    pub verdict: Verdict,
    pub t: Option<i64>,
    pub charpoly: Option<IntPoly>,
    pub witness: Vec<(String, String)>,
    /// Always set on a FAIL.
    pub reason: Option<String>,
}

impl Certificate {
    pub fn pass(property: impl Into<String>) -> Self {
        Certificate {
            property: property.into(),
            verdict: Verdict::Pass,
            t: None,
            charpoly: None,
            witness: Vec::new(),
            reason: None,
        }
    }

    pub fn fail(property: impl Into<String>, reason: impl Into<String>) -> Self {
        Certificate { verdict: Verdict::Fail, reason: Some(reason.into()), ..Self::pass(property) }
    }

    /// PASS when `ok`, otherwise FAIL with `reason`.
    pub fn from_check(property: impl Into<String>, ok: bool, reason: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(property)
        } else {
            Self::fail(property, reason())
        }
    }

    pub fn with_t(mut self, t: i64) -> Self {
        self.t = Some(t);
        self
    }

    pub fn with_charpoly(mut self, p: IntPoly) -> Self {
        self.charpoly = Some(p);
        self
    }

    pub fn with_witness(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.witness.push((key.into(), value.to_string()));
        self
    }

    pub fn is_pass(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn witness(&self, key: &str) -> Option<&str> {
        self.witness.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.property, self.verdict)?;
        if let Some(reason) = &self.reason {
            write!(f, " ({reason})")?;
        }
        Ok(())
    }
}
