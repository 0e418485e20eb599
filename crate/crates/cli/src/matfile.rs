//! The plain-text matrix format.
//!
//! ```text
//! # comment
//! 3 seidel-skew
//! 0+-
//! -0+
//! +-0
//! ```
//!
//! Rows are either `n` whitespace-separated integers or a single
//! `n`-character token over `+`, `-`, `0`.

use std::fmt;
use std::str::FromStr;

use ewmat::seidel::{Kind, SeidelMatrix, Tournament};
use ewmat::{Int, IntMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileKind {
    SeidelSkew,
    SeidelSym,
    Tournament,
    Pm1,
    Int,
}

impl FileKind {
    pub fn name(&self) -> &'static str {
        match self {
            FileKind::SeidelSkew => "seidel-skew",
            FileKind::SeidelSym => "seidel-sym",
            FileKind::Tournament => "tournament",
            FileKind::Pm1 => "pm1",
            FileKind::Int => "int",
        }
    }

    /// The most specific kind whose invariants `m` satisfies.
    pub fn detect(m: &IntMatrix) -> FileKind {
        if let Ok(s) = SeidelMatrix::new(m.clone()) {
            return match s.kind() {
                Kind::Skew => FileKind::SeidelSkew,
                Kind::Symmetric => FileKind::SeidelSym,
            };
        }
        if Tournament::new(m.clone()).is_ok() {
            return FileKind::Tournament;
        }
        if m.entries().all(|v| v.abs() == 1) {
            return FileKind::Pm1;
        }
        FileKind::Int
    }

    /// Checks that `m` satisfies the invariants this kind promises.
    pub fn validate(&self, m: &IntMatrix) -> Result<(), String> {
        let ok = match self {
            FileKind::SeidelSkew => SeidelMatrix::with_kind(Kind::Skew, m.clone()).map(|_| ()),
            FileKind::SeidelSym => SeidelMatrix::with_kind(Kind::Symmetric, m.clone()).map(|_| ()),
            FileKind::Tournament => Tournament::new(m.clone()).map(|_| ()),
            FileKind::Pm1 => {
                if m.entries().all(|v| v.abs() == 1) {
                    Ok(())
                } else {
                    return Err("pm1 matrix has an entry outside {±1}".into());
                }
            }
            FileKind::Int => Ok(()),
        };
        ok.map_err(|e| e.to_string())
    }
}

impl fmt::Display for FileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FileKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "seidel-skew" => Ok(FileKind::SeidelSkew),
            "seidel-sym" => Ok(FileKind::SeidelSym),
            "tournament" => Ok(FileKind::Tournament),
            "pm1" => Ok(FileKind::Pm1),
            "int" => Ok(FileKind::Int),
            _ => Err(format!("unknown matrix kind '{s}'")),
        }
    }
}

/// A parse failure, with the 1-based line it refers to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixFile {
    pub kind: FileKind,
    pub matrix: IntMatrix,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

fn parse_row(text: &str, n: usize, line: usize) -> Result<Vec<Int>, ParseError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if let [token] = tokens.as_slice() {
        if token.chars().count() == n && token.chars().all(|c| matches!(c, '+' | '-' | '0')) {
            return Ok(token.chars().map(|c| match c {
                '+' => 1,
                '-' => -1,
                _ => 0,
            }).collect());
        }
    }
    if tokens.len() != n {
        return Err(err(line, format!("expected {n} entries, found {}", tokens.len())));
    }
    tokens
        .iter()
        .map(|t| t.parse::<Int>().map_err(|_| err(line, format!("'{t}' is not an integer"))))
        .collect()
}

impl MatrixFile {
    pub fn new(matrix: IntMatrix) -> Self {
        MatrixFile { kind: FileKind::detect(&matrix), matrix }
    }

    pub fn with_kind(kind: FileKind, matrix: IntMatrix) -> Self {
        MatrixFile { kind, matrix }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header line"))?;
        let mut parts = header.split_whitespace();
        let n: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .filter(|&n| n >= 1)
            .ok_or_else(|| err(hline, format!("header '{header}' does not start with a positive order")))?;
        let declared = parts.next().map(|k| k.parse::<FileKind>().map_err(|e| err(hline, e))).transpose()?;
        if let Some(extra) = parts.next() {
            return Err(err(hline, format!("unexpected '{extra}' in header")));
        }
        let mut rows = Vec::with_capacity(n);
        let mut last = hline;
        for (line, text) in lines {
            if rows.len() == n {
                return Err(err(line, format!("more than {n} rows")));
            }
            rows.push(parse_row(text, n, line)?);
            last = line;
        }
        if rows.len() != n {
            return Err(err(last + 1, format!("expected {n} rows, found {}", rows.len())));
        }
        let matrix = IntMatrix::from_rows(rows).map_err(|e| err(hline, e.to_string()))?;
        let kind = match declared {
            Some(k) => {
                k.validate(&matrix).map_err(|e| err(hline, format!("matrix is not {k}: {e}")))?;
                k
            }
            None => FileKind::detect(&matrix),
        };
        Ok(MatrixFile { kind, matrix })
    }

    /// Canonical text: header with kind, compact rows when every entry is
    /// in `{−1, 0, 1}`.
    pub fn serialize(&self) -> String {
        let m = &self.matrix;
        let compact = m.entries().all(|v| v.abs() <= 1);
        let mut out = format!("{} {}\n", m.rows(), self.kind);
        for row in m.row_iter() {
            if compact {
                out.extend(row.iter().map(|v| match v {
                    1 => '+',
                    -1 => '-',
                    _ => '0',
                }));
            } else {
                out.push_str(&row.iter().map(Int::to_string).collect::<Vec<_>>().join(" "));
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compact_round_trip() {
        let text = "3 seidel-skew\n0+-\n-0+\n+-0\n";
        let f = MatrixFile::parse(text).unwrap();
        assert_eq!(f.kind, FileKind::SeidelSkew);
        assert_eq!(f.serialize(), text);
    }

    #[test]
    fn integers_comments_and_detection() {
        let f = MatrixFile::parse("# J + I\n\n2\n 2 1\n1 2\n").unwrap();
        assert_eq!(f.kind, FileKind::Int);
        assert_eq!(f.serialize(), "2 int\n2 1\n1 2\n");
        let f = MatrixFile::parse("2\n0 1\n0 0\n").unwrap();
        assert_eq!(f.kind, FileKind::Tournament);
    }

    #[test]
    fn errors_name_the_line() {
        let e = MatrixFile::parse("2\n0 1\n1 x\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = MatrixFile::parse("# c\n2\n0 1\n").unwrap_err();
        assert_eq!(e.line, 4);
        let e = MatrixFile::parse("2 pm1\n0+\n+0\n").unwrap_err();
        assert_eq!(e.line, 1);
        assert!(MatrixFile::parse("").is_err());
        assert!(MatrixFile::parse("x\n").is_err());
        assert!(MatrixFile::parse("1\n0\n0\n").is_err());
    }
}
