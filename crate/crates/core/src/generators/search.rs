//! Depth-first search for EW matrices built directly in two-block Gram form.
//!
//! Rows are bitmasks (bit `j` set ⇔ entry `j` is `−1`), so the inner
//! product of two rows is `n − 2·popcount(a ^ b)`.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::det;
use crate::seidel::{ew_bound, verify, Property};
use crate::{Int, IntMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Only skew-type matrices, `X + Xᵀ = 2I`.
    SkewOnly,
    General,
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchMode::SkewOnly => "skew_only",
            SearchMode::General => "general",
        })
    }
}

impl FromStr for SearchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "skew_only" | "skew" => Ok(SearchMode::SkewOnly),
            "general" => Ok(SearchMode::General),
            _ => Err(Error::InvalidArgument(format!("unknown search mode '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub order: usize,
    pub mode: SearchMode,
    /// Stop after this many solutions; `0` means no limit.
    pub limit: usize,
    /// Stop after visiting this many search nodes; `0` means no limit.
    pub node_limit: u64,
    /// `0` keeps lexicographic branch order, anything else shuffles it.
    pub seed: u64,
}

impl SearchConfig {
    pub fn new(order: usize, mode: SearchMode) -> Self {
        SearchConfig { order, mode, limit: 1, node_limit: 0, seed: 0 }
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = limit;
        self
    }

    pub fn with_node_limit(mut self, node_limit: u64) -> Self {
        self.node_limit = node_limit;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.order < 2 || self.order % 4 != 2 {
            return Err(Error::InvalidArgument(format!("EW order must be 2 mod 4, got {}", self.order)));
        }
        if self.order > 30 {
            return Err(Error::InvalidArgument(format!("search is limited to order 30, got {}", self.order)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub solutions: Vec<IntMatrix>,
    pub nodes: u64,
    /// `true` when the whole space was explored, i.e. neither limit was hit.
    pub complete: bool,
}

struct Searcher {
    n: usize,
    half: usize,
    mode: SearchMode,
    limit: usize,
    node_limit: u64,
    rng: Option<ChaCha8Rng>,
    rows: Vec<u32>,
    nodes: u64,
    stopped: bool,
    bound: Int,
    solutions: Vec<IntMatrix>,
}

impl Searcher {
    fn required_distance(&self, block_a: usize, block_b: usize) -> u32 {
        // same block: inner product 2; across blocks: 0
        if block_a == block_b {
            (self.n as u32 - 2) / 2
        } else {
            self.n as u32 / 2
        }
    }

    fn block(&self, i: usize) -> usize {
        usize::from(i >= self.half)
    }

    /// Entry order key: larger ⇔ lexicographically larger ±1 row.
    fn lex_key(&self, row: u32) -> u32 {
        !row.reverse_bits() >> (32 - self.n)
    }

    fn initial_pool(&mut self) -> Vec<u32> {
        let mut out: Vec<u32> = (0u32..1 << self.n).collect();
        out.sort_by_key(|&r| std::cmp::Reverse(self.lex_key(r)));
        if let Some(rng) = self.rng.as_mut() {
            out.shuffle(rng);
        }
        out
    }

    fn to_matrix(&self) -> Result<IntMatrix> {
        IntMatrix::from_fn(self.n, self.n, |i, j| if self.rows[i] >> j & 1 == 1 { -1 } else { 1 })
    }

    /// Whether the column inner products after adding `row` can still reach
    /// their targets; updates `gram` in place.
    fn columns_feasible(&self, row: u32, gram: &mut [i32]) -> bool {
        let n = self.n;
        let left = (n - self.rows.len() - 1) as i32;
        let mut ok = true;
        for a in 0..n {
            for b in a + 1..n {
                let sign = if (row >> a ^ row >> b) & 1 == 0 { 1 } else { -1 };
                let g = &mut gram[a * n + b];
                *g += sign;
                let target = if self.block(a) == self.block(b) { 2 } else { 0 };
                ok &= (target - *g).abs() <= left;
            }
        }
        ok
    }

    /// `pools[b]` holds the rows compatible, as a row of block `b`, with
    /// every row chosen so far. In general mode `cut` marks the columns that
    /// start a class of columns agreeing on every chosen row; each new row
    /// must be non-increasing inside a class.
    fn run(&mut self, pools: &[Vec<u32>; 2], cut: u32, gram: &[i32]) -> Result<()> {
        if self.stopped {
            return Ok(());
        }
        self.nodes += 1;
        if self.node_limit != 0 && self.nodes > self.node_limit {
            self.stopped = true;
            return Ok(());
        }
        let i = self.rows.len();
        if i == self.n {
            return self.emit();
        }
        let bi = self.block(i);
        let full = (1u32 << self.n) - 1;
        // skew-type rows are fixed below the diagonal and +1 on it
        let low = (1u32 << (i + 1)) - 1;
        let fixed = (0..i).fold(0u32, |acc, j| if self.rows[j] >> i & 1 == 0 { acc | 1 << j } else { acc });
        for &row in &pools[bi] {
            let admissible = match self.mode {
                SearchMode::SkewOnly => row & low == fixed,
                SearchMode::General => {
                    let rises = (row << 1) & !row & !cut & full;
                    rises == 0 && (i != 0 || row & (1 | 1 << self.half) == 0)
                }
            };
            if !admissible {
                continue;
            }
            let mut next_gram = gram.to_vec();
            if !self.columns_feasible(row, &mut next_gram) {
                continue;
            }
            let next = [0, 1].map(|b| {
                let d = self.required_distance(b, bi);
                pools[b].iter().copied().filter(|&c| (c ^ row).count_ones() == d).collect::<Vec<_>>()
            });
            let next_cut = cut | ((row ^ (row << 1)) & full);
            self.rows.push(row);
            self.run(&next, next_cut, &next_gram)?;
            self.rows.pop();
            if self.stopped {
                break;
            }
        }
        Ok(())
    }

    fn emit(&mut self) -> Result<()> {
        let m = self.to_matrix()?;
        if !verify(Property::Ew, &m)?.is_pass() {
            return Ok(());
        }
        if self.mode == SearchMode::SkewOnly && !verify(Property::SkewType, &m)?.is_pass() {
            return Err(Error::Normalization("skew search produced a non-skew matrix".into()));
        }
        let d = det(&m)?;
        if d.abs() != self.bound {
            return Err(Error::Normalization(format!("EW matrix with |det| = {} ≠ {}", d.abs(), self.bound)));
        }
        self.solutions.push(m);
        if self.limit != 0 && self.solutions.len() >= self.limit {
            self.stopped = true;
        }
        Ok(())
    }
}

/// Runs the search and reports the budget used.
pub fn search(cfg: &SearchConfig) -> Result<SearchReport> {
    cfg.validate()?;
    let n = cfg.order;
    let mut s = Searcher {
        n,
        half: n / 2,
        mode: cfg.mode,
        limit: cfg.limit,
        node_limit: cfg.node_limit,
        rng: (cfg.seed != 0).then(|| ChaCha8Rng::seed_from_u64(cfg.seed)),
        rows: Vec::with_capacity(n),
        nodes: 0,
        stopped: false,
        bound: ew_bound(n)?,
        solutions: Vec::new(),
    };
    let pool = s.initial_pool();
    let cut = 1 | 1 << s.half;
    let gram = vec![0; n * n];
    s.run(&[pool.clone(), pool], cut, &gram)?;
    Ok(SearchReport { solutions: s.solutions, nodes: s.nodes, complete: !s.stopped })
}

/// EW matrices of order `cfg.order` in two-block Gram form, each verified and
/// determinant-certified.
pub fn search_ew(cfg: &SearchConfig) -> Result<Vec<IntMatrix>> {
    search(cfg).map(|r| r.solutions)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_two() {
        let sols = search_ew(&SearchConfig::new(2, SearchMode::General).with_limit(0)).unwrap();
        let h = IntMatrix::from_i64_rows(&[&[1, 1], &[1, -1]]).unwrap();
        assert!(sols.contains(&h));
    }

    #[test]
    fn order_six_skew() {
        let report = search(&SearchConfig::new(6, SearchMode::SkewOnly).with_limit(0)).unwrap();
        assert!(report.complete);
        assert!(!report.solutions.is_empty());
        for m in &report.solutions {
            assert_eq!(det(m).unwrap().abs(), 160);
            assert!(verify(Property::SkewType, m).unwrap().is_pass());
        }
    }

    #[test]
    fn bad_orders() {
        for n in [0, 1, 4, 8] {
            assert!(search_ew(&SearchConfig::new(n, SearchMode::General)).is_err());
        }
    }

    #[test]
    fn seeded_runs_repeat() {
        let cfg = SearchConfig::new(6, SearchMode::General).with_limit(3).with_seed(9);
        assert_eq!(search_ew(&cfg).unwrap(), search_ew(&cfg).unwrap());
    }
}
