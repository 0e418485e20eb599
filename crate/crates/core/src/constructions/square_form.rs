//! Switching normal forms of `M = (4t+3)I + S²` (skew) and
//! `M = (4t+1)I − S²` (symmetric) for the four stages of the completion
//! chain.

use std::fmt;

use crate::constructions::psd_block_normalize;
use crate::error::{Error, Result};
use crate::linalg::{charpoly, rank, rational::{nullspace, primitive_integer_vector}};
use crate::seidel::{target_charpoly, Certificate, Family, Kind, SeidelMatrix, SignedPermutation};
use crate::{Int, IntMatrix, IntPoly};

/// Position in the chain: a conference matrix (`Full`) and its principal
/// submatrices with one, two or three indices removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stage {
    Full,
    Minus1,
    Minus2,
    Minus3,
}

impl Stage {
    pub fn name(&self) -> &'static str {
        match self {
            Stage::Full => "full",
            Stage::Minus1 => "minus1",
            Stage::Minus2 => "minus2",
            Stage::Minus3 => "minus3",
        }
    }

    pub fn removed(&self) -> usize {
        *self as usize
    }

    /// The stage one bordering step closer to `Full`.
    pub fn up(&self) -> Option<Stage> {
        match self {
            Stage::Full => None,
            Stage::Minus1 => Some(Stage::Full),
            Stage::Minus2 => Some(Stage::Minus1),
            Stage::Minus3 => Some(Stage::Minus2),
        }
    }

    /// Target family of this stage; `alt` selects the `(x+2)(x−1)²` variant
    /// of the symmetric third stage.
    pub fn family(&self, kind: Kind, alt: bool) -> Family {
        match (kind, self) {
            (Kind::Skew, Stage::Full) => Family::SkewI,
            (Kind::Skew, Stage::Minus1) => Family::SkewII,
            (Kind::Skew, Stage::Minus2) => Family::SkewIII,
            (Kind::Skew, Stage::Minus3) => Family::SkewIV,
            (Kind::Symmetric, Stage::Full) => Family::SymA,
            (Kind::Symmetric, Stage::Minus1) => Family::SymB,
            (Kind::Symmetric, Stage::Minus2) => Family::SymC,
            (Kind::Symmetric, Stage::Minus3) if alt => Family::SymDAlt,
            (Kind::Symmetric, Stage::Minus3) => Family::SymD,
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The only stage and `t` compatible with an order: conference orders are
/// `4t+4` (skew) and `4t+2` (symmetric).
pub fn stage_of(kind: Kind, n: usize) -> Option<(Stage, u32)> {
    let full = match kind {
        Kind::Skew => 4,
        Kind::Symmetric => 2,
    };
    // n = 4t + full − r with r indices removed
    let r = (full + 4 - n % 4) % 4;
    let stage = [Stage::Full, Stage::Minus1, Stage::Minus2, Stage::Minus3][r];
    let base = n + r;
    if base < full + 4 {
        return None;
    }
    Some((stage, ((base - full) / 4) as u32))
}

/// `M = S² + (4t+3)I` for skew `S`, `(4t+1)I − S²` for symmetric `S`.
pub fn square_matrix(s: &SeidelMatrix, t: u32) -> Result<IntMatrix> {
    let sq = s.body().checked_mul(s.body())?;
    let t = Int::from(t);
    match s.kind() {
        Kind::Skew => sq.add_scalar_identity(&(4 * t + 3)),
        Kind::Symmetric => sq.neg().add_scalar_identity(&(4 * t + 1)),
    }
}

/// The four distinct rows of the canonical four-block matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockRows {
    /// `r₁..r₄`; `r₁` belongs to the first block group.
    pub rows: [Vec<Int>; 4],
    /// Group sizes `a, t, t, t` with `a = t+1` (skew) or `t−1` (symmetric).
    pub sizes: [usize; 4],
}

impl BlockRows {
    fn from_sizes(sizes: [usize; 4]) -> Self {
        let group: Vec<usize> = (0..4).flat_map(|g| std::iter::repeat_n(g, sizes[g])).collect();
        let row = |k: usize| -> Vec<Int> {
            group
                .iter()
                .map(|&g| match (k, g) {
                    (0, 0) => 3,
                    (0, _) | (_, 0) => 1,
                    _ if g == k => 3,
                    _ => -1,
                })
                .collect()
        };
        BlockRows { rows: [row(0), row(1), row(2), row(3)], sizes }
    }

    pub fn order(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Group index of every coordinate.
    pub fn groups(&self) -> Vec<usize> {
        (0..4).flat_map(|g| std::iter::repeat_n(g, self.sizes[g])).collect()
    }

    /// The canonical matrix whose rows in group `g` equal `r_{g+1}`.
    pub fn canonical(&self) -> Result<IntMatrix> {
        let group = self.groups();
        let n = group.len();
        IntMatrix::from_fn(n, n, |i, j| self.rows[group[i]][j])
    }

    /// `(r₁ − r_j)/2` for `j ∈ {2, 3, 4}` (1-based).
    pub fn half_difference(&self, j: usize) -> Vec<Int> {
        self.rows[0].iter().zip(&self.rows[j - 1]).map(|(a, b)| (a - b) / 2).collect()
    }
}

/// Output of [`square_form`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareFormClass {
    pub kind: Kind,
    pub stage: Stage,
    pub t: u32,
    /// `P` with `PᵀMP = canonical`.
    pub switching: SignedPermutation,
    pub canonical: IntMatrix,
    /// Block sizes of the canonical form (empty at `Full`).
    pub blocks: Vec<usize>,
    /// Present at `Minus3`.
    pub block_rows: Option<BlockRows>,
}

/// Switches `M` to its stage's canonical form, asserting exact equality.
pub fn square_form(s: &SeidelMatrix) -> Result<SquareFormClass> {
    let n = s.order();
    let kind = s.kind();
    let (stage, t) = stage_of(kind, n)
        .ok_or_else(|| Error::Precondition(format!("order {n} is too small for any {kind} stage")))?;
    let chi = charpoly(s.body())?;
    let matches = |family: Family| -> Result<bool> { Ok(target_charpoly(family, t)?.expand()? == chi) };
    let on_target = matches(stage.family(kind, false))?
        || (kind == Kind::Symmetric && stage == Stage::Minus3 && matches(stage.family(kind, true))?);
    if !on_target {
        return Err(Error::Precondition(format!(
            "χ = {chi} is not the {kind} {stage} target at t = {t}"
        )));
    }
    let m = square_matrix(s, t)?;
    let (switching, blocks, block_rows) = match stage {
        Stage::Full => {
            if !m.is_zero() {
                return Err(Error::Normalization("M is not zero at the full stage".into()));
            }
            (SignedPermutation::identity(n), Vec::new(), None)
        }
        Stage::Minus1 => {
            if m.entries().any(|v| v.abs() != 1) || rank(&m)? != 1 {
                return Err(Error::Normalization("M is not a rank-one ±1 matrix".into()));
            }
            let signs = m.column(0).iter().map(|&v| v as i8).collect();
            (SignedPermutation::from_signs(signs)?, vec![n], None)
        }
        Stage::Minus2 => {
            if m.entries().any(|v| v % 2 != 0) {
                return Err(Error::Normalization("M has odd entries at the second stage".into()));
            }
            let half = m.try_map(|v| Ok(v / 2))?;
            let (p, sizes) = psd_block_normalize(&half)?;
            if sizes != [n / 2, n / 2] {
                return Err(Error::Normalization(format!("block sizes {sizes:?} are not two equal halves")));
            }
            (p, sizes, None)
        }
        Stage::Minus3 => {
            let (p, rows) = normalize_four_block(s, &m, t)?;
            (p, rows.sizes.to_vec(), Some(rows))
        }
    };
    let canonical = switching.apply(&m)?;
    let expected = match stage {
        Stage::Full => IntMatrix::zeros(n, n)?,
        Stage::Minus1 => IntMatrix::ones(n, n)?,
        Stage::Minus2 => IntMatrix::from_fn(n, n, |i, j| 2 * Int::from((i < n / 2) == (j < n / 2)))?,
        Stage::Minus3 => block_rows.as_ref().expect("set at minus3").canonical()?,
    };
    if canonical != expected {
        return Err(Error::Normalization(format!("switched M is not the {stage} canonical form")));
    }
    Ok(SquareFormClass { kind, stage, t, switching, canonical, blocks, block_rows })
}

/// Four-block normalization of `M` at the third stage: returns `P` with
/// `PᵀMP` in canonical form and the distinct rows `r₁..r₄`.
///
/// Groups 2–4 are ordered so that `PᵀSMP` has `−4J` in block (2,3) for the
/// skew kind.
pub fn normalize_four_block(s: &SeidelMatrix, m: &IntMatrix, t: u32) -> Result<(SignedPermutation, BlockRows)> {
    let n = m.order()?;
    let tu = t as usize;
    let (a, simple) = match s.kind() {
        Kind::Skew => (tu + 1, 4 * Int::from(t) + 3),
        Kind::Symmetric => (tu - 1, 4 * Int::from(t) - 3),
    };
    if n != a + 3 * tu || s.order() != n {
        return Err(Error::Dimension(format!("four-block form needs order {}, got {n}", a + 3 * tu)));
    }
    if m.entries().enumerate().any(|(k, v)| if k % (n + 1) == 0 { *v != 3 } else { v.abs() != 1 && v.abs() != 3 }) {
        return Err(Error::Normalization("M is not a {±1,±3} matrix with diagonal 3".into()));
    }
    let basis = nullspace(&m.add_scalar_identity(&-simple)?)?;
    if basis.len() != 1 {
        return Err(Error::Normalization(format!("eigenvalue {simple} of M has multiplicity {}", basis.len())));
    }
    let v = primitive_integer_vector(&basis[0])?;
    if v.iter().any(|x| x.abs() != 1 && x.abs() != 3) || v.iter().filter(|x| x.abs() == 3).count() != a {
        return Err(Error::Normalization(format!("eigenvector {v:?} is not a (3,1) pattern with {a} threes")));
    }
    let sign = |i: usize| -> i8 { if v[i] > 0 { 1 } else { -1 } };
    let switched = |i: usize, j: usize| Int::from(sign(i) * sign(j)) * m[(i, j)];

    let first: Vec<usize> = (0..n).filter(|&i| v[i].abs() == 3).collect();
    let mut rest: Vec<usize> = (0..n).filter(|&i| v[i].abs() == 1).collect();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    while let Some(&i) = rest.first() {
        let (same, other): (Vec<usize>, Vec<usize>) = rest.iter().partition(|&&j| j == i || switched(i, j) == 3);
        groups.push(same);
        rest = other;
    }
    if groups.len() != 3 || groups.iter().any(|g| g.len() != tu) {
        let sizes: Vec<usize> = groups.iter().map(Vec::len).collect();
        return Err(Error::Normalization(format!("remaining indices split as {sizes:?}, expected three groups of {tu}")));
    }
    let rows = BlockRows::from_sizes([a, tu, tu, tu]);
    let build = |order: [usize; 3]| -> Result<SignedPermutation> {
        let perm: Vec<usize> = first.iter().chain(order.iter().flat_map(|&g| groups[g].iter())).copied().collect();
        let signs = perm.iter().map(|&i| sign(i)).collect();
        SignedPermutation::new(perm, signs)
    };
    let mut p = build([0, 1, 2])?;
    if p.apply(m)? != rows.canonical()? {
        return Err(Error::Normalization("switched M differs from the four-block form".into()));
    }
    if s.kind() == Kind::Skew {
        let sc = p.apply(s.body())?;
        if sc.mul_vec(&rows.rows[0])?.iter().any(|x| *x != 0) {
            return Err(Error::Normalization("r₁ is not a null vector of the switched S".into()));
        }
        let x = sc.checked_mul(&rows.canonical()?)?;
        if x[(a, a + tu)] > 0 {
            p = build([0, 2, 1])?;
        }
    }
    Ok((p, rows))
}

/// Checks that `PᵀSMP` is zero on the first group and `±4J` in a cyclic
/// pattern on groups 2–4, with `i·PᵀSMP` of spectrum `{0^{4t−1}, ±4t√3}`.
pub fn sm_form_check(s: &SeidelMatrix, p: &SignedPermutation, rows: &BlockRows) -> Result<Certificate> {
    const NAME: &str = "sm_form";
    if s.kind() != Kind::Skew {
        return Ok(Certificate::fail(NAME, "the SM block pattern is defined for skew matrices"));
    }
    let n = s.order();
    if rows.order() != n || p.order() != n {
        return Ok(Certificate::fail(NAME, "block rows do not match the matrix order"));
    }
    let t = rows.sizes[1] as u32;
    let m = square_matrix(s, t)?;
    let x = p.apply(&s.body().checked_mul(&m)?)?;
    let group = rows.groups();
    let first_in = |g: usize| group.iter().position(|&h| h == g);
    // σ·4 in blocks (2,3), (3,4), (4,2) and −σ·4 in the transposed blocks
    let sigma = match (first_in(1), first_in(2)) {
        (Some(i), Some(j)) => x[(i, j)].signum(),
        _ => 0,
    };
    let expected = |gi: usize, gj: usize| -> Int {
        if gi == 0 || gj == 0 || gi == gj {
            0
        } else if (gj + 3 - gi) % 3 == 1 {
            4 * sigma
        } else {
            -4 * sigma
        }
    };
    let mismatch = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| x[(i, j)] != expected(group[i], group[j]));
    let chi = charpoly(&x)?;
    let t_int = Int::from(t);
    let target = IntPoly::monomial(1, n - 2).checked_mul(&IntPoly::new(vec![48 * t_int * t_int, 0, 1]))?;
    let cert = if sigma == 0 {
        Certificate::fail(NAME, "block (2,3) of PᵀSMP is zero")
    } else if let Some((i, j)) = mismatch {
        Certificate::fail(NAME, format!("PᵀSMP has {} at ({i}, {j}), expected {}", x[(i, j)], expected(group[i], group[j])))
    } else if chi != target {
        Certificate::fail(NAME, format!("χ(PᵀSMP) = {chi}, expected {target}"))
    } else {
        Certificate::pass(NAME)
    };
    let orientation = if sigma < 0 { "forward" } else { "reversed" };
    Ok(cert
        .with_t(i64::from(t))
        .with_charpoly(chi)
        .with_witness("orientation", orientation)
        .with_witness("spectrum_iX", format!("0^{} ±{}√3", 4 * t - 1, 4 * t)))
}
