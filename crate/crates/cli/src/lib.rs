//! `ewmat` command dispatch. [`run_command`] is the whole program minus the
//! process boundary, so tests drive it directly.

pub mod certfile;
pub mod matfile;

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use ewmat::constructions::{
    complete_step, complete_to_conference, delete_principal, ew_to_tournament, hadamard_from_conference,
    square_form, tournament_to_ew,
};
use ewmat::generators::{paley, random_switch, search, SearchConfig, SearchMode};
use ewmat::seidel::{
    identify, main_angles_of, main_polynomial, score_profile, seidel_from_tournament, spectrum_check,
    target_charpoly, tournament_from_seidel, two_squares_necessary, verify, Certificate, Family, Kind, Property,
    ScoreMode, SeidelMatrix, SignedPermutation, Spectrum, Tournament,
};
use ewmat::{charpoly, det, Error, IntMatrix};

use crate::certfile::{coefficients, render};
use crate::matfile::{FileKind, MatrixFile};

#[derive(Parser, Debug)]
#[command(name = "ewmat", version, about = "Exact tools for EW, conference and tournament matrices")]
struct Cli {
    /// Write output to PATH instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Characteristic polynomial, with any matching target family.
    Charpoly { file: String },
    /// Check a defining identity.
    Verify {
        #[arg(long, value_enum)]
        property: VerifyProperty,
        /// Target family for `--property spectrum`.
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        t: Option<u32>,
        /// Row-sum mode for `--property scores`.
        #[arg(long)]
        mode: Option<String>,
        file: String,
    },
    /// Convert between matrix families.
    Convert {
        #[arg(value_enum)]
        direction: Direction,
        file: String,
    },
    /// Principal submatrix without the listed (0-based) indices.
    Delete {
        #[arg(long, value_delimiter = ',', required = true)]
        indices: Vec<usize>,
        file: String,
    },
    /// Border one step up the completion chain.
    Complete {
        /// Keep bordering until a conference matrix is reached.
        #[arg(long)]
        to_conference: bool,
        file: String,
    },
    /// Classify the switching form of the stage matrix M.
    SquareForm { file: String },
    /// Generate instances.
    Gen {
        #[command(subcommand)]
        what: Gen,
    },
    /// Conjugate by a seeded random signed permutation.
    Scramble {
        #[arg(long)]
        seed: u64,
        file: String,
    },
    /// Main angles of a Seidel matrix with a known target spectrum.
    Angles {
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        t: Option<u32>,
        file: String,
    },
}

#[derive(Subcommand, Debug)]
enum Gen {
    /// Paley conference matrix of order q+1.
    Paley {
        #[arg(long)]
        q: u64,
    },
    /// EW matrices in two-block Gram form.
    Ew {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        skew: bool,
        #[arg(long, default_value_t = 1)]
        limit: usize,
        #[arg(long, default_value_t = 0)]
        node_limit: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum VerifyProperty {
    Hadamard,
    Ew,
    Conference,
    SkewType,
    DoublyRegular,
    DetMod4,
    TwoSquares,
    Spectrum,
    Scores,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Direction {
    EwToTournament,
    TournamentToEw,
    SeidelToTournament,
    TournamentToSeidel,
    ConferenceToHadamard,
}

enum Failure {
    /// Exit 2 with a one-line diagnostic.
    Input(String),
    /// Exit 1 with a FAIL certificate on the output.
    Verdict(Certificate),
}

type Outcome = Result<String, Failure>;

/// Library errors that mean "the input is not in the claimed class" become
/// FAIL certificates; everything else is an input error.
fn lib_err(property: &str) -> impl Fn(Error) -> Failure + '_ {
    move |e| match e {
        Error::Precondition(_) | Error::Normalization(_) => Failure::Verdict(Certificate::fail(property, e.to_string())),
        other => Failure::Input(other.to_string()),
    }
}

fn input_err(e: impl ToString) -> Failure {
    Failure::Input(e.to_string())
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
}

impl Io<'_> {
    fn read(&mut self, file: &str) -> Result<MatrixFile, Failure> {
        let text = if file == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
            s
        } else {
            fs::read_to_string(file).map_err(|e| Failure::Input(format!("{file}: {e}")))?
        };
        MatrixFile::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", if file == "-" { "stdin" } else { file })))
    }
}

fn seidel(f: &MatrixFile) -> Result<SeidelMatrix, Failure> {
    SeidelMatrix::new(f.matrix.clone()).map_err(input_err)
}

fn tournament(f: &MatrixFile) -> Result<Tournament, Failure> {
    Tournament::new(f.matrix.clone()).map_err(input_err)
}

fn parse_family(name: Option<&str>, t: Option<u32>) -> Result<(Family, u32), Failure> {
    match (name, t) {
        (Some(f), Some(t)) => Ok((f.parse().map_err(input_err)?, t)),
        _ => Err(Failure::Input("--family and --t are both required".into())),
    }
}

fn seidel_kind(k: Kind) -> FileKind {
    match k {
        Kind::Skew => FileKind::SeidelSkew,
        Kind::Symmetric => FileKind::SeidelSym,
    }
}

fn verdict(cert: Certificate) -> Outcome {
    if cert.is_pass() {
        Ok(render(&cert))
    } else {
        Err(Failure::Verdict(cert))
    }
}

fn cmd_charpoly(f: &MatrixFile) -> Outcome {
    let chi = charpoly(&f.matrix).map_err(input_err)?;
    let found = identify(&chi).map_err(input_err)?;
    let mut cert = Certificate::pass("charpoly")
        .with_charpoly(chi)
        .with_witness("det", det(&f.matrix).map_err(input_err)?);
    if let Some(&(family, t)) = found.first() {
        let target = target_charpoly(family, t).map_err(input_err)?;
        let pairs: Vec<String> =
            target.factors().iter().map(|(f, m)| format!("[{}]^{m}", coefficients(f))).collect();
        cert = cert.with_witness("factored", &target).with_witness("factors", pairs.join(" "));
    }
    let names: Vec<String> = found.iter().map(|(f, t)| format!("{f}:t={t}")).collect();
    if !names.is_empty() {
        cert = cert.with_witness("families", names.join(" "));
    }
    Ok(render(&cert))
}

fn cmd_verify(property: VerifyProperty, family: Option<&str>, t: Option<u32>, mode: Option<&str>, f: &MatrixFile) -> Outcome {
    let m = &f.matrix;
    let cert = match property {
        VerifyProperty::Hadamard => verify(Property::Hadamard, m),
        VerifyProperty::Ew => verify(Property::Ew, m),
        VerifyProperty::Conference => verify(Property::Conference, m),
        VerifyProperty::SkewType => verify(Property::SkewType, m),
        VerifyProperty::DoublyRegular => verify(Property::DoublyRegular, m),
        VerifyProperty::DetMod4 => verify(Property::DetMod4, m),
        VerifyProperty::TwoSquares => two_squares_necessary(m.rows()),
        VerifyProperty::Spectrum => {
            let (family, t) = parse_family(family, t)?;
            let target = target_charpoly(family, t).map_err(input_err)?;
            spectrum_check(m, &target).map(|c| c.with_witness("family", family).with_t(i64::from(t)))
        }
        VerifyProperty::Scores => {
            let mode = match mode {
                Some(s) => s.parse().map_err(input_err)?,
                None if f.kind == FileKind::Tournament => ScoreMode::Tournament,
                None => ScoreMode::Seidel,
            };
            score_profile(m, mode)
        }
    }
    .map_err(input_err)?;
    verdict(cert)
}

fn cmd_convert(direction: Direction, f: &MatrixFile) -> Outcome {
    let out = match direction {
        Direction::EwToTournament => {
            let a = ew_to_tournament(&f.matrix).map_err(lib_err("ew_to_tournament"))?;
            MatrixFile::with_kind(FileKind::Tournament, a.into_body())
        }
        Direction::TournamentToEw => {
            let ew = tournament_to_ew(&tournament(f)?).map_err(lib_err("tournament_to_ew"))?;
            MatrixFile::with_kind(FileKind::Pm1, ew)
        }
        Direction::SeidelToTournament => {
            let a = tournament_from_seidel(&seidel(f)?).map_err(input_err)?;
            MatrixFile::with_kind(FileKind::Tournament, a.into_body())
        }
        Direction::TournamentToSeidel => {
            let s = seidel_from_tournament(&tournament(f)?).map_err(input_err)?;
            MatrixFile::with_kind(FileKind::SeidelSkew, s.into_body())
        }
        Direction::ConferenceToHadamard => {
            let h = hadamard_from_conference(&seidel(f)?).map_err(lib_err("conference_to_hadamard"))?;
            MatrixFile::with_kind(FileKind::Pm1, h)
        }
    };
    Ok(out.serialize())
}

fn cmd_complete(to_conference: bool, f: &MatrixFile) -> Outcome {
    let s = seidel(f)?;
    let done = if to_conference { complete_to_conference(&s) } else { complete_step(&s) }
        .map_err(lib_err("complete"))?;
    Ok(MatrixFile::with_kind(seidel_kind(done.kind()), done.into_body()).serialize())
}

fn join_rows(m: &IntMatrix) -> String {
    m.row_iter()
        .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(";")
}

fn cmd_square_form(f: &MatrixFile) -> Outcome {
    let s = seidel(f)?;
    let class = square_form(&s).map_err(lib_err("square_form"))?;
    let blocks: Vec<String> = class.blocks.iter().map(usize::to_string).collect();
    let mut cert = Certificate::pass("square_form")
        .with_t(i64::from(class.t))
        .with_witness("kind", class.kind)
        .with_witness("stage", class.stage)
        .with_witness("family", class.stage.family(class.kind, false))
        .with_witness("blocks", blocks.join(" "))
        .with_witness("switching", &class.switching)
        .with_witness("canonical", join_rows(&class.canonical));
    if let Some(rows) = &class.block_rows {
        for (k, r) in rows.rows.iter().enumerate() {
            let text: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            cert = cert.with_witness(format!("r{}", k + 1), text.join(" "));
        }
    }
    Ok(render(&cert))
}

fn cmd_gen(what: &Gen) -> Outcome {
    match *what {
        Gen::Paley { q } => {
            let s = paley(q).map_err(input_err)?;
            Ok(MatrixFile::with_kind(seidel_kind(s.kind()), s.into_body()).serialize())
        }
        Gen::Ew { order, skew, limit, node_limit, seed } => {
            let mode = if skew { SearchMode::SkewOnly } else { SearchMode::General };
            let cfg = SearchConfig::new(order, mode).with_limit(limit).with_node_limit(node_limit).with_seed(seed);
            let report = search(&cfg).map_err(input_err)?;
            if report.solutions.is_empty() {
                let reason = if report.complete { "search space exhausted" } else { "budget exhausted" };
                return Err(Failure::Verdict(
                    Certificate::fail("search_ew", format!("no EW matrix of order {order} ({mode}): {reason}"))
                        .with_witness("nodes", report.nodes),
                ));
            }
            let mut out = String::new();
            for (k, m) in report.solutions.into_iter().enumerate() {
                if k > 0 {
                    out.push('\n');
                }
                out.push_str(&format!("# solution {}\n", k + 1));
                out.push_str(&MatrixFile::with_kind(FileKind::Pm1, m).serialize());
            }
            Ok(out)
        }
    }
}

fn cmd_scramble(seed: u64, f: &MatrixFile) -> Outcome {
    let (p, _) = random_switch(&f.matrix, seed).map_err(input_err)?;
    // tournaments only admit plain relabelling
    let p = if f.kind == FileKind::Tournament { SignedPermutation::from_perm(p.perm().to_vec()).map_err(input_err)? } else { p };
    let m = p.apply(&f.matrix).map_err(input_err)?;
    Ok(format!("# switching {p}\n{}", MatrixFile::with_kind(f.kind, m).serialize()))
}

fn cmd_angles(family: Option<&str>, t: Option<u32>, f: &MatrixFile) -> Outcome {
    let m = &f.matrix;
    let (family, t) = if family.is_some() || t.is_some() {
        parse_family(family, t)?
    } else {
        let chi = charpoly(m).map_err(input_err)?;
        *identify(&chi)
            .map_err(input_err)?
            .first()
            .ok_or_else(|| Failure::Input(format!("χ = {chi} matches no known family; pass --family and --t")))?
    };
    let target = target_charpoly(family, t).map_err(input_err)?;
    let spectrum = Spectrum::from_factored(&target).map_err(input_err)?;
    let angles = main_angles_of(m, &spectrum).map_err(lib_err("main_angles"))?;
    let mut cert = Certificate::pass("main_angles")
        .with_t(i64::from(t))
        .with_charpoly(angles.charpoly().clone())
        .with_witness("family", family);
    for a in angles.entries() {
        cert = cert.with_witness(format!("alpha[{}]", a.eigenvalue), a.alpha);
        cert = cert.with_witness(format!("alpha_per_multiplicity[{}]", a.eigenvalue), a.per_multiplicity());
    }
    let n = main_polynomial(m).map_err(input_err)?;
    Ok(render(&cert.with_witness("total", angles.total()).with_witness("main_polynomial", coefficients(&n))))
}

fn dispatch(cli: &Cli, io: &mut Io<'_>) -> Outcome {
    match &cli.cmd {
        Cmd::Charpoly { file } => cmd_charpoly(&io.read(file)?),
        Cmd::Verify { property, family, t, mode, file } => {
            cmd_verify(*property, family.as_deref(), *t, mode.as_deref(), &io.read(file)?)
        }
        Cmd::Convert { direction, file } => cmd_convert(*direction, &io.read(file)?),
        Cmd::Delete { indices, file } => {
            let f = io.read(file)?;
            let m = delete_principal(&f.matrix, indices).map_err(input_err)?;
            Ok(MatrixFile::new(m).serialize())
        }
        Cmd::Complete { to_conference, file } => cmd_complete(*to_conference, &io.read(file)?),
        Cmd::SquareForm { file } => cmd_square_form(&io.read(file)?),
        Cmd::Gen { what } => cmd_gen(what),
        Cmd::Scramble { seed, file } => cmd_scramble(*seed, &io.read(file)?),
        Cmd::Angles { family, t, file } => cmd_angles(family.as_deref(), *t, &io.read(file)?),
    }
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write, stderr: &mut dyn Write) -> bool {
    let written = match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => stdout.write_all(text.as_bytes()).map_err(|e| format!("stdout: {e}")),
    };
    match written {
        Ok(()) => true,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            false
        }
    }
}

/// Runs one command and returns its exit code: 0 success/PASS,
/// 1 verification FAIL, 2 usage or input error.
pub fn run_command<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(rendered.as_bytes()) } else { stderr.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let mut io = Io { stdin };
    match dispatch(&cli, &mut io) {
        Ok(text) => {
            if emit(&cli.out, &text, stdout, stderr) {
                0
            } else {
                2
            }
        }
        Err(Failure::Verdict(cert)) => {
            if emit(&cli.out, &render(&cert), stdout, stderr) {
                1
            } else {
                2
            }
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}
