//! Argument handling and subcommands for the `fangcheng` binary.
//!
//! [`run`] takes the argument list and output streams so the whole command
//! line can be exercised in-process.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use fangcheng::detkit::{det_oracle, det_via_chio, OracleMethod, SquareMatrix};
use fangcheng::diagonalize::{Moderation, Solution};
use fangcheng::eliminate::{forward_eliminate, PivotPolicy, PivotStrategy};
use fangcheng::report::{run_trial, BenchReport};
use fangcheng::solve::{solve_system, Finish, SolveOptions};
use fangcheng::tableau::parse_tableau;
use fangcheng::trace::{RunResult, Trace, TraceDocument};
use fangcheng::wellprob::{build_well_system, solve_well, solve_well_parametric, WellRhs};
use fangcheng::{Error, Integer};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SINGULAR: i32 = 3;
pub const EXIT_INEXACT: i32 = 4;
pub const EXIT_SIZE_LIMIT: i32 = 5;

#[derive(Parser, Debug)]
#[command(
    name = "fangcheng",
    version,
    about = "Exact integer elimination on counting-board tableaux"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve an n x (n+1) system exactly.
    Solve(SolveArgs),
    /// Determinant of a square tableau.
    Det(DetArgs),
    /// Cyclic band system with a uniform right-hand side.
    Well(WellArgs),
    /// Compare operation counts and entry growth across strategies.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    /// Tableau file, or `-` for stdin.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = StrategyArg::Chio)]
    pub strategy: StrategyArg,
    #[arg(long, value_enum, default_value_t = PolicyArg::Strict)]
    pub pivot: PolicyArg,
    #[arg(long, value_enum, default_value_t = FinishArg::Backsub)]
    pub finish: FinishArg,
    #[arg(long, value_enum, default_value_t = TraceArg::None)]
    pub trace: TraceArg,
    /// Write the trace here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Divide each row by its content between backward steps (hart finish).
    #[arg(long)]
    pub moderate_rows: bool,
}

#[derive(Args, Debug)]
pub struct DetArgs {
    /// Square tableau file, or `-` for stdin.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = MethodArg::Chio)]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value_t = PolicyArg::Strict)]
    pub pivot: PolicyArg,
}

#[derive(Args, Debug)]
pub struct WellArgs {
    /// Diagonal coefficients, comma separated.
    #[arg(
        long,
        value_delimiter = ',',
        required = true,
        allow_negative_numbers = true
    )]
    pub coeffs: Vec<i64>,
    /// Right-hand side; posited as det(A) when omitted.
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<i64>,
    /// Also print the solution.
    #[arg(long)]
    pub solve: bool,
    /// Request b as a free unknown (refused).
    #[arg(long)]
    pub parametric: bool,
    #[arg(long, value_enum, default_value_t = PolicyArg::Strict)]
    pub pivot: PolicyArg,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Entries are drawn from [-range, range].
    #[arg(long, default_value_t = fangcheng::corpus::DEFAULT_RANGE)]
    pub range: i64,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum StrategyArg {
    Nine,
    Chio,
    Field,
}

impl From<StrategyArg> for PivotStrategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Nine => PivotStrategy::NineChapters,
            StrategyArg::Chio => PivotStrategy::Chio,
            StrategyArg::Field => PivotStrategy::FieldGauss,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum PolicyArg {
    Strict,
    Swap,
}

impl From<PolicyArg> for PivotPolicy {
    fn from(p: PolicyArg) -> Self {
        match p {
            PolicyArg::Strict => PivotPolicy::Strict,
            PolicyArg::Swap => PivotPolicy::Swap,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FinishArg {
    Backsub,
    Hart,
    Jordan,
}

impl From<FinishArg> for Finish {
    fn from(f: FinishArg) -> Self {
        match f {
            FinishArg::Backsub => Finish::BackSubst,
            FinishArg::Hart => Finish::Hart,
            FinishArg::Jordan => Finish::Jordan,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum TraceArg {
    None,
    Board,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MethodArg {
    Chio,
    Cofactor,
    Perm,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{}: {source}", .path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => exit_code(e),
            CliError::Io { .. } | CliError::Usage(_) => EXIT_USAGE,
        }
    }
}

/// Exit status for a toolkit error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::DimensionMismatch(_)
        | Error::UnderDetermined { .. }
        | Error::OverDetermined { .. }
        | Error::NotAField
        | Error::IncompatibleFinish
        | Error::TooSmall(_)
        | Error::UnsupportedIndeterminate => EXIT_USAGE,
        Error::DivideByZero
        | Error::ZeroPivot { .. }
        | Error::RankDeficient { .. }
        | Error::SingularLeadingMinor { .. }
        | Error::SingularDiagonal { .. } => EXIT_SINGULAR,
        Error::InexactDivision { .. } => EXIT_INEXACT,
        Error::SizeLimit { .. } => EXIT_SIZE_LIMIT,
    }
}

/// Parses `args` (program name first) and runs the subcommand. Results go to
/// `out`, diagnostics to `err`; the return value is the process exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Solve(a) => cmd_solve(&a, out, err),
        Command::Det(a) => cmd_det(&a, out),
        Command::Well(a) => cmd_well(&a, out),
        Command::Bench(a) => cmd_bench(&a, out),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    let io_err = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())
        .map_err(|source| CliError::Io {
            path: PathBuf::from("<stdout>"),
            source,
        })
}

fn solution_lines(s: &Solution) -> String {
    let mut text = String::new();
    for (j, v) in s.values.iter().enumerate() {
        writeln!(text, "x{} = {v}", j + 1).unwrap();
    }
    text
}

fn denominator_line(s: &Solution) -> String {
    s.shared
        .as_ref()
        .map(|sh| format!("denominator = {}\n", sh.denominator))
        .unwrap_or_default()
}

pub fn cmd_solve(a: &SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let t = parse_tableau(&read_input(&a.input)?)?;
    let opts = SolveOptions {
        strategy: a.strategy.into(),
        policy: a.pivot.into(),
        finish: a.finish.into(),
        moderation: if a.moderate_rows {
            Moderation::RowContent
        } else {
            Moderation::Off
        },
    };
    let run = solve_system(&t, &opts);
    let hart = opts.finish == Finish::Hart;
    let mut text = String::new();
    if let Ok(s) = &run.result {
        text.push_str(&solution_lines(s));
        if hart {
            text.push_str(&denominator_line(s));
        }
    }

    match a.trace {
        TraceArg::None => {}
        TraceArg::Board => {
            let board = run.trace.render_board() + "\n";
            match (&a.out, run.result.is_ok()) {
                (Some(path), _) => write_file(path, &board)?,
                (None, true) => text.insert_str(0, &format!("{board}\n")),
                // Keep stdout free of numbers when the run failed.
                (None, false) => {
                    let _ = err.write_all(board.as_bytes());
                }
            }
        }
        TraceArg::Json => {
            let doc = trace_document(&run.trace, &run.result, hart).to_json() + "\n";
            match &a.out {
                Some(path) => write_file(path, &doc)?,
                None => text = doc,
            }
        }
    }

    match run.result {
        Ok(_) => emit(out, &text),
        Err(e) => {
            if a.trace == TraceArg::Json && a.out.is_none() {
                emit(out, &text)?;
            }
            Err(e.into())
        }
    }
}

fn trace_document(
    trace: &Trace,
    result: &fangcheng::Result<Solution>,
    hart: bool,
) -> TraceDocument {
    let run_result = match result {
        Ok(s) => RunResult {
            exit: EXIT_OK,
            solution: Some(s.values.iter().map(ToString::to_string).collect()),
            denominator: if hart {
                s.shared.as_ref().map(|sh| sh.denominator.to_string())
            } else {
                None
            },
        },
        Err(e) => RunResult {
            exit: exit_code(e),
            solution: None,
            denominator: None,
        },
    };
    TraceDocument::new(trace.clone(), run_result)
}

pub fn cmd_det(a: &DetArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let t = parse_tableau(&read_input(&a.input)?)?;
    if t.cols() != t.rows() {
        return Err(CliError::Usage(format!(
            "det needs a square tableau, found {} x {}",
            t.rows(),
            t.cols()
        )));
    }
    let m = SquareMatrix::leading_block(&t);
    let det = match a.method {
        MethodArg::Chio => det_via_chio(&m, a.pivot.into())?,
        MethodArg::Cofactor => det_oracle(&m, OracleMethod::Cofactor)?,
        MethodArg::Perm => det_oracle(&m, OracleMethod::Permutation)?,
    };
    emit(out, &format!("{det}\n"))
}

pub fn cmd_well(a: &WellArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let mut ws = build_well_system(a.coeffs.iter().map(|&v| Integer::from(v)).collect())?;
    if let Some(b) = a.b {
        ws = ws.with_b(Integer::from(b));
    }
    if a.parametric {
        solve_well_parametric(&ws)?;
    }
    let posited = matches!(ws.rhs(), WellRhs::Posited);
    let mut text = String::new();
    if a.solve {
        let r = solve_well(&ws, a.pivot.into())?;
        writeln!(
            text,
            "b = {}{}",
            r.b,
            if posited { " (posited)" } else { "" }
        )
        .unwrap();
        writeln!(text, "det = {}", r.det).unwrap();
        writeln!(text, "pivot = {}", r.forward_pivot).unwrap();
        text.push_str(&solution_lines(&r.solution));
        text.push_str(&denominator_line(&r.solution));
    } else {
        let b = ws.resolved_b()?;
        let det = fangcheng::wellprob::posited_b(&ws)?;
        let (echelon, _) =
            forward_eliminate(&ws.tableau()?, PivotStrategy::NineChapters, a.pivot.into())?;
        let n = ws.n();
        writeln!(text, "b = {b}{}", if posited { " (posited)" } else { "" }).unwrap();
        writeln!(text, "det = {det}").unwrap();
        writeln!(text, "pivot = {}", echelon.get(n - 1, n - 1)).unwrap();
    }
    emit(out, &text)
}

pub fn cmd_bench(a: &BenchArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if a.n < 2 {
        return Err(CliError::Usage(format!(
            "--n must be at least 2, got {}",
            a.n
        )));
    }
    if a.trials < 1 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    if a.range < 1 {
        return Err(CliError::Usage(format!(
            "--range must be at least 1, got {}",
            a.range
        )));
    }
    let report = bench_report(a.n, a.trials, a.seed, a.range)?;
    let text = match a.format {
        FormatArg::Text => report.to_text(),
        FormatArg::Json => report.to_json() + "\n",
    };
    emit(out, &text)
}

/// Runs the trials in parallel; results are collected in trial order so the
/// report does not depend on scheduling.
pub fn bench_report(n: usize, trials: usize, seed: u64, range: i64) -> Result<BenchReport, Error> {
    let records = (0..trials as u64)
        .into_par_iter()
        .map(|r| run_trial(n, seed, r, range))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BenchReport::aggregate(n, seed, range, &records))
}
