//! The `extremal` command-line tool.
//!
//! Subcommands: `generate`, `analyze`, `verify`, `compare`, `export-dot`.
//! Output goes to `--out` when given, stdout otherwise.
//!
//! Exit codes:
//!
//! | code | meaning                                               |
//! |------|-------------------------------------------------------|
//! | 0    | success                                               |
//! | 2    | usage error, or an input/spec file that fails to parse |
//! | 3    | invalid parameters                                    |
//! | 4    | a verification check failed                           |
//! | 5    | I/O failure                                           |
//!
//! `EXTREMAL_THREADS` caps the worker threads used by diameter computations.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::analytics::DEFAULT_EXACT_BUDGET;
use crate::baseline::{generate_ba, BaConfig};
use crate::experiments::{self, Constructor};
use crate::extremal::{build_direct, build_recursive, DEFAULT_RECURSIVE_BUDGET};
use crate::io::{self as formats, AnalyzeOptions, EdgeListError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_CHECK_FAILED: i32 = 4;
pub const EXIT_IO: i32 = 5;

pub const THREADS_ENV: &str = "EXTREMAL_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "extremal",
    version,
    about = "Build and verify extremal diameter-2 scale-free graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenModel {
    ExtremalDirect,
    ExtremalRecursive,
    Ba,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyMode {
    Formulas,
    Equivalence,
    DegreeTable,
    Diameter,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a graph as an edge list.
    Generate {
        #[arg(long, value_enum)]
        model: GenModel,
        /// Family index for the extremal models.
        #[arg(long)]
        t: Option<u32>,
        /// Order of the preferential-attachment graph.
        #[arg(long)]
        n: Option<usize>,
        /// Edges per new vertex for preferential attachment.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyse an edge-list file and emit a JSON report.
    Analyze {
        input: PathBuf,
        #[arg(long)]
        fit_klo: Option<usize>,
        #[arg(long)]
        fit_khi: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_EXACT_BUDGET)]
        exact_budget: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the closed-form claims for t = 0 (or 1) up to --t.
    Verify {
        #[arg(long, value_enum)]
        mode: VerifyMode,
        /// Largest t to check.
        #[arg(long)]
        t: u32,
        #[arg(long, default_value_t = DEFAULT_EXACT_BUDGET)]
        exact_budget: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Diameter scaling table (CSV) for the extremal family and the baseline.
    Compare {
        /// JSON spec; the built-in campaign when omitted.
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_EXACT_BUDGET)]
        exact_budget: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw G*_t (t <= 3) in DOT.
    ExportDot {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::CheckFailed(_) => EXIT_CHECK_FAILED,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(e.to_string())
}

fn io_err(context: impl Into<String>) -> impl FnOnce(io::Error) -> CliError {
    let context = context.into();
    move |source| CliError::Io { context, source }
}

fn with_output<F>(out: Option<&Path>, write: F) -> Result<(), CliError>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    match out {
        Some(path) => {
            let file = File::create(path).map_err(io_err(format!("creating {}", path.display())))?;
            let mut w = BufWriter::new(file);
            write(&mut w)
                .and_then(|_| w.flush())
                .map_err(io_err(format!("writing {}", path.display())))
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            write(&mut w).map_err(io_err("writing stdout"))
        }
    }
}

fn emit_json<T: Serialize>(out: Option<&Path>, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    with_output(out, |w| w.write_all(text.as_bytes()))
}

#[derive(Serialize)]
struct VerifyReport<T: Serialize> {
    mode: &'static str,
    t_max: u32,
    pass: bool,
    first_failure: Option<u32>,
    rows: T,
}

fn verify_outcome<T: Serialize>(
    mode: &'static str,
    t_max: u32,
    rows: T,
    failures: impl IntoIterator<Item = u32>,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let first_failure = failures.into_iter().min();
    emit_json(
        out,
        &VerifyReport {
            mode,
            t_max,
            pass: first_failure.is_none(),
            first_failure,
            rows,
        },
    )?;
    match first_failure {
        None => Ok(()),
        Some(t) => Err(CliError::CheckFailed(format!("{mode} check fails at t = {t}"))),
    }
}

fn run_command(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::Generate {
            model,
            t,
            n,
            m,
            seed,
            out,
        } => {
            let (graph, meta) = match model {
                GenModel::ExtremalDirect | GenModel::ExtremalRecursive => {
                    let t = t.ok_or_else(|| invalid("--t is required for extremal models"))?;
                    let g = if model == GenModel::ExtremalDirect {
                        build_direct(t).map_err(invalid)?
                    } else {
                        if t > DEFAULT_RECURSIVE_BUDGET {
                            return Err(invalid(format!(
                                "recursive construction is limited to t <= {DEFAULT_RECURSIVE_BUDGET}; use extremal-direct"
                            )));
                        }
                        build_recursive(t).map_err(invalid)?
                    };
                    (g.into_graph(), format!("model=extremal t={t}"))
                }
                GenModel::Ba => {
                    let (Some(n), Some(m), Some(seed)) = (n, m, seed) else {
                        return Err(invalid("--n, --m and --seed are required for ba"));
                    };
                    let cfg = BaConfig::new(n, m, seed).map_err(invalid)?;
                    (
                        generate_ba(&cfg).map_err(invalid)?,
                        format!("model=ba n={n} m={m} seed={seed}"),
                    )
                }
            };
            with_output(out.as_deref(), |w| {
                formats::write_edge_list(w, &graph, &[meta])
            })
        }

        Command::Analyze {
            input,
            fit_klo,
            fit_khi,
            exact_budget,
            out,
        } => {
            let file = File::open(&input).map_err(io_err(format!("opening {}", input.display())))?;
            let graph = formats::read_edge_list(BufReader::new(file)).map_err(|e| match e {
                EdgeListError::Io(source) => CliError::Io {
                    context: format!("reading {}", input.display()),
                    source,
                },
                other => CliError::Parse(format!("{}: {other}", input.display())),
            })?;
            let opts = AnalyzeOptions {
                fit_klo,
                fit_khi,
                exact_budget,
                ..AnalyzeOptions::default()
            };
            let report = formats::analyze(&graph, &opts).to_json();
            with_output(out.as_deref(), |w| w.write_all(report.as_bytes()))
        }

        Command::Verify {
            mode,
            t,
            exact_budget,
            out,
        } => {
            let out = out.as_deref();
            match mode {
                VerifyMode::Formulas => {
                    let direct =
                        experiments::verify_formulas(t, Constructor::Direct).map_err(invalid)?;
                    let recursive = experiments::verify_formulas(
                        t.min(DEFAULT_RECURSIVE_BUDGET),
                        Constructor::Recursive,
                    )
                    .map_err(invalid)?;
                    let failures: Vec<u32> = direct
                        .rows
                        .iter()
                        .chain(&recursive.rows)
                        .filter(|r| !r.pass)
                        .map(|r| r.t)
                        .collect();
                    verify_outcome("formulas", t, [direct, recursive], failures, out)
                }
                VerifyMode::Equivalence => {
                    let eq = experiments::constructor_equivalence(t).map_err(invalid)?;
                    let failures: Vec<u32> = (0..=t).filter(|&i| !eq[i as usize]).collect();
                    let rows: Vec<_> = eq
                        .iter()
                        .enumerate()
                        .map(|(i, &equal)| serde_json::json!({"t": i, "equal": equal}))
                        .collect();
                    verify_outcome("equivalence", t, rows, failures, out)
                }
                VerifyMode::DegreeTable => {
                    let rows = experiments::degree_table_conformance(t).map_err(invalid)?;
                    let failures: Vec<u32> =
                        rows.iter().filter(|r| !r.pass).map(|r| r.t).collect();
                    verify_outcome("degree-table", t, rows, failures, out)
                }
                VerifyMode::Diameter => {
                    let rows =
                        experiments::diameter_verification(t, exact_budget).map_err(invalid)?;
                    let failures: Vec<u32> =
                        rows.iter().filter(|r| !r.pass).map(|r| r.t).collect();
                    verify_outcome("diameter", t, rows, failures, out)
                }
            }
        }

        Command::Compare {
            spec,
            exact_budget,
            out,
        } => {
            let models = match spec {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(io_err(format!("reading {}", path.display())))?;
                    formats::parse_scaling_spec(&text)
                        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?
                }
                None => experiments::default_scaling_spec(),
            };
            let rows = experiments::diameter_scaling(&models, exact_budget).map_err(invalid)?;
            with_output(out.as_deref(), |w| {
                formats::write_scaling_csv(w, &rows).map_err(io::Error::other)
            })
        }

        Command::ExportDot { t, out } => {
            let dot = formats::export_dot(t).map_err(invalid)?;
            with_output(out.as_deref(), |w| w.write_all(dot.as_bytes()))
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        // Fails only if the pool already exists, which is harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    configure_threads();
    match run_command(cli.command) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
