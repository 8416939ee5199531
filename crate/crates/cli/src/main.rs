//! `slalg`: multiplication tables, element arithmetic and verification
//! suites for the octonion-like and sedenion-like algebras.
//!
//! Exit codes: 0 success, 1 suite failure, 2 singular element or matrix,
//! 3 not orthogonal, 4 input error.

mod render;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;
use slalg::io::{compute, error_to_json, Element, JsonScalar, Op};
use slalg::verify::{self, Suite, VerifyConfig, VerifyReport};
use slalg::{AlgebraKind, Error, Orientation, Rational};

const EXIT_SUITE_FAILURE: u8 = 1;
const EXIT_SINGULAR: u8 = 2;
const EXIT_NOT_ORTHOGONAL: u8 = 3;
const EXIT_INPUT: u8 = 4;

#[derive(Parser)]
#[command(name = "slalg", version, about = "Octonion-like and sedenion-like algebras from Cl(4,0) and Cl(5,0)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algebra {
    OctonionLike,
    SedenionLike,
}

impl From<Algebra> for AlgebraKind {
    fn from(a: Algebra) -> Self {
        match a {
            Algebra::OctonionLike => AlgebraKind::OctonionLike,
            Algebra::SedenionLike => AlgebraKind::SedenionLike,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Float,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum Format {
    Markdown,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the derived multiplication table.
    Table {
        #[arg(long, value_enum, default_value = "octonion-like")]
        algebra: Algebra,
        /// Orientation λ (1 or -1).
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply one operation to JSON elements and print the JSON result.
    Compute {
        /// product, dagger, inverse, norm, split or defect.
        op: String,
        /// Elements as JSON objects, bare coefficient arrays (with
        /// --algebra), or @file.
        #[arg(required = true)]
        operands: Vec<String>,
        /// Algebra for bare coefficient arrays.
        #[arg(long, value_enum)]
        algebra: Option<Algebra>,
        /// Orientation for bare coefficient arrays.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites and print a report.
    Verify {
        /// Restrict to one algebra; both by default.
        #[arg(long, value_enum)]
        algebra: Option<Algebra>,
        /// 1, -1 or both.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
        /// Suite names (assoc, table-diff, matrix, norm, closure,
        /// commutant, hopf, grading, cocycle) or all.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        suite: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Count printed-table mismatches as failures.
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
        /// Include wall-clock time per suite (output is then not
        /// reproducible byte for byte).
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::SingularElement { .. } | Error::SingularMatrix => EXIT_SINGULAR,
        Error::NotOrthogonal { .. } => EXIT_NOT_ORTHOGONAL,
        _ => EXIT_INPUT,
    }
}

fn parse_orientation(text: &str) -> Result<Orientation, Error> {
    let v: i64 = text.trim().parse().map_err(|_| Error::Input(format!("lambda must be 1 or -1, got {text:?}")))?;
    Orientation::from_i64(v)
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).map_err(|e| Error::Input(e.to_string()))
        }
    }
}

fn read_operand(text: &str, algebra: Option<AlgebraKind>, lambda: Orientation) -> Result<Value, Error> {
    let text = match text.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {path}: {e}")))?,
        None => text.to_string(),
    };
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Input(format!("invalid JSON: {e}")))?;
    if v.is_array() {
        let kind = algebra.ok_or_else(|| Error::Input("bare coefficient arrays need --algebra".into()))?;
        return Ok(serde_json::json!({ "algebra": kind.name(), "lambda": lambda.value(), "coeffs": v }));
    }
    Ok(v)
}

fn run_compute<T: JsonScalar>(op: Op, operands: &[Value]) -> Result<Value, Error> {
    let elements = operands.iter().map(Element::<T>::from_json).collect::<Result<Vec<_>, _>>()?;
    compute(op, &elements)
}

fn cmd_compute(
    op: &str,
    operands: &[String],
    algebra: Option<Algebra>,
    lambda: &str,
    mode: Mode,
) -> Result<String, Error> {
    let op: Op = op.parse()?;
    let lambda = parse_orientation(lambda)?;
    let values = operands
        .iter()
        .map(|o| read_operand(o, algebra.map(Into::into), lambda))
        .collect::<Result<Vec<_>, _>>()?;
    let result = match mode {
        Mode::Exact => run_compute::<Rational>(op, &values)?,
        Mode::Float => run_compute::<f64>(op, &values)?,
    };
    Ok(format!("{result}\n"))
}

fn suites(names: &[String]) -> Result<Vec<Suite>, Error> {
    let mut out = Vec::new();
    for name in names {
        if name == "all" {
            out.extend(Suite::ALL);
        } else {
            out.push(name.parse()?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn orientations(text: &str) -> Result<Vec<Orientation>, Error> {
    if text == "both" {
        Ok(Orientation::BOTH.to_vec())
    } else {
        Ok(vec![parse_orientation(text)?])
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    algebra: Option<Algebra>,
    lambda: &str,
    suite_names: &[String],
    seed: u64,
    strict: bool,
    timings: bool,
    format: Format,
) -> Result<(String, bool), Error> {
    let kinds: Vec<AlgebraKind> = match algebra {
        Some(a) => vec![a.into()],
        None => AlgebraKind::BOTH.to_vec(),
    };
    let suites = suites(suite_names)?;
    let mut reports: Vec<VerifyReport> = Vec::new();
    for &kind in &kinds {
        for &o in &orientations(lambda)? {
            for &suite in &suites {
                let config = VerifyConfig { seed, strict, ..VerifyConfig::new(kind, o) };
                let start = Instant::now();
                let mut report = verify::run(suite, &config);
                if timings {
                    report.wall_ms = Some(start.elapsed().as_secs_f64() * 1e3);
                }
                reports.push(report);
            }
        }
    }
    let passed = reports.iter().all(VerifyReport::passed);
    let text = match format {
        Format::Json => render::verify_json(&reports, passed),
        Format::Markdown => render::verify_markdown(&reports, passed),
        Format::Csv => render::verify_csv(&reports)?,
    };
    Ok((text, passed))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Table { algebra, lambda, format, out } => {
            let result = parse_orientation(&lambda)
                .and_then(|o| render::table(algebra.into(), o, format))
                .and_then(|text| emit(out.as_ref(), &text));
            finish_plain(result.map(|_| 0))
        }
        Command::Compute { op, operands, algebra, lambda, mode, out } => {
            match cmd_compute(&op, &operands, algebra, &lambda, mode) {
                Ok(text) => finish_plain(emit(out.as_ref(), &text).map(|_| 0)),
                Err(e) => {
                    let payload = format!("{}\n", error_to_json(&e));
                    let _ = emit(out.as_ref(), &payload);
                    ExitCode::from(exit_code(&e))
                }
            }
        }
        Command::Verify { algebra, lambda, suite, seed, strict, format, timings, out } => {
            let result = cmd_verify(algebra, &lambda, &suite, seed, strict, timings, format).and_then(|(text, passed)| {
                emit(out.as_ref(), &text)?;
                Ok(if passed { 0 } else { EXIT_SUITE_FAILURE })
            });
            finish_plain(result)
        }
    }
}

fn finish_plain(result: Result<u8, Error>) -> ExitCode {
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{}", error_to_json(&e));
            ExitCode::from(exit_code(&e))
        }
    }
}
