//! The `ncpoly` command-line front end.
//!
//! [`run`] parses arguments, executes one subcommand and writes either plain
//! text or a JSON [`RunReport`]. Exit codes: 0 success, 1 usage, 2 parse
//! error, 3 algebraic error, 4 failed check or worked-example mismatch.

mod commands;
pub mod worked;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{octonions, quaternions, Algebra};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_ALGEBRA: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "ncpoly",
    version,
    about = "Exact polynomial algebra over the quaternions and octonions"
)]
pub struct Cli {
    /// Print a machine-readable JSON report.
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true, value_enum, default_value_t = AlgebraArg::H)]
    pub algebra: AlgebraArg,
    /// Read the first expression argument from a file.
    #[arg(long, global = true, value_name = "PATH")]
    pub file: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgebraArg {
    /// Quaternions.
    #[value(name = "H", alias = "h")]
    H,
    /// Octonions.
    #[value(name = "O", alias = "o")]
    O,
}

impl AlgebraArg {
    pub fn algebra(self) -> Algebra {
        match self {
            AlgebraArg::H => quaternions(),
            AlgebraArg::O => octonions(),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a polynomial at an element.
    Eval {
        #[arg(value_name = "POLY", allow_hyphen_values = true)]
        poly: Option<String>,
        #[arg(long, value_name = "ELEMENT", allow_hyphen_values = true)]
        at: String,
    },
    /// Multiply two polynomials.
    Mul {
        #[arg(value_names = ["P", "Q"], num_args = 1..=2, allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Solve a ∘ x = b for a tensor a.
    Solve {
        #[arg(value_names = ["TENSOR", "B"], num_args = 1..=2, allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Print the matrix and determinant of a tensor.
    Matrix {
        #[arg(value_name = "TENSOR", allow_hyphen_values = true)]
        tensor: Option<String>,
    },
    /// Square roots of a quaternion.
    Sqrt {
        #[arg(value_name = "QUATERNION", allow_hyphen_values = true)]
        value: Option<String>,
    },
    /// Divide a polynomial by a linear polynomial.
    Divide {
        #[arg(value_name = "POLY", allow_hyphen_values = true)]
        poly: Option<String>,
        /// Divisor such as "x - i"; a non-monic divisor p1∘x + p0 is read
        /// from its components.
        #[arg(
            long,
            value_name = "LINEAR",
            allow_hyphen_values = true,
            required_unless_present = "general"
        )]
        by: Option<String>,
        /// Divisor p1∘x + p0 given as a tensor and an element.
        #[arg(long, num_args = 2, value_names = ["P1", "P0"], allow_hyphen_values = true, conflicts_with = "by")]
        general: Option<Vec<String>>,
    },
    /// Factor a polynomial through x - a1, x - a2, … (rightmost first).
    FactorChain {
        #[arg(value_name = "POLY", allow_hyphen_values = true)]
        poly: Option<String>,
        #[arg(
            long,
            value_name = "A1,A2,...",
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        roots: Vec<String>,
    },
    /// Product of two left-sided polynomials.
    OreMul {
        #[arg(value_names = ["P", "Q"], num_args = 1..=2, allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Test the factorisation P(x) = L(h x h⁻¹) R(x) for L = x - i, R = x - j.
    OreCheck,
    /// Divide a bracketed octonion polynomial.
    Odivide {
        #[arg(value_name = "POLY", allow_hyphen_values = true)]
        poly: Option<String>,
        #[arg(
            long,
            value_name = "LINEAR",
            allow_hyphen_values = true,
            required_unless_present = "roots"
        )]
        by: Option<String>,
        /// Two roots for a two-slot factorisation.
        #[arg(
            long,
            value_name = "A1,A2",
            value_delimiter = ',',
            allow_hyphen_values = true,
            conflicts_with = "by"
        )]
        roots: Option<Vec<String>>,
    },
    /// Run a worked example and compare it with its stored output.
    PaperExample {
        #[arg(value_name = "ID")]
        id: String,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Eval { .. } => "eval",
            Command::Mul { .. } => "mul",
            Command::Solve { .. } => "solve",
            Command::Matrix { .. } => "matrix",
            Command::Sqrt { .. } => "sqrt",
            Command::Divide { .. } => "divide",
            Command::FactorChain { .. } => "factor-chain",
            Command::OreMul { .. } => "ore-mul",
            Command::OreCheck => "ore-check",
            Command::Odivide { .. } => "odivide",
            Command::PaperExample { .. } => "paper-example",
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Input {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Machine-readable outcome of one command; fields serialize in this order.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub algebra: String,
    pub inputs: Vec<Input>,
    pub result: Option<serde_json::Value>,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
    pub error: Option<String>,
    pub exit_code: i32,
}

/// Why a command did not produce a result.
#[derive(Debug)]
pub(crate) enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Lib(Error::Parse { .. } | Error::InvalidExpression(_)) => EXIT_PARSE,
            Failure::Lib(_) => EXIT_ALGEBRA,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

/// What a successful command produced.
#[derive(Debug, Default)]
pub(crate) struct Outcome {
    pub text: Vec<String>,
    pub result: serde_json::Value,
    pub checks: Vec<Check>,
    /// Extra diagnostics for standard error, e.g. a diff.
    pub notes: Vec<String>,
}

pub(crate) struct Context {
    pub algebra: Algebra,
    pub inputs: Vec<Input>,
    pub warnings: Vec<String>,
    file: Option<String>,
}

impl Context {
    /// Fills the first expression slot from `--file` when one was given.
    pub fn primary(&mut self, name: &str, arg: Option<String>) -> Result<String, Failure> {
        let value = match (arg, self.file.take()) {
            (Some(_), Some(_)) => {
                return Err(Failure::Usage(format!(
                    "<{name}> given both as an argument and with --file"
                )))
            }
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => return Err(Failure::Usage(format!("missing <{name}>"))),
        };
        self.record(name, &value);
        Ok(value)
    }

    /// Two positional expressions, the first of which may come from `--file`.
    pub fn pair(
        &mut self,
        names: [&str; 2],
        mut args: Vec<String>,
    ) -> Result<(String, String), Failure> {
        let first = match (args.len(), self.file.is_some()) {
            (2, false) => Some(args.remove(0)),
            (1, true) => None,
            _ => {
                return Err(Failure::Usage(format!(
                    "expected <{}> <{}>",
                    names[0], names[1]
                )))
            }
        };
        let a = self.primary(names[0], first)?;
        let b = args.remove(0);
        self.record(names[1], &b);
        Ok((a, b))
    }

    pub fn record(&mut self, name: &str, value: &str) {
        self.inputs.push(Input {
            name: name.to_string(),
            value: value.to_string(),
        });
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    execute(&cli, out, err)
}

pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let algebra = match &cli.command {
        Command::Odivide { .. } => octonions(),
        _ => cli.algebra.algebra(),
    };
    let mut report = RunReport {
        command: cli.command.name().to_string(),
        algebra: algebra.name().to_string(),
        inputs: Vec::new(),
        result: None,
        checks: Vec::new(),
        warnings: Vec::new(),
        error: None,
        exit_code: EXIT_OK,
    };
    let file = match &cli.file {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(s) => Some(s.trim().to_string()),
            Err(e) => {
                report.error = Some(format!("cannot read {}: {e}", path.display()));
                report.exit_code = EXIT_USAGE;
                return finish(cli.json, &report, &Outcome::default(), out, err);
            }
        },
        None => None,
    };
    let mut ctx = Context {
        algebra,
        inputs: Vec::new(),
        warnings: Vec::new(),
        file,
    };
    let outcome = commands::dispatch(&cli.command, &mut ctx);
    report.inputs = ctx.inputs;
    report.warnings = ctx.warnings;
    match outcome {
        Ok(outcome) => {
            report.result = Some(outcome.result.clone());
            report.checks = outcome.checks.clone();
            if report.checks.iter().any(|c| !c.passed) {
                report.exit_code = EXIT_MISMATCH;
            }
            finish(cli.json, &report, &outcome, out, err)
        }
        Err(failure) => {
            report.error = Some(failure.message());
            report.exit_code = failure.exit_code();
            finish(cli.json, &report, &Outcome::default(), out, err)
        }
    }
}

fn finish(
    json: bool,
    report: &RunReport,
    outcome: &Outcome,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    for w in &report.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    for n in &outcome.notes {
        let _ = writeln!(err, "{n}");
    }
    if json {
        let text = serde_json::to_string_pretty(report).expect("report serializes");
        let _ = writeln!(out, "{text}");
    } else {
        for line in &outcome.text {
            let _ = writeln!(out, "{line}");
        }
        for c in &outcome.checks {
            let _ = writeln!(out, "{}", check_line(c));
        }
        if let Some(e) = &report.error {
            let _ = writeln!(err, "error: {e}");
        }
    }
    report.exit_code
}

pub(crate) fn check_line(c: &Check) -> String {
    let status = if c.passed { "pass" } else { "FAIL" };
    if c.detail.is_empty() {
        format!("[{status}] {}", c.name)
    } else {
        format!("[{status}] {}: {}", c.name, c.detail)
    }
}
