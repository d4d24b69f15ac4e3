//! Command-line front end for `octoroots`: literal parsing, the `solve` and
//! `eigen` commands, and their JSON reports.

pub mod literal;
pub mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use octoroots::eigen::{lev_test, rev_test};
use octoroots::{solve, Algebra, AlgebraParams, ClosureRoots, DivisionStatus, Error, Rational, Side, Tolerance};
use serde::Serialize;
use thiserror::Error;

use crate::literal::{parse_octonion, parse_polynomial, parse_scalar, LiteralScalar, ParseError};
use crate::report::{EigenJson, SolveJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_SPLIT: i32 = 3;
pub const EXIT_NUMERIC: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "octoroots", version, about = "Roots of polynomials over octonion division algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find all roots of a polynomial.
    Solve(CommonArgs),
    /// Decide whether λ is a left or right eigenvalue of the companion matrix.
    Eigen(EigenArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// i² = alpha
    #[arg(long, default_value = "-1", allow_hyphen_values = true)]
    pub alpha: String,
    /// j² = beta
    #[arg(long, default_value = "-1", allow_hyphen_values = true)]
    pub beta: String,
    /// l² = gamma
    #[arg(long, default_value = "-1", allow_hyphen_values = true)]
    pub gamma: String,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    /// Polynomial such as "i*z^2 + j*z + l".
    #[arg(long, allow_hyphen_values = true)]
    pub poly: String,
    /// Read the coefficients on the right of the powers of z.
    #[arg(long)]
    pub mirror: bool,
    #[arg(long, default_value_t = Tolerance::default().abs_eps)]
    pub abs_eps: f64,
    #[arg(long, default_value_t = Tolerance::default().rel_eps)]
    pub rel_eps: f64,
    /// Compact JSON (the default).
    #[arg(long, conflicts_with = "pretty")]
    pub json: bool,
    /// Indented JSON.
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Debug, Clone, Args)]
pub struct EigenArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, value_enum, default_value_t = SideArg::Left)]
    pub side: SideArg,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{what}: {source}")]
    Parse { what: &'static str, source: ParseError },
    #[error(transparent)]
    Core(#[from] Error),
    #[error("invalid tolerance: {0}")]
    Tolerance(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::UnsupportedAlgebra(_)) => EXIT_SPLIT,
            CliError::Core(Error::NumericFailure { .. }) => EXIT_NUMERIC,
            _ => EXIT_INPUT,
        }
    }
}

/// What a command produced: exit code, standard output, standard error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Solve(args) => match args.mode {
            Mode::Exact => cmd_solve::<Rational>(args),
            Mode::Float => cmd_solve::<f64>(args),
        },
        Command::Eigen(args) => match args.common.mode {
            Mode::Exact => cmd_eigen::<Rational>(args),
            Mode::Float => cmd_eigen::<f64>(args),
        },
    };
    match result {
        Ok((stdout, warnings)) => Outcome {
            code: EXIT_OK,
            stdout,
            stderr: warnings.iter().map(|w| format!("warning: {w}\n")).collect(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn parse<T>(what: &'static str, r: Result<T, ParseError>) -> Result<T, CliError> {
    r.map_err(|source| CliError::Parse { what, source })
}

fn algebra<S: LiteralScalar>(args: &CommonArgs) -> Result<(Algebra<S>, Vec<String>), CliError> {
    let params = AlgebraParams::new(
        parse("--alpha", parse_scalar(&args.alpha))?,
        parse("--beta", parse_scalar(&args.beta))?,
        parse("--gamma", parse_scalar(&args.gamma))?,
    )?;
    for (name, v) in [("--abs-eps", args.abs_eps), ("--rel-eps", args.rel_eps)] {
        if !(v.is_finite() && v >= 0.0) {
            return Err(CliError::Tolerance(format!("{name} must be a non-negative number, got {v}")));
        }
    }
    let alg = Algebra::with_tolerance(params, Tolerance::new(args.abs_eps, args.rel_eps));
    let mut warnings = Vec::new();
    match alg.division_check() {
        DivisionStatus::Division => {}
        DivisionStatus::Split(_) => {
            return Err(Error::UnsupportedAlgebra(
                "the parameters give a split algebra with zero divisors; only division algebras are supported"
                    .into(),
            )
            .into())
        }
        DivisionStatus::Unverified => {
            warnings.push("could not prove that the parameters give a division algebra".into())
        }
    }
    Ok((alg, warnings))
}

fn side(args: &CommonArgs) -> Side {
    if args.mirror {
        Side::Right
    } else {
        Side::Left
    }
}

fn to_json<T: Serialize>(value: &T, args: &CommonArgs) -> String {
    let mut s = if args.pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .expect("report types serialize");
    s.push('\n');
    s
}

pub fn cmd_solve<S: LiteralScalar + ClosureRoots>(args: &CommonArgs) -> Result<(String, Vec<String>), CliError> {
    let phi = parse("--poly", parse_polynomial::<S>(&args.poly, side(args)))?;
    let (alg, _) = algebra::<S>(args)?;
    // the solver repeats the division check and reports it in its warnings
    let report = solve(&alg, &phi)?;
    let json = SolveJson::new(&alg, &report);
    Ok((to_json(&json, args), report.warnings))
}

pub fn cmd_eigen<S: LiteralScalar>(args: &EigenArgs) -> Result<(String, Vec<String>), CliError> {
    let common = &args.common;
    let phi = parse("--poly", parse_polynomial::<S>(&common.poly, side(common)))?;
    let lam = parse("--lambda", parse_octonion::<S>(&args.lambda))?;
    let (alg, warnings) = algebra::<S>(common)?;
    let m = match args.side {
        SideArg::Left => lev_test(&alg, &phi, &lam)?,
        SideArg::Right => rev_test(&alg, &phi, &lam)?,
    };
    Ok((to_json(&EigenJson::new(&alg, &lam, &m), common), warnings))
}
