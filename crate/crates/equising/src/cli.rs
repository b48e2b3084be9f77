//! Command-line front end.
//!
//! `equising analyze` parses a polynomial in x and y, runs the
//! pseudo-irreducibility pipeline (optionally cross-checked against the
//! brute-force oracle) and prints a text or machine-readable report.
//!
//! Exit codes: 0 — analysis completed (either verdict); 1 — the input could
//! not be parsed; 2 — the input is invalid (zero polynomial, not
//! square-free, characteristic too small, bad field spec); 3 — an internal
//! invariant was violated.

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::field::{is_prime_u64, BaseField};
use crate::input::parse_poly;
use crate::newton::YPoly;
use crate::oracle;
use crate::pipeline::{self, Analysis, Verdict};
use crate::report::{self, OracleReport};
use crate::tower::TowerRing;

#[derive(Parser)]
#[command(name = "equising", version, about = "Pseudo-irreducibility and equisingularity analysis of bivariate polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a polynomial F(x, y) read from FILE or standard input.
    Analyze(AnalyzeArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Coefficient field: `q` (rationals) or `fp:<p>` (prime field).
    #[arg(long, default_value = "q")]
    field: String,
    /// Cross-check the result against the brute-force oracle.
    #[arg(long)]
    oracle: bool,
    /// Skip the square-freeness precheck.
    #[arg(long)]
    skip_squarefree_check: bool,
    /// Output format.
    #[arg(long, default_value = "text", value_parser = ["text", "json-like"])]
    format: String,
    /// Require the input to be monic instead of reducing it.
    #[arg(long)]
    no_monic_reduce: bool,
    /// Input file; standard input when absent.
    file: Option<PathBuf>,
}

/// Entry point for the binary; returns the process exit code.
pub fn run_cli() -> i32 {
    let cli = Cli::parse();
    let Command::Analyze(args) = cli.command;
    match run_analyze(&args) {
        Ok(out) => {
            print!("{out}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. } => 1,
        Error::InvalidInput(_)
        | Error::NotMonic
        | Error::NotSquareFree
        | Error::NotSquareFreeInput
        | Error::ZeroPolynomial
        | Error::CommonFactor
        | Error::NoValidShift
        | Error::ZeroDivisor(_) => 2,
        _ => 3,
    }
}

fn read_source(file: &Option<PathBuf>) -> Result<String, Error> {
    match file {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display()))),
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::InvalidInput(format!("cannot read standard input: {e}")))?;
            Ok(s)
        }
    }
}

fn parse_field(spec: &str) -> Result<BaseField, Error> {
    if spec == "q" {
        return Ok(BaseField::Rationals);
    }
    if let Some(p) = spec.strip_prefix("fp:") {
        let p: u64 = p
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad prime in field spec `{spec}`")))?;
        if !is_prime_u64(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        return Ok(BaseField::Prime(p));
    }
    Err(Error::InvalidInput(format!(
        "unknown field spec `{spec}` (expected `q` or `fp:<p>`)"
    )))
}

fn run_analyze(args: &AnalyzeArgs) -> Result<String, Error> {
    let base = parse_field(&args.field)?;
    let src = read_source(&args.file)?;
    let ring0 = TowerRing::new(base);
    let rv0 = ring0.view();
    let parsed = parse_poly(&src, &rv0)?;
    let f = if args.no_monic_reduce {
        if parsed.degree().is_none() {
            return Err(Error::ZeroPolynomial);
        }
        parsed
    } else {
        pipeline::monic_reduce(&parsed, &rv0)?
    };
    let mut dv = None;
    if !args.skip_squarefree_check || args.oracle {
        dv = Some(oracle::disc_valuation(&f, &rv0).map_err(|e| match e {
            Error::CommonFactor => Error::NotSquareFreeInput,
            other => other,
        })?);
    }
    let analysis = pipeline::analyze(&f, base)?;
    let invariants = match analysis.verdict {
        Verdict::PseudoIrreducible => {
            Some(pipeline::invariants(&analysis.data, analysis.d)?)
        }
        Verdict::NotPseudoIrreducible { .. } => None,
    };
    let oracle_report = if args.oracle {
        let dv = dv.expect("discriminant valuation computed above");
        Some(oracle_check(&f, &analysis, base, dv, invariants.as_ref())?)
    } else {
        None
    };
    let report = report::build(&analysis, invariants.as_ref(), base, oracle_report)?;
    Ok(match args.format.as_str() {
        "json-like" => {
            let mut j = report.to_json();
            j.push('\n');
            j
        }
        _ => report.to_text(),
    })
}

/// Runs the independent cross-checks: discriminant valuation against the
/// invariant formula, and direct blow-up transforms against every
/// pipeline-reconstructed boundary polynomial.
fn oracle_check(
    f: &YPoly,
    analysis: &Analysis,
    base: BaseField,
    dv: usize,
    invariants: Option<&pipeline::Invariants>,
) -> Result<OracleReport, Error> {
    let mut rho = dv + 1;
    let bounds = loop {
        match oracle::transform_boundaries(f, &analysis.data, base, rho) {
            Ok(b) => break b,
            Err(Error::PrecisionTooLow) if rho < 64 * (dv + 1) => rho *= 2,
            Err(e) => return Err(e),
        }
    };
    let mut boundaries_match = bounds.len() == analysis.stages.len();
    let mut ring = TowerRing::new(base);
    for (k, b) in bounds.iter().enumerate().take(analysis.stages.len()) {
        {
            let rv = ring.view();
            if !b.eq_poly(&analysis.stages[k].boundary, &rv) {
                boundaries_match = false;
            }
        }
        if k < analysis.data.len() {
            ring = ring.extend(analysis.data[k].pol.clone())?;
        }
    }
    Ok(OracleReport {
        disc_valuation: dv,
        disc_valuation_match: invariants.map(|i| i.disc_valuation == dv),
        boundaries_match,
    })
}
