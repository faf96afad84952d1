//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when the input is well-formed but the request
//! is mathematically infeasible, 2 for malformed input. Errors go to stderr
//! as `{"error": kind, "message": ...}`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::codes::{free_distance, CodeJson, ConvCode, DistanceOptions};
use crate::construct::construct_code_with;
use crate::construct::rook::{rook_solve, sweep, RookInstance, RookStrategy};
use crate::error::Error;
use crate::field::GaloisField;
use crate::matring::{semi_reduce, xi, xi_inv, ElementaryUnit, MMatrix};
use crate::skew::{RingContext, SkewPoly};
use crate::verify;

#[derive(Debug, Parser)]
#[command(name = "skewcode", version, about = "Cyclic convolutional codes from skew polynomial rings")]
pub struct Cli {
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = verify::DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a code with prescribed Forney indices; prints code JSON.
    Construct {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        indices: Vec<usize>,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
    },
    /// Semi-reduce a matrix of the ring M read from a text file.
    Reduce {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Convert a skew polynomial to its matrix (fwd) or back (inv).
    Xi {
        #[arg(long, value_enum)]
        dir: Direction,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Free distance of a code given as JSON.
    Distance {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, default_value_t = DistanceOptions::default().max_states)]
        max_states: u64,
    },
    /// Solve a rook instance, or check every instance of size n − 1.
    Rook {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', conflicts_with = "verify_all", required_unless_present = "verify_all")]
        values: Vec<usize>,
        #[arg(long)]
        verify_all: bool,
        #[arg(long, value_enum, default_value_t = StrategyArg::Exhaustive)]
        strategy: StrategyArg,
    },
    /// Run the regression checks and print a pass/fail table.
    VerifyPaper {
        /// Largest n for the exhaustive rook sweep.
        #[arg(long, default_value_t = 8)]
        sweep_n: usize,
        /// Include wall-clock time per check.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Direction {
    Fwd,
    Inv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum StrategyArg {
    Exhaustive,
    Constructive,
    Auto,
}

impl From<StrategyArg> for RookStrategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Exhaustive => RookStrategy::Exhaustive,
            StrategyArg::Constructive => RookStrategy::Constructive,
            StrategyArg::Auto => RookStrategy::Auto,
        }
    }
}

enum Failure {
    Lib(Error),
    Io(std::io::Error),
    Json(serde_json::Error),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Json(e)
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = writeln!(err, "{}", json!({"error": "Usage", "message": e.to_string().trim()}));
            return 2;
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(f) => {
            let (kind, message, code) = match f {
                Failure::Lib(e) => (e.kind(), e.to_string(), if e.is_infeasible() { 1 } else { 2 }),
                Failure::Io(e) => ("Io", e.to_string(), 2),
                Failure::Json(e) => ("Json", e.to_string(), 2),
                Failure::Checks => ("ChecksFailed", "some checks failed".to_string(), 1),
            };
            let _ = writeln!(err, "{}", json!({"error": kind, "message": message}));
            code
        }
    }
}

fn ring(q: u64, n: usize) -> Result<RingContext, Error> {
    RingContext::new(&GaloisField::with_order(q)?, n)
}

fn unit_json(u: &ElementaryUnit) -> serde_json::Value {
    match *u {
        ElementaryUnit::Scale { a, alpha } => json!({"kind": "scale", "a": a, "alpha": alpha}),
        ElementaryUnit::Upper { a, b, exp, alpha } => json!({"kind": "upper", "a": a, "b": b, "N": exp, "alpha": alpha}),
        ElementaryUnit::Lower { a, b, exp, alpha } => json!({"kind": "lower", "a": a, "b": b, "N": exp, "alpha": alpha}),
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    match &cli.command {
        Command::Construct { q, n, indices, strategy } => {
            let ctx = ring(*q, *n)?;
            let c = construct_code_with(&ctx, indices, (*strategy).into())?;
            writeln!(out, "{}", serde_json::to_string(&c.code.to_json())?)?;
        }
        Command::Reduce { q, n, matrix } => {
            let ctx = ring(*q, *n)?;
            let m = MMatrix::parse_text(&ctx, &std::fs::read_to_string(matrix)?)?;
            let r = semi_reduce(&m);
            let report = json!({
                "reduced": r.reduced.to_text(),
                "unit": r.unit.to_text(),
                "factors": r.factors.iter().map(unit_json).collect::<Vec<_>>(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
        }
        Command::Xi { dir, q, n, input } => {
            let ctx = ring(*q, *n)?;
            let text = std::fs::read_to_string(input)?;
            match dir {
                Direction::Fwd => write!(out, "{}", xi(&SkewPoly::parse(&ctx, text.trim())?)?.to_text())?,
                Direction::Inv => writeln!(out, "{}", xi_inv(&MMatrix::parse_text(&ctx, &text)?)?.to_text())?,
            }
        }
        Command::Distance { code, max_states } => {
            let json: CodeJson = serde_json::from_str(&std::fs::read_to_string(code)?)?;
            let code = ConvCode::from_json(&json)?;
            writeln!(out, "{}", free_distance(&code, DistanceOptions { max_states: *max_states })?)?;
        }
        Command::Rook { n, values, verify_all, strategy } => {
            if *verify_all {
                let report = sweep(*n)?;
                let status = if report.all_solvable() { "all instances solvable" } else { "unsolvable instances found" };
                let body = json!({"n": n, "instances": report.instances, "unsolvable": report.unsolvable, "report": status});
                writeln!(out, "{}", serde_json::to_string(&body)?)?;
                if !report.all_solvable() {
                    return Err(Failure::Lib(Error::RookInfeasible));
                }
            } else {
                let inst = RookInstance::new(*n, values.clone())?;
                let sol = rook_solve(&inst, (*strategy).into())?;
                writeln!(out, "{}", serde_json::to_string(&sol)?)?;
            }
        }
        Command::VerifyPaper { sweep_n, timings } => {
            let checks = verify::run_all(cli.seed, *sweep_n);
            for c in &checks {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                write!(out, "{mark}  {:>2}  {:<30} ", c.id, c.name)?;
                if *timings {
                    write!(out, "{:>8.3}s  ", c.seconds)?;
                }
                writeln!(out, "{}", c.detail)?;
            }
            if checks.iter().any(|c| !c.passed) {
                return Err(Failure::Checks);
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("skewcode").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn rook_worked_example() {
        let (code, out, _) = call(&["rook", "--n", "4", "--values", "3,3,0"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), r#"{"pairs":[[1,4],[2,1],[3,3]]}"#);
    }

    #[test]
    fn construct_worked_example() {
        let (code, out, _) = call(&["construct", "--q", "5", "--n", "4", "--indices", "4,3,3"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["forney"], json!([3, 3, 4]));
        assert_eq!(v["k"], json!(3));
    }

    #[test]
    fn exit_codes() {
        let (code, _, err) = call(&["construct", "--q", "6", "--n", "4", "--indices", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("NotPrimePower"));
        let (code, _, err) = call(&["rook", "--n", "6", "--values", "0,0,1,2,2", "--strategy", "constructive"]);
        assert_eq!(code, 1);
        assert!(err.contains("ConstructiveCaseUnavailable"));
        let (code, _, err) = call(&["rook"]);
        assert_eq!(code, 2);
        assert!(err.contains("Usage"));
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify-paper"));
    }
}
