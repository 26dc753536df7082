//! `sosq`: exact certificates for sums of squares over the rationals.
//!
//! Exit codes: 0 success or certificate emitted, 1 negative verdict about
//! the input, 2 inconclusive, 3 input error.

mod boundary;
mod field;
mod gram;
mod groups;
mod io;
mod outcome;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use outcome::{exit_code_for, Outcome, INPUT_ERROR};
use sosq_core::numfield::DEFAULT_PRECISION;
use sosq_core::permgroup::DEFAULT_ENUM_BOUND;

const EXIT_CODES: &str = "Exit codes:\n  0  success; a certificate was emitted (including NotQSos)\n  1  negative verdict about the input (not PSD, alpha(f) != 0, ...)\n  2  inconclusive\n  3  input error";

#[derive(Parser, Debug)]
#[command(name = "sosq", version, about = "Exact certificates for sums of squares of forms over Q", after_help = EXIT_CODES)]
struct Cli {
    /// Working precision for certified complex roots.
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION)]
    precision_bits: u32,
    /// Largest group order to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUM_BOUND)]
    enum_bound: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Permutation groups: classification, characteristic numbers, table rows.
    #[command(subcommand)]
    Groups(groups::GroupsCmd),
    /// Number fields: norm forms, quartic Galois groups, the obstruction.
    #[command(subcommand)]
    Field(field::FieldCmd),
    /// Boundary sextics from nine points.
    #[command(subcommand)]
    Boundary(boundary::BoundaryCmd),
    /// Gram points: verification, rational extraction, span shrinking.
    #[command(subcommand)]
    Gram(gram::GramCmd),
}

#[derive(Clone, Copy, Debug)]
pub struct Globals {
    pub precision_bits: u32,
    pub enum_bound: usize,
}

fn run(cli: Cli) -> Outcome {
    let g = Globals {
        precision_bits: cli.precision_bits,
        enum_bound: cli.enum_bound,
    };
    let result = match cli.command {
        Command::Groups(c) => groups::run(c, g),
        Command::Field(c) => field::run(c, g),
        Command::Boundary(c) => boundary::run(c, g),
        Command::Gram(c) => gram::run(c, g),
    };
    result.unwrap_or_else(|e| Outcome::error(exit_code_for(&e), format!("error: {e}")))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { INPUT_ERROR } else { 0 });
        }
    };
    let out = run(cli);
    out.emit();
    ExitCode::from(out.code)
}
