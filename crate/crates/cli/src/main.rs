//! `econkit` batch frontend.
//!
//! Exit codes: 0 success, 1 input or parse error, 2 no solution
//! (infeasible, unbounded, inconsistent), 3 numerical failure.

mod calc;
mod econ;
mod finance;
mod linalg;
mod lp;
mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use econkit::{Category, Error, Result};
use render::{Format, Report};

#[derive(Parser)]
#[command(name = "econkit", version, about = "Quantitative economics toolkit")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Write the result to PATH instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Print intermediate simplex tableaus
    #[arg(long, global = true)]
    trace: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Vector and matrix algebra on matrix text files
    #[command(subcommand)]
    Linalg(linalg::LinalgCmd),
    /// Classify and solve A·x = b
    Solve(linalg::SolveArgs),
    /// Input-output analysis from a deliveries table
    Leontief(linalg::LeontiefArgs),
    /// Linear programming
    #[command(subcommand)]
    Lp(lp::LpCmd),
    /// Interest, annuities, pensions and depreciation
    #[command(subcommand)]
    Finance(finance::FinanceCmd),
    /// Differential and integral calculus of one-variable functions
    #[command(subcommand)]
    Calc(calc::CalcCmd),
    /// Cost, profit and market analysis
    #[command(subcommand)]
    Econ(econ::EconCmd),
}

/// Flags shared by every command after parsing.
pub struct Ctx {
    pub trace: bool,
    pub format: Format,
}

pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))
}

/// `LO:HI`, either bound may be negative.
pub fn parse_window(s: &str) -> std::result::Result<(f64, f64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected LO:HI, got `{s}`"))?;
    let lo: f64 = lo.trim().parse().map_err(|_| format!("bad lower bound `{lo}`"))?;
    let hi: f64 = hi.trim().parse().map_err(|_| format!("bad upper bound `{hi}`"))?;
    if !(lo < hi) {
        return Err(format!("window needs LO < HI, got {lo}:{hi}"));
    }
    Ok((lo, hi))
}

fn run(cli: &Cli) -> Result<Report> {
    let ctx = Ctx {
        trace: cli.trace,
        format: cli.format,
    };
    match &cli.command {
        Command::Linalg(cmd) => linalg::run(cmd),
        Command::Solve(args) => linalg::solve(args),
        Command::Leontief(args) => linalg::leontief(args),
        Command::Lp(cmd) => lp::run(cmd, &ctx),
        Command::Finance(cmd) => finance::run(cmd),
        Command::Calc(cmd) => calc::run(cmd),
        Command::Econ(cmd) => econ::run(cmd),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e.category() {
        Category::Input => 1,
        Category::NoSolution => 2,
        Category::Numerical => 3,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let outcome = run(&cli).and_then(|report| {
        let text = report.render(cli.format)?;
        match &cli.output {
            Some(path) => write_file(path, &text)?,
            None => print!("{text}"),
        }
        Ok(report.exit)
    });
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
