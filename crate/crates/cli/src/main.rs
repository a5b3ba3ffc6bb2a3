//! `whalg`: build weak Hopf algebras from categorical data and verify them.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage or
//! input errors.

mod cmd;
mod input;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cmd::algebra::{BuildArgs, CompareArgs, ReportArgs, VerifyArgs};
use cmd::double::DoubleCommand;
use cmd::rep::RepCommand;
use cmd::tube::{ObstructionArgs, TubeCommand};
use cmd::{Ctx, Outcome};

const THREADS_ENV: &str = "WHALG_THREADS";

#[derive(Debug, Parser)]
#[command(name = "whalg", version, about = "Exact construction and verification of weak Hopf algebras")]
struct Cli {
    /// Seed for randomized isomorphism searches.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker thread cap; falls back to WHALG_THREADS.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Builds an algebra and writes it as JSON.
    Build(BuildArgs),
    /// Runs a verification suite on an algebra file.
    Verify(VerifyArgs),
    /// Compares two algebra files entrywise under a label map.
    Compare(CompareArgs),
    /// Prints dimensions, center dimension and cocommutativity.
    Report(ReportArgs),
    #[command(subcommand)]
    Rep(RepCommand),
    #[command(subcommand)]
    Tube(TubeCommand),
    #[command(subcommand)]
    Double(DoubleCommand),
    /// Same as `tube obstruction`.
    Obstruction(ObstructionArgs),
}

fn thread_cap(flag: Option<usize>) -> Result<Option<usize>, String> {
    if let Some(n) = flag {
        return Ok(Some(n));
    }
    match std::env::var(THREADS_ENV) {
        Ok(s) => s.trim().parse().map(Some).map_err(|_| format!("{THREADS_ENV}={s:?} is not a thread count")),
        Err(_) => Ok(None),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match thread_cap(cli.threads) {
        Ok(Some(n)) => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
        Ok(None) => {}
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let ctx = Ctx { json: cli.json, seed: cli.seed };
    let result = match &cli.command {
        Command::Build(a) => cmd::algebra::build(&ctx, a),
        Command::Verify(a) => cmd::algebra::verify(&ctx, a),
        Command::Compare(a) => cmd::algebra::compare(&ctx, a),
        Command::Report(a) => cmd::algebra::report(&ctx, a),
        Command::Rep(c) => cmd::rep::run(&ctx, c),
        Command::Tube(c) => cmd::tube::run(&ctx, c),
        Command::Double(c) => cmd::double::run(&ctx, c),
        Command::Obstruction(a) => cmd::tube::obstruction(&ctx, a),
    };
    match result {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
