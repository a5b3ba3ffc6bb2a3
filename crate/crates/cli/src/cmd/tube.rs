//! `tube` and `obstruction`.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Subcommand};
use serde::Serialize;

use whalg::tube::{chi_iso, verify_morita_section, weak_bialgebra_obstruction, Candidate, TubeFamily, TubeKind};

use super::{Ctx, Outcome};
use crate::input::{self, invalid, Result};
use crate::report::{CheckStatus, Counterexample, VerificationReport};

/// A pointed category from a skeleton file or a group and cocycle.
#[derive(Debug, Args)]
pub struct CategoryArgs {
    #[arg(long)]
    pub skeleton: Option<PathBuf>,
    #[arg(long)]
    pub group: Option<String>,
    #[arg(long, default_value = "trivial")]
    pub cocycle: String,
}

#[derive(Debug, Args)]
pub struct ObstructionArgs {
    /// `fib` or a fusion ring JSON file.
    #[arg(long)]
    pub ring: String,
    /// JSON list of `{"simples": [...], "j_dim": n}`.
    #[arg(long)]
    pub candidates: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum TubeCommand {
    /// Builds level `n` of the tube tower and checks associativity.
    Build {
        #[command(flatten)]
        category: CategoryArgs,
        #[arg(long, default_value_t = 1)]
        level: usize,
        /// Use the lifted tower.
        #[arg(long)]
        lifted: bool,
    },
    /// Checks that χ is an algebra isomorphism onto A_C^{C⊠C^rev}.
    Chi(CategoryArgs),
    /// Checks the Morita section between levels `m` and `n`.
    Morita {
        #[command(flatten)]
        category: CategoryArgs,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    Obstruction(ObstructionArgs),
}

#[derive(Serialize)]
struct TubeSummary {
    dim: usize,
    center_dim: usize,
    associative: bool,
}

pub fn run(ctx: &Ctx, cmd: &TubeCommand) -> Result<Outcome> {
    let start = Instant::now();
    let load = |c: &CategoryArgs| input::category(c.skeleton.as_deref(), c.group.as_deref(), &c.cocycle);
    match cmd {
        TubeCommand::Build { category, level, lifted } => {
            let kind = if *lifted { TubeKind::Lifted } else { TubeKind::Tube };
            let alg = TubeFamily::new(&load(category)?, kind).and_then(|f| f.algebra(*level)).map_err(invalid)?;
            let rep = alg.verify();
            ctx.summary(&TubeSummary { dim: alg.dim(), center_dim: alg.center_dim(), associative: rep.passed });
            Ok(Outcome::from_bool(rep.passed))
        }
        TubeCommand::Chi(category) => {
            let (_, rep) = chi_iso(&load(category)?).map_err(invalid)?;
            let failure = rep.failure.as_ref().map(|(x, y)| format!("product of {x} and {y} is not preserved"));
            let checks = vec![
                CheckStatus::flag("unital", rep.unital, 1, None),
                CheckStatus::flag("multiplicative", rep.multiplicative, rep.dim * rep.dim, failure),
                CheckStatus::flag("bijective", rep.rank == rep.dim, 1, Some(format!("rank {} of {}", rep.rank, rep.dim))),
            ];
            ctx.emit(&VerificationReport::new(subject(category), "tube-chi", checks, start.elapsed()))
        }
        TubeCommand::Morita { category, m, n } => {
            let rep = verify_morita_section(&load(category)?, *m, *n).map_err(invalid)?;
            let failure = rep.failure.as_ref().map(|l| format!("{l} is not fixed"));
            let checks = vec![CheckStatus::flag("morita-section", rep.passed, rep.checked, failure)];
            ctx.emit(&VerificationReport::new(subject(category), "tube-morita", checks, start.elapsed()))
        }
        TubeCommand::Obstruction(args) => obstruction(ctx, args),
    }
}

fn subject(c: &CategoryArgs) -> String {
    match (&c.skeleton, &c.group) {
        (Some(p), _) => p.display().to_string(),
        (None, Some(g)) => format!("{g} {}", c.cocycle),
        (None, None) => String::new(),
    }
}

/// Exit 1 when some pair of candidates violates the dimension bound.
pub fn obstruction(ctx: &Ctx, args: &ObstructionArgs) -> Result<Outcome> {
    let start = Instant::now();
    let ring = input::ring(&args.ring)?;
    let candidates: Vec<Candidate> = input::read_json(&args.candidates)?;
    let rep = weak_bialgebra_obstruction(&ring, &candidates).map_err(invalid)?;
    let check = CheckStatus {
        name: "dimension-bound".into(),
        passed: !rep.obstructed,
        checked: rep.checked,
        counterexample: rep.pairs.first().map(|p| Counterexample {
            indices: vec![p.left, p.right],
            detail: "dim J(z ⊗ z') exceeds dim J(z)·dim J(z')".into(),
            lhs: Some(p.product_dim.to_string()),
            rhs: Some(p.bound.to_string()),
        }),
    };
    ctx.emit(&VerificationReport::new(args.ring.clone(), "obstruction", vec![check], start.elapsed()))
}
