//! `double build` and `double sharp`.

use std::path::PathBuf;
use std::time::Instant;

use clap::Subcommand;
use serde::Serialize;

use whalg::double::{build_drinfeld_double, build_pairing, sharp_iso};
use whalg::skeleton::pointed_skeleton;

use super::{Ctx, Outcome};
use crate::input::{self, invalid, Result};
use crate::report::{CheckStatus, VerificationReport};

#[derive(Debug, Subcommand)]
pub enum DoubleCommand {
    /// Builds the Drinfeld double of A_C^{C^rev} for a pointed category.
    Build {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "trivial")]
        cocycle: String,
        #[arg(short, long, default_value = "double.json")]
        output: PathBuf,
        /// Where to write the copairing R-matrix.
        #[arg(long)]
        r_out: Option<PathBuf>,
    },
    /// Checks that ♯ identifies the double with A_C^{C⊠C^rev}.
    Sharp {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "trivial")]
        cocycle: String,
    },
}

#[derive(Serialize)]
struct Built {
    dim: usize,
    conductor: u32,
    output: String,
}

pub fn run(ctx: &Ctx, cmd: &DoubleCommand) -> Result<Outcome> {
    let start = Instant::now();
    match cmd {
        DoubleCommand::Build { group, cocycle, output, r_out } => {
            let c = pointed_skeleton(&input::omega(group, cocycle)?);
            let d = build_drinfeld_double(&build_pairing(&c).map_err(invalid)?).map_err(invalid)?;
            let a = d.algebra();
            input::write_json(output, &a.to_json())?;
            if let Some(path) = r_out {
                input::write_json(path, d.r_matrix())?;
            }
            ctx.summary(&Built { dim: a.dim(), conductor: a.conductor(), output: output.display().to_string() });
            Ok(Outcome::Pass)
        }
        DoubleCommand::Sharp { group, cocycle } => {
            let c = pointed_skeleton(&input::omega(group, cocycle)?);
            let (_, rep) = sharp_iso(&c).map_err(invalid)?;
            let fail = || rep.failure.clone();
            let checks = vec![
                CheckStatus::flag("well-defined", rep.well_defined, 1, fail()),
                CheckStatus::flag("unital", rep.unital, 1, fail()),
                CheckStatus::flag("multiplicative", rep.multiplicative, rep.dim * rep.dim, fail()),
                CheckStatus::flag("comultiplicative", rep.comultiplicative, rep.dim, fail()),
                CheckStatus::flag("bijective", rep.bijective, 1, Some(format!("rank {} of {}", rep.rank, rep.dim))),
                CheckStatus::flag("r-matrix", rep.r_matched, 1, fail()),
            ];
            ctx.emit(&VerificationReport::new(format!("{group} {cocycle}"), "double-sharp", checks, start.elapsed()))
        }
    }
}
