//! `rep`: modules, tensor products, isomorphism, coherence and braiding.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Subcommand};
use serde::Serialize;

use whalg::repcat::{
    check_braiding, coherence_check, k_module, modules_isomorphic_seeded, reduced_r_roundtrip, regular_module,
    tensor_product,
};

use super::{Ctx, Outcome};
use crate::input::{self, InputError, Result};
use crate::report::{CheckStatus, VerificationReport};

#[derive(Debug, Subcommand)]
pub enum RepCommand {
    /// Writes the module K(g) of B_G^ω.
    K {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "trivial")]
        cocycle: String,
        /// Index of the group element.
        #[arg(long)]
        element: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Writes the regular module of an algebra.
    Regular {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Writes `V ⊠ W`.
    Tensor {
        #[arg(long)]
        algebra: PathBuf,
        v: PathBuf,
        w: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exit 0 iff `V ≅ W`.
    Iso {
        #[arg(long)]
        algebra: PathBuf,
        v: PathBuf,
        w: PathBuf,
    },
    /// Associator, unitors, triangle and pentagon on `(V, W, U)`.
    Coherence(CoherenceArgs),
    /// Braiding checks for `(V, W)` and the R-matrix roundtrip.
    Braid {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        r: PathBuf,
        v: PathBuf,
        w: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct CoherenceArgs {
    #[arg(long)]
    pub algebra: PathBuf,
    pub v: PathBuf,
    pub w: PathBuf,
    pub u: PathBuf,
}

#[derive(Serialize)]
struct Written {
    dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    output: Option<String>,
}

pub fn run(ctx: &Ctx, cmd: &RepCommand) -> Result<Outcome> {
    let start = Instant::now();
    match cmd {
        RepCommand::K { group, cocycle, element, output } => {
            let omega = input::omega(group, cocycle)?;
            if *element >= omega.group().order() {
                return Err(InputError::Invalid(format!("element {element} out of range")));
            }
            let m = k_module(&omega, *element);
            input::write_json(output, &m.to_json())?;
            ctx.summary(&Written { dim: m.dim(), output: Some(output.display().to_string()) });
            Ok(Outcome::Pass)
        }
        RepCommand::Regular { algebra, output } => {
            let m = regular_module(&input::algebra(algebra)?);
            input::write_json(output, &m.to_json())?;
            ctx.summary(&Written { dim: m.dim(), output: Some(output.display().to_string()) });
            Ok(Outcome::Pass)
        }
        RepCommand::Tensor { algebra, v, w, output } => {
            let a = input::algebra(algebra)?;
            let t = tensor_product(&a, &input::module(&a, v)?, &input::module(&a, w)?);
            if let Some(path) = output {
                input::write_json(path, &t.module.to_json())?;
            }
            ctx.summary(&Written { dim: t.module.dim(), output: output.as_ref().map(|p| p.display().to_string()) });
            Ok(Outcome::Pass)
        }
        RepCommand::Iso { algebra, v, w } => {
            let a = input::algebra(algebra)?;
            let iso = modules_isomorphic_seeded(&a, &input::module(&a, v)?, &input::module(&a, w)?, ctx.seed);
            let check = CheckStatus::flag("isomorphic", iso, 1, Some("no invertible intertwiner found".into()));
            let subject = format!("{} vs {}", v.display(), w.display());
            ctx.emit(&VerificationReport::new(subject, "rep-iso", vec![check], start.elapsed()))
        }
        RepCommand::Coherence(args) => {
            let a = input::algebra(&args.algebra)?;
            let (v, w, u) = (input::module(&a, &args.v)?, input::module(&a, &args.w)?, input::module(&a, &args.u)?);
            let rep = coherence_check(&a, &v, &w, &u);
            let failure = (!rep.failures.is_empty()).then(|| rep.failures.join(", "));
            let check = CheckStatus::flag("coherence", rep.passed, rep.checked, failure);
            ctx.emit(&VerificationReport::new(args.algebra.display().to_string(), "rep-coherence", vec![check], start.elapsed()))
        }
        RepCommand::Braid { algebra, r, v, w } => {
            let a = input::algebra(algebra)?;
            let cand = input::r_matrix(r)?;
            let (v, w) = (input::module(&a, v)?, input::module(&a, w)?);
            let rep = check_braiding(&a, &cand.r, &v, &w);
            let checks = vec![
                CheckStatus::flag("module-map", rep.module_map, 1, None),
                CheckStatus::flag("invertible", rep.invertible, 1, None),
                CheckStatus::flag("natural", rep.natural, 1, None),
                CheckStatus::flag("braid-relation", rep.braid_relation, 1, None),
                CheckStatus::flag("unit-compatible", rep.unit_compatible, 1, None),
                CheckStatus::flag("r-roundtrip", reduced_r_roundtrip(&a, &cand.r), 1, None),
            ];
            ctx.emit(&VerificationReport::new(algebra.display().to_string(), "rep-braid", checks, start.elapsed()))
        }
    }
}
