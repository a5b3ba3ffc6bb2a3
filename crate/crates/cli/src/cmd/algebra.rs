//! `build`, `verify`, `compare` and `report`.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use whalg::builders::{
    build_a_g_omega, build_a_m_c, build_b_g_omega, build_frobenius_double, build_groupoid_algebra, standard_frobenius,
    FrobeniusKind, Groupoid,
};
use whalg::skeleton::{boxtimes_rev_skeleton, left_regular_module, pointed_data, regular_right_module};
use whalg::wha::{
    base_algebras, center_dim, is_cocommutative, verify_antipode, verify_quasitriangular, verify_weak_bialgebra,
    verify_yang_baxter, RMatrixCandidate, Tensor2, WeakHopfAlgebra, WhaJson,
};

use super::{Ctx, Outcome};
use crate::input::{self, invalid, InputError, Result};
use crate::report::{CheckStatus, Counterexample, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BuildKind {
    #[value(name = "b-g-omega")]
    BGOmega,
    #[value(name = "a-g-omega")]
    AGOmega,
    #[value(name = "a-m-c")]
    Amc,
    Groupoid,
    FrobeniusDouble,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    pub kind: BuildKind,
    /// Catalog name (z1..z8, z2xz2, s3) or group JSON file.
    #[arg(long)]
    pub group: Option<String>,
    /// `trivial`, `p=<k>` or a cocycle JSON file.
    #[arg(long, default_value = "trivial")]
    pub cocycle: String,
    /// Skeletal category JSON for a-m-c.
    #[arg(long)]
    pub skeleton: Option<PathBuf>,
    /// `left-regular`, `right-regular`, `boxtimes-rev` or a module JSON file.
    #[arg(long, default_value = "left-regular")]
    pub module: String,
    /// Object count of the indiscrete groupoid.
    #[arg(long)]
    pub objects: Option<usize>,
    /// `diagonal:<n>` or `matrix:<n>`.
    #[arg(long, default_value = "matrix:2")]
    pub frobenius: String,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Where to write the R-matrix of a-g-omega.
    #[arg(long)]
    pub r_out: Option<PathBuf>,
}

fn frobenius_kind(arg: &str) -> Result<FrobeniusKind> {
    let bad = || InputError::Invalid(format!("cannot read frobenius kind {arg:?}"));
    let (kind, n) = arg.split_once(':').ok_or_else(bad)?;
    let n: usize = n.parse().map_err(|_| bad())?;
    if n == 0 {
        return Err(bad());
    }
    match kind {
        "diagonal" => Ok(FrobeniusKind::Diagonal(n)),
        "matrix" => Ok(FrobeniusKind::Matrix(n)),
        _ => Err(bad()),
    }
}

fn build_a_m_c_from(args: &BuildArgs) -> Result<WeakHopfAlgebra> {
    let path = Path::new(&args.module);
    let (cat, module) = if path.is_file() {
        let m = input::skeleton_module(path)?;
        (m.category().clone(), m)
    } else {
        let c = input::category(args.skeleton.as_deref(), args.group.as_deref(), &args.cocycle)?;
        match args.module.as_str() {
            "left-regular" => (c.clone(), left_regular_module(&c)),
            "right-regular" => {
                let m = regular_right_module(&c);
                (m.category().clone(), m)
            }
            "boxtimes-rev" => boxtimes_rev_skeleton(&pointed_data(&c).map_err(invalid)?.omega),
            other => return Err(InputError::Invalid(format!("unknown module {other:?}"))),
        }
    };
    build_a_m_c(&cat, &module).map_err(invalid)
}

#[derive(Serialize)]
struct Built {
    dim: usize,
    conductor: u32,
    output: String,
}

pub fn build(ctx: &Ctx, args: &BuildArgs) -> Result<Outcome> {
    let need_group = || args.group.as_deref().ok_or_else(|| InputError::Invalid("--group is required".into()));
    let mut r = None;
    let a = match args.kind {
        BuildKind::BGOmega => build_b_g_omega(&input::omega(need_group()?, &args.cocycle)?).map_err(invalid)?,
        BuildKind::AGOmega => {
            let (a, cand) = build_a_g_omega(&input::omega(need_group()?, &args.cocycle)?).map_err(invalid)?;
            r = Some(cand);
            a
        }
        BuildKind::Amc => build_a_m_c_from(args)?,
        BuildKind::Groupoid => {
            let g = match (args.objects, args.group.as_deref()) {
                (Some(n), _) if n > 0 => Groupoid::indiscrete(n),
                (None, Some(g)) => Groupoid::from_group(&input::group(g)?),
                _ => return Err(InputError::Invalid("give --objects <n> or --group".into())),
            };
            build_groupoid_algebra(&g).map_err(invalid)?
        }
        BuildKind::FrobeniusDouble => build_frobenius_double(&standard_frobenius(frobenius_kind(&args.frobenius)?)).map_err(invalid)?,
    };
    let output = args.output.clone().unwrap_or_else(|| PathBuf::from(format!("{}.json", kind_name(args.kind))));
    input::write_json(&output, &a.to_json())?;
    if let (Some(path), Some(cand)) = (&args.r_out, &r) {
        input::write_json(path, cand)?;
    }
    ctx.summary(&Built { dim: a.dim(), conductor: a.conductor(), output: output.display().to_string() });
    Ok(Outcome::Pass)
}

fn kind_name(k: BuildKind) -> &'static str {
    match k {
        BuildKind::BGOmega => "b-g-omega",
        BuildKind::AGOmega => "a-g-omega",
        BuildKind::Amc => "a-m-c",
        BuildKind::Groupoid => "groupoid",
        BuildKind::FrobeniusDouble => "frobenius-double",
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Wha,
    Qt,
    Base,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub file: PathBuf,
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    /// R-matrix JSON, required for the qt suite.
    #[arg(long)]
    pub r: Option<PathBuf>,
}

/// Brings the R-matrix to the algebra's conductor.
fn align(a: &WeakHopfAlgebra, t: &Tensor2) -> Result<Tensor2> {
    t.iter()
        .map(|(k, v)| {
            if k.0 >= a.dim() || k.1 >= a.dim() {
                return Err(InputError::Invalid(format!("R index {k:?} out of range")));
            }
            Ok((*k, v.embed(a.conductor()).map_err(invalid)?))
        })
        .collect()
}

type Job<'a> = Box<dyn Fn() -> CheckStatus + Send + Sync + 'a>;

pub fn verify(ctx: &Ctx, args: &VerifyArgs) -> Result<Outcome> {
    let start = Instant::now();
    let a = input::algebra(&args.file)?;
    let r = match (&args.r, args.suite) {
        (None, Suite::Qt) => return Err(InputError::Invalid("suite qt needs --r".into())),
        (None, _) => None,
        (Some(p), _) => {
            let c = input::r_matrix(p)?;
            Some(RMatrixCandidate {
                r: align(&a, &c.r)?,
                rbar: c.rbar.as_ref().map(|t| align(&a, t)).transpose()?,
            })
        }
    };
    let a = &a;
    let wha = matches!(args.suite, Suite::Wha | Suite::All);
    let base = matches!(args.suite, Suite::Base | Suite::All);
    let mut jobs: Vec<Job> = Vec::new();
    if wha {
        jobs.push(Box::new(|| CheckStatus::from_report("weak-bialgebra", &verify_weak_bialgebra(a))));
        jobs.push(Box::new(|| CheckStatus::from_report("antipode", &verify_antipode(a))));
    }
    if base {
        jobs.push(Box::new(|| {
            let rep = base_algebras(a);
            let failure = (!rep.failures.is_empty()).then(|| rep.failures.join(", "));
            CheckStatus::flag("base-algebras", rep.passed, 1, failure)
        }));
    }
    if let Some(cand) = r.as_ref().filter(|_| matches!(args.suite, Suite::Qt | Suite::All)) {
        jobs.push(Box::new(move || CheckStatus::from_report("quasitriangular", &verify_quasitriangular(a, cand))));
        jobs.push(Box::new(move || CheckStatus::from_report("yang-baxter", &verify_yang_baxter(a, &cand.r))));
    }
    let checks: Vec<CheckStatus> = jobs.par_iter().map(|j| j()).collect();
    let suite = format!("{:?}", args.suite).to_lowercase();
    ctx.emit(&VerificationReport::new(args.file.display().to_string(), suite, checks, start.elapsed()))
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    pub left: PathBuf,
    pub right: PathBuf,
    /// JSON object from labels of the left algebra to labels of the right
    /// one; the identity on indices when absent.
    #[arg(long)]
    pub map: Option<PathBuf>,
}

fn label_map(left: &WeakHopfAlgebra, right: &WeakHopfAlgebra, path: Option<&Path>) -> Result<Vec<usize>> {
    let Some(path) = path else {
        return Ok((0..left.dim()).collect());
    };
    let js: HashMap<String, String> = input::read_json(path)?;
    let mut perm = vec![usize::MAX; left.dim()];
    let mut hit = vec![false; right.dim()];
    for (from, to) in &js {
        let i = left.label_index(from).ok_or_else(|| InputError::Invalid(format!("unknown label {from:?} on the left")))?;
        let j = right.label_index(to).ok_or_else(|| InputError::Invalid(format!("unknown label {to:?} on the right")))?;
        if hit[j] || perm[i] != usize::MAX {
            return Err(InputError::Invalid(format!("label map is not bijective at {from:?} -> {to:?}")));
        }
        perm[i] = j;
        hit[j] = true;
    }
    if perm.contains(&usize::MAX) {
        return Err(InputError::Invalid("label map does not cover every label".into()));
    }
    Ok(perm)
}

fn permuted3<V: Clone>(t: &[(usize, usize, usize, V)], p: &[usize]) -> Vec<(usize, usize, usize, V)> {
    let mut out: Vec<_> = t.iter().map(|(i, j, k, v)| (p[*i], p[*j], p[*k], v.clone())).collect();
    out.sort_by_key(|e| (e.0, e.1, e.2));
    out
}

fn permuted2<V: Clone>(t: &[(usize, usize, V)], p: &[usize]) -> Vec<(usize, usize, V)> {
    let mut out: Vec<_> = t.iter().map(|(i, j, v)| (p[*i], p[*j], v.clone())).collect();
    out.sort_by_key(|e| (e.0, e.1));
    out
}

fn permuted1<V: Clone>(t: &[(usize, V)], p: &[usize]) -> Vec<(usize, V)> {
    let mut out: Vec<_> = t.iter().map(|(i, v)| (p[*i], v.clone())).collect();
    out.sort_by_key(|e| e.0);
    out
}

/// The first position where two sorted entry lists differ.
fn first_difference<T: PartialEq + std::fmt::Debug>(name: &str, a: &[T], b: &[T]) -> CheckStatus {
    let at = (0..a.len().max(b.len())).find(|&i| a.get(i) != b.get(i));
    let failure = at.map(|i| Counterexample {
        indices: vec![i],
        detail: format!("{name} differs at entry {i}"),
        lhs: Some(a.get(i).map_or("none".into(), |x| format!("{x:?}"))),
        rhs: Some(b.get(i).map_or("none".into(), |x| format!("{x:?}"))),
    });
    CheckStatus { name: name.into(), passed: failure.is_none(), checked: a.len(), counterexample: failure }
}

pub fn compare(ctx: &Ctx, args: &CompareArgs) -> Result<Outcome> {
    let start = Instant::now();
    let left = input::algebra(&args.left)?;
    let right = input::algebra(&args.right)?;
    if left.dim() != right.dim() {
        return Err(InputError::Invalid(format!("dimensions differ: {} and {}", left.dim(), right.dim())));
    }
    let perm = label_map(&left, &right, args.map.as_deref())?;
    let n = num::integer::lcm(left.conductor(), right.conductor());
    let l: WhaJson = left.embed(n).map_err(invalid)?.to_json();
    let r: WhaJson = right.embed(n).map_err(invalid)?.to_json();
    let identity: Vec<usize> = (0..r.dim).collect();
    let checks = vec![
        first_difference("mu", &permuted3(&l.mu, &perm), &permuted3(&r.mu, &identity)),
        first_difference("unit", &permuted1(&l.unit, &perm), &permuted1(&r.unit, &identity)),
        first_difference("delta", &permuted3(&l.delta, &perm), &permuted3(&r.delta, &identity)),
        first_difference("counit", &permuted1(&l.counit, &perm), &permuted1(&r.counit, &identity)),
        first_difference("antipode", &permuted2(&l.antipode, &perm), &permuted2(&r.antipode, &identity)),
    ];
    let subject = format!("{} vs {}", args.left.display(), args.right.display());
    ctx.emit(&VerificationReport::new(subject, "compare", checks, start.elapsed()))
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    pub file: PathBuf,
}

#[derive(Serialize)]
struct Summary {
    dim: usize,
    conductor: u32,
    dim_left: usize,
    dim_right: usize,
    center_dim: usize,
    cocommutative: bool,
}

pub fn report(ctx: &Ctx, args: &ReportArgs) -> Result<Outcome> {
    let a = input::algebra(&args.file)?;
    let base = base_algebras(&a);
    ctx.summary(&Summary {
        dim: a.dim(),
        conductor: a.conductor(),
        dim_left: base.dim_left,
        dim_right: base.dim_right,
        center_dim: center_dim(&a),
        cocommutative: is_cocommutative(&a),
    });
    Ok(Outcome::Pass)
}
