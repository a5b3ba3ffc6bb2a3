//! Loading command-line inputs: catalog names, JSON files and the small
//! `p=<k>` cocycle syntax.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;
use thiserror::Error;

use whalg::groups::{standard_cocycle, CocycleJson, FiniteGroup, GroupJson, ThreeCocycle};
use whalg::repcat::{ModuleJson, WhaModule};
use whalg::skeleton::{
    fib_fusion_ring, pointed_skeleton, CategoryJson, FusionRing, ModuleJson as SkeletonModuleJson, RingJson,
    SkeletalCategory, SkeletalModule,
};
use whalg::wha::{RMatrixCandidate, WeakHopfAlgebra, WhaJson};

/// Anything that makes the input unusable; always exit code 2.
#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, InputError>;

pub fn invalid(e: impl std::fmt::Display) -> InputError {
    InputError::Invalid(e.to_string())
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|source| InputError::Io { path: path.display().to_string(), source })?;
    serde_json::from_str(&text).map_err(|source| InputError::Json { path: path.display().to_string(), source })
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|source| InputError::Json { path: path.display().to_string(), source })?;
    fs::write(path, text + "\n").map_err(|source| InputError::Io { path: path.display().to_string(), source })
}

/// A catalog name (`z3`, `z2xz2`, `s3`, ...) or a group JSON file.
pub fn group(arg: &str) -> Result<FiniteGroup> {
    let path = Path::new(arg);
    if path.is_file() {
        let js: GroupJson = read_json(path)?;
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        return FiniteGroup::from_json(name, &js).map_err(invalid);
    }
    FiniteGroup::catalog(arg).map_err(invalid)
}

/// `trivial`, `p=<k>` or `<k>` for the standard cocycle of a cyclic group,
/// or a cocycle JSON file.
pub fn cocycle(g: &FiniteGroup, arg: &str) -> Result<ThreeCocycle> {
    let path = Path::new(arg);
    if path.is_file() {
        let js: CocycleJson = read_json(path)?;
        return ThreeCocycle::from_json(g.clone(), &js).map_err(invalid);
    }
    if arg == "trivial" {
        return Ok(ThreeCocycle::trivial(g));
    }
    let p: usize = arg
        .strip_prefix("p=")
        .unwrap_or(arg)
        .parse()
        .map_err(|_| InputError::Invalid(format!("cannot read cocycle {arg:?}")))?;
    if p == 0 {
        return Ok(ThreeCocycle::trivial(g));
    }
    let n = g
        .cyclic_order()
        .ok_or_else(|| InputError::Invalid(format!("standard cocycles need a cyclic group, {} is not", g.name())))?;
    let omega = standard_cocycle(n, p).map_err(invalid)?;
    // a cyclic group read from a file may order its elements differently
    if omega.group().table() == g.table() {
        Ok(omega)
    } else {
        Err(InputError::Invalid(format!("{} is cyclic but not in standard order; pass the cocycle as a file", g.name())))
    }
}

pub fn omega(group_arg: &str, cocycle_arg: &str) -> Result<ThreeCocycle> {
    cocycle(&group(group_arg)?, cocycle_arg)
}

pub fn skeleton(path: &Path) -> Result<SkeletalCategory> {
    let js: CategoryJson = read_json(path)?;
    SkeletalCategory::from_json(&js).map_err(invalid)
}

pub fn skeleton_module(path: &Path) -> Result<SkeletalModule> {
    let js: SkeletonModuleJson = read_json(path)?;
    SkeletalModule::from_json(&js).map_err(invalid)
}

/// A skeleton file, or the pointed skeleton of a group and cocycle.
pub fn category(skeleton_path: Option<&Path>, group_arg: Option<&str>, cocycle_arg: &str) -> Result<SkeletalCategory> {
    match (skeleton_path, group_arg) {
        (Some(p), _) => skeleton(p),
        (None, Some(g)) => Ok(pointed_skeleton(&omega(g, cocycle_arg)?)),
        (None, None) => Err(InputError::Invalid("give --skeleton or --group".into())),
    }
}

/// `fib` or a fusion ring JSON file.
pub fn ring(arg: &str) -> Result<FusionRing> {
    if arg == "fib" {
        return Ok(fib_fusion_ring());
    }
    let js: RingJson = read_json(Path::new(arg))?;
    FusionRing::from_json(&js).map_err(invalid)
}

pub fn algebra(path: &Path) -> Result<WeakHopfAlgebra> {
    let js: WhaJson = read_json(path)?;
    WeakHopfAlgebra::from_json(&js).map_err(|e| InputError::Invalid(format!("{}: {e}", path.display())))
}

pub fn r_matrix(path: &Path) -> Result<RMatrixCandidate> {
    read_json(path)
}

pub fn module(a: &WeakHopfAlgebra, path: &Path) -> Result<WhaModule> {
    let js: ModuleJson = read_json(path)?;
    let m = WhaModule::from_json(a.dim(), &js).map_err(|e| InputError::Invalid(format!("{}: {e}", path.display())))?;
    let rep = whalg::repcat::validate_module(a, &m);
    if !rep.passed {
        return Err(InputError::Invalid(format!("{}: not a module ({:?})", path.display(), rep.violation)));
    }
    Ok(m)
}
