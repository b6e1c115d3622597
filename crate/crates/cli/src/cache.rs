//! On-disk cache of simple modules, keyed by `(n, λ)`.
//!
//! A file whose version or key does not match is ignored and overwritten.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use osp_core::error::Result;
use osp_core::linalg::DenseMatrix;
use osp_core::liealg::Realization;
use osp_core::rootsys::{Rational, Weight};
use osp_core::verma::{simple_quotient, ModuleBlock, SimpleModule};
use serde::{Deserialize, Serialize};

pub const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct StoredBlock {
    weight: String,
    dim: usize,
}

#[derive(Serialize, Deserialize)]
struct StoredAction {
    target: usize,
    rows: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct StoredModule {
    version: u32,
    n: usize,
    lambda: String,
    blocks: Vec<StoredBlock>,
    actions: Vec<Vec<Option<StoredAction>>>,
}

pub fn cache_path(dir: &Path, lambda: &Weight) -> PathBuf {
    let key = lambda.to_string().replace(',', "_").replace('/', "q");
    dir.join(format!("simple-n{}-{}.json", lambda.rank(), key))
}

fn encode(module: &SimpleModule) -> StoredModule {
    StoredModule {
        version: CACHE_VERSION,
        n: module.rank(),
        lambda: module.lambda().to_string(),
        blocks: module
            .blocks()
            .iter()
            .map(|b| StoredBlock {
                weight: b.weight.to_string(),
                dim: b.dim,
            })
            .collect(),
        actions: module
            .actions()
            .iter()
            .map(|per_block| {
                per_block
                    .iter()
                    .map(|entry| {
                        entry.as_ref().map(|(t, m)| StoredAction {
                            target: *t,
                            rows: m.rows().iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect(),
                        })
                    })
                    .collect()
            })
            .collect(),
    }
}

fn decode(stored: StoredModule, g: Arc<Realization>, lambda: &Weight) -> Option<SimpleModule> {
    if stored.version != CACHE_VERSION || stored.n != lambda.rank() || stored.lambda != lambda.to_string() {
        return None;
    }
    let blocks = stored
        .blocks
        .into_iter()
        .map(|b| {
            Some(ModuleBlock {
                weight: b.weight.parse().ok()?,
                dim: b.dim,
            })
        })
        .collect::<Option<Vec<_>>>()?;
    let actions = stored
        .actions
        .into_iter()
        .map(|per_block| {
            per_block
                .into_iter()
                .map(|entry| match entry {
                    None => Some(None),
                    Some(a) => {
                        blocks.get(a.target)?;
                        let rows = a
                            .rows
                            .iter()
                            .map(|r| r.iter().map(|c| c.parse::<Rational>().ok()).collect::<Option<Vec<_>>>())
                            .collect::<Option<Vec<_>>>()?;
                        let width = rows.first().map_or(0, Vec::len);
                        Some(Some((a.target, DenseMatrix::from_rows(width, rows))))
                    }
                })
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<Vec<_>>>()?;
    SimpleModule::from_parts(g, lambda.clone(), blocks, actions).ok()
}

/// Loads `L(λ)` from `dir` if a valid entry exists, else builds and stores it.
pub fn load_or_build(g: Arc<Realization>, lambda: &Weight, dir: Option<&Path>) -> Result<SimpleModule> {
    let Some(dir) = dir else {
        return simple_quotient(g, lambda);
    };
    let path = cache_path(dir, lambda);
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(stored) = serde_json::from_str::<StoredModule>(&text) {
            if let Some(m) = decode(stored, Arc::clone(&g), lambda) {
                return Ok(m);
            }
        }
    }
    let module = simple_quotient(g, lambda)?;
    if fs::create_dir_all(dir).is_ok() {
        if let Ok(text) = serde_json::to_string(&encode(&module)) {
            let _ = fs::write(&path, text);
        }
    }
    Ok(module)
}
