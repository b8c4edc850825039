use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::engine::{Column, KlEngine};
use crate::coxeter::{Elem, GroupTable};
use crate::error::{Error, Result};
use crate::poly::PolynomialQ;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// On-disk form of a KL table. Only pairs `x <= y` with `P_{x,y} != 1` are
/// listed; every other comparable pair is 1 and incomparable pairs are 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheDocument {
    pub group: String,
    pub enumeration_hash: String,
    pub tool_version: String,
    pub entries: Vec<CacheEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub x: String,
    pub y: String,
    pub coeffs: Vec<i64>,
}

/// The full KL table of a group, backed by a filled [`KlEngine`].
#[derive(Debug, Clone)]
pub struct KlTable {
    engine: Arc<KlEngine>,
}

impl KlTable {
    /// Computes every column.
    pub fn compute(group: Arc<GroupTable>) -> Self {
        let engine = KlEngine::new(group);
        engine.fill(true);
        KlTable {
            engine: Arc::new(engine),
        }
    }

    /// Wraps an engine, filling whatever columns it has not computed yet.
    pub fn from_engine(engine: Arc<KlEngine>) -> Self {
        engine.fill(true);
        KlTable { engine }
    }

    pub fn engine(&self) -> &Arc<KlEngine> {
        &self.engine
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        self.engine.group()
    }

    pub fn get(&self, x: Elem, y: Elem) -> &PolynomialQ {
        self.engine.polynomial(x, y)
    }

    /// Pairs `x <= y` whose polynomial differs from 1, ordered by `(y, x)`.
    pub fn nontrivial_entries(&self) -> Vec<(Elem, Elem, &PolynomialQ)> {
        let g = self.group();
        let mut out = Vec::new();
        for y in g.elements() {
            for xi in g.lower_interval(y).iter() {
                let x = g.elem(xi).expect("index in range");
                let p = self.get(x, y);
                if !p.is_one() {
                    out.push((x, y, p));
                }
            }
        }
        out
    }

    pub fn to_document(&self) -> CacheDocument {
        let g = self.group();
        CacheDocument {
            group: g.label().to_string(),
            enumeration_hash: g.enumeration_hash().to_string(),
            tool_version: TOOL_VERSION.to_string(),
            entries: self
                .nontrivial_entries()
                .into_iter()
                .map(|(x, y, p)| CacheEntry {
                    x: g.format_word(x),
                    y: g.format_word(y),
                    coeffs: p.coeffs().to_vec(),
                })
                .collect(),
        }
    }

    /// Rebuilds a table from a cache document whose metadata matches `group`.
    pub fn from_document(group: Arc<GroupTable>, doc: &CacheDocument, path: &Path) -> Result<Self> {
        let corrupt = |reason: String| Error::CorruptCache {
            path: path.to_path_buf(),
            reason,
        };
        let g = &*group;
        let n = g.order();
        let mut dense: Vec<Vec<PolynomialQ>> = g
            .elements()
            .map(|y| {
                let mut col = vec![PolynomialQ::zero(); n];
                for xi in g.lower_interval(y).iter() {
                    col[xi] = PolynomialQ::one();
                }
                col
            })
            .collect();
        for entry in &doc.entries {
            let x = g
                .parse_word(&entry.x)
                .map_err(|e| corrupt(format!("entry x = {:?}: {e}", entry.x)))?;
            let y = g
                .parse_word(&entry.y)
                .map_err(|e| corrupt(format!("entry y = {:?}: {e}", entry.y)))?;
            if g.format_word(x) != entry.x || g.format_word(y) != entry.y {
                return Err(corrupt(format!(
                    "entry ({}, {}) is not in ShortLex normal form",
                    entry.x, entry.y
                )));
            }
            if !g.bruhat_leq(x, y) {
                return Err(corrupt(format!(
                    "entry ({}, {}) has x not below y",
                    entry.x, entry.y
                )));
            }
            let p = PolynomialQ::from_coeffs(entry.coeffs.clone());
            if p.is_zero() || p.coeffs().len() != entry.coeffs.len() {
                return Err(corrupt(format!(
                    "entry ({}, {}) has non-normalized coefficients",
                    entry.x, entry.y
                )));
            }
            dense[y.index()][x.index()] = p;
        }
        let columns = dense
            .into_iter()
            .enumerate()
            .map(|(y, polys)| Column::new(g, Elem(y as u32), polys))
            .collect();
        Ok(KlTable {
            engine: Arc::new(KlEngine::with_columns(group.clone(), columns)),
        })
    }
}

/// Cache file for a group inside `dir`.
pub fn cache_file(dir: &Path, group: &GroupTable) -> PathBuf {
    dir.join(format!("kl-{}.json", group.label()))
}

/// Computes the full KL table, going through a JSON cache file when one is
/// given: a matching cache is loaded, a stale one (other group, enumeration
/// or tool version) is recomputed and overwritten with a warning, and an
/// unreadable one is an error.
pub fn kl_table(group: Arc<GroupTable>, cache_path: Option<&Path>) -> Result<KlTable> {
    let Some(path) = cache_path else {
        return Ok(KlTable::compute(group));
    };
    if path.exists() {
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let doc: CacheDocument = serde_json::from_str(&text).map_err(|e| Error::CorruptCache {
            path: path.to_path_buf(),
            reason: e.to_string(),
        })?;
        if doc.group == group.label()
            && doc.enumeration_hash == group.enumeration_hash()
            && doc.tool_version == TOOL_VERSION
        {
            log::debug!(
                "loaded KL table for {} from {}",
                group.label(),
                path.display()
            );
            return KlTable::from_document(group, &doc, path);
        }
        log::warn!(
            "KL cache {} was written for {} (hash {}, version {}); recomputing",
            path.display(),
            doc.group,
            doc.enumeration_hash,
            doc.tool_version
        );
    }
    let table = KlTable::compute(group);
    write_cache(path, &table.to_document())?;
    Ok(table)
}

fn write_cache(path: &Path, doc: &CacheDocument) -> Result<()> {
    let io = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(io)?;
    }
    let tmp = path.with_extension("json.tmp");
    {
        let mut f = fs::File::create(&tmp).map_err(io)?;
        serde_json::to_writer_pretty(&mut f, doc).map_err(|e| io(e.into()))?;
        f.write_all(b"\n").map_err(io)?;
    }
    fs::rename(&tmp, path).map_err(io)
}
