//! Kazhdan-Lusztig polynomials and their persistent cache.

mod engine;
mod table;

pub use engine::KlEngine;
pub use table::{cache_file, kl_table, CacheDocument, CacheEntry, KlTable, TOOL_VERSION};
