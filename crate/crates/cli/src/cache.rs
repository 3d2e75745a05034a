//! A versioned, checksummed on-disk memo of a [`StatTable`].
//!
//! The file is the JSON export document. A cache covering `(n, m)` serves any
//! request with smaller bounds by taking a prefix; a larger request recomputes
//! and rewrites it. Unreadable, corrupt or mismatched files are errors.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use thiserror::Error;
use unimodal_core::stats::StatTable;

use crate::export::{self, DecodeError};

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cannot read cache {path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot write cache {path}: {source}")]
    Write { path: PathBuf, source: io::Error },
    #[error("cache {path} is unusable: {source}")]
    Corrupt { path: PathBuf, source: DecodeError },
}

pub fn save(path: &Path, table: &StatTable) -> Result<(), CacheError> {
    let text = export::to_json(table, table.m_max());
    let tmp = path.with_extension("tmp");
    let werr = |source| CacheError::Write { path: path.to_path_buf(), source };
    fs::write(&tmp, text).map_err(werr)?;
    fs::rename(&tmp, path).map_err(werr)
}

pub fn load(path: &Path) -> Result<StatTable, CacheError> {
    let text =
        fs::read_to_string(path).map_err(|source| CacheError::Read { path: path.to_path_buf(), source })?;
    export::from_json(&text).map_err(|source| CacheError::Corrupt { path: path.to_path_buf(), source })
}

/// The table for `n ≤ n_max`, `m ≤ m_max`, through the cache when a path is
/// given.
pub fn table(path: Option<&Path>, n_max: usize, m_max: usize) -> Result<StatTable, CacheError> {
    let Some(path) = path else {
        return Ok(StatTable::compute(n_max, m_max));
    };
    let cached = if path.exists() { Some(load(path)?) } else { None };
    if let Some(t) = cached.as_ref().and_then(|c| c.restrict(n_max, m_max)) {
        return Ok(t);
    }
    let (n_big, m_big) = match &cached {
        Some(c) => (n_max.max(c.n_max), m_max.max(c.m_max())),
        None => (n_max, m_max),
    };
    let full = StatTable::compute(n_big, m_big);
    save(path, &full)?;
    Ok(full.restrict(n_max, m_max).expect("computed table covers the request"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefix_served_from_cache() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.json");
        let big = table(Some(&path), 40, 3).unwrap();
        let small = table(Some(&path), 20, 2).unwrap();
        assert_eq!(small, big.restrict(20, 2).unwrap());
        assert_eq!(small, StatTable::compute(20, 2));
        let grown = table(Some(&path), 50, 2).unwrap();
        assert_eq!(grown, StatTable::compute(50, 2));
        assert_eq!(load(&path).unwrap().m_max(), 3);
    }

    #[test]
    fn version_mismatch_is_refused() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.json");
        save(&path, &StatTable::compute(10, 1)).unwrap();
        let text = fs::read_to_string(&path).unwrap().replace("\"version\": 1", "\"version\": 99");
        fs::write(&path, text).unwrap();
        let err = table(Some(&path), 5, 1).unwrap_err();
        assert!(err.to_string().contains("unsupported format"), "{err}");
    }
}
