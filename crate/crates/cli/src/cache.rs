//! On-disk cache of engine dimensions.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};

use crate::dims::Algebra;
use crate::field::FieldMode;

pub const CACHE_VERSION: u32 = 1;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheFile {
    pub version: u32,
    pub entries: BTreeMap<String, u128>,
}

pub fn key(algebra: Algebra, n: usize, degree: usize, field: FieldMode) -> String {
    format!("{}/{n}/{degree}/{field}", algebra.id())
}

#[derive(Debug)]
pub struct Cache {
    path: PathBuf,
    data: CacheFile,
    dirty: bool,
}

impl Cache {
    /// Loads `path`. A missing file gives an empty cache; an unreadable or
    /// malformed one is discarded with a warning on stderr.
    pub fn open(path: &Path) -> Cache {
        let empty = CacheFile {
            version: CACHE_VERSION,
            entries: BTreeMap::new(),
        };
        let data = match fs::read_to_string(path) {
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => empty,
            Err(e) => {
                eprintln!("warning: ignoring unreadable cache {}: {e}", path.display());
                empty
            }
            Ok(text) => match serde_json::from_str::<CacheFile>(&text) {
                Ok(c) if c.version == CACHE_VERSION => c,
                Ok(c) => {
                    eprintln!(
                        "warning: ignoring cache {} with version {} (expected {CACHE_VERSION})",
                        path.display(),
                        c.version
                    );
                    empty
                }
                Err(e) => {
                    eprintln!("warning: ignoring corrupt cache {}: {e}", path.display());
                    empty
                }
            },
        };
        Cache {
            path: path.to_path_buf(),
            data,
            dirty: false,
        }
    }

    pub fn get(&self, key: &str) -> Option<u128> {
        self.data.entries.get(key).copied()
    }

    pub fn insert(&mut self, key: String, value: u128) {
        if self.data.entries.insert(key, value) != Some(value) {
            self.dirty = true;
        }
    }

    pub fn entries(&self) -> &BTreeMap<String, u128> {
        &self.data.entries
    }

    /// Writes to a temporary file in the same directory, then renames it over the cache.
    pub fn save(&mut self) -> Result<()> {
        if !self.dirty {
            return Ok(());
        }
        let dir = match self.path.parent() {
            Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
            _ => PathBuf::from("."),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(&dir)
            .with_context(|| format!("creating temporary file in {}", dir.display()))?;
        serde_json::to_writer_pretty(&mut tmp, &self.data)?;
        tmp.write_all(b"\n")?;
        tmp.persist(&self.path)
            .with_context(|| format!("writing cache {}", self.path.display()))?;
        self.dirty = false;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("dims.json");
        let mut c = Cache::open(&path);
        assert!(c.entries().is_empty());
        c.insert(key(Algebra::Qn, 2, 3, FieldMode::Rational), 21);
        c.save().unwrap();
        let c2 = Cache::open(&path);
        assert_eq!(c2.get("qn/2/3/rational"), Some(21));

        fs::write(&path, "{ not json").unwrap();
        assert!(Cache::open(&path).entries().is_empty());
        fs::write(
            &path,
            r#"{"version": 99, "entries": {"qn/2/3/rational": 5}}"#,
        )
        .unwrap();
        assert!(Cache::open(&path).entries().is_empty());
    }
}
