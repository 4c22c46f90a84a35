//! On-disk table of exact counts, one `f-spec;g;p-list;count` line per entry.
//!
//! Readers load the whole table; a writer rewrites it atomically through a
//! temporary file, so concurrent readers never observe a torn file.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use thiserror::Error;

use crate::faces::FaceDegreeSequence;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache i/o: {0}")]
    Io(#[from] io::Error),
    #[error("malformed cache line {line}: {text}")]
    Malformed { line: usize, text: String },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CacheKey {
    pub faces: String,
    pub genus: usize,
    pub boundary: String,
}

impl CacheKey {
    pub fn new(f: &FaceDegreeSequence, genus: usize, boundary: Option<&[usize]>) -> Self {
        let boundary = match boundary {
            None => "-".to_string(),
            Some(p) => p
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(","),
        };
        Self {
            faces: f.to_string(),
            genus,
            boundary,
        }
    }
}

#[derive(Debug, Default)]
pub struct Cache {
    path: PathBuf,
    entries: BTreeMap<CacheKey, BigUint>,
    dirty: bool,
}

impl Cache {
    /// Loads the table at `path`; a missing file is an empty cache.
    pub fn open(path: impl AsRef<Path>) -> Result<Self, CacheError> {
        let path = path.as_ref().to_path_buf();
        let mut entries = BTreeMap::new();
        match fs::read_to_string(&path) {
            Ok(text) => {
                for (i, line) in text.lines().enumerate() {
                    if line.trim().is_empty() {
                        continue;
                    }
                    let bad = || CacheError::Malformed {
                        line: i + 1,
                        text: line.to_string(),
                    };
                    let parts: Vec<&str> = line.split(';').collect();
                    let [faces, genus, boundary, count] = parts[..] else {
                        return Err(bad());
                    };
                    let genus = genus.parse().map_err(|_| bad())?;
                    let count = count.parse().map_err(|_| bad())?;
                    entries.insert(
                        CacheKey {
                            faces: faces.to_string(),
                            genus,
                            boundary: boundary.to_string(),
                        },
                        count,
                    );
                }
            }
            Err(e) if e.kind() == io::ErrorKind::NotFound => {}
            Err(e) => return Err(e.into()),
        }
        Ok(Self {
            path,
            entries,
            dirty: false,
        })
    }

    pub fn get(&self, key: &CacheKey) -> Option<&BigUint> {
        self.entries.get(key)
    }

    pub fn insert(&mut self, key: CacheKey, count: BigUint) {
        if self.entries.get(&key) != Some(&count) {
            self.entries.insert(key, count);
            self.dirty = true;
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Writes the table back if it changed.
    pub fn flush(&mut self) -> Result<(), CacheError> {
        if !self.dirty {
            return Ok(());
        }
        let mut text = String::new();
        for (k, v) in &self.entries {
            text.push_str(&format!("{};{};{};{}\n", k.faces, k.genus, k.boundary, v));
        }
        if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        let tmp = self.path.with_extension("tmp");
        fs::write(&tmp, text)?;
        fs::rename(&tmp, &self.path)?;
        self.dirty = false;
        Ok(())
    }
}
