//! On-disk cache of quotient expansions, one JSON file per degree and
//! framing.

use std::fs;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::quotient::{ChordQuotient, QuotientFile};

/// Environment variable overriding the cache directory.
pub const CACHE_ENV: &str = "JACOBI_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cache {
    dir: PathBuf,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheEntry {
    pub degree: usize,
    pub framed: bool,
    pub path: PathBuf,
    pub bytes: u64,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$JACOBI_CACHE_DIR`, else `$XDG_CACHE_HOME/jacobi`, else
    /// `~/.cache/jacobi`.
    pub fn default_dir() -> Option<PathBuf> {
        if let Some(d) = std::env::var_os(CACHE_ENV).filter(|d| !d.is_empty()) {
            return Some(PathBuf::from(d));
        }
        if let Some(d) = std::env::var_os("XDG_CACHE_HOME").filter(|d| !d.is_empty()) {
            return Some(PathBuf::from(d).join("jacobi"));
        }
        std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("jacobi"))
    }

    pub fn from_env() -> Option<Self> {
        Self::default_dir().map(Cache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, degree: usize, framed: bool) -> PathBuf {
        let f = if framed { "framed" } else { "unframed" };
        self.dir.join(format!("quotient-{degree}-{f}.json"))
    }

    /// The cached quotient, or `None` if absent, stale or unreadable.
    pub fn load(&self, degree: usize, framed: bool) -> Option<ChordQuotient> {
        let path = self.path_for(degree, framed);
        let file = fs::File::open(&path).ok()?;
        let parsed: std::result::Result<QuotientFile, _> = serde_json::from_reader(BufReader::new(file));
        let result = parsed.map_err(Error::from).and_then(|f| {
            if f.degree != degree || f.framed != framed {
                return Err(Error::Parse("file describes another quotient".into()));
            }
            ChordQuotient::from_file(&f)
        });
        match result {
            Ok(q) => Some(q),
            Err(e) => {
                log::warn!("ignoring cache file {}: {e}", path.display());
                None
            }
        }
    }

    /// Writes atomically through a temporary file in the cache directory.
    pub fn store(&self, q: &ChordQuotient) -> Result<()> {
        let path = self.path_for(q.degree(), q.framed());
        let err = |e: &dyn std::fmt::Display| Error::Cache { path: path.clone(), detail: e.to_string() };
        fs::create_dir_all(&self.dir).map_err(|e| err(&e))?;
        let tmp = tempfile::NamedTempFile::new_in(&self.dir).map_err(|e| err(&e))?;
        {
            let mut w = BufWriter::new(tmp.as_file());
            serde_json::to_writer(&mut w, &q.to_file()).map_err(|e| err(&e))?;
            w.flush().map_err(|e| err(&e))?;
        }
        tmp.persist(&path).map_err(|e| err(&e.error))?;
        Ok(())
    }

    pub fn entries(&self) -> Vec<CacheEntry> {
        let Ok(rd) = fs::read_dir(&self.dir) else { return Vec::new() };
        let mut out: Vec<CacheEntry> = rd
            .filter_map(|e| e.ok())
            .filter_map(|e| {
                let name = e.file_name().into_string().ok()?;
                let rest = name.strip_prefix("quotient-")?.strip_suffix(".json")?;
                let (deg, f) = rest.split_once('-')?;
                let framed = match f {
                    "framed" => true,
                    "unframed" => false,
                    _ => return None,
                };
                Some(CacheEntry {
                    degree: deg.parse().ok()?,
                    framed,
                    path: e.path(),
                    bytes: e.metadata().ok()?.len(),
                })
            })
            .collect();
        out.sort_by_key(|e| (e.degree, e.framed));
        out
    }

    /// Removes all cache files; returns how many were removed.
    pub fn clear(&self) -> Result<usize> {
        let entries = self.entries();
        for e in &entries {
            fs::remove_file(&e.path)?;
        }
        Ok(entries.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let q = ChordQuotient::compute(4, true, u64::MAX).unwrap();
        cache.store(&q).unwrap();
        let back = cache.load(4, true).unwrap();
        assert_eq!(back.dim(), q.dim());
        for c in 0..q.column_count() {
            assert_eq!(back.expansion(c), q.expansion(c));
        }
        assert_eq!(cache.entries().len(), 1);
        fs::write(cache.path_for(4, true), b"{not json").unwrap();
        assert!(cache.load(4, true).is_none());
        assert_eq!(cache.clear().unwrap(), 1);
        assert!(cache.load(4, true).is_none());
    }
}
