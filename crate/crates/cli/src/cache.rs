//! On-disk cache of fundamental characters.
//!
//! Each entry is a payload file holding the character JSON, optionally
//! gzipped, and a small metadata file next to it. Both are written to a
//! temporary file in the cache directory and renamed into place, so readers
//! never see a half-written file. A payload whose checksum or engine version
//! does not match its metadata is ignored and recomputed.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use flate2::read::GzDecoder;
use flate2::write::GzEncoder;
use flate2::Compression;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use tempfile::NamedTempFile;
use thiserror::Error;

use qchar_core::{LieType, RootData};

pub const ENV_VAR: &str = "QCHAR_CACHE_DIR";
pub const DEFAULT_DIR: &str = "qchar-cache";

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache I/O on {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("cache metadata {path}: {source}")]
    Meta { path: PathBuf, source: serde_json::Error },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheMeta {
    pub engine_version: String,
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub rank: usize,
    pub node: usize,
    pub terms: usize,
    pub wall_ms: u64,
    pub sha256: String,
    pub gzip: bool,
}

/// Why a lookup did not produce a payload.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Miss {
    Absent,
    Version(String),
    Checksum,
    Unreadable(String),
}

pub struct Cache {
    dir: PathBuf,
    gzip: bool,
}

pub fn checksum(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>, gzip: bool) -> Self {
        Cache { dir: dir.into(), gzip }
    }

    /// Flag beats environment beats the default directory.
    pub fn resolve_dir(flag: Option<&Path>) -> PathBuf {
        if let Some(p) = flag {
            return p.to_path_buf();
        }
        match std::env::var_os(ENV_VAR) {
            Some(v) if !v.is_empty() => PathBuf::from(v),
            _ => PathBuf::from(DEFAULT_DIR),
        }
    }

    fn stem(rd: &RootData, node: usize) -> String {
        format!("{}{}-{}", rd.lie_type(), rd.rank(), node)
    }

    pub fn meta_path(&self, rd: &RootData, node: usize) -> PathBuf {
        self.dir.join(format!("{}.meta.json", Self::stem(rd, node)))
    }

    pub fn payload_path(&self, rd: &RootData, node: usize, gzip: bool) -> PathBuf {
        let ext = if gzip { "json.gz" } else { "json" };
        self.dir.join(format!("{}.{ext}", Self::stem(rd, node)))
    }

    /// The cached JSON text for `(type, rank, node)` if it is present and valid.
    pub fn load(&self, rd: &RootData, node: usize) -> Result<String, Miss> {
        let meta_path = self.meta_path(rd, node);
        let raw = match fs::read(&meta_path) {
            Ok(raw) => raw,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Err(Miss::Absent),
            Err(e) => return Err(Miss::Unreadable(e.to_string())),
        };
        let meta: CacheMeta = serde_json::from_slice(&raw).map_err(|e| Miss::Unreadable(e.to_string()))?;
        if meta.engine_version != qchar_core::VERSION {
            return Err(Miss::Version(meta.engine_version));
        }
        if meta.lie_type != rd.lie_type() || meta.rank != rd.rank() || meta.node != node {
            return Err(Miss::Unreadable("metadata names a different character".into()));
        }
        let bytes = fs::read(self.payload_path(rd, node, meta.gzip)).map_err(|e| Miss::Unreadable(e.to_string()))?;
        let text = if meta.gzip {
            let mut out = String::new();
            GzDecoder::new(&bytes[..])
                .read_to_string(&mut out)
                .map_err(|e| Miss::Unreadable(e.to_string()))?;
            out
        } else {
            String::from_utf8(bytes).map_err(|e| Miss::Unreadable(e.to_string()))?
        };
        if checksum(text.as_bytes()) != meta.sha256 {
            return Err(Miss::Checksum);
        }
        Ok(text)
    }

    pub fn store(&self, rd: &RootData, node: usize, json: &str, terms: usize, wall_ms: u64) -> Result<CacheMeta, CacheError> {
        let io = |path: &Path| {
            let path = path.to_path_buf();
            move |source| CacheError::Io { path, source }
        };
        fs::create_dir_all(&self.dir).map_err(io(&self.dir))?;
        let payload = if self.gzip {
            let mut enc = GzEncoder::new(Vec::new(), Compression::default());
            enc.write_all(json.as_bytes()).map_err(io(&self.dir))?;
            enc.finish().map_err(io(&self.dir))?
        } else {
            json.as_bytes().to_vec()
        };
        let meta = CacheMeta {
            engine_version: qchar_core::VERSION.to_string(),
            lie_type: rd.lie_type(),
            rank: rd.rank(),
            node,
            terms,
            wall_ms,
            sha256: checksum(json.as_bytes()),
            gzip: self.gzip,
        };
        let meta_text = serde_json::to_string_pretty(&meta).map_err(|source| CacheError::Meta {
            path: self.meta_path(rd, node),
            source,
        })?;
        self.write_atomic(&self.payload_path(rd, node, self.gzip), &payload)?;
        self.write_atomic(&self.meta_path(rd, node), meta_text.as_bytes())?;
        Ok(meta)
    }

    fn write_atomic(&self, path: &Path, bytes: &[u8]) -> Result<(), CacheError> {
        let err = |source| CacheError::Io { path: path.to_path_buf(), source };
        let mut tmp = NamedTempFile::new_in(&self.dir).map_err(err)?;
        tmp.write_all(bytes).map_err(err)?;
        tmp.as_file().sync_all().map_err(err)?;
        tmp.persist(path).map_err(|e| err(e.error))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> RootData {
        RootData::new(LieType::A, 2).unwrap()
    }

    #[test]
    fn round_trip_plain_and_gzip() {
        for gzip in [false, true] {
            let dir = tempfile::tempdir().unwrap();
            let cache = Cache::new(dir.path(), gzip);
            assert_eq!(cache.load(&a2(), 1), Err(Miss::Absent));
            cache.store(&a2(), 1, "{\"x\":1}\n", 1, 3).unwrap();
            assert_eq!(cache.load(&a2(), 1).unwrap(), "{\"x\":1}\n");
            assert_eq!(cache.load(&a2(), 2), Err(Miss::Absent));
        }
    }

    #[test]
    fn corruption_and_version_are_detected() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path(), false);
        cache.store(&a2(), 1, "abc", 1, 0).unwrap();
        fs::write(cache.payload_path(&a2(), 1, false), "abd").unwrap();
        assert_eq!(cache.load(&a2(), 1), Err(Miss::Checksum));

        cache.store(&a2(), 1, "abc", 1, 0).unwrap();
        let path = cache.meta_path(&a2(), 1);
        let mut meta: CacheMeta = serde_json::from_slice(&fs::read(&path).unwrap()).unwrap();
        meta.engine_version = "0.0.0-old".into();
        fs::write(&path, serde_json::to_string(&meta).unwrap()).unwrap();
        assert_eq!(cache.load(&a2(), 1), Err(Miss::Version("0.0.0-old".into())));
    }
}
