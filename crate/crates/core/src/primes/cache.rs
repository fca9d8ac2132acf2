//! Versioned binary cache for prime tables.
//!
//! Layout (little endian): magic `PGSV`, format version `u32`, limit `u64`,
//! then a bit-packed odd-number sieve where bit `i` is set iff `2i + 1` is prime.

use std::fs;
use std::path::{Path, PathBuf};

use super::PrimeTable;
use crate::error::{Error, Result};

const MAGIC: &[u8; 4] = b"PGSV";
const VERSION: u32 = 1;
const HEADER_LEN: usize = 16;

impl PrimeTable {
    pub fn to_cache_bytes(&self) -> Vec<u8> {
        let odd_slots = (self.limit as usize).div_ceil(2);
        let mut bits = vec![0u8; odd_slots.div_ceil(8)];
        for &p in self.primes.iter().skip(1) {
            let i = (p / 2) as usize;
            bits[i / 8] |= 1 << (i % 8);
        }
        let mut out = Vec::with_capacity(HEADER_LEN + bits.len());
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&VERSION.to_le_bytes());
        out.extend_from_slice(&self.limit.to_le_bytes());
        out.extend_from_slice(&bits);
        out
    }

    pub fn from_cache_bytes(bytes: &[u8]) -> Result<Self> {
        if bytes.len() < HEADER_LEN || &bytes[..4] != MAGIC {
            return Err(Error::Cache("missing magic header".into()));
        }
        let version = u32::from_le_bytes(bytes[4..8].try_into().unwrap());
        if version != VERSION {
            return Err(Error::Cache(format!("unsupported version {version}")));
        }
        let limit = u64::from_le_bytes(bytes[8..16].try_into().unwrap());
        if limit < 2 {
            return Err(Error::LimitTooSmall(limit));
        }
        let odd_slots = (limit as usize).div_ceil(2);
        let bits = &bytes[HEADER_LEN..];
        if bits.len() != odd_slots.div_ceil(8) {
            return Err(Error::Cache("truncated sieve body".into()));
        }
        let mut primes = vec![2];
        for i in 1..odd_slots {
            if bits[i / 8] >> (i % 8) & 1 == 1 {
                primes.push(2 * i as u64 + 1);
            }
        }
        Ok(Self { limit, primes })
    }

    pub fn cache_path(dir: &Path, limit: u64) -> PathBuf {
        dir.join(format!("primes-{limit}.pgsv"))
    }

    pub fn save_cache(&self, dir: &Path) -> Result<PathBuf> {
        let path = Self::cache_path(dir, self.limit);
        fs::create_dir_all(dir).map_err(|e| Error::Cache(e.to_string()))?;
        fs::write(&path, self.to_cache_bytes()).map_err(|e| Error::Cache(e.to_string()))?;
        Ok(path)
    }

    /// Loads a cached table for exactly `limit`, if one exists.
    pub fn load_cache(dir: &Path, limit: u64) -> Result<Option<Self>> {
        let path = Self::cache_path(dir, limit);
        if !path.exists() {
            return Ok(None);
        }
        let bytes = fs::read(&path).map_err(|e| Error::Cache(e.to_string()))?;
        let table = Self::from_cache_bytes(&bytes)?;
        if table.limit != limit {
            return Err(Error::Cache(format!(
                "{} holds limit {}",
                path.display(),
                table.limit
            )));
        }
        Ok(Some(table))
    }
}
