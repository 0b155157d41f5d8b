//! Memo of Kazhdan–Lusztig polynomials, optionally persisted as
//! newline-delimited JSON records
//!
//! ```text
//! {"descriptor":"A3","x_word":"2","y_word":"2 1 3 2","coeffs":[1,1]}
//! ```
//!
//! Keys are irreducible canonical components with lexicographically least
//! reduced words. Loading recomputes the first few records and refuses a
//! file that disagrees. Saving appends only the records computed since the
//! last save, so the file grows monotonically.
//!
//! A cache is not synchronized: readers may share a loaded cache, but only
//! one writer should save to a given file at a time.

use std::collections::HashMap;
use std::fs::{self, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::CoxeterComponent;

use super::engine::KlEngine;
use super::group::CoxeterGroup;
use super::poly::KlPolynomial;

pub const CACHE_FILE: &str = "kl-cache.ndjson";
pub const CACHE_DIR_ENV: &str = "BLOCKTILT_CACHE_DIR";
const SPOT_CHECKS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CacheKey {
    pub descriptor: String,
    pub x_word: String,
    pub y_word: String,
}

#[derive(Serialize, Deserialize)]
struct Record {
    descriptor: String,
    x_word: String,
    y_word: String,
    coeffs: Vec<serde_json::Number>,
}

#[derive(Debug, Default)]
pub struct KlCache {
    entries: HashMap<CacheKey, KlPolynomial>,
    pending: Vec<CacheKey>,
    origin: Option<PathBuf>,
    engines: HashMap<CoxeterComponent, KlEngine>,
    hits: u64,
    misses: u64,
}

pub(crate) fn word_key(word: &[usize]) -> String {
    word.iter()
        .map(|k| k.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

impl KlCache {
    /// A cache that is never written to disk.
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Opens `<dir>/kl-cache.ndjson`, creating the directory if needed.
    pub fn open(dir: &Path) -> Result<Self> {
        fs::create_dir_all(dir)?;
        let path = dir.join(CACHE_FILE);
        let mut cache = KlCache {
            origin: Some(path.clone()),
            ..Self::default()
        };
        if !path.exists() {
            return Ok(cache);
        }
        let file = fs::File::open(&path)?;
        let mut order = Vec::new();
        for (lineno, line) in BufReader::new(file).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let bad = |why: String| Error::CacheCorrupt(format!("line {}: {why}", lineno + 1));
            let rec: Record = serde_json::from_str(&line).map_err(|e| bad(e.to_string()))?;
            let coeffs = rec
                .coeffs
                .iter()
                .map(|n| n.as_str().parse::<BigInt>().map_err(|e| bad(e.to_string())))
                .collect::<Result<Vec<_>>>()?;
            let key = CacheKey {
                descriptor: rec.descriptor,
                x_word: rec.x_word,
                y_word: rec.y_word,
            };
            order.push(key.clone());
            cache.entries.insert(key, KlPolynomial::new(coeffs));
        }
        for key in order.iter().take(SPOT_CHECKS) {
            let stored = cache.entries[key].clone();
            let fresh = cache.recompute(key)?;
            if fresh != stored {
                return Err(Error::CacheCorrupt(format!(
                    "{} {:?} {:?}: stored {stored}, recomputed {fresh}",
                    key.descriptor, key.x_word, key.y_word
                )));
            }
        }
        Ok(cache)
    }

    /// Opens the directory named by `BLOCKTILT_CACHE_DIR`, or an in-memory
    /// cache when it is unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(CACHE_DIR_ENV) {
            Some(dir) if !dir.is_empty() => Self::open(Path::new(&dir)),
            _ => Ok(Self::in_memory()),
        }
    }

    fn recompute(&mut self, key: &CacheKey) -> Result<KlPolynomial> {
        let corrupt = |why: String| Error::CacheCorrupt(format!("{}: {why}", key.descriptor));
        let desc: crate::weyl::CoxeterDescriptor =
            key.descriptor.parse().map_err(|e: Error| corrupt(e.to_string()))?;
        let [component] = desc.components[..] else {
            return Err(corrupt("not an irreducible component".into()));
        };
        let parse = |w: &str| -> Result<Vec<usize>> {
            w.split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|e| corrupt(e.to_string())))
                .collect()
        };
        let (x, y) = (parse(&key.x_word)?, parse(&key.y_word)?);
        let engine = self.engine(component)?;
        let xe = engine.group().element(&x)?;
        let ye = engine.group().element(&y)?;
        Ok(KlPolynomial::from_poly(&engine.p(xe, ye)))
    }

    pub(crate) fn engine(&mut self, component: CoxeterComponent) -> Result<&mut KlEngine> {
        if !self.engines.contains_key(&component) {
            let group = CoxeterGroup::new(component)?;
            self.engines.insert(component, KlEngine::new(group));
        }
        Ok(self.engines.get_mut(&component).expect("inserted above"))
    }

    /// P_{x,y} for canonical words in one irreducible component.
    pub(crate) fn component_polynomial(
        &mut self,
        component: CoxeterComponent,
        x: &[usize],
        y: &[usize],
    ) -> Result<KlPolynomial> {
        let engine = self.engine(component)?;
        let g = engine.group();
        let (xe, ye) = (g.element(x)?, g.element(y)?);
        let key = CacheKey {
            descriptor: component.to_string(),
            x_word: word_key(&g.word(xe)),
            y_word: word_key(&g.word(ye)),
        };
        if let Some(p) = self.entries.get(&key) {
            self.hits += 1;
            return Ok(p.clone());
        }
        self.misses += 1;
        let engine = self.engine(component)?;
        let p = KlPolynomial::from_poly(&engine.p(xe, ye));
        self.entries.insert(key.clone(), p.clone());
        self.pending.push(key);
        Ok(p)
    }

    /// Appends unsaved records to the backing file, if there is one.
    pub fn save(&mut self) -> Result<()> {
        let Some(path) = &self.origin else {
            self.pending.clear();
            return Ok(());
        };
        if self.pending.is_empty() {
            return Ok(());
        }
        let mut file = OpenOptions::new().create(true).append(true).open(path)?;
        let mut buf = String::new();
        for key in &self.pending {
            let rec = Record {
                descriptor: key.descriptor.clone(),
                x_word: key.x_word.clone(),
                y_word: key.y_word.clone(),
                coeffs: self.entries[key]
                    .coeffs()
                    .iter()
                    .map(|c| c.to_string().parse().expect("decimal integers are JSON numbers"))
                    .collect(),
            };
            buf.push_str(&serde_json::to_string(&rec).expect("records serialize"));
            buf.push('\n');
        }
        file.write_all(buf.as_bytes())?;
        self.pending.clear();
        Ok(())
    }

    pub fn is_dirty(&self) -> bool {
        !self.pending.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn path(&self) -> Option<&Path> {
        self.origin.as_deref()
    }

    pub fn hits(&self) -> u64 {
        self.hits
    }

    pub fn misses(&self) -> u64 {
        self.misses
    }

    pub fn get(&self, key: &CacheKey) -> Option<&KlPolynomial> {
        self.entries.get(key)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_data::LieType;

    #[test]
    fn round_trip_through_file() {
        let dir = tempfile::tempdir().unwrap();
        let a3 = CoxeterComponent::new(LieType::A, 3);
        let mut cache = KlCache::open(dir.path()).unwrap();
        let p = cache.component_polynomial(a3, &[], &[2, 1, 3, 2]).unwrap();
        assert_eq!(p, KlPolynomial::from_poly(&[1, 1]));
        cache.component_polynomial(a3, &[1], &[1, 2]).unwrap();
        assert!(cache.is_dirty());
        cache.save().unwrap();
        assert!(!cache.is_dirty());

        let text = fs::read_to_string(dir.path().join(CACHE_FILE)).unwrap();
        assert_eq!(text.lines().count(), 2);
        assert!(text.contains(r#"{"descriptor":"A3","x_word":"","y_word":"2 1 3 2","coeffs":[1,1]}"#));

        let mut again = KlCache::open(dir.path()).unwrap();
        assert_eq!(again.len(), 2);
        let q = again.component_polynomial(a3, &[], &[2, 1, 3, 2]).unwrap();
        assert_eq!(q, p);
        assert_eq!(again.hits(), 1);
        again.save().unwrap();
        let after = fs::read_to_string(dir.path().join(CACHE_FILE)).unwrap();
        assert_eq!(after, text);
    }

    #[test]
    fn corrupt_files_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join(CACHE_FILE);
        fs::write(
            &path,
            "{\"descriptor\":\"A3\",\"x_word\":\"\",\"y_word\":\"2 1 3 2\",\"coeffs\":[1,2]}\n",
        )
        .unwrap();
        assert!(matches!(KlCache::open(dir.path()), Err(Error::CacheCorrupt(_))));
        fs::write(&path, "not json\n").unwrap();
        assert!(matches!(KlCache::open(dir.path()), Err(Error::CacheCorrupt(_))));
    }
}
