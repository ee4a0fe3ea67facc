//! Append-only cache of computed order sequences.
//!
//! Each line is `<canonical expression>\t<canonical sequence>`. Later lines
//! never replace earlier ones.

use std::collections::BTreeMap;
use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::order_sequence::OrderSequence;

#[derive(Debug)]
pub struct Cache {
    path: PathBuf,
    entries: BTreeMap<String, OrderSequence>,
}

impl Cache {
    /// Opens `path`, creating nothing until the first [`Cache::put`].
    pub fn open(path: impl AsRef<Path>) -> Result<Cache> {
        let path = path.as_ref().to_path_buf();
        let mut entries = BTreeMap::new();
        if path.exists() {
            let text = std::fs::read_to_string(&path)?;
            for (i, line) in text.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                let (key, value) = line.split_once('\t').ok_or_else(|| Error::Fixture {
                    line: i + 1,
                    msg: format!("cache line without a tab in {}", path.display()),
                })?;
                let seq: OrderSequence = value.parse().map_err(|e: Error| Error::Fixture {
                    line: i + 1,
                    msg: e.to_string(),
                })?;
                entries.entry(key.to_string()).or_insert(seq);
            }
        }
        Ok(Cache { path, entries })
    }

    pub fn get(&self, key: &str) -> Option<&OrderSequence> {
        self.entries.get(key)
    }

    /// Appends `key` unless it is already present.
    pub fn put(&mut self, key: &str, seq: &OrderSequence) -> Result<()> {
        if key.contains(['\t', '\n']) {
            return Err(Error::InvalidParameter {
                name: "cache",
                reason: "key contains a tab or newline".into(),
            });
        }
        if self.entries.contains_key(key) {
            return Ok(());
        }
        let mut f = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        writeln!(f, "{key}\t{seq}")?;
        self.entries.insert(key.to_string(), seq.clone());
        Ok(())
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, &OrderSequence)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
