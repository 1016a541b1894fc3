//! Append-only result cache: a single file of length-prefixed JSON entries
//! keyed by a content hash of (operation, canonical arguments, schema
//! version). Entries from other engine versions are skipped. Corruption is
//! never fatal: the damaged tail is ignored with a warning and the caller
//! recomputes.

use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Serialize, Deserialize)]
struct Entry {
    key: String,
    op: String,
    args: String,
    schema_version: u32,
    engine_version: String,
    value: String,
}

pub struct Cache {
    path: PathBuf,
}

pub fn content_key(op: &str, args: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(op.as_bytes());
    hasher.update([0]);
    hasher.update(args.as_bytes());
    hasher.update([0]);
    hasher.update(quadric_moduli::SCHEMA_VERSION.to_le_bytes());
    hex(&hasher.finalize())
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

impl Cache {
    pub fn new(path: &Path) -> Cache {
        Cache {
            path: path.to_path_buf(),
        }
    }

    /// Last valid entry matching the key and the current engine version.
    pub fn lookup(&self, key: &str) -> Option<String> {
        let data = std::fs::read(&self.path).ok()?;
        let mut hit = None;
        let mut offset = 0usize;
        while offset < data.len() {
            if offset + 8 > data.len() {
                self.warn(offset, "truncated length prefix");
                break;
            }
            let len = u64::from_le_bytes(data[offset..offset + 8].try_into().unwrap()) as usize;
            offset += 8;
            if offset + len > data.len() {
                self.warn(offset - 8, "entry shorter than its declared length");
                break;
            }
            match serde_json::from_slice::<Entry>(&data[offset..offset + len]) {
                Ok(entry) => {
                    if entry.key == key
                        && entry.engine_version == quadric_moduli::ENGINE_VERSION
                        && entry.schema_version == quadric_moduli::SCHEMA_VERSION
                    {
                        hit = Some(entry.value);
                    }
                }
                Err(_) => {
                    self.warn(offset - 8, "undecodable entry");
                    break;
                }
            }
            offset += len;
        }
        hit
    }

    /// Appends one entry; failures to write are warnings, not errors.
    pub fn store(&self, op: &str, args: &str, key: &str, value: &str) {
        let entry = Entry {
            key: key.to_string(),
            op: op.to_string(),
            args: args.to_string(),
            schema_version: quadric_moduli::SCHEMA_VERSION,
            engine_version: quadric_moduli::ENGINE_VERSION.to_string(),
            value: value.to_string(),
        };
        let payload = serde_json::to_vec(&entry).expect("entry serializes");
        let mut record = (payload.len() as u64).to_le_bytes().to_vec();
        record.extend_from_slice(&payload);
        let written = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .and_then(|mut f| f.write_all(&record));
        if let Err(e) = written {
            eprintln!(
                "warning: could not write cache file {}: {e}",
                self.path.display()
            );
        }
    }

    fn warn(&self, offset: usize, what: &str) {
        eprintln!(
            "warning: cache file {} corrupted at offset {offset} ({what}); ignoring the rest",
            self.path.display()
        );
    }
}
