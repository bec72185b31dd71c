//! Persistent memo of ext-closure decisions, one JSON object per line:
//!
//! ```text
//! {"backend":"abgrp:p2","digest":"…","generators":[…],"member":true,"object":{…}}
//! ```
//!
//! `object` and `generators` are canonical isomorphism keys. `digest` is the
//! first 16 hex digits of SHA-256 over the same record without it. Lines that
//! fail to parse or verify are skipped with a warning and recomputed.

use std::collections::HashSet;
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::category::Category;
use crate::error::Result;
use crate::nullity::{IsoSet, NullityEngine};
use crate::universe::ObjId;

pub struct MemoCache {
    path: PathBuf,
    fingerprint: String,
    loaded: HashSet<(ObjId, IsoSet)>,
}

fn digest(record: &Value) -> String {
    let bytes = serde_json::to_vec(record).expect("json values serialize");
    hex::encode(&Sha256::digest(&bytes)[..8])
}

fn file_name(fingerprint: &str) -> String {
    let safe: String = fingerprint
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' })
        .collect();
    format!("{safe}.jsonl")
}

impl MemoCache {
    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Opens (without creating) the cache for one backend and seeds `engine` from it.
    pub fn load<C: Category>(dir: &Path, cat: &C, engine: &NullityEngine<'_, C>) -> Self {
        let fingerprint = cat.fingerprint();
        let path = dir.join(file_name(&fingerprint));
        let mut loaded = HashSet::new();
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(_) => {
                return MemoCache {
                    path,
                    fingerprint,
                    loaded,
                }
            }
        };
        let u = engine.universe();
        for (n, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            match parse_line::<C>(line, &fingerprint) {
                Ok(None) => {}
                Ok(Some((obj, gens, member))) => {
                    let Some(b) = u.id_of_key(&obj) else { continue };
                    let ids: Option<IsoSet> = gens.iter().map(|g| u.id_of_key(g)).collect();
                    let Some(q) = ids else { continue };
                    engine.seed(b, &q, member);
                    loaded.insert((b, q));
                }
                Err(why) => log::warn!("{}:{}: skipping corrupt cache entry ({why})", path.display(), n + 1),
            }
        }
        MemoCache {
            path,
            fingerprint,
            loaded,
        }
    }

    /// Appends every decision the engine learned that the file does not hold yet.
    pub fn store<C: Category>(&self, engine: &NullityEngine<'_, C>) -> Result<usize> {
        let u = engine.universe();
        let mut out = String::new();
        let mut written = 0;
        for (b, q, member) in engine.export_memo() {
            if self.loaded.contains(&(b, q.clone())) {
                continue;
            }
            let mut record = json!({
                "backend": self.fingerprint,
                "object": u.key(b),
                "generators": q.iter().map(|&g| u.key(g)).collect::<Vec<_>>(),
                "member": member,
            });
            let d = digest(&record);
            record["digest"] = Value::String(d);
            out.push_str(&serde_json::to_string(&record)?);
            out.push('\n');
            written += 1;
        }
        if written > 0 {
            if let Some(parent) = self.path.parent() {
                fs::create_dir_all(parent)?;
            }
            let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
            f.write_all(out.as_bytes())?;
        }
        Ok(written)
    }
}

type Entry<K> = (K, Vec<K>, bool);

fn parse_line<C: Category>(line: &str, fingerprint: &str) -> std::result::Result<Option<Entry<C::Key>>, String> {
    let mut record: Value = serde_json::from_str(line).map_err(|e| e.to_string())?;
    let obj = record.as_object_mut().ok_or("not an object")?;
    let stated = obj.remove("digest").ok_or("missing digest")?;
    if stated.as_str() != Some(digest(&record).as_str()) {
        return Err("digest mismatch".into());
    }
    if record["backend"].as_str() != Some(fingerprint) {
        return Ok(None);
    }
    let key: C::Key = serde_json::from_value(record["object"].clone()).map_err(|e| e.to_string())?;
    let gens: Vec<C::Key> = serde_json::from_value(record["generators"].clone()).map_err(|e| e.to_string())?;
    let member = record["member"].as_bool().ok_or("member is not a bool")?;
    Ok(Some((key, gens, member)))
}
