//! Append-only JSON-lines catalog of certified codes with content-hash ids.

use std::collections::HashSet;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, ErrorKind, Read, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::code::CodeReport;
use crate::constructions::{Certified, ConstructionRecord};
use crate::group::GroupStructure;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("catalog i/o failure: {0}")]
    Io(#[from] std::io::Error),
    #[error("catalog serialization failure: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    /// SHA-256 of the canonical JSON of every other field except `created`.
    pub id: String,
    pub field: String,
    pub curve: Option<String>,
    #[serde(rename = "N")]
    pub curve_order: Option<u64>,
    pub group: Option<GroupStructure>,
    pub construction: ConstructionRecord,
    pub n: usize,
    pub k: usize,
    pub m: Option<u32>,
    pub report: CodeReport,
    pub points: Vec<String>,
    pub matrix: Vec<Vec<String>>,
    /// ISO-8601 time of storage; excluded from the id.
    pub created: Option<String>,
}

impl CatalogEntry {
    pub fn from_certified(c: &Certified) -> Self {
        let code = &c.code;
        let f = code.field();
        let prov = code.provenance();
        let matrix = code
            .generator()
            .row_vecs()
            .iter()
            .map(|r| r.iter().map(|&e| f.format_element(e)).collect())
            .collect();
        let mut entry = Self {
            id: String::new(),
            field: f.to_string(),
            curve: prov.map(|p| p.curve.to_string()),
            curve_order: c.curve_order,
            group: c.group,
            construction: c.record.clone(),
            n: code.n(),
            k: code.k(),
            m: prov.map(|p| p.m),
            report: c.report.clone(),
            points: prov
                .map(|p| p.points.iter().map(|pt| p.curve.format_point(pt)).collect())
                .unwrap_or_default(),
            matrix,
            created: None,
        };
        entry.id = entry.content_id();
        entry
    }

    pub fn content_id(&self) -> String {
        let canonical = Self {
            id: String::new(),
            created: None,
            ..self.clone()
        };
        let bytes = serde_json::to_vec(&canonical).expect("plain data");
        hex::encode(Sha256::digest(bytes))
    }
}

/// A catalog file. Lines that fail to parse are skipped with a warning.
#[derive(Debug, Clone)]
pub struct Catalog {
    path: PathBuf,
}

impl Catalog {
    pub fn new(path: impl AsRef<Path>) -> Self {
        Self {
            path: path.as_ref().to_path_buf(),
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn load(&self) -> Result<Vec<CatalogEntry>, CatalogError> {
        let file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e.into()),
        };
        let mut out = Vec::new();
        for (i, line) in BufReader::new(file).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str::<CatalogEntry>(&line) {
                Ok(entry) => out.push(entry),
                Err(e) => log::warn!(
                    "{}:{}: skipping unreadable entry: {e}",
                    self.path.display(),
                    i + 1
                ),
            }
        }
        Ok(out)
    }

    /// Appends `entry` unless an entry with the same id is present. Returns
    /// whether a line was written.
    pub fn store(&self, entry: &CatalogEntry) -> Result<bool, CatalogError> {
        let ids: HashSet<String> = self.load()?.into_iter().map(|e| e.id).collect();
        if ids.contains(&entry.id) {
            return Ok(false);
        }
        let mut file = OpenOptions::new()
            .create(true)
            .read(true)
            .append(true)
            .open(&self.path)?;
        // keep a truncated last line from swallowing the new entry
        let len = file.metadata()?.len();
        let mut line = String::new();
        if len > 0 {
            let mut last = [0u8; 1];
            file.seek(SeekFrom::Start(len - 1))?;
            file.read_exact(&mut last)?;
            if last[0] != b'\n' {
                line.push('\n');
            }
        }
        line.push_str(&serde_json::to_string(entry)?);
        line.push('\n');
        file.write_all(line.as_bytes())?;
        Ok(true)
    }

    pub fn find(&self, id_prefix: &str) -> Result<Vec<CatalogEntry>, CatalogError> {
        Ok(self
            .load()?
            .into_iter()
            .filter(|e| e.id.starts_with(id_prefix))
            .collect())
    }
}
