//! Census progress on disk: finished work units as text, guarded by a
//! SHA-256 digest of the JSON body.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

const FORMAT_VERSION: u32 = 1;

/// Parameters a checkpoint must agree with before it may be resumed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunKey {
    pub stratum: String,
    pub genus: u32,
    pub cusp_by_search: bool,
    pub units_total: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckpointBody {
    pub version: u32,
    pub run: RunKey,
    /// Output lines of units `0..units.len()`, in unit order.
    pub units: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct CheckpointFile {
    body: CheckpointBody,
    sha256: String,
}

fn digest(body: &CheckpointBody) -> Result<String> {
    Ok(hex::encode(Sha256::digest(serde_json::to_vec(body)?)))
}

impl CheckpointBody {
    pub fn new(run: RunKey) -> Self {
        CheckpointBody { version: FORMAT_VERSION, run, units: Vec::new() }
    }

    /// Writes through a temporary file so an interrupted write never leaves
    /// a truncated checkpoint behind.
    pub fn save(&self, path: &Path) -> Result<()> {
        let file = CheckpointFile { body: self.clone(), sha256: digest(self)? };
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, serde_json::to_vec(&file)?)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let corrupt = |reason: String| Error::CorruptCheckpoint { path: path.to_path_buf(), reason };
        let bytes = fs::read(path)?;
        let file: CheckpointFile = serde_json::from_slice(&bytes).map_err(|e| corrupt(e.to_string()))?;
        if digest(&file.body)? != file.sha256 {
            return Err(corrupt("digest mismatch".into()));
        }
        if file.body.version != FORMAT_VERSION {
            return Err(corrupt(format!("unknown version {}", file.body.version)));
        }
        if file.body.units.len() > file.body.run.units_total {
            return Err(corrupt("more units than the run has".into()));
        }
        Ok(file.body)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> CheckpointBody {
        let mut b = CheckpointBody::new(RunKey {
            stratum: "hyp".into(),
            genus: 5,
            cusp_by_search: false,
            units_total: 3,
        });
        b.units.push(vec!["a".into(), "b".into()]);
        b
    }

    #[test]
    fn save_and_load() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ck.json");
        let b = sample();
        b.save(&path).unwrap();
        assert_eq!(CheckpointBody::load(&path).unwrap(), b);
    }

    #[test]
    fn tampering_is_detected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ck.json");
        sample().save(&path).unwrap();
        let text = fs::read_to_string(&path).unwrap().replace("\"b\"", "\"c\"");
        fs::write(&path, text).unwrap();
        assert!(matches!(CheckpointBody::load(&path), Err(Error::CorruptCheckpoint { .. })));
        fs::write(&path, "{not json").unwrap();
        assert!(matches!(CheckpointBody::load(&path), Err(Error::CorruptCheckpoint { .. })));
    }
}
