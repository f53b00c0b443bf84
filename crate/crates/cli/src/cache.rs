//! On-disk result cache: one JSON file per job, named by the SHA-256 of the
//! job's canonical JSON. Writes go to a temporary file that is then renamed
//! into place.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::{CliError, JobSpec, Outcome};

#[derive(Serialize, Deserialize)]
struct Entry {
    job: JobSpec,
    outcome: Outcome,
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: &Path) -> Self {
        Cache { dir: dir.to_path_buf() }
    }

    pub fn key(spec: &JobSpec) -> String {
        hex::encode(Sha256::digest(spec.canonical_json().as_bytes()))
    }

    pub fn path_for(&self, spec: &JobSpec) -> PathBuf {
        self.dir.join(format!("{}.json", Cache::key(spec)))
    }

    /// A stored outcome, if present and recorded for exactly this job.
    /// Unreadable or mismatched entries count as misses.
    pub fn get(&self, spec: &JobSpec) -> Result<Option<Outcome>, CliError> {
        let path = self.path_for(spec);
        let Ok(text) = fs::read_to_string(&path) else { return Ok(None) };
        match serde_json::from_str::<Entry>(&text) {
            Ok(entry) if entry.job.canonical_json() == spec.canonical_json() => Ok(Some(entry.outcome)),
            _ => Ok(None),
        }
    }

    pub fn put(&self, spec: &JobSpec, outcome: &Outcome) -> Result<(), CliError> {
        let io = |e: std::io::Error| CliError::Failure(format!("cache {}: {e}", self.dir.display()));
        fs::create_dir_all(&self.dir).map_err(io)?;
        let entry = Entry { job: spec.clone(), outcome: outcome.clone() };
        let body = serde_json::to_string_pretty(&entry).map_err(|e| CliError::Failure(e.to_string()))?;
        let target = self.path_for(spec);
        let tmp = self.dir.join(format!(".{}.{}.tmp", Cache::key(spec), std::process::id()));
        let mut f = fs::File::create(&tmp).map_err(io)?;
        f.write_all(body.as_bytes()).map_err(io)?;
        f.sync_all().map_err(io)?;
        drop(f);
        fs::rename(&tmp, &target).map_err(io)?;
        Ok(())
    }
}
