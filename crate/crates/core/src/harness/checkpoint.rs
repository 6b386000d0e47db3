//! Checkpoints are partial [`SweepReport`]s written atomically after every
//! chunk. Resuming requires the same sweep id, parameters, seed and unit
//! count; anything else is refused.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use super::sweep::{SweepReport, SCHEMA_VERSION};
use crate::error::SweepError;

fn io_err(path: &Path, source: std::io::Error) -> SweepError {
    SweepError::CheckpointIo {
        path: path.to_path_buf(),
        source,
    }
}

/// Writes to a sibling temporary file and renames it over `path`, so a
/// crash leaves either the previous checkpoint or the new one.
pub fn save_checkpoint(path: &Path, report: &SweepReport) -> Result<(), SweepError> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    let bytes = serde_json::to_vec_pretty(report).map_err(|source| SweepError::CheckpointFormat {
        path: path.to_path_buf(),
        source,
    })?;
    let mut file = fs::File::create(&tmp).map_err(|e| io_err(&tmp, e))?;
    file.write_all(&bytes).map_err(|e| io_err(&tmp, e))?;
    file.sync_all().map_err(|e| io_err(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| io_err(path, e))
}

/// `Ok(None)` when no checkpoint exists at `path`.
pub fn load_checkpoint(path: &Path) -> Result<Option<SweepReport>, SweepError> {
    let bytes = match fs::read(path) {
        Ok(b) => b,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(io_err(path, e)),
    };
    let report: SweepReport = serde_json::from_slice(&bytes).map_err(|source| SweepError::CheckpointFormat {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(Some(report))
}

/// Checks that `saved` was produced by the sweep described by `fresh`.
pub fn ensure_compatible(path: &Path, saved: &SweepReport, fresh: &SweepReport) -> Result<(), SweepError> {
    let mismatch = |reason: String| {
        Err(SweepError::CheckpointMismatch {
            path: path.to_path_buf(),
            reason,
        })
    };
    if saved.schema_version != SCHEMA_VERSION {
        return mismatch(format!(
            "schema version {} (this build writes {SCHEMA_VERSION})",
            saved.schema_version
        ));
    }
    if saved.sweep_id != fresh.sweep_id {
        return mismatch(format!("sweep id {:?}, expected {:?}", saved.sweep_id, fresh.sweep_id));
    }
    if saved.params != fresh.params {
        return mismatch(format!("parameters {:?}, expected {:?}", saved.params, fresh.params));
    }
    if saved.seed != fresh.seed {
        return mismatch(format!("seed {:?}, expected {:?}", saved.seed, fresh.seed));
    }
    if saved.total_units != fresh.total_units || saved.cursor > saved.total_units {
        return mismatch(format!(
            "cursor {}/{} does not fit {} units",
            saved.cursor, saved.total_units, fresh.total_units
        ));
    }
    Ok(())
}
