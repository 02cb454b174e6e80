//! Resumable-run state for the two long jobs (census and seed search),
//! stored as JSON and written atomically so an interrupted checkpoint never
//! corrupts an older one.

use crate::output::write_atomic;
use dgcode::CensusRecord;
use serde::{Deserialize, Serialize};
use std::fs;
use std::path::Path;

#[derive(Serialize, Deserialize)]
pub struct SearchCheckpoint {
    pub kind: String,
    pub n: usize,
    pub circulants: bool,
    pub bordered: bool,
    pub max_row_limit: Option<usize>,
    pub next_index: u64,
    pub best: usize,
    pub survivors: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
pub struct RecordState {
    pub n: usize,
    pub d: usize,
    pub self_dual: bool,
    pub formally_self_dual: bool,
    pub isodual: bool,
    pub aut_order: u128,
    pub cert_hex: String,
    pub generators: String,
    pub digraph6: String,
}

impl From<&CensusRecord> for RecordState {
    fn from(r: &CensusRecord) -> RecordState {
        RecordState {
            n: r.n,
            d: r.d,
            self_dual: r.self_dual,
            formally_self_dual: r.formally_self_dual,
            isodual: r.isodual,
            aut_order: r.aut_order,
            cert_hex: r.cert_hex.clone(),
            generators: r.generators.clone(),
            digraph6: r.digraph6.clone(),
        }
    }
}

impl From<RecordState> for CensusRecord {
    fn from(r: RecordState) -> CensusRecord {
        CensusRecord {
            n: r.n,
            d: r.d,
            self_dual: r.self_dual,
            formally_self_dual: r.formally_self_dual,
            isodual: r.isodual,
            aut_order: r.aut_order,
            cert_hex: r.cert_hex,
            generators: r.generators,
            digraph6: r.digraph6,
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct ClassifyCheckpoint {
    pub kind: String,
    pub n: usize,
    pub input: String,
    pub processed: usize,
    pub records: Vec<RecordState>,
}

pub fn save<T: Serialize>(path: &Path, state: &T) -> Result<(), String> {
    let json = serde_json::to_string(state).map_err(|e| e.to_string())?;
    write_atomic(path, &json).map_err(|e| format!("writing {}: {e}", path.display()))
}

pub fn load<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<Option<T>, String> {
    if !path.exists() {
        return Ok(None);
    }
    let json = fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))?;
    serde_json::from_str(&json)
        .map(Some)
        .map_err(|e| format!("checkpoint {}: {e}", path.display()))
}
