//! File and table plumbing: atomic writes, the TSV census database, and the
//! human-readable summaries printed to stderr.

use dgcode::CensusRecord;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

/// Writes through a temp file in the same directory plus an atomic rename,
/// so a failed run never leaves a partial file at `path`.
pub fn write_atomic(path: &Path, contents: &str) -> io::Result<()> {
    let mut tmp: PathBuf = path.to_path_buf();
    let name = tmp
        .file_name()
        .map(|f| f.to_string_lossy().into_owned())
        .unwrap_or_default();
    tmp.set_file_name(format!("{name}.tmp.{}", std::process::id()));
    fs::write(&tmp, contents)?;
    match fs::rename(&tmp, path) {
        Ok(()) => Ok(()),
        Err(e) => {
            let _ = fs::remove_file(&tmp);
            Err(e)
        }
    }
}

/// Three-character flag field: self-dual, isodual, formally self-dual.
pub fn flags(self_dual: bool, isodual: bool, formally_self_dual: bool) -> String {
    let mut out = String::with_capacity(3);
    out.push(if self_dual { 'S' } else { '-' });
    out.push(if isodual { 'I' } else { '-' });
    out.push(if formally_self_dual { 'F' } else { '-' });
    out
}

/// One census class per line: n, d, flags, certificate, generator rows
/// (semicolon-joined), tab-separated.
pub fn render_tsv(records: &[CensusRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            r.n,
            r.d,
            flags(r.self_dual, r.isodual, r.formally_self_dual),
            r.cert_hex,
            r.generators.replace(',', ";")
        ));
    }
    out
}

/// The filter-relevant columns of a database row.
pub struct DbRow {
    pub n: usize,
    pub d: usize,
    pub self_dual: bool,
    pub isodual: bool,
    pub formally_self_dual: bool,
}

pub fn parse_tsv(text: &str) -> Result<Vec<DbRow>, String> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let bad = |what: &str| format!("line {}: {what}", i + 1);
        if fields.len() != 5 {
            return Err(bad("expected 5 tab-separated fields"));
        }
        let n: usize = fields[0].parse().map_err(|_| bad("bad length field"))?;
        let d: usize = fields[1].parse().map_err(|_| bad("bad distance field"))?;
        let f = fields[2].as_bytes();
        if f.len() != 3
            || !matches!(f[0], b'S' | b'-')
            || !matches!(f[1], b'I' | b'-')
            || !matches!(f[2], b'F' | b'-')
        {
            return Err(bad("bad flags field (expected three chars of S/I/F or -)"));
        }
        rows.push(DbRow {
            n,
            d,
            self_dual: f[0] == b'S',
            isodual: f[1] == b'I',
            formally_self_dual: f[2] == b'F',
        });
    }
    Ok(rows)
}

/// key,value summary lines for one classified length.
pub fn census_summary_csv(n: usize, records: &[CensusRecord]) -> String {
    let s = dgcode::classify::summarize(records);
    let mut out = format!(
        "n,{n}\nclasses,{}\nself_dual,{}\nformally_self_dual,{}\nisodual,{}\n",
        s.total, s.self_dual, s.formally_self_dual, s.isodual
    );
    for (d, count) in &s.by_distance {
        out.push_str(&format!("distance,{d},{count}\n"));
    }
    out
}

pub fn census_human_table(n: usize, records: &[CensusRecord]) -> String {
    let s = dgcode::classify::summarize(records);
    let mut out = format!(
        "length {n}: {} classes ({} self-dual, {} formally self-dual, {} isodual)\n",
        s.total, s.self_dual, s.formally_self_dual, s.isodual
    );
    out.push_str("  d  classes\n");
    for (d, count) in &s.by_distance {
        out.push_str(&format!("  {d:<2} {count}\n"));
    }
    out
}
