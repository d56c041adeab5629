//! OEIS b-files: one `index value` pair per line.

use std::fmt::Write as _;

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct BFileError {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFileEntry {
    pub index: u64,
    pub value: BigInt,
}

/// Parses b-file text. Lines starting with `#` and blank lines are skipped;
/// indices must strictly increase.
pub fn parse(text: &str) -> Result<Vec<BFileEntry>, BFileError> {
    let mut entries: Vec<BFileEntry> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let err = |message: String| BFileError { line, message };
        let mut fields = trimmed.split_whitespace();
        let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err(format!("expected \"index value\", got {trimmed:?}")));
        };
        let index: u64 = idx
            .parse()
            .map_err(|_| err(format!("bad index {idx:?}")))?;
        let value: BigInt = val
            .parse()
            .map_err(|_| err(format!("bad value {val:?}")))?;
        if let Some(prev) = entries.last() {
            if index <= prev.index {
                return Err(err(format!(
                    "index {index} does not follow {}",
                    prev.index
                )));
            }
        }
        entries.push(BFileEntry { index, value });
    }
    Ok(entries)
}

/// Formats entries as `index value` lines, LF-terminated.
pub fn format<'a>(entries: impl IntoIterator<Item = &'a BFileEntry>) -> String {
    let mut out = String::new();
    for e in entries {
        writeln!(out, "{} {}", e.index, e.value).expect("writing to a String");
    }
    out
}
