//! OEIS b-files for the four sequences around the triangle.
//!
//! A b-file is one `<index> <value>` pair per line, decimal, single space,
//! newline-terminated, with consecutive indices. Readers also accept `#`
//! comment lines, blank lines and trailing whitespace, as found in files
//! downloaded from the OEIS.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigUint;
use thiserror::Error;

use crate::continuant::d_fast;
use crate::triangle::{row_sum_closed, rows, RowMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceId {
    /// `T(n, k)` read by rows.
    A119326,
    /// `T(n, k) mod 2` read by rows.
    A114213,
    /// Row sums `r(n)` of the parity triangle.
    A114212,
    /// Diagonal sums `d(n)` of the parity triangle.
    A114214,
}

impl SequenceId {
    pub const ALL: [SequenceId; 4] = [
        SequenceId::A119326,
        SequenceId::A114213,
        SequenceId::A114212,
        SequenceId::A114214,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SequenceId::A119326 => "A119326",
            SequenceId::A114213 => "A114213",
            SequenceId::A114212 => "A114212",
            SequenceId::A114214 => "A114214",
        }
    }

    /// First index written by [`generate`].
    pub fn offset(self) -> i64 {
        0
    }

    /// Terms at indices `offset(), offset() + 1, …`.
    pub fn terms(self) -> Box<dyn Iterator<Item = BigUint>> {
        match self {
            SequenceId::A119326 => Box::new(rows(RowMode::Exact).flat_map(|r| r.entries)),
            SequenceId::A114213 => Box::new(rows(RowMode::Parity).flat_map(|r| r.entries)),
            SequenceId::A114212 => Box::new((0u64..).map(|n| row_sum_closed(&n.into()))),
            SequenceId::A114214 => Box::new((0u64..).map(|n| d_fast(&n.into()))),
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SequenceId {
    type Err = BFileError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SequenceId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| BFileError::UnknownSequence(s.to_string()))
    }
}

#[derive(Debug, Error)]
pub enum BFileError {
    #[error("unknown sequence id {0:?} (expected one of A119326, A114213, A114212, A114214)")]
    UnknownSequence(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("no records")]
    NoRecords,
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub sequence_id: SequenceId,
    /// Index of the first record.
    pub offset: i64,
    pub records: Vec<(i64, BigUint)>,
}

impl BFile {
    pub fn write_to<W: Write>(&self, mut w: W) -> io::Result<()> {
        for (index, value) in &self.records {
            writeln!(w, "{index} {value}")?;
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("b-file text is ASCII")
    }

    pub fn save(&self, path: &Path) -> Result<(), BFileError> {
        let io_err = |source| BFileError::Io {
            path: path.to_path_buf(),
            source,
        };
        let file = fs::File::create(path).map_err(io_err)?;
        let mut w = io::BufWriter::new(file);
        self.write_to(&mut w).map_err(io_err)?;
        w.flush().map_err(io_err)
    }

    pub fn load(sequence_id: SequenceId, path: &Path) -> Result<BFile, BFileError> {
        let text = fs::read_to_string(path).map_err(|source| BFileError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        BFile::parse(sequence_id, &text)
    }

    /// Parse b-file text. The offset is taken from the first record.
    pub fn parse(sequence_id: SequenceId, text: &str) -> Result<BFile, BFileError> {
        let mut records: Vec<(i64, BigUint)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let err = |message: String| BFileError::Parse { line, message };
            let mut fields = trimmed.split_whitespace();
            let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next())
            else {
                return Err(err(format!(
                    "expected \"<index> <value>\", got {trimmed:?}"
                )));
            };
            let index: i64 = index
                .parse()
                .map_err(|e| err(format!("bad index {index:?}: {e}")))?;
            let value: BigUint = value
                .parse()
                .map_err(|e| err(format!("bad value {value:?}: {e}")))?;
            if let Some(&(prev, _)) = records.last() {
                if index != prev + 1 {
                    return Err(err(format!("index {index} does not follow {prev}")));
                }
            }
            records.push((index, value));
        }
        let offset = records.first().ok_or(BFileError::NoRecords)?.0;
        Ok(BFile {
            sequence_id,
            offset,
            records,
        })
    }
}

/// b-file of `sequence_id` for indices `offset()..=max_index`.
pub fn generate(sequence_id: SequenceId, max_index: u64) -> BFile {
    let offset = sequence_id.offset();
    let records = sequence_id
        .terms()
        .take(max_index as usize + 1)
        .enumerate()
        .map(|(i, v)| (offset + i as i64, v))
        .collect();
    BFile {
        sequence_id,
        offset,
        records,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    /// Index as written in the file.
    pub index: i64,
    /// Recomputed value, or `None` if the index has no local counterpart.
    pub expected: Option<BigUint>,
    pub found: BigUint,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.expected {
            Some(e) => write!(
                f,
                "index {}: expected {e}, found {}",
                self.index, self.found
            ),
            None => write!(
                f,
                "index {}: no term at this index, found {}",
                self.index, self.found
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompareReport {
    pub sequence_id: SequenceId,
    pub checked: usize,
    pub mismatches: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl CompareReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches == 0
    }
}

impl fmt::Display for CompareReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_mismatch {
            None => write!(f, "{}: {} records agree", self.sequence_id, self.checked),
            Some(m) => write!(
                f,
                "{}: {} of {} records differ; first at {m}",
                self.sequence_id, self.mismatches, self.checked
            ),
        }
    }
}

/// Recompute every record of `file`.
///
/// `first_index` is the file index that corresponds to the first local
/// term; pass the sequence's declared OEIS offset when it differs from
/// [`SequenceId::offset`].
pub fn compare(file: &BFile, first_index: i64) -> CompareReport {
    let shift = first_index - file.sequence_id.offset();
    let local = |index: i64| index - shift;
    let max_local = file
        .records
        .iter()
        .map(|&(i, _)| local(i))
        .max()
        .unwrap_or(-1);
    let expected: Vec<BigUint> = if max_local >= file.sequence_id.offset() {
        let count = (max_local - file.sequence_id.offset() + 1) as usize;
        file.sequence_id.terms().take(count).collect()
    } else {
        Vec::new()
    };

    let mut mismatches = 0;
    let mut first_mismatch = None;
    for (index, found) in &file.records {
        let pos = local(*index) - file.sequence_id.offset();
        let want = usize::try_from(pos).ok().and_then(|p| expected.get(p));
        if want != Some(found) {
            mismatches += 1;
            first_mismatch.get_or_insert_with(|| Mismatch {
                index: *index,
                expected: want.cloned(),
                found: found.clone(),
            });
        }
    }
    CompareReport {
        sequence_id: file.sequence_id,
        checked: file.records.len(),
        mismatches,
        first_mismatch,
    }
}
