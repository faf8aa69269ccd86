//! Report persistence: JSON-lines records and CSV summaries.
//!
//! Floats are always written with 17 significant digits (`{:.16e}`), which
//! is enough for every value to re-parse bit-identically, so report files
//! can be re-thresholded offline without recomputation.

use std::io::{self, Write};

use serde::Serialize;

use crate::bounds::BoundReport;
use crate::error::Result;
use crate::harness::ScanSummary;

/// Header of the summary CSV.
pub const SUMMARY_CSV_HEADER: &str =
    "conjecture_id,n,k,corpus_size,violations,equalities,extremal_graph6,extremal_value";

/// serde_json formatter writing every f64 with 17 significant digits.
struct SigDigits;

impl serde_json::ser::Formatter for SigDigits {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serializes one value as a single JSON line (without the newline).
pub fn to_json_line<T: Serialize>(value: &T) -> Result<String> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SigDigits);
    value.serialize(&mut ser).map_err(io::Error::from)?;
    Ok(String::from_utf8(buf).expect("serializer emits UTF-8"))
}

/// Writes reports as JSON lines in schema order.
pub fn write_jsonl<W: Write>(writer: W, reports: &[BoundReport]) -> Result<()> {
    write_jsonl_records(writer, reports)
}

/// Writes any serializable records as JSON lines.
pub fn write_jsonl_records<W: Write, T: Serialize>(mut writer: W, records: &[T]) -> Result<()> {
    for record in records {
        writeln!(writer, "{}", to_json_line(record)?)?;
    }
    Ok(())
}

/// Writes scan summaries under [`SUMMARY_CSV_HEADER`]. graph6 strings use
/// only the bytes `63..=126`, so no CSV quoting is ever needed; absent
/// values render as empty cells.
pub fn write_summary_csv<W: Write>(mut writer: W, summaries: &[ScanSummary]) -> Result<()> {
    writeln!(writer, "{SUMMARY_CSV_HEADER}")?;
    for s in summaries {
        let n = s.n.map(|v| v.to_string()).unwrap_or_default();
        let k = s.k.map(|v| v.to_string()).unwrap_or_default();
        let (extremal_graph6, extremal_value) = match &s.extremal {
            Some((g6, value)) => (g6.clone(), format!("{value:.16e}")),
            None => (String::new(), String::new()),
        };
        writeln!(
            writer,
            "{},{},{},{},{},{},{},{}",
            s.conjecture_id,
            n,
            k,
            s.corpus_size,
            s.violations.len(),
            s.equality_witnesses.len(),
            extremal_graph6,
            extremal_value,
        )?;
    }
    Ok(())
}
