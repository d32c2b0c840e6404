//! Records mode: one JSON object per line, tagged by `kind`.

use serde::{Deserialize, Serialize};
use warpdeg::table::Check;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Record {
    Analysis(AnalysisRecord),
    Oracle(OracleRecord),
    Diagram(DiagramRecord),
    Conversion(ConversionRecord),
    Check(Check),
    Verdict(VerdictRecord),
    Error(ErrorRecord),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisRecord {
    /// Input line, for batch runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    pub code: String,
    pub c: usize,
    pub d_fwd: usize,
    pub d_rev: usize,
    pub e: usize,
    pub spn: usize,
    pub profile: Vec<usize>,
    pub polynomial: Vec<usize>,
    pub monotone: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRecord {
    pub code: String,
    /// `D` or `-D`.
    pub orientation: String,
    pub min_changes: usize,
    pub witness: Vec<usize>,
    pub nodes_searched: u64,
    pub warping_degree: usize,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramRecord {
    pub family: String,
    pub params: Vec<i64>,
    pub c: usize,
    pub notation: String,
    pub code: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConversionRecord {
    pub from: String,
    pub to: String,
    pub code: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub passed: bool,
    pub checks: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    pub message: String,
}

impl Record {
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }
}

/// Read records-mode output back. Blank lines are skipped; the error names
/// the first line that is not a record.
pub fn read_records(text: &str) -> Result<Vec<Record>, String> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| serde_json::from_str(l).map_err(|e| format!("line {}: {e}", i + 1)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let recs = vec![
            Record::Verdict(VerdictRecord { passed: true, checks: 3, failed: 0 }),
            Record::Error(ErrorRecord { line: Some(2), message: "bad".into() }),
        ];
        let text: String = recs.iter().map(|r| r.to_line() + "\n").collect();
        assert!(text.starts_with("{\"kind\":\"verdict\""));
        assert_eq!(read_records(&text).unwrap(), recs);
        assert!(read_records("{\"kind\":\"nope\"}").is_err());
    }
}
