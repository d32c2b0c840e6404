//! The bundled knot table: named knots with their minimal diagrams, a few
//! non-minimal diagrams and reference values, plus the aggregates `e(K)`,
//! `md(K)` and bounds on the reduced warping sum.

mod verify;

pub use verify::{structural_identities, verify_families, verify_paper, verify_table, Check, VerificationReport};

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::codes::{parse_any, Notation};
use crate::diagram::OrientedDiagram;
use crate::error::TableError;
use crate::warping::summary;

/// Header line of the current table format.
pub const TABLE_HEADER: &str = "warpdeg-knots 1";

/// The table shipped with the crate.
pub const BUNDLED_TABLE: &str = include_str!("../../../../data/knots.tbl");

/// A diagram as written in the table, and the diagram it decodes to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableDiagram {
    pub notation: Notation,
    pub code: String,
    pub diagram: OrientedDiagram,
}

impl TableDiagram {
    pub fn parse(text: &str) -> Result<Self, String> {
        let (prefix, code) = text
            .split_once(':')
            .ok_or_else(|| format!("diagram `{text}` lacks a notation prefix"))?;
        let notation: Notation = prefix.parse()?;
        let gauss = parse_any(code, Some(notation)).map_err(|e| e.to_string())?;
        Ok(Self { notation, code: code.to_string(), diagram: OrientedDiagram::from_gauss(&gauss) })
    }
}

impl std::fmt::Display for TableDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.notation.name(), self.code)
    }
}

/// Reference values. Each is present only when known from the literature.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub e: Option<usize>,
    pub md: Option<usize>,
    pub e_hat: Option<usize>,
    pub ascending: Option<usize>,
    pub unknotting: Option<usize>,
}

impl Expected {
    fn is_empty(&self) -> bool {
        *self == Expected::default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotTableEntry {
    pub name: String,
    pub crossing_number: usize,
    pub prime: bool,
    pub alternating: bool,
    /// `n` when the knot is the twist knot `2 n`.
    pub twist_param: Option<usize>,
    pub minimal_diagrams: Vec<TableDiagram>,
    /// Whether `minimal_diagrams` contains every minimal diagram on the sphere.
    pub minimal_set_complete: bool,
    pub extra_diagrams: Vec<TableDiagram>,
    pub expected: Option<Expected>,
}

impl KnotTableEntry {
    pub fn is_trivial(&self) -> bool {
        self.crossing_number == 0
    }

    /// Check the record-level invariants.
    pub fn validate(&self) -> Result<(), TableError> {
        let fail = |msg: String| Err(TableError::Entry { name: self.name.clone(), msg });
        if self.minimal_diagrams.is_empty() {
            return fail("no minimal diagram".into());
        }
        for d in &self.minimal_diagrams {
            let c = d.diagram.crossing_count();
            if c != self.crossing_number {
                return fail(format!("minimal diagram {d} has {c} crossings, not {}", self.crossing_number));
            }
        }
        for d in &self.extra_diagrams {
            if d.diagram.crossing_count() < self.crossing_number {
                return fail(format!("extra diagram {d} has fewer crossings than the crossing number"));
            }
        }
        if let Some(n) = self.twist_param {
            if n == 0 || self.crossing_number != n + 2 {
                return fail(format!("twist parameter {n} does not match crossing number {}", self.crossing_number));
            }
        }
        if let Some(x) = &self.expected {
            let chain = [x.unknotting, x.ascending, x.md];
            let known: Vec<usize> = chain.iter().flatten().copied().collect();
            if known.windows(2).any(|w| w[0] > w[1]) {
                return fail(format!(
                    "reference values violate u <= a <= md: u={:?} a={:?} md={:?}",
                    x.unknotting, x.ascending, x.md
                ));
            }
        }
        Ok(())
    }

    fn minimal_summaries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.minimal_diagrams.iter().map(|d| {
            let s = summary(&d.diagram).expect("summary identities hold for every diagram");
            (s.d_fwd, s.d_rev)
        })
    }
}

/// Minimum of `e(D)` over the minimal diagrams, and whether that value is
/// known to be `e(K)` rather than an upper bound.
///
/// The value is exact when the minimal set is complete. It is also exact for
/// prime alternating knots, whose minimal diagrams are all reduced
/// alternating and so all have `e = c - 1`, and when it equals 4 for a knot
/// other than the unknot, `3_1` and `4_1`, since those are the only knots
/// with warping sum below 4.
pub fn knot_e(entry: &KnotTableEntry) -> (usize, bool) {
    let value = entry.minimal_summaries().map(|(a, b)| a + b).min().unwrap_or(0);
    let exact = entry.minimal_set_complete
        || (entry.prime && entry.alternating)
        || (value == 4 && entry.crossing_number >= 5);
    (value, exact)
}

/// Minimum of `d` over the minimal diagrams in both orientations. A value
/// of 2 is exact for any knot other than the unknot, `3_1` and `4_1`, as
/// only those have minimal warping degree below 2.
pub fn knot_md(entry: &KnotTableEntry) -> (usize, bool) {
    let value = entry.minimal_summaries().map(|(a, b)| a.min(b)).min().unwrap_or(0);
    let exact = entry.minimal_set_complete || (value == 2 && entry.crossing_number >= 5);
    (value, exact)
}

/// Bounds on the minimum of `e(D)` over all diagrams of the knot. The lower
/// bound is 0 for the unknot, 2 for twist knots and 4 otherwise; the upper
/// bound is the best diagram in the table.
pub fn e_hat_bounds(entry: &KnotTableEntry) -> (usize, usize) {
    let lower = if entry.is_trivial() {
        0
    } else if entry.twist_param.is_some() {
        2
    } else {
        4
    };
    let upper = entry
        .minimal_diagrams
        .iter()
        .chain(&entry.extra_diagrams)
        .map(|d| summary(&d.diagram).expect("summary identities hold for every diagram").e)
        .min()
        .unwrap_or(0);
    (lower, upper)
}

/// A parsed table. Records that fail to parse are kept aside in `rejected`
/// so the rest of the table stays usable.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub entries: Vec<KnotTableEntry>,
    pub rejected: Vec<TableError>,
}

impl Table {
    pub fn bundled() -> Self {
        Self::parse(BUNDLED_TABLE).expect("bundled table has a valid header")
    }

    pub fn load(path: &Path) -> Result<Self, TableError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| TableError::Data { line: 0, msg: format!("{}: {e}", path.display()) })?;
        Self::parse(&text)
    }

    /// Parse the line format. Only a missing or unknown header is fatal.
    pub fn parse(text: &str) -> Result<Self, TableError> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end_matches('\r')));
        match lines.next() {
            Some((_, h)) if h.trim() == TABLE_HEADER => {}
            Some((_, h)) => {
                return Err(TableError::Data { line: 1, msg: format!("expected header `{TABLE_HEADER}`, found `{h}`") })
            }
            None => return Err(TableError::Data { line: 0, msg: "empty table file".into() }),
        }
        let mut table = Table::default();
        for (line, text) in lines {
            if text.trim().is_empty() || text.trim_start().starts_with('#') {
                continue;
            }
            match parse_record(text) {
                Ok(entry) => table.entries.push(entry),
                Err(msg) => table.rejected.push(TableError::Data { line, msg }),
            }
        }
        Ok(table)
    }

    pub fn get(&self, name: &str) -> Option<&KnotTableEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

fn parse_record(text: &str) -> Result<KnotTableEntry, String> {
    let mut name = None;
    let mut c = None;
    let mut prime = None;
    let mut alternating = None;
    let mut complete = None;
    let mut twist = None;
    let mut minimal = Vec::new();
    let mut extra = Vec::new();
    let mut x = Expected::default();

    fn set<T>(slot: &mut Option<T>, key: &str, v: T) -> Result<(), String> {
        if slot.replace(v).is_some() {
            return Err(format!("duplicate field `{key}`"));
        }
        Ok(())
    }
    fn flag(key: &str, v: &str) -> Result<bool, String> {
        match v {
            "yes" => Ok(true),
            "no" => Ok(false),
            _ => Err(format!("field `{key}` must be yes or no, got `{v}`")),
        }
    }
    fn number(key: &str, v: &str) -> Result<usize, String> {
        v.parse().map_err(|_| format!("field `{key}` must be a non-negative integer, got `{v}`"))
    }

    for field in text.split('\t') {
        let (key, value) = field.split_once('=').ok_or_else(|| format!("field `{field}` is not key=value"))?;
        match key {
            "name" => set(&mut name, key, value.to_string())?,
            "c" => set(&mut c, key, number(key, value)?)?,
            "prime" => set(&mut prime, key, flag(key, value)?)?,
            "alternating" => set(&mut alternating, key, flag(key, value)?)?,
            "complete" => set(&mut complete, key, flag(key, value)?)?,
            "twist" => set(&mut twist, key, number(key, value)?)?,
            "min" => minimal.push(TableDiagram::parse(value)?),
            "extra" => extra.push(TableDiagram::parse(value)?),
            "e" => set(&mut x.e, key, number(key, value)?)?,
            "md" => set(&mut x.md, key, number(key, value)?)?,
            "e_hat" => set(&mut x.e_hat, key, number(key, value)?)?,
            "a" => set(&mut x.ascending, key, number(key, value)?)?,
            "u" => set(&mut x.unknotting, key, number(key, value)?)?,
            _ => return Err(format!("unknown field `{key}`")),
        }
    }
    let missing = |k: &str| format!("missing field `{k}`");
    Ok(KnotTableEntry {
        name: name.ok_or_else(|| missing("name"))?,
        crossing_number: c.ok_or_else(|| missing("c"))?,
        prime: prime.ok_or_else(|| missing("prime"))?,
        alternating: alternating.ok_or_else(|| missing("alternating"))?,
        twist_param: twist,
        minimal_diagrams: minimal,
        minimal_set_complete: complete.ok_or_else(|| missing("complete"))?,
        extra_diagrams: extra,
        expected: (!x.is_empty()).then_some(x),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_table_loads_cleanly() {
        let t = Table::bundled();
        assert!(t.rejected.is_empty(), "{:?}", t.rejected);
        assert_eq!(t.entries.len(), 37);
        for e in &t.entries {
            e.validate().unwrap();
        }
    }

    #[test]
    fn aggregates() {
        let t = Table::bundled();
        assert_eq!(knot_e(t.get("3_1").unwrap()), (2, true));
        assert_eq!(knot_md(t.get("3_1").unwrap()), (1, true));
        assert_eq!(knot_md(t.get("6_1").unwrap()), (2, true));
        assert_eq!(knot_md(t.get("7_6").unwrap()), (2, true));
        assert_eq!(knot_e(t.get("8_21").unwrap()).0, 4);
        assert_eq!(knot_e(t.get("granny").unwrap()).0, 4);
        assert_eq!(e_hat_bounds(t.get("6_3").unwrap()), (4, 4));
        assert_eq!(e_hat_bounds(t.get("6_1").unwrap()), (2, 2));
        assert_eq!(e_hat_bounds(t.get("0_1").unwrap()), (0, 0));
    }

    #[test]
    fn six_three_without_its_extra_diagram() {
        let mut e = Table::bundled().get("6_3").unwrap().clone();
        e.extra_diagrams.clear();
        assert_eq!(e_hat_bounds(&e), (4, 5));
    }

    #[test]
    fn malformed_records_are_set_aside() {
        let text = format!(
            "{TABLE_HEADER}\nname=x\tc=3\nname=3_1\tc=3\tprime=yes\talternating=yes\tcomplete=yes\tmin=dt:4 6 2\n\
             name=y\tc=3\tprime=maybe\nname=z\tc=3\tprime=yes\talternating=yes\tcomplete=no\tmin=dt:4 6 3\n"
        );
        let t = Table::parse(&text).unwrap();
        assert_eq!(t.entries.len(), 1);
        let lines: Vec<usize> = t
            .rejected
            .iter()
            .map(|e| match e {
                TableError::Data { line, .. } => *line,
                other => panic!("{other:?}"),
            })
            .collect();
        assert_eq!(lines, vec![2, 4, 5]);
        assert!(Table::parse("knots 0\n").is_err());
    }

    #[test]
    fn invariant_violations() {
        let mut e = Table::bundled().get("5_2").unwrap().clone();
        e.twist_param = Some(4);
        assert!(e.validate().is_err());
        let mut e = Table::bundled().get("5_2").unwrap().clone();
        e.expected.as_mut().unwrap().unknotting = Some(3);
        assert!(e.validate().is_err());
        let mut e = Table::bundled().get("5_2").unwrap().clone();
        e.crossing_number = 6;
        assert!(e.validate().is_err());
    }
}
