//! Text notations for knot diagrams: Gauss, Dowker-Thistlethwaite and
//! planar-diagram codes, with conversions between them.
//!
//! All parsers accept LF or CRLF line endings, arbitrary whitespace and
//! `#` comments running to the end of the line.

mod dt;
mod gauss;
mod pd;
pub(crate) mod planar;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use dt::{dt_to_gauss, gauss_to_dt, parse_dt, DtCode};
pub use gauss::{parse_gauss, GaussCode};
pub use pd::{gauss_to_pd, parse_pd, pd_to_gauss, PdCode};
pub use planar::{is_planar, realize_signs};

use crate::error::CodeError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Strand {
    Over,
    Under,
}

impl Strand {
    pub fn flip(self) -> Self {
        match self {
            Strand::Over => Strand::Under,
            Strand::Under => Strand::Over,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Strand::Over => 'O',
            Strand::Under => 'U',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
    Unknown,
}

impl Sign {
    pub fn negate(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::Unknown => Sign::Unknown,
        }
    }

    /// `+1` / `-1`, or `None` for an unknown sign.
    pub fn value(self) -> Option<i64> {
        match self {
            Sign::Plus => Some(1),
            Sign::Minus => Some(-1),
            Sign::Unknown => None,
        }
    }

    pub fn from_value(v: i64) -> Self {
        if v > 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// One passage through a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Occurrence {
    /// 1-based crossing label.
    pub crossing: usize,
    pub strand: Strand,
    pub sign: Sign,
}

impl Occurrence {
    pub fn new(crossing: usize, strand: Strand, sign: Sign) -> Self {
        Occurrence { crossing, strand, sign }
    }
}

impl fmt::Display for Occurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.strand.letter(), self.crossing)?;
        match self.sign {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
            Sign::Unknown => Ok(()),
        }
    }
}

/// Notation names accepted by the converters and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Notation {
    Gauss,
    Dt,
    Pd,
}

impl Notation {
    /// Guess the notation of a code: a leading `O`/`U` means Gauss, a leading
    /// `X`, `P` or `[` means PD, and a leading digit or minus sign means DT.
    /// Empty input is ambiguous and yields `None`.
    pub fn detect(text: &str) -> Option<Notation> {
        let cleaned = strip_comments(text);
        let first = cleaned.trim_start().chars().next()?;
        match first.to_ascii_uppercase() {
            'O' | 'U' => Some(Notation::Gauss),
            'X' | '[' | 'P' => Some(Notation::Pd),
            c if c.is_ascii_digit() || c == '-' => Some(Notation::Dt),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Notation::Gauss => "gauss",
            Notation::Dt => "dt",
            Notation::Pd => "pd",
        }
    }
}

impl std::str::FromStr for Notation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "gauss" => Ok(Notation::Gauss),
            "dt" => Ok(Notation::Dt),
            "pd" => Ok(Notation::Pd),
            other => Err(format!("unknown notation `{other}`")),
        }
    }
}

/// Parse `text` in the given notation (or auto-detected) and convert it to a
/// Gauss code.
pub fn parse_any(text: &str, notation: Option<Notation>) -> Result<GaussCode, CodeError> {
    let notation = match notation.or_else(|| Notation::detect(text)) {
        Some(n) => n,
        None if strip_comments(text).trim().is_empty() => Notation::Gauss,
        None => return Err(CodeError::syntax(0, "cannot detect the notation of this code")),
    };
    match notation {
        Notation::Gauss => parse_gauss(text),
        Notation::Dt => dt_to_gauss(&parse_dt(text)?),
        Notation::Pd => pd_to_gauss(&parse_pd(text)?),
    }
}

/// Blank out `#` comments while keeping byte offsets stable for error messages.
pub(crate) fn strip_comments(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut in_comment = false;
    for ch in text.chars() {
        match ch {
            '#' => {
                in_comment = true;
                out.push(' ');
            }
            '\n' => {
                in_comment = false;
                out.push('\n');
            }
            _ if in_comment => out.extend(std::iter::repeat(' ').take(ch.len_utf8())),
            _ => out.push(ch),
        }
    }
    out
}
