use std::fmt;

use serde::{Deserialize, Serialize};

use super::{strip_comments, Occurrence, Sign, Strand};
use crate::error::CodeError;

/// A validated Gauss code: the crossings met along the knot, in order, with
/// the strand (over/under) and optional crossing sign of each passage.
///
/// Labels are always `1..=c`, numbered by first appearance.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussCode {
    tokens: Vec<Occurrence>,
}

impl GaussCode {
    /// Validate a token sequence and renumber its labels by first appearance.
    pub fn new(tokens: Vec<Occurrence>) -> Result<Self, CodeError> {
        if tokens.len() % 2 != 0 {
            return Err(CodeError::structure(format!(
                "odd number of tokens ({})",
                tokens.len()
            )));
        }
        let mut order: Vec<usize> = Vec::new();
        let mut seen: std::collections::HashMap<usize, (usize, Occurrence)> =
            std::collections::HashMap::new();
        for tok in &tokens {
            if tok.crossing == 0 {
                return Err(CodeError::structure("crossing labels must be positive"));
            }
            let entry = seen.entry(tok.crossing).or_insert_with(|| {
                order.push(tok.crossing);
                (0, *tok)
            });
            entry.0 += 1;
            if entry.0 == 2 {
                let first = entry.1;
                if first.strand == tok.strand {
                    return Err(CodeError::structure(format!(
                        "crossing {} is passed {} twice",
                        tok.crossing,
                        if tok.strand == Strand::Over { "over" } else { "under" }
                    )));
                }
                if first.sign != tok.sign {
                    return Err(CodeError::structure(format!(
                        "crossing {} carries mismatched signs",
                        tok.crossing
                    )));
                }
            }
        }
        for label in &order {
            let count = seen[label].0;
            if count != 2 {
                return Err(CodeError::structure(format!(
                    "crossing {label} appears {count} time(s), expected 2"
                )));
            }
        }
        let relabel: std::collections::HashMap<usize, usize> =
            order.iter().enumerate().map(|(i, &l)| (l, i + 1)).collect();
        let tokens = tokens
            .into_iter()
            .map(|t| Occurrence { crossing: relabel[&t.crossing], ..t })
            .collect();
        Ok(GaussCode { tokens })
    }

    pub fn empty() -> Self {
        GaussCode { tokens: Vec::new() }
    }

    pub fn tokens(&self) -> &[Occurrence] {
        &self.tokens
    }

    pub fn into_tokens(self) -> Vec<Occurrence> {
        self.tokens
    }

    pub fn crossing_count(&self) -> usize {
        self.tokens.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// True when every crossing carries a known sign.
    pub fn has_signs(&self) -> bool {
        self.tokens.iter().all(|t| t.sign != Sign::Unknown)
    }

    /// Strands alternate over/under all the way around (vacuously true for
    /// the empty code).
    pub fn is_alternating(&self) -> bool {
        let n = self.tokens.len();
        (0..n).all(|i| self.tokens[i].strand != self.tokens[(i + 1) % n].strand)
    }

    /// Canonical representative: among all cyclic rotations, each relabelled
    /// by first appearance, the lexicographically least token sequence.
    pub fn canonical(&self) -> GaussCode {
        let n = self.tokens.len();
        let mut best: Option<Vec<Occurrence>> = None;
        for shift in 0..n {
            let rotated: Vec<Occurrence> =
                (0..n).map(|i| self.tokens[(i + shift) % n]).collect();
            let candidate = GaussCode::new(rotated)
                .expect("rotation preserves validity")
                .tokens;
            let better = match &best {
                None => true,
                Some(b) => token_key(&candidate) < token_key(b),
            };
            if better {
                best = Some(candidate);
            }
        }
        GaussCode { tokens: best.unwrap_or_default() }
    }
}

fn token_key(tokens: &[Occurrence]) -> Vec<(Strand, usize, Sign)> {
    tokens.iter().map(|t| (t.strand, t.crossing, t.sign)).collect()
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.tokens {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for GaussCode {
    type Err = CodeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_gauss(s)
    }
}

/// Parse tokens of the form `O3+`, `u12`, `U4-`, separated by whitespace,
/// commas, or nothing at all.
pub fn parse_gauss(text: &str) -> Result<GaussCode, CodeError> {
    let cleaned = strip_comments(text);
    let bytes = cleaned.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if b.is_ascii_whitespace() || b == b',' {
            i += 1;
            continue;
        }
        let strand = match b.to_ascii_uppercase() {
            b'O' => Strand::Over,
            b'U' => Strand::Under,
            _ => {
                return Err(CodeError::syntax(
                    i,
                    format!("expected `O` or `U`, found `{}`", char_at(&cleaned, i)),
                ))
            }
        };
        let start = i;
        i += 1;
        let digits = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if i == digits {
            return Err(CodeError::syntax(start, "missing crossing label"));
        }
        let crossing: usize = cleaned[digits..i]
            .parse()
            .map_err(|_| CodeError::syntax(digits, "crossing label out of range"))?;
        let sign = match bytes.get(i) {
            Some(b'+') => {
                i += 1;
                Sign::Plus
            }
            Some(b'-') => {
                i += 1;
                Sign::Minus
            }
            _ => Sign::Unknown,
        };
        if let Some(&next) = bytes.get(i) {
            if !(next.is_ascii_whitespace() || next == b',' || matches!(next.to_ascii_uppercase(), b'O' | b'U')) {
                return Err(CodeError::syntax(
                    i,
                    format!("unexpected `{}` after token", char_at(&cleaned, i)),
                ));
            }
        }
        tokens.push(Occurrence { crossing, strand, sign });
    }
    GaussCode::new(tokens)
}

fn char_at(s: &str, i: usize) -> char {
    s[i..].chars().next().unwrap_or('?')
}
