use std::fmt;

use serde::{Deserialize, Serialize};

use super::planar::realize_signs;
use super::{strip_comments, GaussCode, Occurrence, Sign, Strand};
use crate::error::CodeError;

/// Dowker-Thistlethwaite code. Entry `i` (0-based) pairs the odd label
/// `2i+1` with the even label `|evens[i]|`; a negative entry means the
/// strand is over at the even-labelled passage.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DtCode {
    evens: Vec<i64>,
}

impl DtCode {
    pub fn new(evens: Vec<i64>) -> Result<Self, CodeError> {
        let c = evens.len();
        let mut seen = vec![false; c];
        for &e in &evens {
            let m = e.unsigned_abs() as usize;
            if m == 0 || m % 2 != 0 {
                return Err(CodeError::structure(format!("{e} is not a nonzero even label")));
            }
            if m > 2 * c {
                return Err(CodeError::structure(format!("label {e} exceeds 2c = {}", 2 * c)));
            }
            if std::mem::replace(&mut seen[m / 2 - 1], true) {
                return Err(CodeError::structure(format!("label {m} is used twice")));
            }
        }
        Ok(DtCode { evens })
    }

    pub fn evens(&self) -> &[i64] {
        &self.evens
    }

    pub fn crossing_count(&self) -> usize {
        self.evens.len()
    }
}

impl fmt::Display for DtCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.evens.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for DtCode {
    type Err = CodeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_dt(s)
    }
}

/// Parse whitespace- (or comma-) separated signed even integers.
pub fn parse_dt(text: &str) -> Result<DtCode, CodeError> {
    let cleaned = strip_comments(text);
    let mut evens = Vec::new();
    let mut offset = 0;
    for piece in cleaned.split_inclusive(|c: char| c.is_whitespace() || c == ',') {
        let start = offset;
        offset += piece.len();
        let word = piece.trim_end_matches(|c: char| c.is_whitespace() || c == ',');
        if word.is_empty() {
            continue;
        }
        let value: i64 = word
            .parse()
            .map_err(|_| CodeError::syntax(start, format!("`{word}` is not an integer")))?;
        if value == 0 || value % 2 != 0 {
            return Err(CodeError::syntax(start, format!("`{word}` is not a nonzero even integer")));
        }
        evens.push(value);
    }
    DtCode::new(evens)
}

/// Expand a DT code into a Gauss code. When the code is realizable on the
/// sphere, crossing signs are recovered from the (unique up to reflection)
/// planar embedding; otherwise they stay unknown.
pub fn dt_to_gauss(code: &DtCode) -> Result<GaussCode, CodeError> {
    let c = code.crossing_count();
    let n = 2 * c;
    // slot p holds the passage with label p+1
    let mut slots: Vec<Option<Occurrence>> = vec![None; n];
    for (i, &e) in code.evens.iter().enumerate() {
        let odd = 2 * i;
        let even = e.unsigned_abs() as usize - 1;
        let (odd_strand, even_strand) = if e > 0 {
            (Strand::Over, Strand::Under)
        } else {
            (Strand::Under, Strand::Over)
        };
        slots[odd] = Some(Occurrence::new(i + 1, odd_strand, Sign::Unknown));
        slots[even] = Some(Occurrence::new(i + 1, even_strand, Sign::Unknown));
    }
    let tokens: Vec<Occurrence> = slots
        .into_iter()
        .map(|s| s.ok_or_else(|| CodeError::structure("DT pairing leaves a label unused")))
        .collect::<Result<_, _>>()?;
    let unsigned = GaussCode::new(tokens)?;
    match realize_signs(&unsigned) {
        Some(signed) => Ok(signed),
        None => Ok(unsigned),
    }
}

/// Encode a Gauss code as a DT code. Every crossing must join an odd and an
/// even position, which holds for all planar knot diagrams. Among all
/// starting points the lexicographically least code is returned.
pub fn gauss_to_dt(code: &GaussCode) -> Result<DtCode, CodeError> {
    let tokens = code.tokens();
    let n = tokens.len();
    let c = n / 2;
    let mut positions = vec![Vec::with_capacity(2); c];
    for (p, t) in tokens.iter().enumerate() {
        positions[t.crossing - 1].push(p);
    }
    if positions.iter().any(|ps| (ps[0] + ps[1]) % 2 == 0) {
        return Err(CodeError::structure(
            "a crossing joins two positions of equal parity; no DT code exists",
        ));
    }
    let mut best: Option<Vec<i64>> = None;
    for shift in 0..n.max(1) {
        if n == 0 {
            break;
        }
        let mut evens = vec![0i64; c];
        for ps in &positions {
            let labels: Vec<usize> = ps.iter().map(|&p| (p + n - shift) % n + 1).collect();
            let (odd, even, even_pos) = if labels[0] % 2 == 1 {
                (labels[0], labels[1], ps[1])
            } else {
                (labels[1], labels[0], ps[0])
            };
            let over = tokens[even_pos].strand == Strand::Over;
            evens[(odd - 1) / 2] = if over { -(even as i64) } else { even as i64 };
        }
        let key = |v: &[i64]| -> (Vec<u64>, Vec<bool>) {
            (v.iter().map(|e| e.unsigned_abs()).collect(), v.iter().map(|e| *e < 0).collect())
        };
        if best.as_ref().map_or(true, |b| key(&evens) < key(b)) {
            best = Some(evens);
        }
    }
    DtCode::new(best.unwrap_or_default())
}
