//! Parameterized diagram families: twist knots `2 n`, two-bridge knots
//! `p q`, general rational and Montesinos diagrams, and the warping-sum-2
//! diagrams of twist knots.

pub mod tangle;

use serde::{Deserialize, Serialize};

use crate::codes::{GaussCode, Occurrence, Sign, Strand};
use crate::diagram::OrientedDiagram;
use crate::error::FamilyError;
use tangle::Tangle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    Twist,
    Rational,
    OzawaTwist,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<i64>,
}

impl FamilySpec {
    pub fn generate(&self) -> Result<OrientedDiagram, FamilyError> {
        let arity = match self.family {
            Family::Twist | Family::OzawaTwist => 1,
            Family::Rational => 2,
        };
        if self.params.len() != arity {
            return Err(FamilyError::InvalidParam(format!(
                "{:?} takes {arity} parameter(s), got {}",
                self.family,
                self.params.len()
            )));
        }
        match self.family {
            Family::Twist => twist_minimal(self.params[0]),
            Family::Rational => rational_pq(self.params[0], self.params[1]),
            Family::OzawaTwist => ozawa_twist(self.params[0]),
        }
    }
}

fn positive(name: &str, v: i64) -> Result<(), FamilyError> {
    if v < 1 {
        return Err(FamilyError::InvalidParam(format!("{name} must be at least 1, got {v}")));
    }
    Ok(())
}

/// The reduced alternating diagram `C(2, n)`: a two-crossing clasp and `n`
/// half-twists. It is the only minimal diagram of the twist knot.
pub fn twist_minimal(n: i64) -> Result<OrientedDiagram, FamilyError> {
    positive("n", n)?;
    rational_pq(2, n)
}

/// Alternating two-bridge diagram with `p` vertical then `q` horizontal
/// half-twists, closed by the numerator. The closure is a knot exactly when
/// `p * q` is even; otherwise it is a two-component link and
/// [`FamilyError::NotAKnot`] is returned.
pub fn rational_pq(p: i64, q: i64) -> Result<OrientedDiagram, FamilyError> {
    positive("p", p)?;
    positive("q", q)?;
    rational_knot(&[p, q])
}

/// Numerator closure of the rational tangle with Conway notation `terms`
/// (the last term horizontal). Terms may be negative. All-positive terms
/// give a reduced alternating diagram.
pub fn rational_knot(terms: &[i64]) -> Result<OrientedDiagram, FamilyError> {
    rational_knot_flyped(terms, &[])
}

/// As [`rational_knot`], with `moved[i]` crossings of term `i` drawn on the
/// far side of the tangle built so far. Each such move is a flype, so the
/// knot type and crossing number are unchanged while the diagram (and its
/// warping degrees) may differ.
pub fn rational_knot_flyped(terms: &[i64], moved: &[usize]) -> Result<OrientedDiagram, FamilyError> {
    if terms.is_empty() || terms.contains(&0) {
        return Err(FamilyError::InvalidParam(format!("bad Conway notation {terms:?}")));
    }
    Tangle::rational(terms, false, moved)
        .numerator()
        .ok_or_else(|| FamilyError::NotAKnot(terms.to_vec()))
}

/// Montesinos diagram `(t1, t2, ..., tk)`: rational tangles, each rotated so
/// its last term is vertical, summed left to right and closed by the
/// numerator. Pretzel knots are the case of single-term tangles.
pub fn montesinos(tangles: &[Vec<i64>]) -> Result<OrientedDiagram, FamilyError> {
    if tangles.is_empty() || tangles.iter().any(|t| t.is_empty() || t.contains(&0)) {
        return Err(FamilyError::InvalidParam(format!("bad tangle list {tangles:?}")));
    }
    let sum = tangles[1..].iter().fold(Tangle::rational(&tangles[0], true, &[]), |acc, t| {
        acc.add(&Tangle::rational(t, true, &[]))
    });
    sum.numerator()
        .ok_or_else(|| FamilyError::NotAKnot(tangles.iter().flatten().copied().collect()))
}

/// A `(2n+1)`-crossing diagram of the twist knot `2 n` with
/// `d(D) = d(-D) = 1`.
///
/// The knot is drawn as two arcs sharing their endpoints. The first arc
/// runs straight through crossings `1, 2, ..., 2n+1`; the second returns
/// across it, its `i`-th crossing being `i` for odd `i` and `2n+2-i` for
/// even `i`, so it snakes through nested half-circles on alternate sides.
/// The first arc is over everywhere except the middle crossing `n+1`, so
/// the diagram is descending from the start of the first arc apart from
/// that one crossing, and the same holds backwards from the end of the
/// second arc.
pub fn ozawa_twist(n: i64) -> Result<OrientedDiagram, FamilyError> {
    positive("n", n)?;
    let n = n as usize;
    let m = 2 * n + 1;
    let middle = n + 1;
    let second: Vec<usize> = (1..=m).map(|i| if i % 2 == 1 { i } else { 2 * n + 2 - i }).collect();
    // the second arc crosses upward at odd steps and downward at even ones
    let mut sign = vec![Sign::Unknown; m + 1];
    for (i, &v) in second.iter().enumerate() {
        let upward = i % 2 == 0;
        sign[v] = if upward == (v != middle) { Sign::Plus } else { Sign::Minus };
    }
    let first_arc = (1..=m).map(|v| {
        let strand = if v == middle { Strand::Under } else { Strand::Over };
        Occurrence::new(v, strand, sign[v])
    });
    let second_arc = second.iter().map(|&v| {
        let strand = if v == middle { Strand::Over } else { Strand::Under };
        Occurrence::new(v, strand, sign[v])
    });
    let code = GaussCode::new(first_arc.chain(second_arc).collect())
        .expect("two-arc construction pairs every crossing");
    Ok(OrientedDiagram::from_gauss(&code))
}
