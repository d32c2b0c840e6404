//! The oriented diagram value and its symmetry and edit operations.
//!
//! Base points sit on edges: base point `a` is the gap just before position
//! `a`, so a diagram with `c` crossings has `2c` base points (one when
//! `c = 0`).

use crate::codes::{GaussCode, Occurrence, Sign};
use crate::error::DiagramError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientedDiagram {
    occurrences: Vec<Occurrence>,
    /// partner[p] is the other position of the crossing at position p.
    partner: Vec<usize>,
}

impl OrientedDiagram {
    pub fn from_gauss(code: &GaussCode) -> Self {
        Self::from_occurrences(code.tokens().to_vec())
    }

    /// Build from a token list already known to satisfy the Gauss pairing
    /// rules (labels `1..=c`, each once over and once under).
    fn from_occurrences(occurrences: Vec<Occurrence>) -> Self {
        let c = occurrences.len() / 2;
        let mut first = vec![usize::MAX; c];
        let mut partner = vec![0; occurrences.len()];
        for (p, o) in occurrences.iter().enumerate() {
            let k = o.crossing - 1;
            if first[k] == usize::MAX {
                first[k] = p;
            } else {
                partner[p] = first[k];
                partner[first[k]] = p;
            }
        }
        OrientedDiagram { occurrences, partner }
    }

    pub fn empty() -> Self {
        Self::from_occurrences(Vec::new())
    }

    pub fn occurrences(&self) -> &[Occurrence] {
        &self.occurrences
    }

    pub fn crossing_count(&self) -> usize {
        self.occurrences.len() / 2
    }

    /// Number of base points: `max(2c, 1)`.
    pub fn base_point_count(&self) -> usize {
        self.occurrences.len().max(1)
    }

    pub fn partner(&self, position: usize) -> usize {
        self.partner[position]
    }

    pub fn to_gauss(&self) -> GaussCode {
        GaussCode::new(self.occurrences.clone()).expect("diagram invariants hold")
    }

    pub fn is_alternating(&self) -> bool {
        let n = self.occurrences.len();
        (0..n).all(|i| self.occurrences[i].strand != self.occurrences[(i + 1) % n].strand)
    }

    /// The same diagram traversed backwards. Position `j` of the result is
    /// position `2c-1-j` of `self`, so base point `a` becomes base point
    /// `(2c - a) mod 2c` and base point 0 stays on the same edge.
    pub fn reverse(&self) -> Self {
        let mut occ = self.occurrences.clone();
        occ.reverse();
        Self::from_occurrences(occ)
    }

    /// Base point of `self.reverse()` lying on the same edge as `a`.
    pub fn reversed_base_point(&self, a: usize) -> usize {
        let n = self.occurrences.len();
        if n == 0 {
            0
        } else {
            (n - a % n) % n
        }
    }

    /// Mirror image: every crossing switched and every known sign negated.
    pub fn mirror(&self) -> Self {
        let occ = self
            .occurrences
            .iter()
            .map(|o| Occurrence { strand: o.strand.flip(), sign: o.sign.negate(), ..*o })
            .collect();
        Self::from_occurrences(occ)
    }

    /// Switch one crossing. The sign becomes unknown: recomputing it would
    /// need planar data that the occurrence sequence does not carry.
    pub fn change_crossing(&self, id: usize) -> Result<Self, DiagramError> {
        self.change_crossings(&[id])
    }

    pub fn change_crossings(&self, ids: &[usize]) -> Result<Self, DiagramError> {
        let c = self.crossing_count();
        let mut flip = vec![false; c];
        for &id in ids {
            if id == 0 || id > c {
                return Err(DiagramError::UnknownCrossing(id));
            }
            flip[id - 1] = !flip[id - 1];
        }
        let occ = self
            .occurrences
            .iter()
            .map(|o| {
                if flip[o.crossing - 1] {
                    Occurrence { strand: o.strand.flip(), sign: Sign::Unknown, ..*o }
                } else {
                    *o
                }
            })
            .collect();
        Ok(Self::from_occurrences(occ))
    }

    /// Cyclic shift: position `j` of the result is position `j + k` of
    /// `self`.
    pub fn rotate(&self, k: i64) -> Self {
        let n = self.occurrences.len();
        if n == 0 {
            return self.clone();
        }
        let shift = k.rem_euclid(n as i64) as usize;
        let mut occ = self.occurrences.clone();
        occ.rotate_left(shift);
        Self::from_occurrences(occ)
    }
}

impl From<&GaussCode> for OrientedDiagram {
    fn from(code: &GaussCode) -> Self {
        Self::from_gauss(code)
    }
}

impl From<GaussCode> for OrientedDiagram {
    fn from(code: GaussCode) -> Self {
        Self::from_gauss(&code)
    }
}

impl std::fmt::Display for OrientedDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for o in &self.occurrences {
            write!(f, "{o}")?;
        }
        Ok(())
    }
}
