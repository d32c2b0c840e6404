//! Warping degrees of oriented diagrams.
//!
//! From base point `a`, a crossing is a warping crossing when it is first
//! met on its under-strand. `d_a(D)` counts those crossings; the warping
//! degree is `d(D) = min_a d_a(D)` and the warping sum is
//! `e(D) = d(D) + d(-D)`.

use serde::{Deserialize, Serialize};

use crate::codes::Strand;
use crate::diagram::OrientedDiagram;
use crate::error::WarpingError;

/// `d_a(D)` for every base point `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WarpingProfile {
    degrees: Vec<usize>,
}

impl WarpingProfile {
    pub fn new(degrees: Vec<usize>) -> Self {
        WarpingProfile { degrees }
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn min(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn max(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn span(&self) -> usize {
        self.max() - self.min()
    }

    /// Sorted copy, for comparisons that ignore the choice of base point.
    pub fn multiset(&self) -> Vec<usize> {
        let mut v = self.degrees.clone();
        v.sort_unstable();
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WarpingSummary {
    pub c: usize,
    pub d_fwd: usize,
    pub d_rev: usize,
    pub e: usize,
    pub spn: usize,
    /// `polynomial[k]` is the number of base points of degree `k`.
    pub polynomial: Vec<usize>,
}

/// One traversal from base point 0, then one step per position: moving the
/// base point past a passage turns it from first-met into last-met, so the
/// count drops by one for an under-passage and rises by one for an
/// over-passage.
pub fn profile(d: &OrientedDiagram) -> WarpingProfile {
    let occ = d.occurrences();
    let c = d.crossing_count();
    if c == 0 {
        return WarpingProfile::new(vec![0]);
    }
    let mut seen = vec![false; c];
    let mut start = 0;
    for o in occ {
        let k = o.crossing - 1;
        if !seen[k] {
            seen[k] = true;
            if o.strand == Strand::Under {
                start += 1;
            }
        }
    }
    let mut degrees = Vec::with_capacity(occ.len());
    let mut cur = start;
    degrees.push(cur);
    for o in &occ[..occ.len() - 1] {
        match o.strand {
            Strand::Under => cur -= 1,
            Strand::Over => cur += 1,
        }
        degrees.push(cur);
    }
    WarpingProfile::new(degrees)
}

pub fn warping_degree(d: &OrientedDiagram) -> usize {
    profile(d).min()
}

/// Whether some base point meets every crossing on its over-strand first.
pub fn is_monotone(d: &OrientedDiagram) -> bool {
    warping_degree(d) == 0
}

pub fn warping_polynomial(d: &OrientedDiagram) -> Vec<usize> {
    polynomial_of(&profile(d), d.crossing_count())
}

fn polynomial_of(p: &WarpingProfile, c: usize) -> Vec<usize> {
    let mut coeffs = vec![0; c + 1];
    for &k in p.degrees() {
        coeffs[k] += 1;
    }
    coeffs
}

/// Everything derived from the profile. `d(-D)` comes from its own
/// traversal of the reversed diagram and is checked against `c - max`, and
/// the span against `c - e`.
pub fn summary(d: &OrientedDiagram) -> Result<WarpingSummary, WarpingError> {
    let c = d.crossing_count();
    let fwd = profile(d);
    let d_fwd = fwd.min();
    let d_rev = warping_degree(&d.reverse());
    if d_rev != c - fwd.max() {
        return Err(WarpingError::InternalInconsistency(format!(
            "d(-D) = {d_rev} but c - max profile = {}",
            c - fwd.max()
        )));
    }
    let e = d_fwd + d_rev;
    let spn = fwd.span();
    if spn + e != c {
        return Err(WarpingError::InternalInconsistency(format!(
            "spn = {spn} but c - e = {}",
            c as i64 - e as i64
        )));
    }
    Ok(WarpingSummary { c, d_fwd, d_rev, e, spn, polynomial: polynomial_of(&fwd, c) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::parse_gauss;

    fn diagram(s: &str) -> OrientedDiagram {
        OrientedDiagram::from_gauss(&parse_gauss(s).unwrap())
    }

    #[test]
    fn trefoil_profile() {
        let d = diagram("O1+U2+O3+U1+O2+U3+");
        assert_eq!(profile(&d).degrees(), &[1, 2, 1, 2, 1, 2]);
        assert_eq!(warping_degree(&d), 1);
        assert!(!is_monotone(&d));
        assert_eq!(warping_polynomial(&d), vec![0, 3, 3, 0]);
        let s = summary(&d).unwrap();
        assert_eq!((s.c, s.d_fwd, s.d_rev, s.e, s.spn), (3, 1, 1, 2, 1));
        assert_eq!(profile(&d.reverse()).multiset(), vec![1, 1, 1, 2, 2, 2]);
    }

    #[test]
    fn zero_crossings() {
        let d = OrientedDiagram::empty();
        assert_eq!(profile(&d).degrees(), &[0]);
        assert_eq!(warping_polynomial(&d), vec![1]);
        assert!(is_monotone(&d));
        let s = summary(&d).unwrap();
        assert_eq!((s.c, s.d_fwd, s.d_rev, s.e, s.spn), (0, 0, 0, 0, 0));
    }

    #[test]
    fn descending_unknot() {
        let d = diagram("O1 O2 O3 U1 U2 U3");
        assert!(is_monotone(&d));
        assert_eq!(profile(&d).degrees()[0], 0);
    }

    #[test]
    fn figure_eight() {
        let d = diagram("O1U2O3U1O4U3O2U4");
        let s = summary(&d).unwrap();
        assert_eq!(s.e, 3);
        assert_eq!(s.spn, 1);
        let mut pair = [s.d_fwd, s.d_rev];
        pair.sort();
        assert_eq!(pair, [1, 2]);
    }

    #[test]
    fn kink_profile() {
        let d = diagram("O1U1");
        assert_eq!(profile(&d).degrees(), &[0, 1]);
        assert_eq!(summary(&d).unwrap().e, 0);
    }
}
