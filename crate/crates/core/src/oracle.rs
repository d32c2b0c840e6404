//! Brute-force checks that share no code path with the warping engine's
//! incremental profile, plus a Kauffman bracket state sum used to confirm
//! knot types of generated diagrams.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::codes::{gauss_to_pd, GaussCode, Occurrence, Sign, Strand};
use crate::diagram::OrientedDiagram;
use crate::error::OracleError;
use crate::warping::{is_monotone, WarpingProfile};

/// Largest diagram the crossing-change search accepts by default.
pub const MONOTONE_SEARCH_CAP: usize = 16;
/// Largest diagram the bracket state sum accepts (`2^c` states).
pub const BRACKET_CAP: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub min_changes: usize,
    /// Sorted crossing ids whose change gives a monotone diagram.
    pub witness: Vec<usize>,
    pub nodes_searched: u64,
}

/// Search crossing subsets by increasing size, each size in lexicographic
/// order, for the first one whose change makes the diagram monotone.
pub fn min_changes_to_monotone(
    d: &OrientedDiagram,
    budget: usize,
) -> Result<OracleResult, OracleError> {
    min_changes_to_monotone_capped(d, budget, MONOTONE_SEARCH_CAP)
}

pub fn min_changes_to_monotone_capped(
    d: &OrientedDiagram,
    budget: usize,
    cap: usize,
) -> Result<OracleResult, OracleError> {
    let c = d.crossing_count();
    if c > cap {
        return Err(OracleError::CapExceeded { crossings: c, cap });
    }
    let mut nodes = 0u64;
    for size in 0..=budget.min(c) {
        let mut subset: Vec<usize> = (1..=size).collect();
        loop {
            nodes += 1;
            let changed = d.change_crossings(&subset).expect("ids are in range");
            if is_monotone(&changed) {
                return Ok(OracleResult { min_changes: size, witness: subset, nodes_searched: nodes });
            }
            if !next_combination(&mut subset, c) {
                break;
            }
        }
    }
    Err(OracleError::BudgetExceeded { budget })
}

/// Advance `subset` (sorted ids in `1..=n`) to the next combination of the
/// same size in lexicographic order.
fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    for i in (0..k).rev() {
        if subset[i] < n - (k - 1 - i) {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Every base-point degree by its own full traversal.
pub fn profile_bruteforce(d: &OrientedDiagram) -> WarpingProfile {
    let occ = d.occurrences();
    let n = occ.len();
    let c = d.crossing_count();
    if c == 0 {
        return WarpingProfile::new(vec![0]);
    }
    let degrees = (0..n)
        .map(|a| {
            let mut seen = vec![false; c];
            let mut count = 0;
            for i in 0..n {
                let o = occ[(a + i) % n];
                if !std::mem::replace(&mut seen[o.crossing - 1], true) && o.strand == Strand::Under {
                    count += 1;
                }
            }
            count
        })
        .collect();
    WarpingProfile::new(degrees)
}

/// A Laurent polynomial in `A`, zero coefficients dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct BracketPolynomial {
    coeffs: BTreeMap<i64, i64>,
}

impl BracketPolynomial {
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e, k) in terms {
            *coeffs.entry(e).or_insert(0) += k;
        }
        coeffs.retain(|_, k| *k != 0);
        BracketPolynomial { coeffs }
    }

    pub fn one() -> Self {
        Self::from_terms([(0, 1)])
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &k)| (e, k))
    }

    fn mul(&self, other: &Self) -> Self {
        Self::from_terms(
            self.terms()
                .flat_map(|(e1, k1)| other.terms().map(move |(e2, k2)| (e1 + e2, k1 * k2))),
        )
    }

    fn scale(&self, exp: i64, factor: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, k)| (e + exp, k * factor)))
    }

    /// `A -> A^-1`, the bracket of the mirror image.
    pub fn mirror(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, k)| (-e, k)))
    }

    /// Equal to `other` or to its mirror.
    pub fn matches_up_to_mirror(&self, other: &Self) -> bool {
        self == other || *self == other.mirror()
    }

    /// `|V(-1)|`: every exponent of a knot's normalized bracket is a
    /// multiple of 4, and `A^4 = -1` at `t = -1`.
    pub fn determinant(&self) -> i64 {
        self.terms()
            .map(|(e, k)| if (e / 4).rem_euclid(2) == 0 { k } else { -k })
            .sum::<i64>()
            .abs()
    }

    /// Jones polynomial as `(exponent of t, coefficient)` pairs, using
    /// `t = A^-4`. `None` if some exponent is not a multiple of 4.
    pub fn jones(&self) -> Option<Vec<(i64, i64)>> {
        let mut out: Vec<(i64, i64)> = self
            .terms()
            .map(|(e, k)| if e % 4 == 0 { Some((-e / 4, k)) } else { None })
            .collect::<Option<_>>()?;
        out.sort();
        Some(out)
    }
}

impl fmt::Display for BracketPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, k)) in self.terms().enumerate() {
            let sign = if k < 0 { "-" } else if i > 0 { "+" } else { "" };
            if i > 0 {
                f.write_str(" ")?;
            }
            let mag = k.abs();
            match (mag, e) {
                (_, 0) => write!(f, "{sign}{mag}")?,
                (1, _) => write!(f, "{sign}A^{e}")?,
                _ => write!(f, "{sign}{mag}A^{e}")?,
            }
        }
        Ok(())
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Writhe-normalized Kauffman bracket `(-A^3)^-w <D>` with `<O> = 1`.
pub fn kauffman_bracket(d: &OrientedDiagram) -> Result<BracketPolynomial, OracleError> {
    let c = d.crossing_count();
    if c == 0 {
        return Ok(BracketPolynomial::one());
    }
    if c > BRACKET_CAP {
        return Err(OracleError::CapExceeded { crossings: c, cap: BRACKET_CAP });
    }
    let code = d.to_gauss();
    if !code.has_signs() {
        return Err(OracleError::UnknownSigns);
    }
    let pd = gauss_to_pd(&code).map_err(|_| OracleError::UnknownSigns)?;
    let xs = pd.crossings();
    let n = 2 * c;
    // (A-count minus B-count, loop count) -> number of states
    let mut tally: HashMap<(i64, usize), i64> = HashMap::new();
    let mut parent = vec![0; n + 1];
    for state in 0u32..(1u32 << c) {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        let mut loops = n;
        let mut weight = 0i64;
        for (k, &[a, b, cc, dd]) in xs.iter().enumerate() {
            let pairs = if state >> k & 1 == 0 {
                weight += 1;
                [(a, b), (cc, dd)]
            } else {
                weight -= 1;
                [(a, dd), (b, cc)]
            };
            for (x, y) in pairs {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                    loops -= 1;
                }
            }
        }
        *tally.entry((weight, loops)).or_insert(0) += 1;
    }
    let delta = BracketPolynomial::from_terms([(2, -1), (-2, -1)]);
    let max_loops = tally.keys().map(|&(_, l)| l).max().unwrap_or(1);
    let mut delta_pow = vec![BracketPolynomial::one()];
    for i in 1..max_loops {
        let next = delta_pow[i - 1].mul(&delta);
        delta_pow.push(next);
    }
    let mut bracket = BracketPolynomial::default();
    for (&(weight, loops), &count) in &tally {
        let term = delta_pow[loops - 1].scale(weight, count);
        bracket = BracketPolynomial::from_terms(bracket.terms().chain(term.terms()));
    }
    let writhe: i64 = writhe(&code);
    let factor = if writhe % 2 == 0 { 1 } else { -1 };
    Ok(bracket.scale(-3 * writhe, factor))
}

/// Sum of crossing signs; unknown signs count as zero.
pub fn writhe(code: &GaussCode) -> i64 {
    code.tokens()
        .iter()
        .filter(|t| t.strand == Strand::Over)
        .filter_map(|t| t.sign.value())
        .sum()
}

/// A uniformly random pairing of `2c` positions with a random over/under
/// choice per pair. The result is an abstract Gauss code: it need not be
/// planar, and carries no signs.
pub fn random_gauss_code<R: Rng + ?Sized>(c: usize, rng: &mut R) -> GaussCode {
    let mut positions: Vec<usize> = (0..2 * c).collect();
    positions.shuffle(rng);
    let mut tokens = vec![Occurrence::new(1, Strand::Over, Sign::Unknown); 2 * c];
    for (i, pair) in positions.chunks(2).enumerate() {
        let over_first = rng.gen_bool(0.5);
        let (o, u) = if over_first { (pair[0], pair[1]) } else { (pair[1], pair[0]) };
        tokens[o] = Occurrence::new(i + 1, Strand::Over, Sign::Unknown);
        tokens[u] = Occurrence::new(i + 1, Strand::Under, Sign::Unknown);
    }
    GaussCode::new(tokens).expect("random pairing is valid by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::parse_gauss;
    use crate::warping::profile;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn diagram(s: &str) -> OrientedDiagram {
        OrientedDiagram::from_gauss(&parse_gauss(s).unwrap())
    }

    #[test]
    fn combinations_in_order() {
        let mut s = vec![1, 2];
        let mut all = vec![s.clone()];
        while next_combination(&mut s, 4) {
            all.push(s.clone());
        }
        assert_eq!(all, vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]);
        let mut empty: Vec<usize> = vec![];
        assert!(!next_combination(&mut empty, 3));
    }

    #[test]
    fn trefoil_needs_one_change() {
        let r = min_changes_to_monotone(&diagram("O1+U2+O3+U1+O2+U3+"), 3).unwrap();
        assert_eq!(r.min_changes, 1);
        assert_eq!(r.witness, vec![1]);
        let r = min_changes_to_monotone(&OrientedDiagram::empty(), 0).unwrap();
        assert_eq!((r.min_changes, r.witness.len()), (0, 0));
    }

    #[test]
    fn budget_and_cap() {
        let d = diagram("O1+U2+O3+U1+O2+U3+");
        assert_eq!(min_changes_to_monotone(&d, 0), Err(OracleError::BudgetExceeded { budget: 0 }));
        assert_eq!(
            min_changes_to_monotone_capped(&d, 3, 2),
            Err(OracleError::CapExceeded { crossings: 3, cap: 2 })
        );
    }

    #[test]
    fn bruteforce_matches_trefoil() {
        let d = diagram("O1+U2+O3+U1+O2+U3+");
        assert_eq!(profile_bruteforce(&d).degrees(), &[1, 2, 1, 2, 1, 2]);
        assert_eq!(profile_bruteforce(&OrientedDiagram::empty()).degrees(), &[0]);
    }

    #[test]
    fn bruteforce_matches_engine_on_random_codes() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..500 {
            let c = rng.gen_range(0..=10);
            let d = OrientedDiagram::from_gauss(&random_gauss_code(c, &mut rng));
            assert_eq!(profile_bruteforce(&d), profile(&d));
        }
    }

    #[test]
    fn bracket_basics() {
        assert_eq!(kauffman_bracket(&OrientedDiagram::empty()).unwrap(), BracketPolynomial::one());
        assert_eq!(kauffman_bracket(&diagram("O1+U1+")).unwrap(), BracketPolynomial::one());
        assert_eq!(kauffman_bracket(&diagram("O1-U1-")).unwrap(), BracketPolynomial::one());
        assert_eq!(kauffman_bracket(&diagram("O1U1")), Err(OracleError::UnknownSigns));
    }

    #[test]
    fn trefoil_jones() {
        // left-handed trefoil: V = -t^-4 + t^-3 + t^-1
        let left = kauffman_bracket(&diagram("O1-U2-O3-U1-O2-U3-")).unwrap();
        assert_eq!(left.jones().unwrap(), vec![(-4, -1), (-3, 1), (-1, 1)]);
        assert_eq!(left.determinant(), 3);
        let right = kauffman_bracket(&diagram("O1+U2+O3+U1+O2+U3+")).unwrap();
        assert_eq!(right, left.mirror());
        assert_ne!(right, BracketPolynomial::one());
    }

    #[test]
    fn bracket_ignores_base_point() {
        let d = diagram("O1-U2-O3-U1-O2-U3-");
        let b = kauffman_bracket(&d).unwrap();
        for k in 0..6 {
            assert_eq!(kauffman_bracket(&d.rotate(k)).unwrap(), b);
        }
        assert_eq!(kauffman_bracket(&d.reverse()).unwrap(), b);
    }
}
