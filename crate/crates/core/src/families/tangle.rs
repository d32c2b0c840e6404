//! Unoriented four-ended tangle diagrams and their closures.
//!
//! A crossing stores the edge at each of its corners in counterclockwise
//! order `[SW, SE, NE, NW]`. A *positive* crossing (fraction `+1`) has its
//! over-strand on the SW-NE diagonal. Horizontal twists act on the east
//! (or west) ends, vertical twists on the south (or north) ends, so that
//! twisting keeps rational fractions in the usual form: a horizontal twist
//! maps `t` to `t + 1`, a vertical twist maps `t` to `1 / (1/t + 1)`.

use crate::codes::{GaussCode, Occurrence, Sign, Strand};
use crate::diagram::OrientedDiagram;

const SW: usize = 0;
const SE: usize = 1;
const NE: usize = 2;
const NW: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    East,
    West,
    South,
    North,
}

#[derive(Debug, Clone)]
struct RawCrossing {
    corners: [usize; 4],
    over_sw_ne: bool,
}

#[derive(Debug, Clone)]
pub struct Tangle {
    crossings: Vec<RawCrossing>,
    nw: usize,
    ne: usize,
    sw: usize,
    se: usize,
    next_edge: usize,
    /// Edge identifications made by sums and closures.
    links: Vec<(usize, usize)>,
}

impl Tangle {
    /// Two horizontal arcs (`=`), fraction 0.
    pub fn zero() -> Self {
        Tangle { crossings: Vec::new(), nw: 0, ne: 0, sw: 1, se: 1, next_edge: 2, links: Vec::new() }
    }

    /// Two vertical arcs (`||`), fraction infinity.
    pub fn infinity() -> Self {
        Tangle { crossings: Vec::new(), nw: 0, sw: 0, ne: 1, se: 1, next_edge: 2, links: Vec::new() }
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    fn fresh(&mut self) -> usize {
        self.next_edge += 1;
        self.next_edge - 1
    }

    /// Add one crossing on `side`. `positive` picks the SW-NE over-strand.
    pub fn twist(&mut self, side: Side, positive: bool) -> &mut Self {
        let (a, b) = (self.fresh(), self.fresh());
        let mut corners = [0; 4];
        match side {
            Side::East => {
                corners[NW] = self.ne;
                corners[SW] = self.se;
                corners[NE] = a;
                corners[SE] = b;
                self.ne = a;
                self.se = b;
            }
            Side::West => {
                corners[NE] = self.nw;
                corners[SE] = self.sw;
                corners[NW] = a;
                corners[SW] = b;
                self.nw = a;
                self.sw = b;
            }
            Side::South => {
                corners[NW] = self.sw;
                corners[NE] = self.se;
                corners[SW] = a;
                corners[SE] = b;
                self.sw = a;
                self.se = b;
            }
            Side::North => {
                corners[SW] = self.nw;
                corners[SE] = self.ne;
                corners[NW] = a;
                corners[NE] = b;
                self.nw = a;
                self.ne = b;
            }
        }
        self.crossings.push(RawCrossing { corners, over_sw_ne: positive });
        self
    }

    /// `|count|` twists on `side`, positive when `count > 0`.
    pub fn twists(&mut self, side: Side, count: i64) -> &mut Self {
        for _ in 0..count.unsigned_abs() {
            self.twist(side, count > 0);
        }
        self
    }

    /// Rational tangle for Conway notation `a1 a2 ... ak`: the last term is
    /// horizontal and the terms alternate backwards from there. When
    /// `vertical_last` is set the roles swap, giving the tangle with the
    /// reciprocal fraction. `moved[i]` crossings of term `i` go on the
    /// opposite side (west instead of east, north instead of south), which
    /// is a flype of the standard picture.
    pub fn rational(terms: &[i64], vertical_last: bool, moved: &[usize]) -> Self {
        let k = terms.len();
        let first_horizontal = (k % 2 == 1) != vertical_last;
        let mut t = if first_horizontal { Tangle::zero() } else { Tangle::infinity() };
        for (i, &a) in terms.iter().enumerate() {
            let horizontal = (i % 2 == 0) == first_horizontal;
            let m = moved.get(i).copied().unwrap_or(0).min(a.unsigned_abs() as usize) as i64;
            let rest = a.abs() - m;
            let (main, other) = if horizontal { (Side::East, Side::West) } else { (Side::South, Side::North) };
            t.twists(main, rest * a.signum());
            t.twists(other, m * a.signum());
        }
        t
    }

    /// Horizontal sum: `self`'s east ends joined to `other`'s west ends.
    pub fn add(mut self, other: &Tangle) -> Self {
        let off = self.next_edge;
        for x in &other.crossings {
            let mut corners = x.corners;
            for e in corners.iter_mut() {
                *e += off;
            }
            self.crossings.push(RawCrossing { corners, over_sw_ne: x.over_sw_ne });
        }
        self.links.extend(other.links.iter().map(|&(a, b)| (a + off, b + off)));
        self.links.push((self.ne, other.nw + off));
        self.links.push((self.se, other.sw + off));
        self.ne = other.ne + off;
        self.se = other.se + off;
        self.next_edge += other.next_edge;
        self
    }

    /// Numerator closure (join NW-NE and SW-SE).
    pub fn numerator(&self) -> Option<OrientedDiagram> {
        let mut links = self.links.clone();
        links.push((self.nw, self.ne));
        links.push((self.sw, self.se));
        close(&self.crossings, self.next_edge, &links)
    }

    /// Denominator closure (join NW-SW and NE-SE).
    pub fn denominator(&self) -> Option<OrientedDiagram> {
        let mut links = self.links.clone();
        links.push((self.nw, self.sw));
        links.push((self.ne, self.se));
        close(&self.crossings, self.next_edge, &links)
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Corner direction vectors (unnormalized) for SW, SE, NE, NW.
const CORNER: [(i32, i32); 4] = [(-1, -1), (1, -1), (1, 1), (-1, 1)];

/// Orient the closed diagram by walking it; `None` unless it is a single
/// closed curve.
fn close(crossings: &[RawCrossing], edges: usize, links: &[(usize, usize)]) -> Option<OrientedDiagram> {
    let mut parent: Vec<usize> = (0..edges).collect();
    for &(a, b) in links {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let mut ends: std::collections::HashMap<usize, Vec<(usize, usize)>> = Default::default();
    for (k, x) in crossings.iter().enumerate() {
        for (s, &e) in x.corners.iter().enumerate() {
            ends.entry(find(&mut parent, e)).or_default().push((k, s));
        }
    }
    let mut roots: Vec<usize> = (0..edges).map(|e| find(&mut parent, e)).collect();
    roots.sort_unstable();
    roots.dedup();
    if crossings.is_empty() {
        return (roots.len() == 1).then(OrientedDiagram::empty);
    }
    // every edge class must touch crossings, otherwise it is a free loop
    if roots.iter().any(|r| !ends.contains_key(r)) {
        return None;
    }
    let c = crossings.len();
    let mut passages: Vec<(usize, usize)> = Vec::with_capacity(2 * c);
    let (mut k, mut s) = (0usize, SW);
    loop {
        passages.push((k, s));
        let out = (s + 2) % 4;
        let e = find(&mut parent, crossings[k].corners[out]);
        let &(k2, s2) = ends[&e].iter().find(|&&end| end != (k, out))?;
        if (k2, s2) == (0, SW) {
            break;
        }
        if passages.len() > 2 * c {
            return None;
        }
        k = k2;
        s = s2;
    }
    if passages.len() != 2 * c {
        return None;
    }
    // travel direction through each crossing, per strand
    let mut dir = vec![[(0, 0); 2]; c];
    for &(k, s) in &passages {
        let over = (s % 2 == 0) == crossings[k].over_sw_ne;
        let (x, y) = CORNER[s];
        dir[k][usize::from(!over)] = (-x, -y);
    }
    let tokens: Vec<Occurrence> = passages
        .iter()
        .map(|&(k, s)| {
            let over = (s % 2 == 0) == crossings[k].over_sw_ne;
            let (o, u) = (dir[k][0], dir[k][1]);
            let cross = o.0 * u.1 - o.1 * u.0;
            Occurrence::new(
                k + 1,
                if over { Strand::Over } else { Strand::Under },
                if cross > 0 { Sign::Plus } else { Sign::Minus },
            )
        })
        .collect();
    let code = GaussCode::new(tokens).ok()?;
    Some(OrientedDiagram::from_gauss(&code))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::is_planar;
    use crate::oracle::kauffman_bracket;

    fn det(d: &OrientedDiagram) -> i64 {
        kauffman_bracket(d).unwrap().determinant()
    }

    #[test]
    fn torus_knots_from_integer_tangles() {
        let d = Tangle::rational(&[3], false, &[]).numerator().unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert!(d.is_alternating());
        assert_eq!(det(&d), 3);
        assert!(Tangle::rational(&[2], false, &[]).numerator().is_none());
        assert_eq!(Tangle::zero().denominator().unwrap().crossing_count(), 0);
        assert!(Tangle::zero().numerator().is_none());
    }

    #[test]
    fn rational_fractions() {
        // determinant is the numerator of the continued fraction
        for (terms, p) in [
            (vec![2, 2], 5),
            (vec![3, 2], 7),
            (vec![2, 1, 1, 2], 13),
            (vec![2, 2, 1, 2], 19),
            (vec![2, 2, 2, 2], 29),
        ] {
            let d = Tangle::rational(&terms, false, &[]).numerator().unwrap();
            assert!(d.is_alternating(), "{terms:?}");
            assert_eq!(is_planar(&d.to_gauss()), Some(true));
            assert_eq!(det(&d), p, "{terms:?}");
        }
    }

    #[test]
    fn flypes_keep_the_knot() {
        let base = Tangle::rational(&[2, 2, 1, 2], false, &[]).numerator().unwrap();
        let b = kauffman_bracket(&base).unwrap();
        let moved = Tangle::rational(&[2, 2, 1, 2], false, &[0, 1, 0, 1]).numerator().unwrap();
        assert!(moved.is_alternating());
        assert_eq!(is_planar(&moved.to_gauss()), Some(true));
        assert_eq!(kauffman_bracket(&moved).unwrap(), b);
    }
}
