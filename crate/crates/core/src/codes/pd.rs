use std::fmt;

use serde::{Deserialize, Serialize};

use super::{strip_comments, GaussCode, Occurrence, Sign, Strand};
use crate::error::CodeError;

/// Planar-diagram code: one quadruple of edge labels per crossing, read
/// counterclockwise starting from the incoming under-strand.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PdCode {
    crossings: Vec<[usize; 4]>,
}

impl PdCode {
    pub fn new(crossings: Vec<[usize; 4]>) -> Result<Self, CodeError> {
        let n = 2 * crossings.len();
        let mut count = vec![0u8; n + 1];
        for x in &crossings {
            for &e in x {
                if e == 0 || e > n {
                    return Err(CodeError::structure(format!(
                        "edge label {e} outside 1..={n}"
                    )));
                }
                count[e] += 1;
            }
        }
        if let Some((e, k)) = count.iter().enumerate().skip(1).find(|(_, &k)| k != 2) {
            return Err(CodeError::structure(format!(
                "edge label {e} appears {k} time(s), expected 2"
            )));
        }
        Ok(PdCode { crossings })
    }

    pub fn crossings(&self) -> &[[usize; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Re-encode through the canonical Gauss code.
    pub fn canonical(&self) -> Result<PdCode, CodeError> {
        gauss_to_pd(&pd_to_gauss(self)?.canonical())
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, [a, b, c, d]) in self.crossings.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "X({a},{b},{c},{d})")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for PdCode {
    type Err = CodeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_pd(s)
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek().map(|x| x.to_ascii_uppercase()) == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, msg: impl Into<String>) -> CodeError {
        CodeError::syntax(self.pos, msg)
    }

    fn int(&mut self) -> Result<usize, CodeError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an edge label"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| CodeError::syntax(start, "edge label out of range"))
    }

    fn group(&mut self) -> Result<[usize; 4], CodeError> {
        self.eat(b'X');
        let close = match self.peek() {
            Some(b'(') => b')',
            Some(b'[') => b']',
            _ => return Err(self.err("expected `(` or `[` opening a crossing")),
        };
        self.pos += 1;
        let mut out = [0; 4];
        for (i, slot) in out.iter_mut().enumerate() {
            if i > 0 && !self.eat(b',') {
                // whitespace alone also separates labels
                if !matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
                    return Err(self.err("expected `,` between edge labels"));
                }
            }
            *slot = self.int()?;
        }
        if !self.eat(close) {
            return Err(self.err("a crossing must have exactly four edge labels"));
        }
        Ok(out)
    }
}

/// Parse `X(1,4,2,5) X(3,6,4,1) ...`, `PD[X[1,4,2,5], ...]` or
/// `[[1,4,2,5], ...]`.
pub fn parse_pd(text: &str) -> Result<PdCode, CodeError> {
    let cleaned = strip_comments(text);
    let mut cur = Cursor { bytes: cleaned.as_bytes(), pos: 0 };
    let mut wrapped = false;
    if cur.peek().map(|b| b.to_ascii_uppercase()) == Some(b'P') {
        cur.pos += 1;
        if !cur.eat(b'D') || !cur.eat(b'[') {
            return Err(cur.err("expected `PD[`"));
        }
        wrapped = true;
    } else if cur.peek() == Some(b'[') {
        let save = cur.pos;
        cur.pos += 1;
        match cur.peek() {
            Some(b'[') | Some(b'X') | Some(b'x') | Some(b']') => wrapped = true,
            _ => cur.pos = save,
        }
    }
    let mut crossings = Vec::new();
    loop {
        match cur.peek() {
            None => break,
            Some(b']') if wrapped => break,
            Some(b',') if !crossings.is_empty() => {
                cur.pos += 1;
            }
            _ => crossings.push(cur.group()?),
        }
    }
    if wrapped {
        if !cur.eat(b']') {
            return Err(cur.err("missing closing `]`"));
        }
        if cur.peek().is_some() {
            return Err(cur.err("trailing input after `]`"));
        }
    }
    PdCode::new(crossings)
}

/// Walk a PD code into a signed Gauss code. Position 0 is the passage at
/// the tail of edge 1.
pub fn pd_to_gauss(code: &PdCode) -> Result<GaussCode, CodeError> {
    let xs = code.crossings();
    let c = xs.len();
    if c == 0 {
        return Ok(GaussCode::empty());
    }
    let n = 2 * c;
    let mut ends: Vec<Vec<(usize, usize)>> = vec![Vec::with_capacity(2); n + 1];
    for (k, x) in xs.iter().enumerate() {
        for (s, &e) in x.iter().enumerate() {
            ends[e].push((k, s));
        }
    }
    // incoming[k][s]: whether the edge at slot s points into crossing k
    let mut incoming: Vec<[Option<bool>; 4]> = vec![[None; 4]; c];
    let mut stack = Vec::new();
    for k in 0..c {
        stack.push((k, 0usize, true));
        stack.push((k, 2usize, false));
    }
    while let Some((k, s, dir)) = stack.pop() {
        match incoming[k][s] {
            Some(d) if d == dir => continue,
            Some(_) => {
                return Err(CodeError::structure("inconsistent edge sequencing"));
            }
            None => incoming[k][s] = Some(dir),
        }
        stack.push((k, (s + 2) % 4, !dir));
        let e = xs[k][s];
        for &(k2, s2) in &ends[e] {
            if (k2, s2) != (k, s) {
                stack.push((k2, s2, !dir));
            }
        }
    }
    if incoming.iter().any(|slots| slots.iter().any(Option::is_none)) {
        return Err(CodeError::structure("diagram has more than one component"));
    }
    let head_of = |e: usize| -> (usize, usize) {
        *ends[e]
            .iter()
            .find(|&&(k, s)| incoming[k][s] == Some(true))
            .expect("every edge has a head")
    };
    let sign_of = |k: usize| {
        if incoming[k][1] == Some(false) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    };
    let tail = ends[1]
        .iter()
        .find(|&&(k, s)| incoming[k][s] == Some(false))
        .copied()
        .expect("every edge has a tail");
    let strand_at = |s: usize| if s % 2 == 0 { Strand::Under } else { Strand::Over };
    let mut tokens = vec![Occurrence::new(tail.0 + 1, strand_at(tail.1), sign_of(tail.0))];
    let mut edge = 1;
    loop {
        let (k, s) = head_of(edge);
        let out = (s + 2) % 4;
        if (k, out) == tail {
            break;
        }
        tokens.push(Occurrence::new(k + 1, strand_at(s), sign_of(k)));
        edge = xs[k][out];
        if tokens.len() > n {
            return Err(CodeError::structure("inconsistent edge sequencing"));
        }
    }
    if tokens.len() != n {
        return Err(CodeError::structure("diagram has more than one component"));
    }
    GaussCode::new(tokens)
}

/// Emit a PD code, labelling the edge that leaves position `i` as `i+1`.
/// Needs every crossing sign.
pub fn gauss_to_pd(code: &GaussCode) -> Result<PdCode, CodeError> {
    if !code.has_signs() {
        return Err(CodeError::structure("a PD code needs every crossing sign"));
    }
    let tokens = code.tokens();
    let n = tokens.len();
    let c = n / 2;
    let mut under = vec![0; c];
    let mut over = vec![0; c];
    let mut sign = vec![Sign::Unknown; c];
    for (p, t) in tokens.iter().enumerate() {
        match t.strand {
            Strand::Under => under[t.crossing - 1] = p,
            Strand::Over => over[t.crossing - 1] = p,
        }
        sign[t.crossing - 1] = t.sign;
    }
    let into = |p: usize| (p + n - 1) % n + 1;
    let out_of = |p: usize| p + 1;
    let crossings = (0..c)
        .map(|k| {
            let (a, cc) = (into(under[k]), out_of(under[k]));
            let (oi, oo) = (into(over[k]), out_of(over[k]));
            if sign[k] == Sign::Plus {
                [a, oo, cc, oi]
            } else {
                [a, oi, cc, oo]
            }
        })
        .collect();
    PdCode::new(crossings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::parse_gauss;

    const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

    #[test]
    fn trefoil_walks() {
        let g = pd_to_gauss(&parse_pd(TREFOIL).unwrap()).unwrap();
        assert_eq!(g.crossing_count(), 3);
        assert!(g.is_alternating());
        assert!(g.tokens().iter().all(|t| t.sign == Sign::Minus));
        assert_eq!(g.canonical().to_string(), "O1-U2-O3-U1-O2-U3-");
    }

    #[test]
    fn grammar_variants() {
        let a = parse_pd(TREFOIL).unwrap();
        assert_eq!(parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]").unwrap(), a);
        assert_eq!(parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]").unwrap(), a);
        assert_eq!(parse_pd("x(1 4 2 5)\r\nX(3,6,4,1) # c2\nX(5,2,6,3)").unwrap(), a);
        assert_eq!(parse_pd("").unwrap().crossing_count(), 0);
        assert_eq!(parse_pd("[]").unwrap().crossing_count(), 0);
    }

    #[test]
    fn kink() {
        let g = pd_to_gauss(&parse_pd("X(1,1,2,2)").unwrap()).unwrap();
        assert_eq!(g.to_string(), "O1+U1+");
        let g = pd_to_gauss(&parse_pd("X(1,2,2,1)").unwrap()).unwrap();
        assert_eq!(g.to_string(), "O1-U1-");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_pd("X(1,1,1,2)"), Err(CodeError::Structure(_))));
        assert!(matches!(parse_pd("X(1,2,3)"), Err(CodeError::Syntax { .. })));
        assert!(matches!(parse_pd("X(1,2,3,4,5)"), Err(CodeError::Syntax { .. })));
        assert!(matches!(parse_pd("Y(1,2,2,1)"), Err(CodeError::Syntax { .. })));
        // Hopf link
        let hopf = parse_pd("X(1,3,2,4) X(3,1,4,2)").unwrap();
        assert!(matches!(pd_to_gauss(&hopf), Err(CodeError::Structure(_))));
    }

    #[test]
    fn gauss_pd_round_trip() {
        for text in ["O1+U2+O3+U1+O2+U3+", "O1-U2-O3-U1-O2-U3-", "O1+U1+", "O1-U2+O3-U1-O2+U3-"] {
            let g = parse_gauss(text).unwrap();
            let back = pd_to_gauss(&gauss_to_pd(&g).unwrap()).unwrap();
            assert_eq!(back, g, "{text}");
        }
        let pd = gauss_to_pd(&parse_gauss("O1-U2-O3-U1-O2-U3-").unwrap()).unwrap();
        assert_eq!(pd.to_string(), "X(3,6,4,1) X(1,4,2,5) X(5,2,6,3)");
    }

    #[test]
    fn unsigned_has_no_pd() {
        assert!(gauss_to_pd(&parse_gauss("O1U2O3U1O2U3").unwrap()).is_err());
    }
}
