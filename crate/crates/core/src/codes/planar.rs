//! Planar embeddings of Gauss codes.
//!
//! Each passage `p` contributes an incoming end `2p` and an outgoing end
//! `2p+1`; the outgoing end of `p` is glued to the incoming end of `p+1`.
//! A crossing whose passages are `p` (first) and `q` (second) has one of two
//! counterclockwise rotations: `[in p, in q, out p, out q]` (chirality `+1`)
//! or `[in p, out q, out p, in q]` (chirality `-1`). The diagram lies on the
//! sphere iff the resulting map has `c + 2` faces.

use super::{GaussCode, Occurrence, Sign, Strand};

/// Largest crossing count for which [`realize_signs`] searches embeddings.
pub const REALIZE_CAP: usize = 16;

/// Counterclockwise successor of every end, given per-crossing chirality.
fn rotation(tokens: &[Occurrence], chirality: &[i8]) -> Vec<usize> {
    let c = tokens.len() / 2;
    let mut pos = vec![Vec::with_capacity(2); c];
    for (p, t) in tokens.iter().enumerate() {
        pos[t.crossing - 1].push(p);
    }
    let mut next = vec![0; tokens.len() * 2];
    for (k, ps) in pos.iter().enumerate() {
        let (p, q) = (ps[0], ps[1]);
        let ring = if chirality[k] > 0 {
            [2 * p, 2 * q, 2 * p + 1, 2 * q + 1]
        } else {
            [2 * p, 2 * q + 1, 2 * p + 1, 2 * q]
        };
        for i in 0..4 {
            next[ring[i]] = ring[(i + 1) % 4];
        }
    }
    next
}

fn twin(end: usize, n: usize) -> usize {
    let p = end / 2;
    if end % 2 == 1 {
        2 * ((p + 1) % n)
    } else {
        2 * ((p + n - 1) % n) + 1
    }
}

/// Faces of the embedded diagram, each as the cyclic list of ends it uses.
pub(crate) fn faces(tokens: &[Occurrence], chirality: &[i8]) -> Vec<Vec<usize>> {
    let n = tokens.len();
    let next = rotation(tokens, chirality);
    let mut seen = vec![false; 2 * n];
    let mut out = Vec::new();
    for start in 0..2 * n {
        if seen[start] {
            continue;
        }
        let mut face = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            face.push(d);
            d = next[twin(d, n)];
        }
        out.push(face);
    }
    out
}

/// Per-crossing chirality implied by known signs.
pub(crate) fn chirality_from_signs(code: &GaussCode) -> Option<Vec<i8>> {
    let c = code.crossing_count();
    let mut chi = vec![0i8; c];
    let mut done = vec![false; c];
    for t in code.tokens() {
        let k = t.crossing - 1;
        if done[k] {
            continue;
        }
        done[k] = true;
        let s = t.sign.value()? as i8;
        chi[k] = if t.strand == Strand::Over { s } else { -s };
    }
    Some(chi)
}

/// Whether a fully signed code describes a diagram on the sphere. Returns
/// `None` when some sign is unknown.
pub fn is_planar(code: &GaussCode) -> Option<bool> {
    let c = code.crossing_count();
    if c == 0 {
        return Some(true);
    }
    let chi = chirality_from_signs(code)?;
    Some(faces(code.tokens(), &chi).len() == c + 2)
}

/// Recover crossing signs from the over/under sequence alone by searching
/// for a planar embedding. The embedding of a prime diagram is unique up to
/// reflection; the reflection is fixed by giving crossing 1 chirality `-1`.
/// Returns `None` if no embedding exists or the code is above
/// [`REALIZE_CAP`].
pub fn realize_signs(code: &GaussCode) -> Option<GaussCode> {
    let c = code.crossing_count();
    if c == 0 {
        return Some(code.clone());
    }
    if c > REALIZE_CAP {
        return None;
    }
    let tokens = code.tokens();
    for mask in 0u32..(1u32 << (c - 1)) {
        let chi: Vec<i8> = std::iter::once(-1)
            .chain((0..c - 1).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }))
            .collect();
        if faces(tokens, &chi).len() != c + 2 {
            continue;
        }
        let mut first_over = vec![None; c];
        for t in tokens {
            first_over[t.crossing - 1].get_or_insert(t.strand == Strand::Over);
        }
        let signed: Vec<Occurrence> = tokens
            .iter()
            .map(|t| {
                let k = t.crossing - 1;
                let s = chi[k] as i64 * if first_over[k] == Some(true) { 1 } else { -1 };
                Occurrence { sign: Sign::from_value(s), ..*t }
            })
            .collect();
        return Some(GaussCode::new(signed).expect("signs are paired"));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::parse_gauss;

    #[test]
    fn kink_is_planar_either_way() {
        assert_eq!(is_planar(&parse_gauss("O1+U1+").unwrap()), Some(true));
        assert_eq!(is_planar(&parse_gauss("O1-U1-").unwrap()), Some(true));
        assert_eq!(is_planar(&parse_gauss("O1U1").unwrap()), None);
    }

    #[test]
    fn trefoil_signs_are_uniform() {
        assert_eq!(is_planar(&parse_gauss("O1+U2+O3+U1+O2+U3+").unwrap()), Some(true));
        assert_eq!(is_planar(&parse_gauss("O1-U2-O3-U1-O2-U3-").unwrap()), Some(true));
        assert_eq!(is_planar(&parse_gauss("O1+U2-O3+U1+O2-U3+").unwrap()), Some(false));
        let r = realize_signs(&parse_gauss("O1U2O3U1O2U3").unwrap()).unwrap();
        assert_eq!(r.to_string(), "O1-U2-O3-U1-O2-U3-");
    }

    #[test]
    fn virtual_code_has_no_embedding() {
        // the smallest non-planar Gauss word
        assert!(realize_signs(&parse_gauss("O1 O2 U1 U2").unwrap()).is_none());
    }
}
