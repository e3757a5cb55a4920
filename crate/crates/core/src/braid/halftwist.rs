use std::fmt;

use rand::Rng;
use serde::Serialize;

use super::{bn_equal, BraidWord};
use crate::error::{Error, Result};

/// The half-twist `(X_index)_conj = conj^-1 X_index conj` with an orientation.
///
/// Unreversed, the ordered endpoints are `((index)psi(conj), (index+1)psi(conj))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfTwist {
    pub conj: BraidWord,
    pub index: usize,
    pub reversed: bool,
}

impl HalfTwist {
    pub fn new(conj: BraidWord, index: usize, reversed: bool) -> Result<Self> {
        let n = conj.strands();
        if index == 0 || index >= n {
            return Err(Error::IndexOutOfRange { index, max: n - 1 });
        }
        Ok(HalfTwist { conj, index, reversed })
    }

    /// `X_i` with its frame polarization `(i, i+1)`.
    pub fn frame(n: usize, i: usize) -> Result<Self> {
        HalfTwist::new(BraidWord::identity(n), i, false)
    }

    pub fn strands(&self) -> usize {
        self.conj.strands()
    }

    /// Parses `i|w|+` or `i|w|-` (index, conjugator word, polarization).
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let bad = || Error::Parse { what: "half-twist", token: text.to_string() };
        let parts: Vec<&str> = text.split('|').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let index: usize = parts[0]
            .trim()
            .parse()
            .map_err(|_| Error::Parse { what: "half-twist index", token: parts[0].trim().to_string() })?;
        let conj = BraidWord::parse(n, parts[1])?;
        let reversed = match parts[2].trim() {
            "+" => false,
            "-" => true,
            other => return Err(Error::Parse { what: "polarization", token: other.to_string() }),
        };
        HalfTwist::new(conj, index, reversed).map_err(|_| bad())
    }

    /// The braid word `conj^-1 [index] conj`.
    pub fn word(&self) -> BraidWord {
        let n = self.strands();
        let x = BraidWord::from_letters_unchecked(n, vec![self.index as i32]);
        BraidWord::product(n, [&self.conj.inv(), &x, &self.conj]).expect("same n")
    }

    pub fn endpoints(&self) -> (usize, usize) {
        let p = self.conj.psi();
        let (a, b) = (p.image(self.index), p.image(self.index + 1));
        if self.reversed {
            (b, a)
        } else {
            (a, b)
        }
    }

    /// `(self)_b`; endpoints move by `psi(b)`.
    pub fn conjugate(&self, b: &BraidWord) -> Result<HalfTwist> {
        Ok(HalfTwist { conj: self.conj.mul(b)?, index: self.index, reversed: self.reversed })
    }

    /// Random index, polarization and conjugator of length `len`.
    pub fn random<R: Rng + ?Sized>(n: usize, len: usize, rng: &mut R) -> HalfTwist {
        HalfTwist { conj: BraidWord::random(n, len, rng), index: rng.gen_range(1..n), reversed: rng.gen() }
    }

    /// Same half-twist with the opposite polarization.
    pub fn flipped(&self) -> HalfTwist {
        HalfTwist { reversed: !self.reversed, ..self.clone() }
    }
}

impl fmt::Display for HalfTwist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}|{}", self.index, self.conj, if self.reversed { "-" } else { "+" })
    }
}

/// Algebraic relation data between two half-twists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairRelation {
    pub commute: bool,
    pub triple: bool,
    pub common_endpoints: u8,
}

impl PairRelation {
    /// Advisory label; `None` when the raw predicates do not match a named pattern.
    pub fn label(&self) -> Option<&'static str> {
        match (self.commute, self.triple, self.common_endpoints) {
            (true, _, 0) => Some("disjoint-or-transversal"),
            (_, true, 1) => Some("consecutive"),
            _ => None,
        }
    }
}

pub fn classify_pair(h1: &HalfTwist, h2: &HalfTwist) -> Result<PairRelation> {
    if h1.strands() != h2.strands() {
        return Err(Error::SizeMismatch { left: h1.strands(), right: h2.strands() });
    }
    let (a, b) = (h1.word(), h2.word());
    let commute = bn_equal(&BraidWord::commutator(&a, &b)?, &BraidWord::identity(a.strands()))?;
    let aba = BraidWord::product(a.strands(), [&a, &b, &a])?;
    let bab = BraidWord::product(a.strands(), [&b, &a, &b])?;
    let triple = bn_equal(&aba, &bab)?;
    let (p, q) = (h1.endpoints(), h2.endpoints());
    let common = [p.0, p.1].iter().filter(|x| **x == q.0 || **x == q.1).count() as u8;
    Ok(PairRelation { commute, triple, common_endpoints: common })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn word_and_endpoints() {
        let h = HalfTwist::new(BraidWord::identity(4), 2, false).unwrap();
        assert_eq!(h.word().letters(), &[2]);
        let h = HalfTwist::new(bw(4, &[1, 3]), 2, false).unwrap();
        assert_eq!(h.word().letters(), &[-3, -1, 2, 1, 3]);
        assert_eq!(HalfTwist::frame(4, 1).unwrap().endpoints(), (1, 2));
        assert_eq!(HalfTwist::frame(4, 1).unwrap().flipped().endpoints(), (2, 1));
        assert_eq!(HalfTwist::new(bw(4, &[2]), 1, false).unwrap().endpoints(), (1, 3));
    }

    #[test]
    fn conjugation() {
        let f1 = HalfTwist::frame(4, 1).unwrap();
        assert_eq!(f1.conjugate(&BraidWord::identity(4)).unwrap(), f1);
        assert_eq!(f1.conjugate(&bw(4, &[2])).unwrap().endpoints(), (1, 3));
        let b = bw(4, &[1, -3, 2, 2]);
        let back = f1.conjugate(&b).unwrap().conjugate(&b.inv()).unwrap();
        assert!(bn_equal(&back.word(), &f1.word()).unwrap());
        let h = HalfTwist::new(bw(4, &[3, 1]), 2, true).unwrap();
        let hb = h.conjugate(&b).unwrap();
        assert!(bn_equal(&hb.word(), &h.word().conjugate_by(&b).unwrap()).unwrap());
        let p = b.psi();
        let (x, y) = h.endpoints();
        assert_eq!(hb.endpoints(), (p.image(x), p.image(y)));
    }

    #[test]
    fn classify_examples() {
        let f = |i| HalfTwist::frame(4, i).unwrap();
        let r = classify_pair(&f(1), &f(3)).unwrap();
        assert_eq!(r, PairRelation { commute: true, triple: false, common_endpoints: 0 });
        assert_eq!(r.label(), Some("disjoint-or-transversal"));
        let r = classify_pair(&f(1), &f(2)).unwrap();
        assert_eq!(r, PairRelation { commute: false, triple: true, common_endpoints: 1 });
        assert_eq!(r.label(), Some("consecutive"));
        let t = HalfTwist::new(bw(4, &[1, 3]), 2, false).unwrap();
        let r = classify_pair(&f(2), &t).unwrap();
        assert_eq!(r, PairRelation { commute: false, triple: false, common_endpoints: 0 });
        assert_eq!(r.label(), None);
    }

    #[test]
    fn parse_round_trip() {
        let h = HalfTwist::parse(5, "2|1 -3|-").unwrap();
        assert_eq!(h, HalfTwist::new(bw(5, &[1, -3]), 2, true).unwrap());
        assert_eq!(HalfTwist::parse(5, &h.to_string()).unwrap(), h);
        assert_eq!(HalfTwist::parse(5, "1||+").unwrap(), HalfTwist::frame(5, 1).unwrap());
        assert!(HalfTwist::parse(5, "5||+").is_err());
        assert!(HalfTwist::parse(5, "1||*").is_err());
        assert!(HalfTwist::parse(5, "1|+").is_err());
    }
}
