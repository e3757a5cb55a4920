//! Braid words in `B_n`, the permutation map, the Artin action on `F_n`,
//! linking numbers and the positive lift of permutations.
//!
//! A word is a sequence of signed generator indices: `+i` is the frame
//! generator `X_i`, `-i` its inverse. Words are syntactic; equality in `B_n`
//! is decided by [`bn_equal`] through the faithful Artin action.
//!
//! Conjugation follows `X_Y = Y^-1 X Y` everywhere and all actions are right
//! actions, composed left to right over the letters.

mod halftwist;
mod words;

pub use halftwist::{classify_pair, HalfTwist, PairRelation};
pub use words::{
    c_word, centralizer_generators, frame_transport, quadrangle_relator, transversal_commutator,
    transversal_commutator_expanded, z_ij, z_ij_short, z_ij_twist,
};

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::freegroup::{identity_images, FreeWord};
use crate::perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewStrands { n, min: 2 });
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= n {
                return Err(Error::LetterOutOfRange { letter: l, size: n - 1 });
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub(crate) fn from_letters_unchecked(n: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters.iter().all(|l| *l != 0 && (l.unsigned_abs() as usize) < n));
        BraidWord { n, letters }
    }

    pub fn identity(n: usize) -> Self {
        BraidWord { n, letters: Vec::new() }
    }

    /// The frame generator `X_i` (or its inverse when `letter < 0`).
    pub fn generator(n: usize, letter: i32) -> Result<Self> {
        BraidWord::new(n, vec![letter])
    }

    /// Parses whitespace-separated signed integers; the empty string is the identity.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|tok| i32::from_str(tok).map_err(|_| Error::Parse { what: "braid letter", token: tok.to_string() }))
            .collect::<Result<Vec<_>>>()?;
        if let Some(bad) = letters.iter().find(|l| **l == 0 || l.unsigned_abs() as usize >= n) {
            return Err(Error::Parse { what: "braid letter", token: bad.to_string() });
        }
        BraidWord::new(n, letters)
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn same_n(&self, other: &BraidWord) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    /// Concatenation.
    pub fn mul(&self, other: &BraidWord) -> Result<BraidWord> {
        self.same_n(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    /// Concatenation of many words over the same `n`.
    pub fn product<'a>(n: usize, parts: impl IntoIterator<Item = &'a BraidWord>) -> Result<BraidWord> {
        let mut letters = Vec::new();
        for p in parts {
            if p.n != n {
                return Err(Error::SizeMismatch { left: p.n, right: n });
            }
            letters.extend_from_slice(&p.letters);
        }
        Ok(BraidWord { n, letters })
    }

    /// Reversed, sign-flipped word.
    pub fn inv(&self) -> BraidWord {
        BraidWord { n: self.n, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    pub fn pow(&self, m: i64) -> BraidWord {
        let base = if m < 0 { self.inv() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.letters.len() * m.unsigned_abs() as usize);
        for _ in 0..m.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { n: self.n, letters }
    }

    /// `b^-1 * self * b`.
    pub fn conjugate_by(&self, b: &BraidWord) -> Result<BraidWord> {
        self.same_n(b)?;
        BraidWord::product(self.n, [&b.inv(), self, b])
    }

    /// `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(a: &BraidWord, b: &BraidWord) -> Result<BraidWord> {
        a.same_n(b)?;
        BraidWord::product(a.n, [a, b, &a.inv(), &b.inv()])
    }

    /// The permutation map `X_i -> (i i+1)`.
    pub fn psi(&self) -> Perm {
        let mut p = Perm::identity(self.n);
        for &l in &self.letters {
            p.mul_transposition(l.unsigned_abs() as usize);
        }
        p
    }

    pub fn is_pure(&self) -> bool {
        self.psi().is_identity()
    }

    /// Image in `Ab(B_n) = Z`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// Images of the free generators `x_1..x_n` under the right Artin action of this word.
    pub fn artin_images(&self) -> Vec<FreeWord> {
        let table = ArtinTable::new(self.n);
        let mut images = identity_images(self.n);
        for &l in &self.letters {
            let step = table.get(l);
            images = images.iter().map(|w| w.apply(step).expect("artin images share the alphabet")).collect();
        }
        images
    }

    /// Signed linking numbers between strands of a pure braid, strands labelled by
    /// their starting positions.
    pub fn linking_matrix(&self) -> Result<Vec<Vec<i64>>> {
        let n = self.n;
        let mut strand_at: Vec<usize> = (0..n).collect();
        let mut crossings = vec![vec![0i64; n]; n];
        for &l in &self.letters {
            let k = l.unsigned_abs() as usize;
            let (a, b) = (strand_at[k - 1], strand_at[k]);
            let s = l.signum() as i64;
            crossings[a][b] += s;
            crossings[b][a] += s;
            strand_at.swap(k - 1, k);
        }
        if strand_at.iter().enumerate().any(|(p, s)| p != *s) {
            return Err(Error::NotPure);
        }
        for row in crossings.iter_mut() {
            for v in row.iter_mut() {
                debug_assert!(*v % 2 == 0);
                *v /= 2;
            }
        }
        Ok(crossings)
    }

    /// Uniformly random word of the given length.
    pub fn random<R: Rng + ?Sized>(n: usize, len: usize, rng: &mut R) -> BraidWord {
        let letters = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..n as i32);
                if rng.gen::<bool>() {
                    i
                } else {
                    -i
                }
            })
            .collect();
        BraidWord { n, letters }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Per-letter generator images of the Artin action.
struct ArtinTable {
    forward: Vec<Vec<FreeWord>>,
    backward: Vec<Vec<FreeWord>>,
}

impl ArtinTable {
    fn new(n: usize) -> Self {
        let word = |raw: &[i32]| FreeWord::reduce(raw, n).expect("indices in range");
        let mut forward = Vec::with_capacity(n - 1);
        let mut backward = Vec::with_capacity(n - 1);
        for i in 1..n {
            let (a, b) = (i as i32, i as i32 + 1);
            // X_i: x_i -> x_{i+1}, x_{i+1} -> x_{i+1} x_i x_{i+1}^-1
            let mut f = identity_images(n);
            f[i - 1] = word(&[b]);
            f[i] = word(&[b, a, -b]);
            // X_i^-1: x_i -> x_i^-1 x_{i+1} x_i, x_{i+1} -> x_i
            let mut g = identity_images(n);
            g[i - 1] = word(&[-a, b, a]);
            g[i] = word(&[a]);
            forward.push(f);
            backward.push(g);
        }
        ArtinTable { forward, backward }
    }

    fn get(&self, letter: i32) -> &[FreeWord] {
        let k = letter.unsigned_abs() as usize - 1;
        if letter > 0 {
            &self.forward[k]
        } else {
            &self.backward[k]
        }
    }
}

/// Whether two words represent the same element of `B_n`.
pub fn bn_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    a.same_n(b)?;
    let images = a.mul(&b.inv())?.artin_images();
    Ok(images.iter().enumerate().all(|(k, w)| w.letters() == [k as i32 + 1]))
}

/// Positive lift of a permutation along the reduced word produced by bubble sort
/// of its one-line notation.
pub fn tits_lift(p: &Perm) -> BraidWord {
    let n = p.degree();
    let mut arr = p.images().to_vec();
    let mut letters = Vec::with_capacity(p.inversions());
    loop {
        let mut swapped = false;
        for k in 0..n.saturating_sub(1) {
            if arr[k] > arr[k + 1] {
                arr.swap(k, k + 1);
                letters.push(k as i32 + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    BraidWord { n, letters }
}

/// A reduced positive word for `p`, choosing among the available descents at random.
pub fn random_reduced_word<R: Rng + ?Sized>(p: &Perm, rng: &mut R) -> BraidWord {
    let n = p.degree();
    let mut arr = p.images().to_vec();
    let mut letters = Vec::new();
    loop {
        let descents: Vec<usize> = (0..n.saturating_sub(1)).filter(|&k| arr[k] > arr[k + 1]).collect();
        if descents.is_empty() {
            break;
        }
        let k = descents[rng.gen_range(0..descents.len())];
        arr.swap(k, k + 1);
        letters.push(k as i32 + 1);
    }
    BraidWord { n, letters }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn bw(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    fn fw(n: usize, l: &[i32]) -> FreeWord {
        FreeWord::reduce(l, n).unwrap()
    }

    #[test]
    fn psi_examples() {
        assert_eq!(bw(3, &[1]).psi().images(), &[2, 1, 3]);
        assert!(BraidWord::identity(3).psi().is_identity());
        assert_eq!(bw(3, &[1, 2, 1]).psi(), bw(3, &[2, 1, 2]).psi());
        assert_eq!(bw(3, &[1, 2, 1]).psi().images(), &[3, 2, 1]);
    }

    #[test]
    fn psi_is_right_action() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let a = BraidWord::random(5, 7, &mut rng);
            let b = BraidWord::random(5, 7, &mut rng);
            assert_eq!(a.mul(&b).unwrap().psi(), a.psi().then(&b.psi()).unwrap());
        }
    }

    #[test]
    fn artin_examples() {
        let im = bw(3, &[1]).artin_images();
        assert_eq!(im, vec![fw(3, &[2]), fw(3, &[2, 1, -2]), fw(3, &[3])]);
        let im = bw(3, &[-1]).artin_images();
        assert_eq!(im, vec![fw(3, &[-1, 2, 1]), fw(3, &[1]), fw(3, &[3])]);
        assert_eq!(bw(3, &[1, -1]).artin_images(), identity_images(3));
    }

    #[test]
    fn bn_equal_examples() {
        assert!(bn_equal(&bw(3, &[1, 2, 1]), &bw(3, &[2, 1, 2])).unwrap());
        assert!(bn_equal(&bw(4, &[1, 3]), &bw(4, &[3, 1])).unwrap());
        assert!(!bn_equal(&bw(3, &[1, 2]), &bw(3, &[2, 1])).unwrap());
        assert!(bn_equal(&bw(3, &[1]), &bw(4, &[1])).is_err());
        let t = transversal_commutator(4).unwrap();
        let with_comm = BraidWord::generator(4, 2).unwrap().mul(&t).unwrap();
        assert!(!bn_equal(&with_comm, &BraidWord::generator(4, 2).unwrap()).unwrap());
    }

    #[test]
    fn exponent_sum_examples() {
        assert_eq!(bw(3, &[1, 2, 1]).exponent_sum(), 3);
        assert_eq!(BraidWord::identity(3).exponent_sum(), 0);
        assert_eq!(bw(3, &[1, -2]).exponent_sum(), 0);
    }

    #[test]
    fn linking_examples() {
        let lk = bw(4, &[1, 1]).linking_matrix().unwrap();
        for a in 0..4 {
            for b in 0..4 {
                let expect = if (a, b) == (0, 1) || (a, b) == (1, 0) { 1 } else { 0 };
                assert_eq!(lk[a][b], expect);
            }
        }
        assert!(BraidWord::identity(4).linking_matrix().unwrap().iter().flatten().all(|v| *v == 0));
        // Squares of half-twists on {1,2}, {3,4} positively and {1,3}, {2,4} negatively.
        let q = quadrangle_relator(4).unwrap().linking_matrix().unwrap();
        let expected = [[0, 1, -1, 0], [1, 0, 0, -1], [-1, 0, 0, 1], [0, -1, 1, 0]];
        for a in 0..4 {
            assert_eq!(q[a], expected[a].to_vec());
        }
        assert_eq!(bw(4, &[1]).linking_matrix(), Err(Error::NotPure));
    }

    #[test]
    fn linking_additive_and_conjugation_relabels() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let p = BraidWord::random(5, 6, &mut rng);
            let p = p.mul(&tits_lift(&p.psi().inverse())).unwrap();
            assert!(p.is_pure());
            let q = z_ij(5, 2, 4).unwrap().pow(2);
            let lp = p.linking_matrix().unwrap();
            let lq = q.linking_matrix().unwrap();
            let lpq = p.mul(&q).unwrap().linking_matrix().unwrap();
            for a in 0..5 {
                for b in 0..5 {
                    assert_eq!(lpq[a][b], lp[a][b] + lq[a][b]);
                }
            }
            let b = BraidWord::random(5, 9, &mut rng);
            let pb = p.conjugate_by(&b).unwrap().linking_matrix().unwrap();
            let perm = b.psi();
            for x in 1..=5 {
                for y in 1..=5 {
                    assert_eq!(pb[perm.image(x) - 1][perm.image(y) - 1], lp[x - 1][y - 1]);
                }
            }
        }
    }

    #[test]
    fn tits_lift_examples() {
        assert!(tits_lift(&Perm::identity(4)).is_empty());
        for i in 1..4 {
            assert_eq!(tits_lift(&Perm::transposition(4, i).unwrap()).letters(), &[i as i32]);
        }
        let w0 = Perm::from_images(vec![3, 2, 1]).unwrap();
        let lift = tits_lift(&w0);
        assert_eq!(lift.len(), 3);
        assert!(bn_equal(&lift, &bw(3, &[1, 2, 1])).unwrap());
        assert_eq!(lift.psi(), w0);
    }

    #[test]
    fn parse_and_display() {
        let w = BraidWord::parse(4, " 1 -2  3 ").unwrap();
        assert_eq!(w.letters(), &[1, -2, 3]);
        assert_eq!(w.to_string(), "1 -2 3");
        assert!(BraidWord::parse(4, "").unwrap().is_empty());
        assert!(matches!(BraidWord::parse(4, "1 x"), Err(Error::Parse { token, .. }) if token == "x"));
        assert!(matches!(BraidWord::parse(4, "4"), Err(Error::Parse { token, .. }) if token == "4"));
    }
}
