//! Reduced words in the free group `F_n`.
//!
//! Letters are signed indices: `k` is the generator `x_k`, `-k` its inverse.
//! Words are reduced on construction, so equality of group elements is plain
//! equality of letter sequences.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    n: usize,
    letters: Vec<i32>,
}

fn check_letter(letter: i32, n: usize) -> Result<()> {
    if letter == 0 || letter.unsigned_abs() as usize > n {
        return Err(Error::LetterOutOfRange { letter, size: n });
    }
    Ok(())
}

/// Appends `letter` to an already reduced buffer, cancelling if possible.
#[inline]
fn push_reduced(buf: &mut Vec<i32>, letter: i32) {
    if buf.last() == Some(&-letter) {
        buf.pop();
    } else {
        buf.push(letter);
    }
}

impl FreeWord {
    pub fn identity(n: usize) -> Self {
        FreeWord { n, letters: Vec::new() }
    }

    /// The generator `x_k`.
    pub fn generator(n: usize, k: usize) -> Result<Self> {
        Self::reduce(&[k as i32], n)
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn reduce(raw: &[i32], n: usize) -> Result<Self> {
        let mut letters = Vec::with_capacity(raw.len());
        for &l in raw {
            check_letter(l, n)?;
            push_reduced(&mut letters, l);
        }
        Ok(FreeWord { n, letters })
    }

    pub fn rank(&self) -> usize {
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

    pub fn mul(&self, other: &FreeWord) -> Result<FreeWord> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { left: self.n, right: other.n });
        }
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Ok(FreeWord { n: self.n, letters })
    }

    pub fn inv(&self) -> FreeWord {
        FreeWord { n: self.n, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// Applies the endomorphism `x_k -> images[k-1]` to this word.
    pub fn apply(&self, images: &[FreeWord]) -> Result<FreeWord> {
        if images.len() != self.n {
            return Err(Error::SizeMismatch { left: images.len(), right: self.n });
        }
        let target = images.first().map_or(self.n, |w| w.n);
        if let Some(bad) = images.iter().find(|w| w.n != target) {
            return Err(Error::SizeMismatch { left: bad.n, right: target });
        }
        let mut out = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            let img = &images[l.unsigned_abs() as usize - 1].letters;
            if l > 0 {
                for &m in img {
                    push_reduced(&mut out, m);
                }
            } else {
                for &m in img.iter().rev() {
                    push_reduced(&mut out, -m);
                }
            }
        }
        Ok(FreeWord { n: target, letters: out })
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Identity images `x_k -> x_k` for `k = 1..=n`.
pub fn identity_images(n: usize) -> Vec<FreeWord> {
    (1..=n).map(|k| FreeWord { n, letters: vec![k as i32] }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fw(raw: &[i32], n: usize) -> FreeWord {
        FreeWord::reduce(raw, n).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(fw(&[1, -1], 3).letters(), &[] as &[i32]);
        assert_eq!(fw(&[1, 2, -2, 1], 3).letters(), &[1, 1]);
        assert_eq!(fw(&[2, 1, -1, -2, 3], 3).letters(), &[3]);
    }

    #[test]
    fn reduce_rejects_out_of_range() {
        assert!(matches!(FreeWord::reduce(&[4], 3), Err(Error::LetterOutOfRange { letter: 4, size: 3 })));
        assert!(FreeWord::reduce(&[0], 3).is_err());
    }

    #[test]
    fn mul_examples() {
        assert!(fw(&[1], 3).mul(&fw(&[-1], 3)).unwrap().is_empty());
        assert_eq!(fw(&[1, 2], 3).mul(&fw(&[-2, 3], 3)).unwrap().letters(), &[1, 3]);
        let w = fw(&[1, -2, 3], 3);
        assert_eq!(FreeWord::identity(3).mul(&w).unwrap(), w);
        assert!(fw(&[1], 3).mul(&fw(&[1], 4)).is_err());
    }

    #[test]
    fn inv_examples() {
        assert_eq!(fw(&[1, 2], 3).inv().letters(), &[-2, -1]);
        assert!(FreeWord::identity(3).inv().is_empty());
        let w = fw(&[1, -2, 3], 3);
        assert_eq!(w.inv().inv(), w);
    }

    #[test]
    fn apply_examples() {
        let w = fw(&[1, 2], 3);
        assert_eq!(w.apply(&identity_images(3)).unwrap(), w);

        let images = vec![fw(&[2], 3), fw(&[2, 1, -2], 3), fw(&[3], 3)];
        assert_eq!(fw(&[1], 3).apply(&images).unwrap().letters(), &[2]);
        assert_eq!(fw(&[-1], 3).apply(&images).unwrap().letters(), &[-2]);
        assert!(fw(&[1], 3).apply(&images[..2]).is_err());
    }

    fn raw_word(n: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
        let n = n as i32;
        prop::collection::vec((1..=n, any::<bool>()), 0..max_len)
            .prop_map(|v| v.into_iter().map(|(k, s)| if s { k } else { -k }).collect())
    }

    /// Reduction by repeatedly deleting a cancelling pair chosen by `picks`.
    fn reduce_in_order(mut w: Vec<i32>, picks: &[usize]) -> Vec<i32> {
        let mut pi = 0;
        loop {
            let spots: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&i| w[i] == -w[i + 1]).collect();
            if spots.is_empty() {
                return w;
            }
            let at = spots[picks.get(pi).copied().unwrap_or(0) % spots.len()];
            pi += 1;
            w.drain(at..at + 2);
        }
    }

    proptest! {
        #[test]
        fn reduction_is_confluent(raw in raw_word(3, 40), picks in prop::collection::vec(any::<usize>(), 40)) {
            let a = fw(&raw, 3);
            let other = reduce_in_order(raw.clone(), &picks);
            prop_assert_eq!(a.letters(), other.as_slice());
            prop_assert_eq!(FreeWord::reduce(a.letters(), 3).unwrap(), a);
        }

        #[test]
        fn group_laws(a in raw_word(4, 20), b in raw_word(4, 20), c in raw_word(4, 20)) {
            let (a, b, c) = (fw(&a, 4), fw(&b, 4), fw(&c, 4));
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert!(a.mul(&a.inv()).unwrap().is_empty());
        }

        #[test]
        fn apply_is_multiplicative(a in raw_word(3, 15), b in raw_word(3, 15),
                                   ims in prop::collection::vec(raw_word(3, 5), 3)) {
            let images: Vec<FreeWord> = ims.iter().map(|r| fw(r, 3)).collect();
            let (a, b) = (fw(&a, 3), fw(&b, 3));
            prop_assert_eq!(
                a.mul(&b).unwrap().apply(&images).unwrap(),
                a.apply(&images).unwrap().mul(&b.apply(&images).unwrap()).unwrap()
            );
        }
    }
}
