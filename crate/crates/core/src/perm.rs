//! Permutations of `{1..n}` in one-line notation, composed as right actions:
//! `(x)(p*q) = ((x)p)q`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (1..=n).collect() }
    }

    /// Builds a permutation from its one-line notation `[(1)p, ..., (n)p]`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[v] = true;
        }
        Ok(Perm { images })
    }

    /// The adjacent transposition `(i i+1)`.
    pub fn transposition(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
        }
        let mut p = Perm::identity(n);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `(x)p` for `x` in `1..=n`.
    pub fn image(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// `self * other`: apply `self` first.
    pub fn then(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::SizeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(Perm { images: self.images.iter().map(|&v| other.image(v)).collect() })
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Perm { images: inv }
    }

    /// In-place right multiplication by `(i i+1)`: swaps the values `i`, `i+1`.
    pub fn mul_transposition(&mut self, i: usize) {
        for v in self.images.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
    }

    /// Whether right multiplication by `(i i+1)` lowers the inversion count,
    /// i.e. the value `i+1` sits left of the value `i`.
    pub fn is_right_descent(&self, i: usize) -> bool {
        let pos_i = self.images.iter().position(|&v| v == i);
        let pos_next = self.images.iter().position(|&v| v == i + 1);
        pos_next < pos_i
    }

    pub fn inversions(&self) -> usize {
        let n = self.degree();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.images[a] > self.images[b] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}
