//! Normal forms in `B~_n`, the braid group modulo commutators of transversal
//! half-twists.
//!
//! Every element is written uniquely as `T(pi) * p` with `T` the positive
//! (Tits) lift of a permutation and `p` pure; the pure part is recorded through
//! the isomorphism `Lambda: P~_n -> G(n)`. The scan below keeps that
//! decomposition for each prefix of the word:
//!
//! * `T(pi) p X_i = T(pi) X_i p_{X_i}`, so the `G(n)` part is first acted on;
//! * `T(pi) X_i` is `T(pi s_i)` when the length goes up, and `T(pi s_i) X_i^2`
//!   when it goes down, which contributes `Lambda(X_i^2) = s_{i,i+1}` on the left.
//!
//! Completeness of the invariant rests on `Lambda` being an isomorphism; the
//! property checks in [`crate::verify`] exercise it.

use serde::{Deserialize, Serialize};

use crate::braid::{c_word, tits_lift, z_ij, BraidWord};
use crate::error::{Error, Result};
use crate::gn::{Gn, GnElement};
use crate::perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TbnNormalForm {
    pub perm: Perm,
    pub g: GnElement,
}

/// JSON shape of a normal form. `n` is optional so callers can emit the
/// compact `{"perm":..,"bit":..,"vec":..}` form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalFormRecord {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    pub perm: Vec<usize>,
    pub bit: u8,
    pub vec: Vec<i64>,
}

impl TbnNormalForm {
    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.g.is_identity()
    }

    pub fn record(&self, with_n: bool) -> NormalFormRecord {
        NormalFormRecord {
            n: with_n.then(|| self.perm.degree()),
            perm: self.perm.images().to_vec(),
            bit: self.g.bit,
            vec: self.g.vec.clone(),
        }
    }
}

/// Degree data of the filtration `P~'_n < P~_{n,0} < P~_n < B~_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeDecomposition {
    /// inversion count of the permutation
    pub length: usize,
    /// coordinate of `P~_n / P~_{n,0} = Z`
    pub a0: i64,
    /// coordinates of `P~_{n,0} / P~'_n = Z^{n-1}`
    pub v: Vec<i64>,
    pub bit: u8,
}

/// `Lambda(X_i^2) = s_{i,i+1}` for `i = 1..n-1` (stored at index `i-1`).
pub fn s2_table(gn: &Gn) -> Result<Vec<GnElement>> {
    let n = gn.strands();
    if n < 4 {
        return Err(Error::TooFewStrands { n, min: 4 });
    }
    (1..n).map(|i| gn.s_ij(i, i + 1)).collect()
}

/// Per-`n` context for normal-form computations.
#[derive(Debug, Clone)]
pub struct Tbn {
    gn: Gn,
    s2: Vec<GnElement>,
    s2_inv: Vec<GnElement>,
}

impl Tbn {
    pub fn new(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::TooFewStrands { n, min: 4 });
        }
        let gn = Gn::new(n)?;
        let s2 = s2_table(&gn)?;
        let s2_inv = s2.iter().map(|s| gn.inv(s)).collect::<Result<_>>()?;
        Ok(Tbn { gn, s2, s2_inv })
    }

    pub fn strands(&self) -> usize {
        self.gn.strands()
    }

    pub fn gn(&self) -> &Gn {
        &self.gn
    }

    pub fn s2(&self) -> &[GnElement] {
        &self.s2
    }

    fn check(&self, w: &BraidWord) -> Result<()> {
        if w.strands() != self.strands() {
            return Err(Error::SizeMismatch { left: w.strands(), right: self.strands() });
        }
        Ok(())
    }

    pub fn normal_form(&self, w: &BraidWord) -> Result<TbnNormalForm> {
        self.check(w)?;
        let mut perm = Perm::identity(self.strands());
        let mut g = self.gn.identity();
        for &letter in w.letters() {
            let i = letter.unsigned_abs() as usize;
            g = self.gn.act_letter(&g, letter)?;
            let descent = perm.is_right_descent(i);
            if letter > 0 && descent {
                g = self.gn.mul(&self.s2[i - 1], &g)?;
            } else if letter < 0 && !descent {
                g = self.gn.mul(&self.s2_inv[i - 1], &g)?;
            }
            perm.mul_transposition(i);
        }
        Ok(TbnNormalForm { perm, g })
    }

    /// `Lambda(p)` for a pure word.
    pub fn lambda(&self, p: &BraidWord) -> Result<GnElement> {
        let nf = self.normal_form(p)?;
        if !nf.perm.is_identity() {
            return Err(Error::NotPure);
        }
        Ok(nf.g)
    }

    pub fn tbn_equal(&self, a: &BraidWord, b: &BraidWord) -> Result<bool> {
        Ok(self.normal_form(a)? == self.normal_form(b)?)
    }

    pub fn in_kernel(&self, w: &BraidWord) -> Result<bool> {
        Ok(self.normal_form(w)?.is_identity())
    }

    /// A pure word `w` with `Lambda(w) = g`.
    ///
    /// Each coordinate is realized by squares of the `Z_ij`: `X_1^2` for `s_1`,
    /// `Z_23^2 Z_13^-2` for `u_1` and `Z_{1,j+1}^2 Z_{1j}^-2` for `u_j`, `j >= 2`.
    /// The central bit is corrected with `c = [X_1^2, X_2^2]`.
    pub fn lift(&self, g: &GnElement) -> Result<BraidWord> {
        let n = self.strands();
        if g.vec.len() != n {
            return Err(Error::SizeMismatch { left: g.vec.len(), right: n });
        }
        let mut parts = vec![BraidWord::from_letters_unchecked(n, vec![1, 1]).pow(g.vec[0])];
        for j in 1..n {
            if g.vec[j] == 0 {
                continue;
            }
            let (plus, minus) =
                if j == 1 { (z_ij(n, 2, 3)?, z_ij(n, 1, 3)?) } else { (z_ij(n, 1, j + 1)?, z_ij(n, 1, j)?) };
            let step = plus.pow(2).mul(&minus.pow(-2))?;
            parts.push(step.pow(g.vec[j]));
        }
        let mut w = BraidWord::product(n, &parts)?;
        let got = self.lambda(&w)?;
        if got.vec != g.vec {
            return Err(Error::Internal(format!("lift of {g} has abelian part {got}")));
        }
        if got.bit != g.bit {
            w = w.mul(&c_word(n)?)?;
        }
        Ok(w)
    }

    /// `T(perm)` followed by a lift of the pure part.
    pub fn word_of(&self, nf: &TbnNormalForm) -> Result<BraidWord> {
        tits_lift(&nf.perm).mul(&self.lift(&nf.g)?)
    }

    pub fn tbn_mul(&self, a: &TbnNormalForm, b: &TbnNormalForm) -> Result<TbnNormalForm> {
        let w = self.word_of(a)?.mul(&self.word_of(b)?)?;
        self.normal_form(&w)
    }

    pub fn tbn_inv(&self, a: &TbnNormalForm) -> Result<TbnNormalForm> {
        self.normal_form(&self.word_of(a)?.inv())
    }

    pub fn degree_decomposition(&self, w: &BraidWord) -> Result<DegreeDecomposition> {
        let nf = self.normal_form(w)?;
        Ok(DegreeDecomposition {
            length: nf.perm.inversions(),
            a0: nf.g.vec[0],
            v: nf.g.vec[1..].to_vec(),
            bit: nf.g.bit,
        })
    }
}

pub fn normal_form(w: &BraidWord) -> Result<TbnNormalForm> {
    Tbn::new(w.strands())?.normal_form(w)
}

pub fn tbn_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::SizeMismatch { left: a.strands(), right: b.strands() });
    }
    Tbn::new(a.strands())?.tbn_equal(a, b)
}

pub fn in_kernel(w: &BraidWord) -> Result<bool> {
    Tbn::new(w.strands())?.in_kernel(w)
}
