//! Exact arithmetic in `G(n)`, the central extension of `A(n) = Z^n` by `Z/2`
//! whose commutator pairing is the form `Q`.
//!
//! Elements are stored canonically as `nu^bit * s_1^v0 * u_1^v1 * ... * u_{n-1}^v{n-1}`.
//! Multiplying two canonical words only requires moving generators of the
//! right factor past higher generators of the left one; each such swap of a
//! pair with `Q = 1` contributes a factor `nu`.

use std::fmt;

use num_rational::Ratio;
use rand::Rng;

use crate::braid::BraidWord;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GnElement {
    pub bit: u8,
    pub vec: Vec<i64>,
}

impl GnElement {
    pub fn rank(&self) -> usize {
        self.vec.len()
    }

    /// Coordinates in `Ab(G(n)) = A(n)`.
    pub fn ab_vector(&self) -> &[i64] {
        &self.vec
    }

    /// Degree-zero part `G_0(n)`: no `s_1` component.
    pub fn in_g0(&self) -> bool {
        self.vec.first().is_none_or(|v| *v == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.bit == 0 && self.vec.iter().all(|v| *v == 0)
    }

    /// Parses `bit;v0,v1,...` and checks the vector length against `n`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let err = |tok: &str| Error::Parse { what: "G(n) element", token: tok.to_string() };
        let (bit, rest) = text.trim().split_once(';').ok_or_else(|| err(text))?;
        let bit = match bit.trim() {
            "0" => 0,
            "1" => 1,
            other => return Err(err(other)),
        };
        let vec =
            rest.split(',').map(|t| t.trim().parse::<i64>().map_err(|_| err(t.trim()))).collect::<Result<Vec<_>>>()?;
        if vec.len() != n {
            return Err(err(rest));
        }
        Ok(GnElement { bit, vec })
    }
}

impl fmt::Display for GnElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.bit)?;
        for (k, v) in self.vec.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[inline]
fn parity(v: i64) -> u8 {
    v.rem_euclid(2) as u8
}

/// The group `G(n)` together with its `B~_n`-action tables.
#[derive(Debug, Clone)]
pub struct Gn {
    n: usize,
    q: Vec<Vec<u8>>,
    forward: Vec<Vec<GnElement>>,
    backward: Vec<Vec<GnElement>>,
}

impl Gn {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewStrands { n, min: 3 });
        }
        let mut q = vec![vec![0u8; n]; n];
        q[0][2] = 1;
        q[2][0] = 1;
        for i in 1..n - 1 {
            q[i][i + 1] = 1;
            q[i + 1][i] = 1;
        }
        let mut gn = Gn { n, q, forward: Vec::new(), backward: Vec::new() };
        gn.forward = (1..n).map(|i| gn.forward_images(i)).collect::<Result<_>>()?;
        gn.backward = (0..n - 1).map(|k| gn.inverse_images(&gn.forward[k])).collect::<Result<_>>()?;
        Ok(gn)
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    /// `Q` on basis slots (slot 0 = `S_1`, slot `i` = `V_i`).
    pub fn q_entry(&self, a: usize, b: usize) -> u8 {
        self.q[a][b]
    }

    fn check(&self, g: &GnElement) -> Result<()> {
        if g.vec.len() != self.n {
            return Err(Error::SizeMismatch { left: g.vec.len(), right: self.n });
        }
        Ok(())
    }

    pub fn identity(&self) -> GnElement {
        GnElement { bit: 0, vec: vec![0; self.n] }
    }

    /// The central element `nu = [u_1, u_2]`.
    pub fn nu(&self) -> GnElement {
        GnElement { bit: 1, vec: vec![0; self.n] }
    }

    fn unit(&self, slot: usize) -> GnElement {
        let mut vec = vec![0; self.n];
        vec[slot] = 1;
        GnElement { bit: 0, vec }
    }

    pub fn s1(&self) -> GnElement {
        self.unit(0)
    }

    /// `u_i` for `i` in `1..n`.
    pub fn u(&self, i: usize) -> Result<GnElement> {
        if i == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, max: self.n - 1 });
        }
        Ok(self.unit(i))
    }

    /// Canonical generators `s_1, u_1, ..., u_{n-1}`.
    pub fn basis(&self) -> Vec<GnElement> {
        (0..self.n).map(|k| self.unit(k)).collect()
    }

    /// Generators of `G(n)` as a group, `nu` included.
    pub fn generators(&self) -> Vec<GnElement> {
        let mut g = self.basis();
        g.push(self.nu());
        g
    }

    /// Generators of `G_0(n)`: `u_1, ..., u_{n-1}, nu`.
    pub fn g0_generators(&self) -> Vec<GnElement> {
        let mut g: Vec<_> = (1..self.n).map(|k| self.unit(k)).collect();
        g.push(self.nu());
        g
    }

    /// Reordering cocycle: `sum_{k > j} x[k] y[j] Q[k][j] mod 2`.
    pub fn beta(&self, x: &[i64], y: &[i64]) -> u8 {
        let mut acc = 0u8;
        for k in 0..self.n {
            if parity(x[k]) == 0 {
                continue;
            }
            for j in 0..k {
                acc ^= parity(y[j]) & self.q[k][j];
            }
        }
        acc
    }

    /// `Q(x, y) mod 2`, the commutator bit of any lifts of `x` and `y`.
    pub fn q_form(&self, x: &[i64], y: &[i64]) -> u8 {
        let mut acc = 0u8;
        for k in 0..self.n {
            for j in 0..self.n {
                acc ^= parity(x[k]) & parity(y[j]) & self.q[k][j];
            }
        }
        acc
    }

    pub fn mul(&self, a: &GnElement, b: &GnElement) -> Result<GnElement> {
        self.check(a)?;
        self.check(b)?;
        let vec = a
            .vec
            .iter()
            .zip(&b.vec)
            .map(|(x, y)| x.checked_add(*y).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(GnElement { bit: a.bit ^ b.bit ^ self.beta(&a.vec, &b.vec), vec })
    }

    pub fn inv(&self, a: &GnElement) -> Result<GnElement> {
        self.check(a)?;
        let vec = a.vec.iter().map(|x| x.checked_neg().ok_or(Error::Overflow)).collect::<Result<_>>()?;
        Ok(GnElement { bit: a.bit ^ self.beta(&a.vec, &a.vec), vec })
    }

    /// `g^m = (m*bit + C(m,2)*beta(v,v), m*v)`.
    pub fn pow(&self, g: &GnElement, m: i64) -> Result<GnElement> {
        self.check(g)?;
        let vec = g.vec.iter().map(|x| x.checked_mul(m).ok_or(Error::Overflow)).collect::<Result<Vec<_>>>()?;
        // C(m,2) mod 2 is 1 exactly when m mod 4 is 2 or 3.
        let pairs = (m.rem_euclid(4) >= 2) as u8;
        let bit = (parity(m) & g.bit) ^ (pairs & self.beta(&g.vec, &g.vec));
        Ok(GnElement { bit, vec })
    }

    /// `a b a^-1 b^-1`.
    pub fn commutator(&self, a: &GnElement, b: &GnElement) -> Result<GnElement> {
        let ab = self.mul(a, b)?;
        let ba = self.mul(b, a)?;
        self.mul(&ab, &self.inv(&ba)?)
    }

    /// Conjugation `g_h = h^-1 g h`.
    pub fn conjugate(&self, g: &GnElement, h: &GnElement) -> Result<GnElement> {
        let left = self.mul(&self.inv(h)?, g)?;
        self.mul(&left, h)
    }

    /// Product of the given elements in order.
    pub fn product<'a>(&self, items: impl IntoIterator<Item = &'a GnElement>) -> Result<GnElement> {
        let mut acc = self.identity();
        for g in items {
            acc = self.mul(&acc, g)?;
        }
        Ok(acc)
    }

    /// The distinguished elements `s_ij`:
    /// `s_12 = s_1`, `s_1j = u_{j-1}..u_2 s_1`, `s_2j = nu u_{j-1}..u_1 s_1`,
    /// `s_ij = nu u_{j-1}..u_1 u_{i-1}..u_2 s_1` for `i >= 3`.
    pub fn s_ij(&self, i: usize, j: usize) -> Result<GnElement> {
        if i == 0 || i >= j {
            return Err(Error::IndexOutOfRange { index: i, max: j.saturating_sub(1) });
        }
        if j > self.n {
            return Err(Error::IndexOutOfRange { index: j, max: self.n });
        }
        let mut factors = Vec::new();
        if i == 1 {
            factors.extend((2..j).rev().map(|k| self.unit(k)));
        } else {
            factors.push(self.nu());
            factors.extend((1..j).rev().map(|k| self.unit(k)));
            factors.extend((2..i).rev().map(|k| self.unit(k)));
        }
        factors.push(self.s1());
        self.product(&factors)
    }

    fn forward_images(&self, i: usize) -> Result<Vec<GnElement>> {
        let mut images = self.basis();
        let ui = self.unit(i);
        images[i] = self.mul(&self.inv(&ui)?, &self.nu())?;
        if i >= 2 {
            images[i - 1] = self.mul(&ui, &self.unit(i - 1))?;
        }
        if i + 1 < self.n {
            images[i + 1] = self.mul(&ui, &self.unit(i + 1))?;
        }
        if i == 2 {
            images[0] = self.mul(&ui, &self.s1())?;
        }
        Ok(images)
    }

    /// Inverse of the automorphism with the given generator images: invert the
    /// abelianized matrix exactly, then fix each bit so the forward map sends the
    /// candidate back to the generator.
    fn inverse_images(&self, forward: &[GnElement]) -> Result<Vec<GnElement>> {
        let n = self.n;
        // columns of `m` are the abelianized images
        let m: Vec<Vec<i64>> = (0..n).map(|r| (0..n).map(|c| forward[c].vec[r]).collect()).collect();
        let inv = invert_unimodular(&m)?;
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let candidate = GnElement { bit: 0, vec: (0..n).map(|r| inv[r][k]).collect() };
            let image = self.apply_images(forward, &candidate)?;
            if image.vec != self.unit(k).vec {
                return Err(Error::Internal("abelianized inverse does not invert".into()));
            }
            out.push(GnElement { bit: image.bit, ..candidate });
        }
        Ok(out)
    }

    /// Applies the endomorphism determined by generator images.
    fn apply_images(&self, images: &[GnElement], g: &GnElement) -> Result<GnElement> {
        self.check(g)?;
        let mut acc = if g.bit == 1 { self.nu() } else { self.identity() };
        for (k, &e) in g.vec.iter().enumerate() {
            if e != 0 {
                acc = self.mul(&acc, &self.pow(&images[k], e)?)?;
            }
        }
        Ok(acc)
    }

    /// `g_{X~_i}` for `inverse = false`, `g_{X~_i^-1}` otherwise.
    pub fn act_generator(&self, g: &GnElement, i: usize, inverse: bool) -> Result<GnElement> {
        if i == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, max: self.n - 1 });
        }
        let table = if inverse { &self.backward[i - 1] } else { &self.forward[i - 1] };
        self.apply_images(table, g)
    }

    /// Action of a single signed letter.
    pub fn act_letter(&self, g: &GnElement, letter: i32) -> Result<GnElement> {
        self.act_generator(g, letter.unsigned_abs() as usize, letter < 0)
    }

    /// Right action of a braid word, letters applied left to right.
    pub fn act_word(&self, g: &GnElement, w: &BraidWord) -> Result<GnElement> {
        if w.strands() != self.n {
            return Err(Error::SizeMismatch { left: w.strands(), right: self.n });
        }
        let mut acc = g.clone();
        for &l in w.letters() {
            acc = self.act_letter(&acc, l)?;
        }
        Ok(acc)
    }

    /// Zero-pads an element of `G(m)`, `m <= n`, into `G(n)`.
    pub fn embed(&self, g: &GnElement) -> Result<GnElement> {
        if g.vec.len() > self.n {
            return Err(Error::SizeMismatch { left: g.vec.len(), right: self.n });
        }
        let mut vec = g.vec.clone();
        vec.resize(self.n, 0);
        Ok(GnElement { bit: g.bit, vec })
    }

    /// Random element with coordinates in `-range..=range`.
    pub fn random_element<R: Rng + ?Sized>(&self, range: i64, rng: &mut R) -> GnElement {
        GnElement { bit: rng.gen_range(0..=1), vec: (0..self.n).map(|_| rng.gen_range(-range..=range)).collect() }
    }

    /// Forward and inverse generator images, for inspection.
    pub fn action_tables(&self) -> (&[Vec<GnElement>], &[Vec<GnElement>]) {
        (&self.forward, &self.backward)
    }
}

fn invert_unimodular(m: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i128>>> = m
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut v: Vec<Ratio<i128>> = row.iter().map(|x| Ratio::from_integer(*x as i128)).collect();
            v.extend((0..n).map(|c| Ratio::from_integer((r == c) as i128)));
            v
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| a[r][col] != Ratio::from_integer(0))
            .ok_or_else(|| Error::Internal("singular action matrix".into()))?;
        a.swap(col, pivot);
        let p = a[col][col];
        for v in a[col].iter_mut() {
            *v /= p;
        }
        for r in 0..n {
            if r != col && a[r][col] != Ratio::from_integer(0) {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (v, pv) in a[r].iter_mut().zip(pivot_row) {
                    *v -= f * pv;
                }
            }
        }
    }
    a.iter()
        .map(|row| {
            row[n..]
                .iter()
                .map(|v| {
                    if v.is_integer() {
                        i64::try_from(v.to_integer()).map_err(|_| Error::Overflow)
                    } else {
                        Err(Error::Internal("action matrix is not unimodular".into()))
                    }
                })
                .collect()
        })
        .collect()
}

/// A finitely generated subgroup of `G(n)` with a membership test.
///
/// Generators are brought to row-echelon form over `Z` by multiplying group
/// elements (so the generated subgroup never changes); rows that collapse onto
/// the centre reveal whether `nu` lies in the subgroup.
#[derive(Debug, Clone)]
pub struct GnSubgroup {
    basis: Vec<(usize, GnElement)>,
    contains_nu: bool,
}

impl GnSubgroup {
    pub fn generated_by(gn: &Gn, gens: &[GnElement]) -> Result<Self> {
        let mut active: Vec<GnElement> = Vec::new();
        let mut contains_nu = false;
        for g in gens {
            gn.check(g)?;
            if g.vec.iter().all(|v| *v == 0) {
                contains_nu |= g.bit == 1;
            } else {
                active.push(g.clone());
            }
        }
        let mut basis = Vec::new();
        for col in 0..gn.strands() {
            loop {
                let mut nonzero: Vec<usize> = (0..active.len()).filter(|&r| active[r].vec[col] != 0).collect();
                if nonzero.is_empty() {
                    break;
                }
                nonzero.sort_by_key(|&r| active[r].vec[col].unsigned_abs());
                let p = nonzero[0];
                if nonzero.len() == 1 {
                    let mut row = active.swap_remove(p);
                    if row.vec[col] < 0 {
                        row = gn.inv(&row)?;
                    }
                    basis.push((col, row));
                    break;
                }
                let pivot = active[p].clone();
                for &r in &nonzero[1..] {
                    let q = active[r].vec[col].div_euclid(pivot.vec[col]);
                    active[r] = gn.mul(&active[r], &gn.pow(&pivot, -q)?)?;
                }
                let mut kept = Vec::with_capacity(active.len());
                for row in active.drain(..) {
                    if row.vec.iter().all(|v| *v == 0) {
                        contains_nu |= row.bit == 1;
                    } else {
                        kept.push(row);
                    }
                }
                active = kept;
            }
        }
        for (a, (_, x)) in basis.iter().enumerate() {
            for (_, y) in &basis[a + 1..] {
                contains_nu |= gn.q_form(&x.vec, &y.vec) == 1;
            }
        }
        Ok(GnSubgroup { basis, contains_nu })
    }

    pub fn contains_nu(&self) -> bool {
        self.contains_nu
    }

    /// Rank of the image in `A(n)`.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, gn: &Gn, g: &GnElement) -> Result<bool> {
        gn.check(g)?;
        let mut t = g.clone();
        let mut next = 0;
        for col in 0..gn.strands() {
            if next < self.basis.len() && self.basis[next].0 == col {
                let row = &self.basis[next].1;
                next += 1;
                if t.vec[col] % row.vec[col] != 0 {
                    return Ok(false);
                }
                let q = t.vec[col] / row.vec[col];
                t = gn.mul(&t, &gn.pow(row, -q)?)?;
            } else if t.vec[col] != 0 {
                return Ok(false);
            }
        }
        debug_assert!(t.vec.iter().all(|v| *v == 0));
        Ok(t.bit == 0 || self.contains_nu)
    }
}
