//! `B~_n`-groups, prime elements, the frame and orbit criteria for primality,
//! and transport of polarized pairs along half-twists.
//!
//! Statements quantified over all half-twists or all of `B~_n` are checked
//! through their finite reductions on the standard frame, plus seeded
//! sampling where no reduction exists. Reports say which is which through
//! the `bound` field.

mod identities;

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::hash::Hash;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::braid::{bn_equal, c_word, classify_pair, frame_transport, BraidWord, HalfTwist};
use crate::error::{Error, Result};
use crate::gn::{Gn, GnElement, GnSubgroup};
use crate::quotient::Tbn;

pub use identities::prime_identity_suite;

/// A group with a right action of `B~_n` given on frame generators.
pub trait ActionGroup {
    type Elem: Clone + Eq + Hash + fmt::Display + fmt::Debug;

    fn strands(&self) -> usize;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    /// `g_{X~_i}`, or `g_{X~_i^-1}` when `inverse` is set.
    fn apply(&self, g: &Self::Elem, i: usize, inverse: bool) -> Result<Self::Elem>;
    /// A generating set of the group.
    fn generators(&self) -> Vec<Self::Elem>;

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }

    fn apply_word(&self, g: &Self::Elem, w: &BraidWord) -> Result<Self::Elem> {
        if w.strands() != self.strands() {
            return Err(Error::SizeMismatch { left: w.strands(), right: self.strands() });
        }
        let mut acc = g.clone();
        for &l in w.letters() {
            acc = self.apply(&acc, l.unsigned_abs() as usize, l < 0)?;
        }
        Ok(acc)
    }

    /// `h^-1 g h`.
    fn conj(&self, g: &Self::Elem, h: &Self::Elem) -> Result<Self::Elem> {
        self.mul(&self.mul(&self.inv(h)?, g)?, h)
    }

    /// `a b a^-1 b^-1`.
    fn commutator(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        let ab = self.mul(a, b)?;
        self.mul(&ab, &self.inv(&self.mul(b, a)?)?)
    }
}

/// Decides whether a finitely generated subgroup contains given elements.
/// Kept apart from [`ActionGroup`] since most instances cannot provide it.
pub trait SubgroupOracle: ActionGroup {
    fn generated_contains(&self, gens: &[Self::Elem], targets: &[Self::Elem]) -> Result<bool>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GnSubgroupKind {
    /// all of `G(n)`
    Full,
    /// `G_0(n) = <u_1, ..., u_{n-1}>`
    G0,
}

/// `G(n)` or `G_0(n)` with the action of `B~_n`.
#[derive(Debug, Clone)]
pub struct GnInstance {
    gn: Gn,
    kind: GnSubgroupKind,
}

impl GnInstance {
    pub fn new(n: usize, kind: GnSubgroupKind) -> Result<Self> {
        Ok(GnInstance { gn: Gn::new(n)?, kind })
    }

    pub fn full(n: usize) -> Result<Self> {
        Self::new(n, GnSubgroupKind::Full)
    }

    pub fn g0(n: usize) -> Result<Self> {
        Self::new(n, GnSubgroupKind::G0)
    }

    pub fn gn(&self) -> &Gn {
        &self.gn
    }

    pub fn kind(&self) -> GnSubgroupKind {
        self.kind
    }
}

impl ActionGroup for GnInstance {
    type Elem = GnElement;

    fn strands(&self) -> usize {
        self.gn.strands()
    }

    fn identity(&self) -> GnElement {
        self.gn.identity()
    }

    fn mul(&self, a: &GnElement, b: &GnElement) -> Result<GnElement> {
        self.gn.mul(a, b)
    }

    fn inv(&self, a: &GnElement) -> Result<GnElement> {
        self.gn.inv(a)
    }

    fn apply(&self, g: &GnElement, i: usize, inverse: bool) -> Result<GnElement> {
        self.gn.act_generator(g, i, inverse)
    }

    fn generators(&self) -> Vec<GnElement> {
        match self.kind {
            GnSubgroupKind::Full => self.gn.generators(),
            GnSubgroupKind::G0 => self.gn.g0_generators(),
        }
    }
}

impl SubgroupOracle for GnInstance {
    fn generated_contains(&self, gens: &[GnElement], targets: &[GnElement]) -> Result<bool> {
        let h = GnSubgroup::generated_by(&self.gn, gens)?;
        for t in targets {
            if !h.contains(&self.gn, t)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    PassUpToBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub condition: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeReport {
    pub verdict: Verdict,
    pub conditions: BTreeMap<String, bool>,
    /// Set when a condition was only checked up to an orbit or word-length bound.
    pub bound: Option<usize>,
    pub seed: u64,
    pub witness: Option<Witness>,
}

impl PrimeReport {
    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    pub fn condition(&self, id: &str) -> Option<bool> {
        self.conditions.get(id).copied()
    }

    pub fn failing(&self) -> Option<&str> {
        self.witness.as_ref().map(|w| w.condition.as_str())
    }
}

/// Accumulates condition outcomes; the first failure becomes the witness.
pub(crate) struct Recorder {
    conditions: BTreeMap<String, bool>,
    witness: Option<Witness>,
    seed: u64,
    bound: Option<usize>,
}

impl Recorder {
    pub(crate) fn new(seed: u64) -> Self {
        Recorder { conditions: BTreeMap::new(), witness: None, seed, bound: None }
    }

    pub(crate) fn check(&mut self, id: &str, ok: bool, detail: impl FnOnce() -> String) -> bool {
        let slot = self.conditions.entry(id.to_string()).or_insert(true);
        *slot &= ok;
        if !ok && self.witness.is_none() {
            self.witness = Some(Witness { condition: id.to_string(), detail: detail() });
        }
        ok
    }

    pub(crate) fn check_eq<E: PartialEq + fmt::Display>(&mut self, id: &str, got: &E, want: &E) -> bool {
        self.check(id, got == want, || format!("got {got}, expected {want}"))
    }

    pub(crate) fn finish(self) -> PrimeReport {
        let failed = self.conditions.values().any(|ok| !ok);
        let verdict = if failed {
            Verdict::Fail
        } else if self.bound.is_some() {
            Verdict::PassUpToBound
        } else {
            Verdict::Pass
        };
        PrimeReport { verdict, conditions: self.conditions, bound: self.bound, seed: self.seed, witness: self.witness }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    pub seed: u64,
    /// Random elements (or configurations) sampled on top of fixed checks.
    pub samples: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { seed: 0, samples: 16 }
    }
}

fn word(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.to_vec()).expect("letters within the frame")
}

/// Generators plus random short products of them.
fn element_sample<G: ActionGroup, R: Rng>(g: &G, extra: usize, rng: &mut R) -> Result<Vec<G::Elem>> {
    let gens = g.generators();
    let mut out = gens.clone();
    if gens.is_empty() {
        return Ok(out);
    }
    for _ in 0..extra {
        let mut acc = g.identity();
        for _ in 0..rng.gen_range(1..=4) {
            let x = &gens[rng.gen_range(0..gens.len())];
            let x = if rng.gen() { x.clone() } else { g.inv(x)? };
            acc = g.mul(&acc, &x)?;
        }
        out.push(acc);
    }
    Ok(out)
}

/// Frame criterion for primality with supporting half-twist `X~_1`:
///
/// * `1`: `u_{X1^-1} = u^-1 tau`; `1.tau2`: `tau^2 = 1`; `1.tau-fixed`:
///   `tau_{X_j} = tau` for every frame generator; `1.tau-central`: `tau`
///   commutes with the generators and a random sample;
/// * `2a`: `u_{X2^-1 X1^-1} = u^-1 u_{X2^-1}`;
/// * `2b`: `u_{X1 X2^-1 X1^-1} = (u_{X1})^-1 u_{X1 X2^-1}`;
/// * `3`: `u_{X_j} = u` for `j >= 3`.
pub fn check_prime_frame<G: ActionGroup>(
    g: &G,
    u: &G::Elem,
    tau: &G::Elem,
    opts: &CheckOptions,
) -> Result<PrimeReport> {
    let n = g.strands();
    if n < 4 {
        return Err(Error::TooFewStrands { n, min: 4 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut rec = Recorder::new(opts.seed);
    let act = |x: &G::Elem, l: &[i32]| g.apply_word(x, &word(n, l));
    let u_inv = g.inv(u)?;

    rec.check_eq("1", &act(u, &[-1])?, &g.mul(&u_inv, tau)?);
    rec.check_eq("1.tau2", &g.mul(tau, tau)?, &g.identity());
    for j in 1..n {
        let moved = g.apply(tau, j, false)?;
        rec.check("1.tau-fixed", g.eq(&moved, tau), || format!("tau_X{j} = {moved}, tau = {tau}"));
    }
    for s in element_sample(g, opts.samples, &mut rng)? {
        let c = g.commutator(tau, &s)?;
        rec.check("1.tau-central", g.eq(&c, &g.identity()), || format!("[tau, {s}] = {c}"));
    }
    rec.check_eq("2a", &act(u, &[-2, -1])?, &g.mul(&u_inv, &act(u, &[-2])?)?);
    rec.check_eq("2b", &act(u, &[1, -2, -1])?, &g.mul(&g.inv(&act(u, &[1])?)?, &act(u, &[1, -2])?)?);
    for j in 3..n {
        let moved = g.apply(u, j, false)?;
        rec.check("3", g.eq(&moved, u), || format!("u_X{j} = {moved}, u = {u}"));
    }
    Ok(rec.finish())
}

/// Elements `S_b` for words `b` of length at most `bound`, in discovery order.
pub fn bounded_orbit<G: ActionGroup>(g: &G, s: &G::Elem, bound: usize) -> Result<Vec<G::Elem>> {
    let mut seen: HashSet<G::Elem> = HashSet::new();
    let mut orbit = vec![s.clone()];
    seen.insert(s.clone());
    let mut frontier = orbit.clone();
    for _ in 0..bound {
        let mut next = Vec::new();
        for x in &frontier {
            for i in 1..g.strands() {
                for inverse in [false, true] {
                    let y = g.apply(x, i, inverse)?;
                    if seen.insert(y.clone()) {
                        orbit.push(y.clone());
                        next.push(y);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(orbit)
}

/// Orbit criterion for primality (`n >= 5`). Generation by the orbit is
/// checked on `S_b` for `|b| <= bound` and reported as bounded.
///
/// `tau_T` in condition `2b` is conjugation by the group element
/// `T = S_{X2^-1}`.
pub fn check_prop71<G: SubgroupOracle>(g: &G, s: &G::Elem, bound: usize, opts: &CheckOptions) -> Result<PrimeReport> {
    let n = g.strands();
    if n < 5 {
        return Err(Error::TooFewStrands { n, min: 5 });
    }
    let mut rec = Recorder::new(opts.seed);
    rec.bound = Some(bound);
    let act = |x: &G::Elem, l: &[i32]| g.apply_word(x, &word(n, l));
    let s_inv = g.inv(s)?;

    let orbit = bounded_orbit(g, s, bound)?;
    let gens = g.generators();
    let generated = g.generated_contains(&orbit, &gens)?;
    rec.check("0", generated, || {
        let closed = bounded_orbit(g, s, bound + 1).map(|o| o.len() == orbit.len()).unwrap_or(false);
        let scope = if closed { "the full orbit" } else { "orbit truncated at the bound; inconclusive" };
        format!("{} orbit elements within distance {bound} do not generate the group ({scope})", orbit.len())
    });
    rec.check_eq("1a", &act(s, &[-2, -1])?, &g.mul(&s_inv, &act(s, &[-2])?)?);
    rec.check_eq("1b", &act(s, &[1, -2, -1])?, &g.mul(&g.inv(&act(s, &[1])?)?, &act(s, &[1, -2])?)?);
    let tau = g.mul(s, &act(s, &[-1])?)?;
    let t = act(s, &[-2])?;
    rec.check_eq("2a", &act(&tau, &[1, 1])?, &tau);
    rec.check_eq("2b", &g.conj(&tau, &t)?, &g.inv(&act(&tau, &[1])?)?);
    for j in 3..n {
        let moved = g.apply(s, j, false)?;
        rec.check("3", g.eq(&moved, s), || format!("S_X{j} = {moved}, S = {s}"));
    }
    rec.check_eq("4", &g.apply_word(s, &c_word(n)?)?, s);
    Ok(rec.finish())
}

/// A prime element together with its polarized supporting half-twist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarizedPair<E> {
    pub h: E,
    pub ht: HalfTwist,
    pub tau: E,
}

impl<E: Clone> PolarizedPair<E> {
    /// Builds the pair with central element `tau = h * h_{X~^-1}`.
    pub fn new<G: ActionGroup<Elem = E>>(g: &G, h: E, ht: HalfTwist) -> Result<Self> {
        let tau = g.mul(&h, &g.apply_word(&h, &ht.word().inv())?)?;
        Ok(PolarizedPair { h, ht, tau })
    }
}

/// Whether `(from)_b` is `to` with the same ordered endpoints.
pub fn carries(from: &HalfTwist, to: &HalfTwist, b: &BraidWord) -> Result<bool> {
    let moved = from.conjugate(b)?;
    Ok(moved.endpoints() == to.endpoints() && bn_equal(&moved.word(), &to.word())?)
}

/// A braid `b` with `(from)_b = to` preserving polarization:
/// undo `from`'s conjugator, move along the frame, apply `to`'s conjugator,
/// and if the ends came out swapped conjugate by `to` itself.
pub fn transport_conjugator(from: &HalfTwist, to: &HalfTwist) -> Result<BraidWord> {
    let n = from.strands();
    if to.strands() != n {
        return Err(Error::SizeMismatch { left: n, right: to.strands() });
    }
    let mut b = BraidWord::product(n, [&from.conj.inv(), &frame_transport(n, from.index, to.index)?, &to.conj])?;
    if from.conjugate(&b)?.endpoints() != to.endpoints() {
        b = b.mul(&to.word())?;
    }
    if !carries(from, to, &b)? {
        return Err(Error::Internal(format!("transport from {from} to {to} failed verification")));
    }
    Ok(b)
}

/// `L_{(h,X)}(T)`: the prime element on `target` coherent with the pair.
pub fn transport<G: ActionGroup>(g: &G, pair: &PolarizedPair<G::Elem>, target: &HalfTwist) -> Result<G::Elem> {
    let b = transport_conjugator(&pair.ht, target)?;
    g.apply_word(&pair.h, &b)
}

/// Transport along a caller-supplied conjugator, which must carry the pair's
/// half-twist onto `target` preserving polarization.
pub fn transport_via<G: ActionGroup>(
    g: &G,
    pair: &PolarizedPair<G::Elem>,
    target: &HalfTwist,
    b: &BraidWord,
) -> Result<G::Elem> {
    if !carries(&pair.ht, target, b)? {
        return Err(Error::NotCoherent { from: pair.ht.to_string(), to: target.to_string() });
    }
    g.apply_word(&pair.h, b)
}

/// `L_{(h,X)}(X~_i)` for `i = 1..n-1`.
pub fn coherent_family<G: ActionGroup>(g: &G, pair: &PolarizedPair<G::Elem>) -> Result<Vec<G::Elem>> {
    let n = g.strands();
    (1..n).map(|i| transport(g, pair, &HalfTwist::frame(n, i)?)).collect()
}

/// Checks the prime axioms for `h` supported on `x` against sample half-twists.
///
/// Samples sharing one endpoint with `x` and satisfying the triple relation are
/// checked against Axiom (2): `2a` is `g_{X Y^-1 X^-1} = (g_X)^-1 g_{X Y^-1}`,
/// `2b` is `g_{Y^-1 X^-1} = g^-1 g_{Y^-1}`. Samples with no common endpoint
/// that commute with `x` in `B~_n` (disjoint or transversal) are checked
/// against `3`: `g_Z = g`. Other samples are ignored.
pub fn axiom_spot_check<G: ActionGroup>(
    g: &G,
    h: &G::Elem,
    x: &HalfTwist,
    tau: &G::Elem,
    samples: &[HalfTwist],
    opts: &CheckOptions,
) -> Result<PrimeReport> {
    let n = g.strands();
    let tbn = Tbn::new(n)?;
    let mut rec = Recorder::new(opts.seed);
    let xw = x.word();
    let h_inv = g.inv(h)?;
    rec.check_eq("1", &g.apply_word(h, &xw.inv())?, &g.mul(&h_inv, tau)?);
    for y in samples {
        let rel = classify_pair(x, y)?;
        let yw = y.word();
        if rel.common_endpoints == 1 && rel.triple {
            let lhs = g.apply_word(h, &BraidWord::product(n, [&xw, &yw.inv(), &xw.inv()])?)?;
            let gx_inv = g.inv(&g.apply_word(h, &xw)?)?;
            let rhs = g.mul(&gx_inv, &g.apply_word(h, &xw.mul(&yw.inv())?)?)?;
            rec.check("2a", lhs == rhs, || format!("against {y}: got {lhs}, expected {rhs}"));
            let lhs = g.apply_word(h, &yw.inv().mul(&xw.inv())?)?;
            let rhs = g.mul(&h_inv, &g.apply_word(h, &yw.inv())?)?;
            rec.check("2b", lhs == rhs, || format!("against {y}: got {lhs}, expected {rhs}"));
        } else if rel.common_endpoints == 0 && tbn.in_kernel(&BraidWord::commutator(&xw, &yw)?)? {
            let moved = g.apply_word(h, &yw)?;
            rec.check("3", &moved == h, || format!("against {y}: got {moved}, expected {h}"));
        }
    }
    Ok(rec.finish())
}

/// Word of the canonical prime `(X_1^2)_{X_2^-1} X_2^-2 = X_2 X_1^2 X_2^-1 X_2^-2`.
pub const CANONICAL_PRIME_WORD: [i32; 6] = [2, 1, 1, -2, -2, -2];

/// The prime `Lambda((X~_1^2)_{X~_2^-1} X~_2^-2)` of `G_0(n)` on the frame `X~_1`,
/// with central element `nu`.
pub fn canonical_prime(n: usize) -> Result<PolarizedPair<GnElement>> {
    let tbn = Tbn::new(n)?;
    let h = tbn.lambda(&word(n, &CANONICAL_PRIME_WORD))?;
    let pair = PolarizedPair::new(&GnInstance::full(n)?, h, HalfTwist::frame(n, 1)?)?;
    if pair.tau != tbn.gn().nu() {
        return Err(Error::Internal(format!("canonical prime has central element {}", pair.tau)));
    }
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(bit: u8, vec: &[i64]) -> GnElement {
        GnElement { bit, vec: vec.to_vec() }
    }

    #[test]
    fn canonical_prime_passes_frame_check() {
        for n in 4..=7 {
            let g = GnInstance::full(n).unwrap();
            let pair = canonical_prime(n).unwrap();
            assert!(pair.h.in_g0());
            assert_eq!(pair.tau, g.gn().nu());
            let r = check_prime_frame(&g, &pair.h, &pair.tau, &CheckOptions::default()).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        }
    }

    #[test]
    fn frame_check_failures() {
        let g = GnInstance::full(5).unwrap();
        let pair = canonical_prime(5).unwrap();
        let opts = CheckOptions::default();
        let r = check_prime_frame(&g, &pair.h, &g.identity(), &opts).unwrap();
        assert_eq!(r.failing(), Some("1"));

        let u12 = el(0, &[0, 1, 1, 0, 0]);
        let r = check_prime_frame(&g, &u12, &g.gn().nu(), &opts).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.condition("3"), Some(false));
    }

    #[test]
    fn canonical_prime_value() {
        let pair = canonical_prime(5).unwrap();
        assert_eq!(pair.h, el(1, &[0, -1, 0, 0, 0]));
        assert!(canonical_prime(3).is_err());
    }

    #[test]
    fn orbit_criterion_examples() {
        let g = GnInstance::g0(5).unwrap();
        let opts = CheckOptions::default();
        let pair = canonical_prime(5).unwrap();
        let r = check_prop71(&g, &pair.h, 3, &opts).unwrap();
        assert_eq!(r.verdict, Verdict::PassUpToBound, "{r:?}");
        assert_eq!(r.bound, Some(3));

        let r = check_prop71(&g, &g.gn().nu(), 3, &opts).unwrap();
        assert_eq!(r.failing(), Some("0"));

        let full = GnInstance::full(5).unwrap();
        let r = check_prop71(&full, &full.gn().s1(), 3, &opts).unwrap();
        assert_eq!(r.failing(), Some("1a"));
        assert!(check_prop71(&GnInstance::g0(4).unwrap(), &pair.h, 3, &opts).is_err());
    }

    #[test]
    fn transport_examples() {
        let n = 5;
        let g = GnInstance::full(n).unwrap();
        let pair = canonical_prime(n).unwrap();
        assert_eq!(transport(&g, &pair, &pair.ht).unwrap(), pair.h);
        let anti = transport(&g, &pair, &pair.ht.flipped()).unwrap();
        assert_eq!(anti, g.mul(&g.inv(&pair.h).unwrap(), &pair.tau).unwrap());
        // the coherent family on the frame is u_i^-1 nu under this Lambda
        let xi = coherent_family(&g, &pair).unwrap();
        for (k, x) in xi.iter().enumerate() {
            let u = g.gn().u(k + 1).unwrap();
            assert_eq!(*x, g.mul(&g.inv(&u).unwrap(), &g.gn().nu()).unwrap());
        }
        let wrong = BraidWord::new(n, vec![2]).unwrap();
        assert!(matches!(
            transport_via(&g, &pair, &HalfTwist::frame(n, 3).unwrap(), &wrong),
            Err(Error::NotCoherent { .. })
        ));
    }

    #[test]
    fn spot_check_examples() {
        let n = 5;
        let g = GnInstance::full(n).unwrap();
        let pair = canonical_prime(n).unwrap();
        let f = |i| HalfTwist::frame(n, i).unwrap();
        let transversal = HalfTwist::new(BraidWord::new(n, vec![1, 3, -1, -2]).unwrap(), 2, false).unwrap();
        let samples = vec![f(2), f(4), f(3), transversal];
        let r = axiom_spot_check(&g, &pair.h, &pair.ht, &pair.tau, &samples, &CheckOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        for id in ["1", "2a", "2b", "3"] {
            assert_eq!(r.condition(id), Some(true), "{id}");
        }
    }

    #[test]
    fn report_json_shape() {
        let g = GnInstance::g0(5).unwrap();
        let r = check_prop71(&g, &g.gn().nu(), 2, &CheckOptions::default()).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["verdict"], "fail");
        assert_eq!(v["bound"], 2);
        assert_eq!(v["seed"], 0);
        assert_eq!(v["witness"]["condition"], "0");
        assert_eq!(v["conditions"]["0"], false);
    }
}
