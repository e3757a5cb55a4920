//! Seeded property checks over the whole stack, grouped in named suites.
//!
//! Every check is a plain function returning a [`CheckResult`], so the same
//! code backs the `verify` command and the test suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::braid::{
    bn_equal, c_word, quadrangle_relator, random_reduced_word, tits_lift, transversal_commutator,
    transversal_commutator_expanded, BraidWord, HalfTwist,
};
use crate::error::{Error, Result};
use crate::freegroup::FreeWord;
use crate::gn::{Gn, GnElement};
use crate::perm::Perm;
use crate::primes::{
    axiom_spot_check, canonical_prime, check_prime_frame, check_prop71, coherent_family, prime_identity_suite,
    transport, transport_conjugator, transport_via, ActionGroup, CheckOptions, GnInstance, Verdict,
};
use crate::quotient::{Tbn, TbnNormalForm};

pub const SUITES: [&str; 7] = ["artin", "tits", "gn-presentation", "gn-action", "quotient", "kernel", "primes"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub n: usize,
    pub cases: usize,
    pub seed: u64,
}

struct Tally {
    name: String,
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    fn new(name: impl Into<String>) -> Self {
        Tally { name: name.into(), cases: 0, failure: None }
    }

    fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult { name: self.name, passed: self.failure.is_none(), cases: self.cases, detail: self.failure }
    }
}

fn rng_for(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn word(n: usize, letters: &[i32]) -> Result<BraidWord> {
    BraidWord::new(n, letters.to_vec())
}

/// A random pure word: a random word closed up by the inverse positive lift
/// of its permutation, times a few conjugated squares of generators.
pub fn random_pure_word<R: Rng>(n: usize, max_len: usize, rng: &mut R) -> Result<BraidWord> {
    let w = BraidWord::random(n, rng.gen_range(0..=max_len), rng);
    let mut p = w.mul(&tits_lift(&w.psi()).inv())?;
    for _ in 0..rng.gen_range(0..=2) {
        let i = rng.gen_range(1..n as i32);
        let e = if rng.gen() { 2 } else { -2 };
        let sq = BraidWord::new(n, vec![i])?.pow(e);
        let b = BraidWord::random(n, rng.gen_range(0..=4), rng);
        p = p.mul(&sq.conjugate_by(&b)?)?;
    }
    Ok(p)
}

// ---------------------------------------------------------------- artin

/// Braid and far-commutation relations hold and generators are nontrivial.
pub fn artin_relations(n: usize) -> Result<CheckResult> {
    let mut t = Tally::new(format!("artin relations (n={n})"));
    let id = BraidWord::identity(n);
    for i in 1..n as i32 {
        let x = word(n, &[i])?;
        t.case(!bn_equal(&x, &id)? && !bn_equal(&x.pow(2), &id)?, || format!("X_{i} acts trivially"));
        for j in i + 1..n as i32 {
            let ok = if j == i + 1 {
                bn_equal(&word(n, &[i, j, i])?, &word(n, &[j, i, j])?)?
            } else {
                bn_equal(&word(n, &[i, j])?, &word(n, &[j, i])?)?
            };
            t.case(ok, || format!("relation between X_{i} and X_{j} fails"));
            if j == i + 1 {
                t.case(!bn_equal(&word(n, &[i, j])?, &word(n, &[j, i])?)?, || format!("X_{i} and X_{j} commute"));
            }
        }
    }
    Ok(t.finish())
}

/// The product `x_n ... x_1` is fixed by the action of random words, and
/// `w w^-1` acts trivially.
pub fn artin_product_invariant(n_max: usize, cases: usize, max_len: usize, seed: u64) -> Result<CheckResult> {
    let mut t = Tally::new(format!("artin descending product (n<={n_max}, len<={max_len})"));
    let mut rng = rng_for(seed, 1);
    for _ in 0..cases {
        let n = rng.gen_range(2..=n_max);
        let w = BraidWord::random(n, rng.gen_range(0..=max_len), &mut rng);
        let images = w.artin_images();
        let mut prod = FreeWord::identity(n);
        for img in images.iter().rev() {
            prod = prod.mul(img)?;
        }
        let want: Vec<i32> = (1..=n as i32).rev().collect();
        let ok = prod.letters() == want.as_slice() && bn_equal(&w, &w)?;
        t.case(ok, || format!("word {w} moves the descending product to {prod}"));
    }
    Ok(t.finish())
}

// ---------------------------------------------------------------- tits

fn random_perm<R: Rng>(n: usize, rng: &mut R) -> Perm {
    let mut images: Vec<usize> = (1..=n).collect();
    for k in (1..n).rev() {
        images.swap(k, rng.gen_range(0..=k));
    }
    Perm::from_images(images).expect("shuffle is a permutation")
}

/// The positive lift has the right permutation and length, and does not
/// depend on the reduced word chosen.
pub fn tits_section(n: usize, cases: usize, seed: u64) -> Result<CheckResult> {
    let mut t = Tally::new(format!("tits section (n={n})"));
    let mut rng = rng_for(seed, 2);
    for _ in 0..cases {
        let p = random_perm(n, &mut rng);
        let lift = tits_lift(&p);
        let other = random_reduced_word(&p, &mut rng);
        let ok = lift.psi() == p && lift.len() == p.inversions() && other.psi() == p && bn_equal(&lift, &other)?;
        t.case(ok, || format!("perm {p}: lift {lift}, other reduced word {other}"));
    }
    Ok(t.finish())
}

// ---------------------------------------------------------------- gn presentation

/// Defining relations of `G(n)` in the generators `s_1, u_i, nu`.
pub fn gn_presentation(n: usize) -> Result<CheckResult> {
    let gn = Gn::new(n)?;
    let mut t = Tally::new(format!("G(n) presentation (n={n})"));
    let (s1, nu, id) = (gn.s1(), gn.nu(), gn.identity());
    for i in 1..n {
        let ui = gn.u(i)?;
        let want = if i == 2 { &nu } else { &id };
        t.case(gn.commutator(&s1, &ui)? == *want, || format!("[s_1, u_{i}]"));
        for j in i + 1..n {
            let want = if j == i + 1 { &nu } else { &id };
            t.case(gn.commutator(&ui, &gn.u(j)?)? == *want, || format!("[u_{i}, u_{j}]"));
        }
    }
    for g in gn.generators() {
        t.case(gn.commutator(&nu, &g)? == id, || format!("nu does not commute with {g}"));
    }
    t.case(gn.mul(&nu, &nu)? == id, || "nu^2 != 1".into());
    Ok(t.finish())
}

/// `[a, b] = (Q(a, b), 0)`, associativity and inverses on random elements.
pub fn gn_commutator_law(n: usize, cases: usize, seed: u64) -> Result<CheckResult> {
    let gn = Gn::new(n)?;
    let mut t = Tally::new(format!("G(n) commutator law (n={n})"));
    let mut rng = rng_for(seed, 3);
    for _ in 0..cases {
        let a = gn.random_element(5, &mut rng);
        let b = gn.random_element(5, &mut rng);
        let c = gn.random_element(5, &mut rng);
        let comm = gn.commutator(&a, &b)?;
        let want = GnElement { bit: gn.q_form(&a.vec, &b.vec), vec: vec![0; n] };
        let assoc = gn.mul(&gn.mul(&a, &b)?, &c)? == gn.mul(&a, &gn.mul(&b, &c)?)?;
        let inverse = gn.mul(&a, &gn.inv(&a)?)?.is_identity();
        t.case(comm == want && assoc && inverse, || format!("a = {a}, b = {b}, [a,b] = {comm}"));
    }
    Ok(t.finish())
}

/// `[s_ij, s_kl] = nu` exactly when the index pairs share one element.
pub fn gn_sij_table(n: usize) -> Result<CheckResult> {
    let gn = Gn::new(n)?;
    let mut t = Tally::new(format!("s_ij commutator table (n={n})"));
    let mut pairs = Vec::new();
    for j in 2..=n {
        for i in 1..j {
            pairs.push((i, j, gn.s_ij(i, j)?));
        }
    }
    for (i, j, a) in &pairs {
        for (k, l, b) in &pairs {
            let shared = [i, j].iter().filter(|x| **x == k || **x == l).count();
            let want = if shared == 1 { gn.nu() } else { gn.identity() };
            let got = gn.commutator(a, b)?;
            t.case(got == want, || format!("[s_{i}{j}, s_{k}{l}] = {got}"));
        }
    }
    Ok(t.finish())
}

/// Operations in `G(n-1)` commute with zero-padding into `G(n)`.
pub fn gn_embedding(n: usize, cases: usize, seed: u64) -> Result<CheckResult> {
    let big = Gn::new(n)?;
    let small = Gn::new(n - 1)?;
    let mut t = Tally::new(format!("G(n-1) embedding (n={n})"));
    let mut rng = rng_for(seed, 4);
    for _ in 0..cases {
        let a = small.random_element(4, &mut rng);
        let b = small.random_element(4, &mut rng);
        let (pa, pb) = (big.embed(&a)?, big.embed(&b)?);
        let mut ok = big.embed(&small.mul(&a, &b)?)? == big.mul(&pa, &pb)?;
        ok &= big.embed(&small.inv(&a)?)? == big.inv(&pa)?;
        for i in 1..n - 1 {
            for inverse in [false, true] {
                ok &= big.embed(&small.act_generator(&a, i, inverse)?)? == big.act_generator(&pa, i, inverse)?;
            }
        }
        t.case(ok, || format!("a = {a}, b = {b}"));
    }
    for j in 2..n {
        for i in 1..j {
            t.case(big.embed(&small.s_ij(i, j)?)? == big.s_ij(i, j)?, || format!("s_{i}{j} does not embed"));
        }
    }
    Ok(t.finish())
}

// ---------------------------------------------------------------- gn action

/// Each generator action is a bijective homomorphism that fixes `nu` and
/// preserves commutators of generators.
pub fn gn_automorphisms(n: usize, cases: usize, seed: u64) -> Result<CheckResult> {
    let gn = Gn::new(n)?;
    let mut t = Tally::new(format!("generator actions are automorphisms (n={n})"));
    let mut rng = rng_for(seed, 5);
    let basis = gn.generators();
    for i in 1..n {
        for inverse in [false, true] {
            let f = |g: &GnElement| gn.act_generator(g, i, inverse);
            t.case(f(&gn.nu())? == gn.nu(), || format!("X_{i} moves nu"));
            for a in &basis {
                for b in &basis {
                    let lhs = gn.commutator(&f(a)?, &f(b)?)?;
                    let rhs = f(&gn.commutator(a, b)?)?;
                    t.case(lhs == rhs, || format!("X_{i}^{inverse}: relator [{a}, {b}] not preserved"));
                }
            }
            for _ in 0..cases {
                let a = gn.random_element(4, &mut rng);
                let b = gn.random_element(4, &mut rng);
                let ok =
                    f(&gn.mul(&a, &b)?)? == gn.mul(&f(&a)?, &f(&b)?)? && gn.act_generator(&f(&a)?, i, !inverse)? == a;
                t.case(ok, || format!("X_{i}: a = {a}, b = {b}"));
            }
        }
    }
    Ok(t.finish())
}

/// Braid relations, far commutation and triviality of the quadrangle relator
/// and of the transversal commutator, on the generators of `G(n)`.
pub fn gn_braid_relations(n: usize) -> Result<CheckResult> {
    let gn = Gn::new(n)?;
    let mut t = Tally::new(format!("action respects B~_n relations (n={n})"));
    let basis = gn.generators();
    let mut relators = Vec::new();
    for i in 1..n as i32 {
        for j in i + 1..n as i32 {
            if j == i + 1 {
                relators.push(word(n, &[i, j, i, -j, -i, -j])?);
            } else {
                relators.push(word(n, &[i, j, -i, -j])?);
            }
        }
    }
    if n >= 4 {
        relators.push(quadrangle_relator(n)?);
        relators.push(transversal_commutator(n)?);
    }
    for r in &relators {
        for g in &basis {
            let got = gn.act_word(g, r)?;
            t.case(got == *g, || format!("relator {r} moves {g} to {got}"));
        }
    }
    Ok(t.finish())
}

/// The action of `y^2`, `y = (X_1)_b`, is conjugation by `(s_1)_b`; for
/// `b` moving `X_1` to `X_i` this is conjugation by `s_{i,i+1}`.
pub fn gn_squares_conjugation(n: usize, cases: usize, seed: u64) -> Result<CheckResult> {
    let gn = Gn::new(n)?;
    let mut t = Tally::new(format!("squares act as conjugation (n={n})"));
    let basis = gn.generators();
    for i in 1..n {
        let s = gn.s_ij(i, i + 1)?;
        let sq = word(n, &[i as i32, i as i32])?;
        for g in &basis {
            t.case(gn.act_word(g, &sq)? == gn.conjugate(g, &s)?, || format!("X_{i}^2 on {g}"));
        }
    }
    let mut rng = rng_for(seed, 6);
    let x1sq = word(n, &[1, 1])?;
    for _ in 0..cases {
        let b = BraidWord::random(n, rng.gen_range(0..=8), &mut rng);
        let y2 = x1sq.conjugate_by(&b)?;
        let s = gn.act_word(&gn.s1(), &b)?;
        let g = gn.random_element(3, &mut rng);
        t.case(gn.act_word(&g, &y2)? == gn.conjugate(&g, &s)?, || format!("b = {b}, g = {g}"));
    }
    Ok(t.finish())
}

/// Hurwitz moves on `(s_{n-1,n}, ..., s_{1n})` under `X_1..X_{n-2}`.
pub fn gn_hurwitz(n: usize) -> Result<CheckResult> {
    let gn = Gn::new(n)?;
    let mut t = Tally::new(format!("Hurwitz moves (n={n})"));
    let s = |j: usize| gn.s_ij(j, n);
    for k in 1..n - 1 {
        for j in 1..n {
            let got = gn.act_generator(&s(j)?, k, false)?;
            let want = if j == k {
                s(k + 1)?
            } else if j == k + 1 {
                let (a, b) = (s(k + 1)?, s(k)?);
                let alt = gn.mul(&b, &gn.nu())?;
                let conj = gn.mul(&gn.mul(&a, &b)?, &gn.inv(&a)?)?;
                t.case(alt == conj, || format!("s_{k}{n} nu != s_{}{n} s_{k}{n} s_{}{n}^-1", k + 1, k + 1));
                conj
            } else {
                s(j)?
            };
            t.case(got == want, || format!("(s_{j}{n})_X{k} = {got}, expected {want}"));
        }
    }
    Ok(t.finish())
}

// ---------------------------------------------------------------- quotient

/// `exponent_sum(w) = inversions(psi(w)) + 2 a0`.
pub fn degree_law(n_max: usize, cases: usize, max_len: usize, seed: u64) -> Result<CheckResult> {
    let mut t = Tally::new(format!("degree law (n<={n_max})"));
    let mut rng = rng_for(seed, 7);
    let tables: Vec<Tbn> = (4..=n_max).map(Tbn::new).collect::<Result<_>>()?;
    for _ in 0..cases {
        let tbn = &tables[rng.gen_range(0..tables.len())];
        let n = tbn.strands();
        let w = BraidWord::random(n, rng.gen_range(0..=max_len), &mut rng);
        let d = tbn.degree_decomposition(&w)?;
        let ok = w.exponent_sum() == d.length as i64 + 2 * d.a0;
        t.case(ok, || format!("word {w}: exponent sum {} vs {d:?}", w.exponent_sum()));
    }
    Ok(t.finish())
}

/// `Lambda(p1 p2) = Lambda(p1) Lambda(p2)` on random pure words.
pub fn lambda_homomorphism(n: usize, cases: usize, seed: u64) -> Result<CheckResult> {
    let tbn = Tbn::new(n)?;
    let gn = tbn.gn();
    let mut t = Tally::new(format!("Lambda is a homomorphism (n={n})"));
    let mut rng = rng_for(seed, 8);
    for _ in 0..cases {
        let p1 = random_pure_word(n, 12, &mut rng)?;
        let p2 = random_pure_word(n, 12, &mut rng)?;
        let lhs = tbn.lambda(&p1.mul(&p2)?)?;
        let rhs = gn.mul(&tbn.lambda(&p1)?, &tbn.lambda(&p2)?)?;
        t.case(lhs == rhs, || format!("p1 = {p1}, p2 = {p2}: {lhs} vs {rhs}"));
    }
    Ok(t.finish())
}

/// `Lambda(b^-1 p b) = Lambda(p)_b`.
pub fn lambda_equivariance(n: usize, cases: usize, seed: u64) -> Result<CheckResult> {
    let tbn = Tbn::new(n)?;
    let mut t = Tally::new(format!("Lambda is equivariant (n={n})"));
    let mut rng = rng_for(seed, 9);
    for _ in 0..cases {
        let p = random_pure_word(n, 12, &mut rng)?;
        let b = BraidWord::random(n, rng.gen_range(0..=12), &mut rng);
        let lhs = tbn.lambda(&p.conjugate_by(&b)?)?;
        let rhs = tbn.gn().act_word(&tbn.lambda(&p)?, &b)?;
        t.case(lhs == rhs, || format!("p = {p}, b = {b}: {lhs} vs {rhs}"));
    }
    Ok(t.finish())
}

/// The abelian part of `Lambda(p)` is `sum_{i<j} lk_ij(p) ab(s_ij)`.
pub fn lambda_linking(n: usize, cases: usize, seed: u64) -> Result<CheckResult> {
    let tbn = Tbn::new(n)?;
    let mut t = Tally::new(format!("abelian part from linking numbers (n={n})"));
    let mut rng = rng_for(seed, 10);
    for _ in 0..cases {
        let p = random_pure_word(n, 16, &mut rng)?;
        let want = linking_abelian_part(tbn.gn(), &p)?;
        let got = tbn.lambda(&p)?;
        t.case(got.vec == want, || format!("p = {p}: {got} vs abelian part {want:?}"));
    }
    Ok(t.finish())
}

/// `sum_{i<j} lk_ij(p) ab(s_ij)`, computed without the normal-form scan.
fn linking_abelian_part(gn: &Gn, p: &BraidWord) -> Result<Vec<i64>> {
    let n = gn.strands();
    let lk = p.linking_matrix()?;
    let mut acc = vec![0i64; n];
    for j in 2..=n {
        for i in 1..j {
            for (w, a) in acc.iter_mut().zip(gn.s_ij(i, j)?.vec) {
                *w += lk[i - 1][j - 1] * a;
            }
        }
    }
    Ok(acc)
}

/// Rebuilding a word from its normal form along a different reduced word
/// for the permutation gives the same normal form.
pub fn section_independence(n: usize, cases: usize, seed: u64) -> Result<CheckResult> {
    let tbn = Tbn::new(n)?;
    let mut t = Tally::new(format!("section independence (n={n})"));
    let mut rng = rng_for(seed, 11);
    for _ in 0..cases {
        let w = BraidWord::random(n, rng.gen_range(0..=30), &mut rng);
        let nf = tbn.normal_form(&w)?;
        let rebuilt = random_reduced_word(&nf.perm, &mut rng).mul(&tbn.lift(&nf.g)?)?;
        let again = tbn.normal_form(&rebuilt)?;
        t.case(again == nf, || format!("word {w}"));
    }
    Ok(t.finish())
}

/// `normal_form(lift(g)) = (id, g)`.
pub fn lift_round_trip(n: usize, cases: usize, seed: u64) -> Result<CheckResult> {
    let tbn = Tbn::new(n)?;
    let mut t = Tally::new(format!("lift round trip (n={n})"));
    let mut rng = rng_for(seed, 12);
    for _ in 0..cases {
        let g = tbn.gn().random_element(3, &mut rng);
        let nf = tbn.normal_form(&tbn.lift(&g)?)?;
        let want = TbnNormalForm { perm: Perm::identity(n), g: g.clone() };
        t.case(nf == want, || format!("g = {g} comes back as {}", nf.g));
    }
    Ok(t.finish())
}

/// Inserting a relator of `B~_n` anywhere in a word leaves the normal form unchanged.
pub fn normal_form_well_defined(n: usize, cases: usize, seed: u64) -> Result<CheckResult> {
    let tbn = Tbn::new(n)?;
    let mut t = Tally::new(format!("normal form ignores relators (n={n})"));
    let mut rng = rng_for(seed, 13);
    let mut relators = vec![quadrangle_relator(n)?, transversal_commutator(n)?];
    for i in 1..n as i32 - 1 {
        relators.push(word(n, &[i, i + 1, i, -i - 1, -i, -i - 1])?);
        relators.push(word(n, &[i, -i])?);
    }
    relators.push(word(n, &[1, 3, -1, -3])?);
    for _ in 0..cases {
        let a = BraidWord::random(n, rng.gen_range(0..=15), &mut rng);
        let b = BraidWord::random(n, rng.gen_range(0..=15), &mut rng);
        let r = &relators[rng.gen_range(0..relators.len())];
        let with = BraidWord::product(n, [&a, r, &b])?;
        t.case(tbn.tbn_equal(&with, &a.mul(&b)?)?, || format!("{a} | {r} | {b}"));
    }
    Ok(t.finish())
}

/// `c` has normal form `(id, nu)`, squares to 1 and is central.
pub fn c_structure(n: usize) -> Result<CheckResult> {
    let tbn = Tbn::new(n)?;
    let c = c_word(n)?;
    let mut t = Tally::new(format!("c = [X_1^2, X_2^2] (n={n})"));
    let nf = tbn.normal_form(&c)?;
    t.case(nf.perm.is_identity() && nf.g == tbn.gn().nu(), || format!("normal form of c has {}", nf.g));
    t.case(tbn.in_kernel(&c.mul(&c)?)?, || "c^2 is not trivial".into());
    for i in 1..n as i32 {
        let x = word(n, &[i])?;
        t.case(tbn.tbn_equal(&c.mul(&x)?, &x.mul(&c)?)?, || format!("c does not commute with X_{i}"));
    }
    Ok(t.finish())
}

/// For adjacent `Y_1, Y_2`: `[Y_1^2, Y_2^2] = [Y_1^2, Y_2^-2] = [Y_1^-2, Y_2^-2] = c`.
pub fn adjacent_squares(n: usize, cases: usize, seed: u64) -> Result<CheckResult> {
    let tbn = Tbn::new(n)?;
    let mut t = Tally::new(format!("commutators of adjacent squares (n={n})"));
    let mut rng = rng_for(seed, 14);
    let want = TbnNormalForm { perm: Perm::identity(n), g: tbn.gn().nu() };
    for _ in 0..cases {
        let i = rng.gen_range(1..n as i32 - 1);
        let b = BraidWord::random(n, rng.gen_range(0..=10), &mut rng);
        let y1 = word(n, &[i])?.conjugate_by(&b)?;
        let y2 = word(n, &[i + 1])?.conjugate_by(&b)?;
        for (e1, e2) in [(2, 2), (2, -2), (-2, -2)] {
            let comm = BraidWord::commutator(&y1.pow(e1), &y2.pow(e2))?;
            t.case(tbn.normal_form(&comm)? == want, || format!("b = {b}, i = {i}, exponents ({e1},{e2})"));
        }
    }
    Ok(t.finish())
}

/// Two half-twists on the same pair of punctures have squares agreeing in
/// `B~_n` modulo `c`: same permutation and abelian part, bits may differ.
pub fn same_endpoint_squares(n: usize, cases: usize, seed: u64) -> Result<CheckResult> {
    let tbn = Tbn::new(n)?;
    let mut t = Tally::new(format!("squares of half-twists with equal endpoints (n={n})"));
    let mut rng = rng_for(seed, 15);
    for _ in 0..cases {
        let h1 = HalfTwist::random(n, rng.gen_range(0..=8), &mut rng);
        let p = random_pure_word(n, 8, &mut rng)?;
        let h2 = h1.conjugate(&p)?;
        let a = tbn.normal_form(&h1.word().pow(2))?;
        let b = tbn.normal_form(&h2.word().pow(2))?;
        t.case(a.perm == b.perm && a.g.vec == b.g.vec, || format!("{h1} vs {h2}"));
    }
    Ok(t.finish())
}

// ---------------------------------------------------------------- kernel

/// The transversal commutator equals its expanded form in `B_n`, and is
/// nontrivial in `B_n` but trivial in `B~_n`.
pub fn transversal_identity(n: usize) -> Result<CheckResult> {
    let tbn = Tbn::new(n)?;
    let mut t = Tally::new(format!("transversal commutator identity (n={n})"));
    let tc = transversal_commutator(n)?;
    t.case(bn_equal(&tc, &transversal_commutator_expanded(n)?)?, || "expanded form differs in B_n".into());
    t.case(!bn_equal(&tc, &BraidWord::identity(n))?, || "commutator is trivial in B_n".into());
    t.case(tbn.in_kernel(&tc)?, || "commutator is nontrivial in B~_n".into());
    Ok(t.finish())
}

/// Random conjugates of the quadrangle relator and of commutators of
/// transversal pairs lie in the kernel; random non-pure words and pure words
/// whose linking numbers give a nonzero abelian part of `Lambda` do not.
pub fn kernel_soundness(ns: &[usize], cases: usize, max_conj: usize, seed: u64) -> Result<CheckResult> {
    let mut t = Tally::new("kernel membership".to_string());
    let mut rng = rng_for(seed, 16);
    let tables: Vec<Tbn> = ns.iter().map(|&n| Tbn::new(n)).collect::<Result<_>>()?;
    for k in 0..cases {
        let tbn = &tables[rng.gen_range(0..tables.len())];
        let n = tbn.strands();
        let b = BraidWord::random(n, rng.gen_range(0..=max_conj), &mut rng);
        let rel = if k % 2 == 0 {
            quadrangle_relator(n)?
        } else {
            let a = BraidWord::random(n, rng.gen_range(0..=6), &mut rng);
            let y = HalfTwist::frame(n, 2)?.conjugate(&a)?;
            let z = HalfTwist::new(word(n, &[1, 3])?, 2, false)?.conjugate(&a)?;
            BraidWord::commutator(&y.word(), &z.word())?
        };
        let w = rel.conjugate_by(&b)?;
        t.case(tbn.in_kernel(&w)?, || format!("conjugate {w} not in kernel"));
    }
    for k in 0..cases {
        let tbn = &tables[rng.gen_range(0..tables.len())];
        let n = tbn.strands();
        let w = if k % 2 == 0 {
            loop {
                let w = BraidWord::random(n, rng.gen_range(1..=20), &mut rng);
                if !w.is_pure() {
                    break w;
                }
            }
        } else {
            loop {
                let p = random_pure_word(n, 16, &mut rng)?;
                if linking_abelian_part(tbn.gn(), &p)?.iter().any(|v| *v != 0) {
                    break p;
                }
            }
        };
        t.case(!tbn.in_kernel(&w)?, || format!("{w} wrongly in kernel"));
    }
    Ok(t.finish())
}

// ---------------------------------------------------------------- primes

/// Candidates that must fail the frame criterion, with the first failing condition.
pub fn frame_mutations(n: usize) -> Result<Vec<(String, GnElement, GnElement, &'static str)>> {
    let g = GnInstance::full(n)?;
    let gn = g.gn();
    let pair = canonical_prime(n)?;
    let (u, nu) = (pair.h.clone(), gn.nu());
    let xi = coherent_family(&g, &pair)?;
    let u13 = gn.mul(&gn.u(1)?, &gn.u(3)?)?;
    let u13_tau = gn.mul(&u13, &gn.act_generator(&u13, 1, true)?)?;
    Ok(vec![
        ("wrong tau: identity".into(), u.clone(), gn.identity(), "1"),
        ("wrong tau: s_1".into(), u.clone(), gn.s1(), "1"),
        ("wrong support: X_2".into(), xi[1].clone(), nu.clone(), "1"),
        ("wrong support: X_3".into(), xi[2].clone(), nu.clone(), "1"),
        ("non-prime: u nu".into(), gn.mul(&u, &nu)?, nu.clone(), "2a"),
        ("non-prime: u^2".into(), gn.pow(&u, 2)?, nu.clone(), "1"),
        ("non-prime: u_1 u_2".into(), gn.mul(&gn.u(1)?, &gn.u(2)?)?, nu.clone(), "1"),
        ("non-prime: u_1 u_3, tau = u u_{X1^-1}".into(), u13, u13_tau, "1.tau2"),
    ])
}

pub fn prime_frame(n: usize, seed: u64) -> Result<CheckResult> {
    let g = GnInstance::full(n)?;
    let mut t = Tally::new(format!("frame criterion (n={n})"));
    let opts = CheckOptions { seed, samples: 16 };
    let pair = canonical_prime(n)?;
    let r = check_prime_frame(&g, &pair.h, &pair.tau, &opts)?;
    t.case(r.verdict == Verdict::Pass, || format!("canonical prime fails {:?}", r.failing()));
    t.case(pair.h.in_g0(), || "canonical prime is not in G_0".into());
    for (label, u, tau, want) in frame_mutations(n)? {
        let r = check_prime_frame(&g, &u, &tau, &opts)?;
        t.case(r.failing() == Some(want), || format!("{label}: failing {:?}, expected {want}", r.failing()));
    }
    Ok(t.finish())
}

/// Stability under conjugation: conjugated pairs pass the axiom spot check
/// against consecutive, disjoint and transversal samples.
pub fn prime_spot_checks(n: usize, cases: usize, seed: u64) -> Result<CheckResult> {
    let g = GnInstance::full(n)?;
    let pair = canonical_prime(n)?;
    let mut t = Tally::new(format!("axiom spot checks (n={n})"));
    let mut rng = rng_for(seed, 17);
    let transversal = HalfTwist::new(word(n, &[1, 3, -1, -2])?, 2, false)?;
    for _ in 0..cases {
        let b = BraidWord::random(n, rng.gen_range(0..=10), &mut rng);
        let h = g.apply_word(&pair.h, &b)?;
        let x = pair.ht.conjugate(&b)?;
        let mut samples = vec![transversal.conjugate(&b)?];
        for i in 2..n {
            samples.push(HalfTwist::frame(n, i)?.conjugate(&b)?);
        }
        samples.push(HalfTwist::random(n, rng.gen_range(0..=6), &mut rng));
        let r = axiom_spot_check(&g, &h, &x, &pair.tau, &samples, &CheckOptions { seed, samples: 0 })?;
        let covered = ["1", "2a", "2b", "3"].iter().all(|id| r.condition(id).is_some());
        t.case(r.verdict == Verdict::Pass && covered, || format!("b = {b}: {:?}", r.conditions));
    }
    Ok(t.finish())
}

pub fn prime_identities(n: usize, cases: usize, seed: u64) -> Result<CheckResult> {
    let g = GnInstance::full(n)?;
    let pair = canonical_prime(n)?;
    let r = prime_identity_suite(&g, &pair, &CheckOptions { seed, samples: cases })?;
    let mut t = Tally::new(format!("prime identities (n={n})"));
    t.case(r.verdict == Verdict::Pass, || format!("{:?}", r.witness));
    Ok(CheckResult { cases: cases.max(1), ..t.finish() })
}

/// The orbit criterion passes on the canonical prime in `G_0(n)` and fails on `nu` and `s_1`.
pub fn orbit_criterion_examples(n: usize, bound: usize, seed: u64) -> Result<CheckResult> {
    let g0 = GnInstance::g0(n)?;
    let full = GnInstance::full(n)?;
    let opts = CheckOptions { seed, samples: 0 };
    let pair = canonical_prime(n)?;
    let mut t = Tally::new(format!("orbit criterion (n={n}, L={bound})"));
    let r = check_prop71(&g0, &pair.h, bound, &opts)?;
    t.case(r.verdict == Verdict::PassUpToBound && r.bound == Some(bound), || format!("{r:?}"));
    let r = check_prop71(&g0, &g0.gn().nu(), bound, &opts)?;
    t.case(r.failing() == Some("0"), || format!("nu: {:?}", r.failing()));
    let r = check_prop71(&full, &full.gn().s1(), bound, &opts)?;
    t.case(r.failing() == Some("1a"), || format!("s_1: {:?}", r.failing()));
    Ok(t.finish())
}

/// Transport does not depend on the conjugator, and anti-coherent transport
/// gives `h^-1 tau`.
pub fn transport_uniqueness(n: usize, targets: usize, perturbations: usize, seed: u64) -> Result<CheckResult> {
    let g = GnInstance::full(n)?;
    let pair = canonical_prime(n)?;
    let mut t = Tally::new(format!("transport uniqueness (n={n})"));
    let mut rng = rng_for(seed, 18);
    let centralizer = crate::braid::centralizer_generators(n)?;
    let h_inv_tau = g.mul(&g.inv(&pair.h)?, &pair.tau)?;
    t.case(transport(&g, &pair, &pair.ht.flipped())? == h_inv_tau, || "anti-coherent transport".into());
    for _ in 0..targets {
        let target = HalfTwist::random(n, rng.gen_range(0..=10), &mut rng);
        let b = transport_conjugator(&pair.ht, &target)?;
        let base = transport(&g, &pair, &target)?;
        let anti = transport(&g, &pair, &target.flipped())?;
        t.case(anti == g.mul(&g.inv(&base)?, &pair.tau)?, || format!("anti-coherent on {target}"));
        for _ in 0..perturbations {
            let mut c = BraidWord::identity(n);
            for _ in 0..rng.gen_range(1..=5) {
                let x = &centralizer[rng.gen_range(0..centralizer.len())];
                c = c.mul(&if rng.gen() { x.clone() } else { x.inv() })?;
            }
            let got = transport_via(&g, &pair, &target, &c.mul(&b)?)?;
            t.case(got == base, || format!("target {target}, perturbation {c}"));
        }
    }
    Ok(t.finish())
}

// ---------------------------------------------------------------- suites

fn suite(name: &str, cfg: &VerifyConfig) -> Result<SuiteReport> {
    let VerifyConfig { n, cases, seed } = *cfg;
    let need = |min: usize| {
        if n < min {
            Err(Error::TooFewStrands { n, min })
        } else {
            Ok(())
        }
    };
    let checks = match name {
        "artin" => {
            need(2)?;
            vec![artin_relations(n)?, artin_product_invariant(n.max(2), cases, 30, seed)?]
        }
        "tits" => {
            need(2)?;
            vec![tits_section(n, cases, seed)?]
        }
        "gn-presentation" => {
            need(4)?;
            vec![
                gn_presentation(n)?,
                gn_commutator_law(n, cases, seed)?,
                gn_sij_table(n)?,
                gn_embedding(n, cases, seed)?,
            ]
        }
        "gn-action" => {
            need(4)?;
            vec![
                gn_automorphisms(n, cases.min(50), seed)?,
                gn_braid_relations(n)?,
                gn_squares_conjugation(n, cases, seed)?,
                gn_hurwitz(n)?,
            ]
        }
        "quotient" => {
            need(4)?;
            vec![
                degree_law(n, cases, 40, seed)?,
                lambda_homomorphism(n, cases, seed)?,
                lambda_equivariance(n, cases, seed)?,
                lambda_linking(n, cases, seed)?,
                section_independence(n, cases, seed)?,
                lift_round_trip(n, cases, seed)?,
                normal_form_well_defined(n, cases, seed)?,
                c_structure(n)?,
                adjacent_squares(n, cases, seed)?,
                same_endpoint_squares(n, cases, seed)?,
            ]
        }
        "kernel" => {
            need(4)?;
            vec![transversal_identity(n)?, kernel_soundness(&[n], cases, 20, seed)?]
        }
        "primes" => {
            need(4)?;
            let mut v = vec![
                prime_frame(n, seed)?,
                prime_spot_checks(n, cases.min(50), seed)?,
                prime_identities(n, cases.min(50), seed)?,
                transport_uniqueness(n, cases.min(20), 5, seed)?,
            ];
            if n >= 5 {
                v.push(orbit_criterion_examples(n, 3, seed)?);
            }
            v
        }
        other => return Err(Error::Parse { what: "suite name", token: other.to_string() }),
    };
    Ok(SuiteReport { suite: name.to_string(), checks })
}

/// Runs one named suite, or every suite for `"all"`.
pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        SUITES.iter().map(|s| suite(s, cfg)).collect()
    } else {
        Ok(vec![suite(name, cfg)?])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_small() {
        let cfg = VerifyConfig { n: 5, cases: 10, seed: 3 };
        for report in run_suite("all", &cfg).unwrap() {
            for c in &report.checks {
                assert!(c.passed, "{}: {} ({:?})", report.suite, c.name, c.detail);
                assert!(c.cases > 0, "{}", c.name);
            }
        }
    }

    #[test]
    fn unknown_suite_and_small_n() {
        let cfg = VerifyConfig { n: 5, cases: 1, seed: 0 };
        assert!(matches!(run_suite("nope", &cfg), Err(Error::Parse { .. })));
        let cfg = VerifyConfig { n: 3, cases: 1, seed: 0 };
        assert!(run_suite("quotient", &cfg).is_err());
        assert!(run_suite("artin", &cfg).unwrap()[0].passed());
    }

    #[test]
    fn tally_reports_first_failure() {
        let mut t = Tally::new("x");
        t.case(true, || unreachable!());
        t.case(false, || "first".into());
        t.case(false, || "second".into());
        let r = t.finish();
        assert!(!r.passed);
        assert_eq!(r.cases, 3);
        assert_eq!(r.detail.as_deref(), Some("first"));
    }
}
