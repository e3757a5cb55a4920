//! Randomized checks of the general identities satisfied by prime elements
//! and coherent pairs, on configurations built around a given pair.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    axiom_spot_check, coherent_family, transport, transport_conjugator, ActionGroup, CheckOptions, PolarizedPair,
    PrimeReport, Recorder, Verdict,
};
use crate::braid::{centralizer_generators, frame_transport, BraidWord, HalfTwist};
use crate::error::{Error, Result};

const CONJ_LEN: usize = 8;

/// Random product of the generators of `C_p(X_1)` (and `X_1` when `full`).
fn random_centralizer<R: Rng>(n: usize, full: bool, rng: &mut R) -> Result<BraidWord> {
    let mut gens = centralizer_generators(n)?;
    if full {
        gens.push(BraidWord::new(n, vec![1])?);
    }
    let mut acc = BraidWord::identity(n);
    for _ in 0..rng.gen_range(0..=4) {
        let x = &gens[rng.gen_range(0..gens.len())];
        acc = acc.mul(&if rng.gen() { x.clone() } else { x.inv() })?;
    }
    Ok(acc)
}

fn frame_at(n: usize, i: usize, b: &BraidWord) -> Result<HalfTwist> {
    HalfTwist::frame(n, i)?.conjugate(b)
}

/// A half-twist transversal to `X_1`: `(X_2)_{X_1 X_3}` moved by `X_2 -> X_1`.
fn transversal_to_x1(n: usize) -> Result<HalfTwist> {
    let conj = BraidWord::new(n, vec![1, 3])?.mul(&frame_transport(n, 2, 1)?)?;
    HalfTwist::new(conj, 2, false)
}

fn maybe_flip<R: Rng>(h: HalfTwist, rng: &mut R) -> HalfTwist {
    if rng.gen() {
        h.flipped()
    } else {
        h
    }
}

/// Checks, over `opts.samples` random configurations:
///
/// - `self-action`, `consecutive-square`, `consecutive-commutator`: action of
///   the support and of consecutive half-twists on `h`
/// - `conjugation-stable`: conjugated pairs stay prime
/// - `centralizer-fixes`, `transversal-fixes`: `C_p` and transversal
///   half-twists fix `h`
/// - `transport-unique`, `transport-tau`, `anti-coherent`,
///   `simultaneous-transport`: transport does not depend on the conjugator,
///   keeps `tau`, and gives `h^-1 tau` on the flipped support
/// - `adjacent-self`, `adjacent-pair`, `adjacent-flipped`: orderly adjacent
///   transported pairs
/// - `commutator-{adjacent,disjoint,transversal}`: commutators of transported pairs
/// - on the frame family `xi_i`: `frame-action-adjacent`, `frame-action-far`,
///   `frame-commutators`
pub fn prime_identity_suite<G: ActionGroup>(
    g: &G,
    pair: &PolarizedPair<G::Elem>,
    opts: &CheckOptions,
) -> Result<PrimeReport> {
    let n = g.strands();
    if n < 4 {
        return Err(Error::TooFewStrands { n, min: 4 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut rec = Recorder::new(opts.seed);
    let (h, tau) = (&pair.h, &pair.tau);
    let h_inv = g.inv(h)?;
    let id = g.identity();
    let act = |x: &G::Elem, w: &BraidWord| g.apply_word(x, w);
    // (X_1)_carrier = pair.ht with matching polarization
    let carrier = transport_conjugator(&HalfTwist::frame(n, 1)?, &pair.ht)?;
    let xw = pair.ht.word();

    let h_inv_tau = g.mul(&h_inv, tau)?;
    rec.check_eq("self-action", &act(h, &xw)?, &h_inv_tau);
    rec.check_eq("self-action", &act(h, &xw.inv())?, &h_inv_tau);
    rec.check_eq("self-action", &act(h, &xw.pow(2))?, h);
    rec.check_eq("anti-coherent", &transport(g, pair, &pair.ht.flipped())?, &h_inv_tau);

    for c in centralizer_generators(n)? {
        let c = BraidWord::product(n, [&carrier.inv(), &c, &carrier])?;
        rec.check_eq("centralizer-fixes", &act(h, &c)?, h);
    }

    for _ in 0..opts.samples {
        let b = BraidWord::random(n, rng.gen_range(0..=CONJ_LEN), &mut rng);

        // consecutive to the support
        let c = random_centralizer(n, true, &mut rng)?;
        let y = frame_at(n, 2, &c.mul(&carrier)?)?.word();
        rec.check_eq("consecutive-square", &act(h, &y.pow(-2))?, &g.mul(h, tau)?);
        rec.check_eq("consecutive-commutator", &g.commutator(h, &act(h, &y.inv())?)?, tau);

        // transversal to the support
        let cp = random_centralizer(n, false, &mut rng)?;
        let z = transversal_to_x1(n)?.conjugate(&cp.mul(&carrier)?)?;
        rec.check_eq("transversal-fixes", &act(h, &z.word())?, h);

        // conjugated pair stays prime
        let moved = PolarizedPair { h: act(h, &b)?, ht: pair.ht.conjugate(&b)?, tau: tau.clone() };
        let around = carrier.mul(&b)?;
        let samples =
            vec![frame_at(n, 2, &around)?, frame_at(n, 3, &around)?, transversal_to_x1(n)?.conjugate(&around)?];
        let spot = axiom_spot_check(g, &moved.h, &moved.ht, tau, &samples, opts)?;
        rec.check("conjugation-stable", spot.verdict == Verdict::Pass, || {
            format!("conjugate by {b} fails {:?}", spot.failing())
        });

        // transport to a random target
        let target = HalfTwist::random(n, rng.gen_range(0..=CONJ_LEN), &mut rng);
        let b1 = transport_conjugator(&pair.ht, &target)?;
        let perturb = BraidWord::product(n, [&carrier.inv(), &random_centralizer(n, false, &mut rng)?, &carrier])?;
        let b2 = perturb.mul(&b1)?;
        let g1 = act(h, &b1)?;
        rec.check_eq("transport-unique", &act(h, &b2)?, &g1);
        for t in [target.clone(), target.flipped()] {
            let l = transport(g, pair, &t)?;
            let tau_t = g.mul(&l, &act(&l, &t.word().inv())?)?;
            rec.check_eq("transport-tau", &tau_t, tau);
        }
        // a second pair on the same support, moved by the same conjugator
        rec.check_eq("simultaneous-transport", &act(&h_inv_tau, &b1)?, &act(&h_inv_tau, &b2)?);

        // orderly adjacent T, Y
        let (ti, yi) = if rng.gen() { (1, 2) } else { (2, 1) };
        let t = frame_at(n, ti, &b)?;
        let y = frame_at(n, yi, &b)?;
        let lt = transport(g, pair, &t)?;
        let ly = transport(g, pair, &y)?;
        let ly_flip = transport(g, pair, &y.flipped())?;
        let y_inv = y.word().inv();
        rec.check_eq("adjacent-self", &act(&lt, &t.word().inv())?, &g.mul(&g.inv(&lt)?, tau)?);
        rec.check_eq("adjacent-pair", &act(&lt, &y_inv)?, &g.mul(&lt, &ly)?);
        rec.check_eq("adjacent-flipped", &act(&lt, &y_inv)?, &g.mul(&g.inv(&ly_flip)?, &lt)?);

        // commutators of coherent pairs
        let configs = [
            ("commutator-adjacent", frame_at(n, 1, &b)?, frame_at(n, 2, &b)?, tau),
            ("commutator-disjoint", frame_at(n, 1, &b)?, frame_at(n, 3, &b)?, &id),
            ("commutator-transversal", frame_at(n, 1, &b)?, transversal_to_x1(n)?.conjugate(&b)?, &id),
        ];
        for (name, a1, a2, want) in configs {
            let g1 = transport(g, pair, &maybe_flip(a1, &mut rng))?;
            let g2 = transport(g, pair, &maybe_flip(a2, &mut rng))?;
            rec.check_eq(name, &g.commutator(&g1, &g2)?, want);
        }
    }

    let xi = coherent_family(g, pair)?;
    let frame = |i: usize| BraidWord::new(n, vec![i as i32]);
    for i in 1..n {
        let x = &xi[i - 1];
        let xinv = frame(i)?.inv();
        rec.check_eq("frame-action-adjacent", &act(x, &xinv)?, &g.mul(&g.inv(x)?, tau)?);
        for j in [i.wrapping_sub(1), i + 1] {
            if (1..n).contains(&j) {
                rec.check_eq("frame-action-adjacent", &act(x, &frame(j)?.inv())?, &g.mul(x, &xi[j - 1])?);
            }
        }
        for j in 1..n {
            if j.abs_diff(i) >= 2 {
                rec.check_eq("frame-action-far", &act(x, &frame(j)?)?, x);
            }
            let want = if j.abs_diff(i) == 1 { tau } else { &id };
            if j != i {
                rec.check_eq("frame-commutators", &g.commutator(x, &xi[j - 1])?, want);
            }
        }
    }
    Ok(rec.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::{canonical_prime, GnInstance};

    #[test]
    fn canonical_prime_identities() {
        for n in 4..=6 {
            let g = GnInstance::full(n).unwrap();
            let pair = canonical_prime(n).unwrap();
            let opts = CheckOptions { seed: 7, samples: 10 };
            let r = prime_identity_suite(&g, &pair, &opts).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "n = {n}: {r:?}");
            assert!(r.conditions.len() >= 19);
        }
    }

    #[test]
    fn identities_detect_a_non_prime() {
        let g = GnInstance::full(5).unwrap();
        let mut pair = canonical_prime(5).unwrap();
        pair.h = g.gn().mul(&pair.h, &g.gn().nu()).unwrap();
        let r = prime_identity_suite(&g, &pair, &CheckOptions { seed: 1, samples: 5 }).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
    }
}
