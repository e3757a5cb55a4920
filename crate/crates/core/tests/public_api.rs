use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tb_core::braid::{bn_equal, quadrangle_relator, transversal_commutator, BraidWord, HalfTwist};
use tb_core::gn::{Gn, GnElement};
use tb_core::primes::{
    canonical_prime, check_prime_frame, check_prop71, transport, ActionGroup, CheckOptions, GnInstance, Verdict,
};
use tb_core::quotient::{in_kernel, normal_form, tbn_equal, Tbn};
use tb_core::verify::{run_suite, VerifyConfig};
use tb_core::Error;

fn word(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.to_vec()).unwrap()
}

#[test]
fn square_of_first_generator() {
    let nf = normal_form(&word(4, &[1, 1])).unwrap();
    assert!(nf.perm.is_identity());
    assert_eq!(nf.g, GnElement::parse(4, "0;1,0,0,0").unwrap());
}

#[test]
fn kernel_relators() {
    for n in 4..=6 {
        assert!(in_kernel(&quadrangle_relator(n).unwrap()).unwrap());
        let tc = transversal_commutator(n).unwrap();
        assert!(in_kernel(&tc).unwrap());
        assert!(!bn_equal(&tc, &BraidWord::identity(n)).unwrap());
    }
    assert!(!in_kernel(&word(4, &[1, 1])).unwrap());
    assert!(!in_kernel(&word(4, &[1])).unwrap());
}

#[test]
fn free_functions_need_four_strands() {
    assert!(matches!(normal_form(&word(3, &[1])), Err(Error::TooFewStrands { min: 4, .. })));
    assert!(tbn_equal(&word(4, &[1]), &word(5, &[1])).is_err());
}

#[test]
fn group_operations_on_normal_forms() {
    let tbn = Tbn::new(5).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..30 {
        let a = BraidWord::random(5, 12, &mut rng);
        let b = BraidWord::random(5, 12, &mut rng);
        let (na, nb) = (tbn.normal_form(&a).unwrap(), tbn.normal_form(&b).unwrap());
        let prod = tbn.tbn_mul(&na, &nb).unwrap();
        assert_eq!(prod, tbn.normal_form(&a.mul(&b).unwrap()).unwrap());
        assert!(tbn.tbn_mul(&na, &tbn.tbn_inv(&na).unwrap()).unwrap().is_identity());
        assert!(tbn.tbn_equal(&tbn.word_of(&na).unwrap(), &a).unwrap());
    }
}

#[test]
fn prime_checkers_through_the_trait() {
    let g = GnInstance::full(6).unwrap();
    let pair = canonical_prime(6).unwrap();
    let r = check_prime_frame(&g, &pair.h, &pair.tau, &CheckOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    // transport to X_3 lands on the third member of the frame family
    let xi3 = transport(&g, &pair, &HalfTwist::frame(6, 3).unwrap()).unwrap();
    let gn = g.gn();
    assert_eq!(xi3, gn.mul(&gn.inv(&gn.u(3).unwrap()).unwrap(), &gn.nu()).unwrap());
    assert_eq!(g.apply_word(&xi3, &word(6, &[1, -5])).unwrap(), xi3);

    let g0 = GnInstance::g0(5).unwrap();
    let h = canonical_prime(5).unwrap().h;
    let r = check_prop71(&g0, &h, 3, &CheckOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::PassUpToBound);
    assert_eq!(r.bound, Some(3));
}

#[test]
fn verify_all_small() {
    let cfg = VerifyConfig { n: 4, cases: 5, seed: 1 };
    let reports = run_suite("all", &cfg).unwrap();
    assert_eq!(reports.len(), 7);
    assert!(reports.iter().all(|r| r.passed()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn action_is_a_right_action(
        bit in 0u8..2,
        v in prop::collection::vec(-3i64..=3, 5),
        a in prop::collection::vec(prop_oneof![-4i32..=-1, 1i32..=4], 0..8),
        b in prop::collection::vec(prop_oneof![-4i32..=-1, 1i32..=4], 0..8),
    ) {
        let gn = Gn::new(5).unwrap();
        let g = GnElement { bit, vec: v };
        let (wa, wb) = (word(5, &a), word(5, &b));
        let two_steps = gn.act_word(&gn.act_word(&g, &wa).unwrap(), &wb).unwrap();
        prop_assert_eq!(gn.act_word(&g, &wa.mul(&wb).unwrap()).unwrap(), two_steps);
    }

    #[test]
    fn lift_then_normal_form(bit in 0u8..2, v in prop::collection::vec(-2i64..=2, 4)) {
        let tbn = Tbn::new(4).unwrap();
        let g = GnElement { bit, vec: v };
        let nf = tbn.normal_form(&tbn.lift(&g).unwrap()).unwrap();
        prop_assert!(nf.perm.is_identity());
        prop_assert_eq!(nf.g, g);
    }
}
