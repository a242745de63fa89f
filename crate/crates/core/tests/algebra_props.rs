mod common;

use common::*;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::Rng;
use supertgw_core::basering::AutomorphismExponents;
use supertgw_core::{BaseRingElement, Generator, Parity, Rational, Sign, Signature, SuperElement};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn product_matches_operator_composition(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = r.gen_range(0..=2);
        let q = r.gen_range(0..=2).max(usize::from(p == 0));
        let sign = if r.gen_bool(0.5) { Sign::Minus } else { Sign::Plus };
        let sig = Signature::with_counts(sign, p, q).unwrap();
        let a = random_element(&sig, &mut r, 3, 4);
        let b = random_element(&sig, &mut r, 3, 4);
        let ab = &a * &b;
        for v in fock_basis(&sig, 3) {
            prop_assert_eq!(fock_apply(&ab, &v), fock_apply(&a, &fock_apply(&b, &v)));
        }
    }

    #[test]
    fn associativity(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sig = random_signature(&mut r, 3);
        let a = random_element(&sig, &mut r, 3, 4);
        let b = random_element(&sig, &mut r, 3, 4);
        let c = random_element(&sig, &mut r, 3, 4);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn fold_order_independent(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sig = random_signature(&mut r, 3);
        let w = random_word(&sig, &mut r, 8);
        prop_assert_eq!(SuperElement::from_word(&sig, &w).unwrap(), SuperElement::from_word_rev(&sig, &w).unwrap());
    }

    #[test]
    fn involution_reverses_products(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sig = random_signature(&mut r, 3);
        let a = random_element(&sig, &mut r, 3, 4);
        let b = random_element(&sig, &mut r, 3, 4);
        prop_assert_eq!((&a * &b).involution(), &b.involution() * &a.involution());
        prop_assert_eq!(a.involution().involution(), a);
    }

    #[test]
    fn involution_is_word_reversal(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sig = random_signature(&mut r, 3);
        let w = random_word(&sig, &mut r, 6);
        let dual: Vec<Generator> = w.iter().rev().map(|g| g.dual()).collect();
        prop_assert_eq!(
            SuperElement::from_word(&sig, &w).unwrap().involution(),
            SuperElement::from_word(&sig, &dual).unwrap()
        );
    }

    #[test]
    fn star_times_self_nonzero(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sig = random_signature(&mut r, 3);
        let a = random_homogeneous(&sig, &mut r, 4);
        prop_assert!(!(&a.involution() * &a).is_zero());
    }

    #[test]
    fn degree_additive(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sig = random_signature(&mut r, 3);
        let a = random_homogeneous(&sig, &mut r, 4);
        let b = random_homogeneous(&sig, &mut r, 4);
        let ab = &a * &b;
        if !ab.is_zero() {
            let sum: Vec<i64> = a.degree().unwrap().iter().zip(b.degree().unwrap()).map(|(x, y)| x + y).collect();
            prop_assert_eq!(ab.degree().unwrap(), sum);
        }
    }

    #[test]
    fn tau_is_ring_homomorphism(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sig = random_signature(&mut r, 3);
        let f = random_base(&sig, &mut r);
        let g = random_base(&sig, &mut r);
        let e = AutomorphismExponents((0..sig.n()).map(|_| r.gen_range(-3..=3)).collect());
        prop_assert_eq!(f.mul(&g).tau_apply(&e), f.tau_apply(&e).mul(&g.tau_apply(&e)));
        prop_assert_eq!(f.add(&g).tau_apply(&e), f.tau_apply(&e).add(&g.tau_apply(&e)));
    }

    #[test]
    fn tau_group_action(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sig = random_signature(&mut r, 3);
        let f = random_base(&sig, &mut r);
        let e1 = AutomorphismExponents((0..sig.n()).map(|_| r.gen_range(-3..=3)).collect());
        let e2 = AutomorphismExponents((0..sig.n()).map(|_| r.gen_range(-3..=3)).collect());
        prop_assert_eq!(f.tau_apply(&e2).tau_apply(&e1), f.tau_apply(&e1.compose(&e2)));
        prop_assert_eq!(f.tau_apply(&e1).tau_apply(&e1.inverse()), f);
    }

    #[test]
    fn iota_round_trip_and_homomorphism(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sig = random_signature(&mut r, 3);
        let f = random_base(&sig, &mut r);
        let g = random_base(&sig, &mut r);
        prop_assert_eq!(f.iota_embed().project_zero(), f.clone());
        prop_assert_eq!(f.mul(&g).iota_embed(), &f.iota_embed() * &g.iota_embed());
    }

    #[test]
    fn iota_image_is_central_in_degree_zero(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sig = random_signature(&mut r, 3);
        let f = random_base(&sig, &mut r).iota_embed();
        let g = random_base(&sig, &mut r).iota_embed();
        prop_assert_eq!(&f * &g, &g * &f);
    }

    #[test]
    fn reduced_equality_matches_evaluation(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sig = random_signature(&mut r, 2);
        let f = random_base(&sig, &mut r);
        let g = if r.gen_bool(0.5) { f.tau_apply(&AutomorphismExponents(vec![2; sig.n()])) } else { random_base(&sig, &mut r) };
        // Clifford variables range over {0,1}; the others over enough points to fix degree ≤ 4.
        let ranges: Vec<Vec<i64>> = (0..sig.n()).map(|i| if sig.is_clifford(i) { vec![0, 1] } else { (0..9).collect() }).collect();
        let mut points: Vec<Vec<Rational>> = vec![vec![]];
        for range in ranges {
            points = points.into_iter().flat_map(|p| range.iter().map(move |&v| {
                let mut p = p.clone();
                p.push(Rational::from_integer(v.into()));
                p
            })).collect();
        }
        let same = points.iter().all(|p| f.evaluate(p) == g.evaluate(p));
        prop_assert_eq!(f.equals(&g).unwrap(), same);
    }
}

#[test]
fn clifford_tau_squares_to_identity() {
    for sign in [Sign::Minus, Sign::Plus] {
        let sig = Signature::from_bits(sign, &[0, 1, 0, 1]).unwrap();
        let mut r = rng(7);
        for _ in 0..50 {
            let f = random_base(&sig, &mut r);
            for i in sig.clifford_indices() {
                let sq = AutomorphismExponents::single(sig.n(), i, 2);
                assert_eq!(f.tau_apply(&sq), f);
            }
        }
    }
}

#[test]
fn tau_preserves_idempotency_ideal() {
    for sign in [Sign::Minus, Sign::Plus] {
        let sig = Signature::from_bits(sign, &[0, 1, 1]).unwrap();
        for j in sig.clifford_indices() {
            let uj = BaseRingElement::u(&sig, j);
            // τ_i(u_j^2 - u_j) = τ_i(u_j)^2 - τ_i(u_j) must lie in the ideal, i.e. reduce to 0.
            for i in 0..3 {
                let e = AutomorphismExponents::single(3, i, 1);
                let t = uj.tau_apply(&e);
                assert!(t.mul(&t).sub(&t).is_zero(), "τ{} breaks u{}^2 = u{}", i + 1, j + 1, j + 1);
            }
        }
    }
}

#[test]
fn swap_sign_table() {
    for sign in [Sign::Minus, Sign::Plus] {
        let sig = Signature::from_bits(sign, &[0, 1, 0, 1]).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(sig.lambda(i, j), sig.lambda(j, i));
            }
            let odd = sig.parity(i) == Parity::Odd;
            assert_eq!(sig.lambda(i, i) == -1, if sign == Sign::Minus { odd } else { !odd });
        }
    }
}

#[test]
fn rank_one_clifford_square_by_matrices() {
    // On the 2-dimensional module {1, x}: x = [[0,0],[1,0]], ∂ = [[0,1],[0,0]].
    let sig = Signature::from_bits(Sign::Plus, &[0]).unwrap();
    let s = &SuperElement::x(&sig, 0) + &SuperElement::d(&sig, 0);
    let sq = &s * &s;
    assert_eq!(sq, SuperElement::one(&sig));
    for v in fock_basis(&sig, 1) {
        assert_eq!(fock_apply(&s, &fock_apply(&s, &v)), v);
    }
}

#[test]
fn exterior_cross_term_matches_operators() {
    let sig = Signature::with_counts(Sign::Minus, 0, 2).unwrap();
    let a = SuperElement::from_word(&sig, &[Generator::X(0), Generator::D(1)]).unwrap();
    let b = SuperElement::from_word(&sig, &[Generator::X(1), Generator::D(0)]).unwrap();
    let ab = &a * &b;
    assert_eq!(ab.render(), "x1*d1 - x1*d1*x2*d2");
    for v in fock_basis(&sig, 2) {
        assert_eq!(fock_apply(&ab, &v), fock_apply(&a, &fock_apply(&b, &v)));
    }
}

#[test]
fn involution_of_two_creators() {
    for sign in [Sign::Minus, Sign::Plus] {
        let sig = Signature::from_bits(sign, &[1, 1]).unwrap();
        let x1x2 = SuperElement::from_word(&sig, &[Generator::X(0), Generator::X(1)]).unwrap();
        let lam = Rational::from_integer(sig.lambda(0, 1).into());
        let d1d2 = SuperElement::from_word(&sig, &[Generator::D(0), Generator::D(1)]).unwrap();
        assert_eq!(x1x2.involution(), d1d2.scale(&lam));
    }
}

#[test]
fn reduction_example_by_evaluation() {
    let sig = Signature::from_bits(Sign::Minus, &[0, 1]).unwrap();
    let u2 = BaseRingElement::u(&sig, 1);
    let f = u2.mul(&u2.add(&BaseRingElement::one(&sig)));
    for v in [0, 1] {
        let p = vec![Rational::zero(), Rational::from_integer(v.into())];
        assert_eq!(f.evaluate(&p), u2.scale(&Rational::from_integer(2.into())).evaluate(&p));
    }
    assert_eq!(f.render(), "2*u2");
    assert!(!Rational::one().is_zero());
}
