//! Property-based tests: algebraic identities on random inputs, and
//! agreement between the fast decision routes and independent
//! brute-force oracles.

use proptest::prelude::*;

use ringcodes::codes::{
    dual_z2u_bruteforce, is_z2u_additive_set, macwilliams_transform, BinaryLinearCode, Budget,
    Z2uCode,
};
use ringcodes::rings::{Symbol, Z2u, Z2U_ONE_PLUS_U};
use ringcodes::structure::{check_involution, find_involution, SearchLimits, SearchOutcome};
use ringcodes::vectors::{theta, theta_inv, MixedVector, Pairing};
use ringcodes::{Bits, Z4};

fn z2u_symbol() -> impl Strategy<Value = Z2u> {
    (0usize..4).prop_map(|i| Z2u::all()[i])
}

fn z4_symbol() -> impl Strategy<Value = Z4> {
    (0usize..4).prop_map(|i| Z4::all()[i])
}

fn mixed_z2u(alpha: usize, beta: usize) -> impl Strategy<Value = MixedVector<Z2u>> {
    (
        prop::collection::vec(any::<bool>(), alpha),
        prop::collection::vec(z2u_symbol(), beta),
    )
        .prop_map(|(bits, ring)| MixedVector::new(bits, ring))
}

fn mixed_z4(alpha: usize, beta: usize) -> impl Strategy<Value = MixedVector<Z4>> {
    (
        prop::collection::vec(any::<bool>(), alpha),
        prop::collection::vec(z4_symbol(), beta),
    )
        .prop_map(|(bits, ring)| MixedVector::new(bits, ring))
}

fn shape() -> impl Strategy<Value = (usize, usize)> {
    (0usize..=4, 0usize..=4)
}

fn binary_code(max_n: usize, max_k: usize) -> impl Strategy<Value = BinaryLinearCode> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(any::<bool>(), n), 1..=max_k).prop_map(
            move |rows| {
                let rows: Vec<Bits> = rows.iter().map(|r| Bits::from_bools(r)).collect();
                BinaryLinearCode::span(n, &rows).unwrap()
            },
        )
    })
}

fn z2u_code() -> impl Strategy<Value = Z2uCode> {
    (0usize..=4, 0usize..=3).prop_flat_map(|(alpha, beta)| {
        prop::collection::vec(mixed_z2u(alpha, beta), 1..=3)
            .prop_map(move |gens| Z2uCode::span(alpha, beta, &gens).unwrap())
    })
}

/// Independent oracle: does any pairing with exactly `beta` pairs leave
/// the code invariant? Plain recursion over all pairings, no pruning.
fn exists_pairing_bruteforce(code: &BinaryLinearCode, beta: usize) -> bool {
    fn go(code: &BinaryLinearCode, free: &[usize], pairs: &mut Vec<(usize, usize)>, left: usize) -> bool {
        if left == 0 {
            let p = Pairing::new(code.len(), pairs.clone()).unwrap();
            return check_involution(code, &p).unwrap();
        }
        if free.len() < 2 * left {
            return false;
        }
        let a = free[0];
        // a fixed
        if go(code, &free[1..], pairs, left) {
            return true;
        }
        // a paired with each later free coordinate
        for (i, &b) in free.iter().enumerate().skip(1) {
            let rest: Vec<usize> = free[1..]
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i - 1)
                .map(|(_, &c)| c)
                .collect();
            pairs.push((a, b));
            if go(code, &rest, pairs, left - 1) {
                return true;
            }
            pairs.pop();
        }
        false
    }
    let free: Vec<usize> = (0..code.len()).collect();
    go(code, &free, &mut Vec::new(), beta)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn psi_extended_is_additive((x, y) in shape().prop_flat_map(|(a, b)| (mixed_z2u(a, b), mixed_z2u(a, b)))) {
        prop_assert_eq!(x.add(&y).unwrap().gray(), x.gray().xor(&y.gray()));
    }

    #[test]
    fn theta_preserves_gray(x in shape().prop_flat_map(|(a, b)| mixed_z4(a, b))) {
        prop_assert_eq!(theta(&x).gray(), x.gray());
        prop_assert_eq!(theta_inv(&theta(&x)), x);
    }

    #[test]
    fn canonical_pairing_is_multiplication_by_one_plus_u(x in (0usize..=3, 0usize..=4).prop_flat_map(|(a, b)| mixed_z2u(a, b))) {
        let p = Pairing::canonical(x.alpha(), x.beta());
        let lhs = p.apply(&x.gray()).unwrap();
        let rhs = x.scalar_mul(Z2U_ONE_PLUS_U).gray();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pairing_apply_is_involutive(word in prop::collection::vec(any::<bool>(), 2..10), k in 0usize..4) {
        let n = word.len();
        let pairs: Vec<(usize, usize)> = (0..k.min(n / 2)).map(|i| (2 * i, 2 * i + 1)).collect();
        let p = Pairing::new(n, pairs).unwrap();
        let w = Bits::from_bools(&word);
        prop_assert_eq!(p.apply(&p.apply(&w).unwrap()).unwrap(), w);
    }

    #[test]
    fn macwilliams_matches_dual(c in binary_code(10, 5)) {
        let w = c.weight_enumerator(Budget::default()).unwrap();
        let wd = c.dual().weight_enumerator(Budget::default()).unwrap();
        prop_assert_eq!(macwilliams_transform(&w, w.size()).unwrap(), wd);
    }

    #[test]
    fn z2u_dual_laws(c in z2u_code()) {
        let d = c.dual();
        prop_assert_eq!(d.alpha(), c.alpha());
        prop_assert_eq!(d.beta(), c.beta());
        prop_assert_eq!(&d.dual(), &c);
        // brute-force oracle agreement
        let oracle = dual_z2u_bruteforce(&c, Budget::default()).unwrap();
        let mut fast: Vec<_> = d.enumerate(Budget::default()).unwrap().collect();
        fast.sort();
        prop_assert_eq!(oracle, fast);
    }

    #[test]
    fn z2u_span_is_additive(c in z2u_code()) {
        prop_assume!(c.log2_size() <= 8);
        let words: Vec<_> = c.enumerate(Budget::default()).unwrap().collect();
        prop_assert!(is_z2u_additive_set(&words));
    }

    #[test]
    fn search_agrees_with_pairing_oracle(c in binary_code(8, 4), beta in 0usize..=2) {
        let limits = SearchLimits::default();
        let outcome = find_involution(&c, beta, &limits).unwrap();
        let oracle = exists_pairing_bruteforce(&c, beta);
        match outcome {
            SearchOutcome::Found { certificate, .. } => {
                prop_assert!(oracle);
                prop_assert!(check_involution(&c, &certificate.pairing).unwrap());
                prop_assert_eq!(certificate.beta(), beta);
            }
            SearchOutcome::NonExistent { .. } => prop_assert!(!oracle),
            SearchOutcome::Unknown { .. } => prop_assert!(false, "budget hit on tiny instance"),
        }
    }

    #[test]
    fn certificates_transport_to_the_dual(c in binary_code(10, 5), beta in 1usize..=3) {
        if let SearchOutcome::Found { certificate, .. } =
            find_involution(&c, beta, &SearchLimits::default()).unwrap()
        {
            prop_assert!(check_involution(&c.dual(), &certificate.pairing).unwrap());
        }
    }
}
