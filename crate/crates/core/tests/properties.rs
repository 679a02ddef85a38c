//! Randomized identities beyond the exhaustive ranges, plus closed-form
//! oracles that do not share code with the routes they check.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;
use signed_descent::descent::{
    bijection_f, bijection_g, eulerian_poly, restricted_poly, restricted_poly_brute, Family, Method,
};
use signed_descent::juggling::{phi, phi_inverse, psi, psi_inverse, DEFAULT_PSI_CAP};
use signed_descent::perm::{
    signed_standardize, signed_unstandardize, SignedPermutation, SignedWord,
};
use signed_descent::polyring::IntPoly;

fn signed_perm(max_n: usize) -> impl Strategy<Value = SignedPermutation> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(),
                prop::collection::vec(any::<bool>(), n),
            )
        })
        .prop_map(|(values, signs)| {
            let v = values
                .into_iter()
                .zip(signs)
                .map(|(v, neg)| if neg { -v } else { v })
                .collect();
            SignedPermutation::new(v).unwrap()
        })
}

/// `|A_{n,k}| = k!(k+1)^{n-k}` and `|B_{n,k}| = 2^k k!(k+1)^{n-k}` for `n >= k`.
fn closed_form_size(family: Family, n: usize, k: usize) -> BigInt {
    let k_fact: BigInt = (1..=k).product::<usize>().into();
    let base = k_fact * BigInt::from(k + 1).pow((n - k) as u32);
    match family {
        Family::A => base,
        Family::B => base << k,
    }
}

#[test]
fn sizes_match_closed_form() {
    let one = BigInt::from(1);
    for family in [Family::A, Family::B] {
        for n in 0..=7 {
            for k in 0..=n {
                let brute = restricted_poly_brute(family, n, k, 7).unwrap();
                assert_eq!(
                    brute.eval(&one),
                    closed_form_size(family, n, k),
                    "{family} n={n} k={k}"
                );
            }
        }
        for n in 0..=30 {
            for k in 0..=n.min(6) {
                let p = restricted_poly(family, n, k, Method::Recurrence, 0).unwrap();
                assert_eq!(p.eval(&one), closed_form_size(family, n, k));
            }
        }
    }
}

#[test]
fn eulerian_polynomials_are_palindromic() {
    for n in 1..=20 {
        for family in [Family::A, Family::B] {
            let c = eulerian_poly(family, n).into_coeffs();
            let mut r = c.clone();
            r.reverse();
            assert_eq!(c, r, "{family}_{n}");
        }
    }
}

/// Only the identity has no descents.
#[test]
fn restricted_constant_term_is_one() {
    for family in [Family::A, Family::B] {
        for n in 0..=25 {
            for k in 0..=6 {
                let p = restricted_poly(family, n, k, Method::Series, 0).unwrap();
                assert_eq!(p.coeff(0), BigInt::from(1));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bubble_sort_complexity_is_maxdrop(p in signed_perm(14)) {
        prop_assert_eq!(p.bubble_sort_complexity(), p.max_drop());
        prop_assert_eq!(p.bubble_pass(), p.bubble_pass_recursive());
        let a = p.abs();
        prop_assert_eq!(a.bubble_sort_complexity(), a.max_drop());
    }

    #[test]
    fn one_sweep_lowers_maxdrop_by_one(p in signed_perm(14)) {
        let q = p.bubble_pass();
        prop_assert_eq!(q.max_drop(), p.max_drop().saturating_sub(1));
    }

    #[test]
    fn signed_standardization_round_trips(
        values in prop::collection::btree_set(1u32..60, 1..12),
        seed in any::<u64>(),
    ) {
        let support: Vec<u32> = values.iter().copied().collect();
        let mut order = support.clone();
        // deterministic shuffle and signs from the seed
        let mut s = seed;
        for i in (1..order.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let word: Vec<i32> = order
            .iter()
            .enumerate()
            .map(|(i, &v)| if seed >> (i % 64) & 1 == 1 { -(v as i32) } else { v as i32 })
            .collect();
        let w = SignedWord::new(word).unwrap();
        let p = signed_standardize(&w);
        prop_assert_eq!(p.descent_set(), w.descent_set());
        let back = signed_unstandardize(&values, &p).unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn f_then_g_is_identity(p in signed_perm(11), pick in any::<u64>()) {
        let n = p.len();
        let k = p.max_drop();
        prop_assume!(k < n);
        let des: Vec<usize> = p.descent_set().iter().collect();
        let chosen: BTreeSet<usize> = des
            .iter()
            .enumerate()
            .filter(|(i, _)| pick >> (i % 64) & 1 == 1)
            .map(|(_, &d)| d)
            .collect();
        let s = signed_descent::perm::DescentSet::new(n, chosen).unwrap();
        for kk in k..n {
            let split = bijection_f(&p, kk, &s).unwrap();
            prop_assert_eq!(split.x.len(), s.tail_run() + 1);
            prop_assert!(split.alpha.max_drop() <= kk);
            prop_assert_eq!(bijection_g(&split.alpha, &split.x, n, kk).unwrap(), p.clone());
        }
    }

    #[test]
    fn phi_and_psi_round_trip(p in signed_perm(8), extra in 0usize..3) {
        let n = p.len();
        let k = (p.max_drop() + extra).min(n);
        prop_assume!(k <= 4);
        let a = p.abs();
        let t = phi(&a, k).unwrap();
        prop_assert!(t.is_ground_state(k));
        prop_assert_eq!(phi_inverse(&t, k).unwrap(), a);

        // psi needs maxdrop_B(p) <= k, which also bounds the negative positions
        if p.max_drop() <= k {
            let c = psi(&p, k, DEFAULT_PSI_CAP).unwrap();
            prop_assert!(c.landing_permutation(k).unwrap().is_identity());
            prop_assert_eq!(psi_inverse(&c, n, k).unwrap(), p);
        }
    }

    #[test]
    fn analytic_routes_agree(n in 0usize..16, k in 0usize..6, family_b in any::<bool>()) {
        let family = if family_b { Family::B } else { Family::A };
        let r = restricted_poly(family, n, k, Method::Recurrence, 0).unwrap();
        prop_assert_eq!(&restricted_poly(family, n, k, Method::Explicit, 0).unwrap(), &r);
        prop_assert_eq!(&restricted_poly(family, n, k, Method::Series, 0).unwrap(), &r);
        prop_assert!(r.coeffs().iter().all(|c| c >= &BigInt::from(0)));
    }

    #[test]
    fn restriction_is_monotone_in_k(n in 1usize..14, k in 0usize..5) {
        // every coefficient grows (weakly) when the maxdrop bound is relaxed
        let lo = restricted_poly(Family::B, n, k, Method::Recurrence, 0).unwrap();
        let hi = restricted_poly(Family::B, n, k + 1, Method::Recurrence, 0).unwrap();
        let diff = &hi - &lo;
        prop_assert!(diff.coeffs().iter().all(|c| c >= &BigInt::from(0)));
        if k >= n {
            prop_assert_eq!(diff, IntPoly::zero());
        }
    }
}
