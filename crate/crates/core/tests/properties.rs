use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use qtab::contain::contains;
use qtab::limits::*;
use qtab::qstat::*;
use qtab::rsk::*;
use qtab::{Permutation, Rational, Tableau};

fn arb_perm(lo: usize, hi: usize) -> impl Strategy<Value = Permutation> {
    (lo..=hi)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(&w).unwrap())
}

fn arb_param() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=9).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn arb_unit() -> impl Strategy<Value = Rational> {
    // the product grows like exp(c/(1-q)^2), so absolute tolerances need q well below 1
    (1i64..=5).prop_map(|n| Rational::new(n.into(), 9.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rs_roundtrip_and_symmetry(pi in arb_perm(0, 10)) {
        let (p, q) = rs(&pi);
        prop_assert_eq!(rs_inverse(&p, &q).unwrap(), pi.clone());
        prop_assert_eq!(rs(&pi.inverse()), (q.clone(), p.clone()));
        prop_assert_eq!(pi.descents(), q.descents());
        prop_assert_eq!(pi.maj(), q.maj());
        prop_assert_eq!(pi.imaj(), p.maj());
    }

    #[test]
    fn restriction_commutes_with_inverse(pi in arb_perm(0, 9), k in 0usize..=9) {
        let k = k.min(pi.len());
        prop_assert_eq!(pi.inverse().restrict_low(k).unwrap(), pi.prefix(k).unwrap().inverse());
        prop_assert_eq!(pi.inverse().restrict_high(k).unwrap(), pi.suffix(k).unwrap().inverse());
        prop_assert!(contains(&pi, &pi.restrict_low(k).unwrap()));
    }

    #[test]
    fn tableau_restriction_follows_insertion(pi in arb_perm(0, 9), k in 0usize..=9) {
        let k = k.min(pi.len());
        let p = p_tableau(&pi);
        prop_assert_eq!(p.restrict_low(k).unwrap(), p_tableau(&pi.restrict_low(k).unwrap()));
    }

    #[test]
    fn t_value_is_polynomial_evaluation(n in 0usize..=9, q in arb_param()) {
        prop_assert_eq!(t_value(n, &q), t_poly(n).eval_q(&q));
        prop_assert_eq!(a_value(n.min(6), &q, &q), a_poly(n.min(6)).eval(&q, &q));
    }

    #[test]
    fn ratios_invariant_under_inversion(n in 0usize..=12, q in arb_param(), p in arb_param()) {
        prop_assert_eq!(t_ratio(&q, n).unwrap(), t_ratio(&q.recip(), n).unwrap());
        let m = n.min(7);
        prop_assert_eq!(a_ratio(&p, &q, m).unwrap(), a_ratio(&p.recip(), &q.recip(), m).unwrap());
    }

    #[test]
    fn qlim1_closed_form_matches_listing(sigma in arb_perm(0, 3), extra in 0usize..=4, q in arb_param()) {
        let n = sigma.len() + extra;
        prop_assert_eq!(qlim1_lhs(&sigma, &q, n).unwrap(), qlim1_lhs_brute(&sigma, &q, n).unwrap());
    }

    #[test]
    fn m2_1_closed_form_matches_listing(
        sigma in arb_perm(0, 2), tau in arb_perm(0, 3), extra in 0usize..=3, p in arb_param(), q in arb_param()
    ) {
        let l = sigma.len().max(tau.len()) + extra;
        prop_assert_eq!(
            m2_1_lhs(&sigma, &tau, &p, &q, l).unwrap(),
            m2_1_lhs_brute(&sigma, &tau, &p, &q, l).unwrap()
        );
    }

    #[test]
    fn limits_form_distributions(m in 0usize..=3, p in arb_param(), q in arb_param()) {
        let one = Rational::one();
        let s: Rational = Permutation::all(m).map(|s| qlim1_rhs(&s, &q).unwrap()).sum();
        prop_assert_eq!(s, one.clone());
        let a = m.min(2);
        let mut s2 = Rational::zero();
        for sigma in Permutation::all(a) {
            for tau in Permutation::all(2) {
                s2 += m2_1_rhs(&sigma, &tau, &p, &q).unwrap();
            }
        }
        prop_assert_eq!(s2, one.clone());
        let s3: Rational = all_syt(m).iter().map(|t| m3_rhs(t, &q).unwrap()).sum();
        prop_assert_eq!(s3, one);
    }

    #[test]
    fn xi_partials_stay_below_the_product(n in 0usize..=14, q in arb_unit()) {
        let tol = Rational::new(1.into(), 1000.into());
        let prod = xi_limit_product(&q, &tol).unwrap();
        prop_assert!(xi_partial(&q, n).unwrap() <= &prod.value + &prod.tail_bound);
    }
}

#[test]
fn tableau_limits_match_listing() {
    let q = Rational::new(3.into(), 7.into());
    let p = Rational::new(2.into(), 5.into());
    let tabs: Vec<Tableau> = (0..=3).flat_map(all_syt).collect();
    for a in &tabs {
        for n in a.size()..=6 {
            assert_eq!(m3_lhs(a, &q, n).unwrap(), m3_lhs_brute(a, &q, n).unwrap(), "{a} {n}");
        }
        for b in tabs.iter().filter(|b| b.size() <= 2) {
            let l0 = a.size().max(b.size());
            for l in l0..=(l0 + 2).min(6) {
                assert_eq!(m3_1_lhs(a, b, &p, &q, l).unwrap(), m3_1_lhs_brute(a, b, &p, &q, l).unwrap(), "{a} {b} {l}");
            }
        }
    }
}

#[test]
fn finite_ratios_sum_to_one() {
    let q = Rational::new(5.into(), 3.into());
    for n in 3..=7 {
        let s: Rational = Permutation::all(3).map(|s| qlim1_lhs(&s, &q, n).unwrap()).sum();
        assert_eq!(s, Rational::one());
    }
}

#[test]
fn involution_numbers() {
    let t = t_counts(12);
    assert_eq!(t[10], BigInt::from(9496));
    for (n, c) in t.iter().enumerate().take(10) {
        assert_eq!(c, &BigInt::from(Permutation::involutions(n).len()));
    }
}
