use std::collections::BTreeSet;

use proptest::prelude::*;
use qtab::jset::*;
use qtab::Permutation;

fn subsets_up_to(max: usize) -> Vec<IntSet> {
    (0..=max).flat_map(IntSet::all_with_max).collect()
}

#[test]
fn j2_criterion_matches_enumeration() {
    for n in 0..=8 {
        let brute = j2_sets_brute(n);
        for s in IntSet::all_with_max(n) {
            assert_eq!(is_j2_set(&s), brute.contains(&s), "{s}");
        }
        assert_eq!(brute.len(), j2_series(n)[n].clone().try_into().unwrap_or(0usize));
    }
}

#[test]
fn j_criterion_matches_enumeration() {
    for n in 0..=7 {
        let brute = j_sets_brute(n);
        for s in IntSet::all_with_max(n) {
            assert_eq!(is_j_set(&s), brute.contains(&s), "{s}");
        }
        // sets realized by arbitrary permutations are j-sets of smaller max
        for pi in Permutation::all(n) {
            assert!(is_j_set(&j_set(&pi)));
        }
    }
}

#[test]
fn sets_without_zero_are_rejected() {
    let s: IntSet = "1,2".parse().unwrap();
    assert!(!is_j_set(&s) && !is_j2_set(&s));
}

#[test]
fn every_j_set_is_a_j2_set() {
    for s in subsets_up_to(7) {
        if is_j_set(&s) {
            assert!(is_j2_set(&s), "{s}");
        }
    }
}

#[test]
fn j2_extension_rule() {
    for s in subsets_up_to(7).into_iter().filter(|s| is_j2_set(s) && s.len() >= 2) {
        let top = s.largest().unwrap();
        for m in 1..=5 {
            let mut ext = s.clone();
            ext.insert(top + m);
            assert_eq!(j2_extend_ok(&s, m).unwrap(), is_j2_set(&ext), "{s} + {m}");
        }
    }
}

#[test]
fn j_extension_rule() {
    for s in subsets_up_to(6).into_iter().filter(|s| is_j_set(s) && s.largest().unwrap() >= 2) {
        let top = s.largest().unwrap();
        for n in top + 1..=10 {
            let mut ext = s.clone();
            ext.insert(n);
            assert_eq!(j_extend_ok(&s, n).unwrap(), is_j_set(&ext), "{s} + {n}");
        }
    }
}

#[test]
fn truncations_of_j2_sets_are_j2_sets() {
    let perms: Vec<Permutation> = (0..=4).flat_map(Permutation::all).collect();
    for s in &perms {
        for t in &perms {
            let j = j2_set(s, t);
            for k in 0..=4 {
                assert!(is_j2_set(&j.up_to(k)), "{s} {t} {k}");
            }
        }
    }
}

#[test]
fn brute_j2_sets_are_distinct_per_size() {
    let all: BTreeSet<IntSet> = (0..=6).flat_map(j2_sets_brute).collect();
    let total: usize = (0..=6).map(|n| j2_sets_brute(n).len()).sum();
    assert_eq!(all.len(), total);
}

fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(&w).unwrap())
}

proptest! {
    #[test]
    fn j_set_contains_zero_and_is_a_j_set(pi in arb_perm(9)) {
        let j = j_set(&pi);
        prop_assert!(j.contains(0));
        prop_assert!(is_j_set(&j));
        prop_assert_eq!(j.clone(), j2_set(&pi, &pi.inverse()));
    }

    #[test]
    fn j2_set_is_a_j2_set(s in arb_perm(8), t in arb_perm(8)) {
        let j = j2_set(&s, &t);
        prop_assert!(j.contains(0));
        prop_assert!(j.largest().unwrap() <= s.len().min(t.len()));
        prop_assert!(is_j2_set(&j));
    }

    #[test]
    fn profile_blocks_concatenate(bits in proptest::collection::vec(any::<bool>(), 0..14)) {
        let mut s = IntSet::new([0]);
        for (i, b) in bits.iter().enumerate() {
            if *b { s.insert(i + 1); }
        }
        let p = profile(&s).unwrap();
        prop_assert_eq!(p.delta.iter().sum::<usize>(), s.largest().unwrap());
        let flat: Vec<DeltaEntry> = p.psi.concat();
        prop_assert_eq!(flat, p.delta_bar.clone());
        let total: usize = p.delta_bar.iter().map(|e| e.value).sum();
        prop_assert_eq!(total, s.largest().unwrap());
        if let Some(b) = p.psi2 {
            prop_assert_eq!(b.concat(), p.delta);
        }
    }
}
