use proptest::prelude::*;
use pseudoroot::combinatorics::family_counts;
use pseudoroot::{in_family, vee, BlockString, Family, SubsetMask};

fn string_strategy(n: usize, max_len: usize) -> impl Strategy<Value = BlockString> {
    let top = (1u16 << n) - 1;
    prop::collection::vec(1..=top, 0..=max_len)
        .prop_map(|bits| BlockString::new(bits.into_iter().map(SubsetMask::from_bits).collect()))
}

fn sized_string(max_n: usize, max_len: usize) -> impl Strategy<Value = (usize, BlockString)> {
    (1..=max_n).prop_flat_map(move |n| (Just(n), string_strategy(n, max_len)))
}

proptest! {
    #[test]
    fn vee_is_idempotent((_, s) in sized_string(5, 8)) {
        let once = vee(&s).unwrap();
        prop_assert_eq!(vee(&once).unwrap(), once);
    }

    #[test]
    fn vee_keeps_length_and_weight((_, s) in sized_string(5, 8)) {
        let v = vee(&s).unwrap();
        prop_assert_eq!(v.len(), s.len());
        prop_assert_eq!(v.weight(), s.weight());
    }

    #[test]
    fn y_is_the_fixed_point_set((n, s) in sized_string(4, 6)) {
        prop_assert_eq!(in_family(&s, &Family::Y, n).unwrap(), vee(&s).unwrap() == s);
    }

    #[test]
    fn concatenation_closure((n, b, c) in (2usize..=4).prop_flat_map(|n| (Just(n), string_strategy(n, 5), string_strategy(n, 5)))) {
        let b = vee(&b).unwrap();
        let c = vee(&c).unwrap();
        let last_ok = b.blocks().last().is_none_or(|x| !x.contains(1));
        let first_ok = c.blocks().first().is_none_or(|x| x.contains(1));
        prop_assume!(last_ok && first_ok);
        prop_assert!(in_family(&b.concat(&c), &Family::Y, n).unwrap());
    }

    #[test]
    fn substring_closure((n, s) in sized_string(4, 8), i in 0usize..9, j in 0usize..9) {
        let y = vee(&s).unwrap();
        let (lo, hi) = (i.min(j).min(y.len()), i.max(j).min(y.len()));
        prop_assert!(in_family(&y.substring(lo, hi), &Family::Y, n).unwrap());
    }

    #[test]
    fn subfamilies_sit_inside_y((n, s) in sized_string(4, 6)) {
        for f in [Family::Y1, Family::Y1Dagger, Family::YHat1, Family::W] {
            if in_family(&s, &f, n).unwrap() {
                prop_assert!(in_family(&s, &Family::Y, n).unwrap());
            }
        }
    }
}

#[test]
fn no_one_strings_count_like_one_fewer_element() {
    for n in 1..=6 {
        let hat = family_counts(n, &Family::YHat1, 6).unwrap();
        let smaller = family_counts(n - 1, &Family::Y, 6).unwrap();
        assert_eq!(hat, smaller, "n = {n}");
    }
}

#[test]
fn w_counts_for_two_elements() {
    assert_eq!(
        family_counts(2, &Family::W, 4).unwrap(),
        vec![0, 0, 1, 3, 7]
    );
}

#[test]
fn y_counts_for_small_n() {
    assert_eq!(
        family_counts(0, &Family::Y, 4).unwrap(),
        vec![1, 0, 0, 0, 0]
    );
    assert_eq!(
        family_counts(1, &Family::Y, 4).unwrap(),
        vec![1, 1, 1, 1, 1]
    );
    assert_eq!(
        family_counts(2, &Family::Y, 5).unwrap(),
        vec![1, 3, 8, 21, 55, 144]
    );
    assert_eq!(
        family_counts(3, &Family::Y, 3).unwrap(),
        vec![1, 7, 44, 274]
    );
    assert_eq!(
        family_counts(4, &Family::Y, 3).unwrap(),
        vec![1, 15, 208, 2872]
    );
}
