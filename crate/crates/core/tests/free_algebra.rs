use num_traits::{One, Zero};
use proptest::prelude::*;
use pseudoroot::freealgebra::words_of_degree;
use pseudoroot::{pairing, Element, FreeElement, Rational, Side, SubsetMask, Word};

fn element(side: Side) -> impl Strategy<Value = Element> {
    let term = (prop::collection::vec(1u16..=7, 0..=3), -3i64..=3);
    prop::collection::vec(term, 0..=4).prop_map(move |terms| {
        FreeElement::from_terms(
            side,
            terms.into_iter().map(|(letters, c)| {
                (
                    Word::new(letters.into_iter().map(SubsetMask::from_bits).collect()),
                    Rational::from_integer(c.into()),
                )
            }),
        )
    })
}

fn scalar() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=4).prop_map(|(a, b)| Rational::new(a.into(), b.into()))
}

proptest! {
    #[test]
    fn multiplication_is_associative(a in element(Side::Primal), b in element(Side::Primal), c in element(Side::Primal)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_is_bilinear(
        a in element(Side::Primal),
        b in element(Side::Primal),
        c in element(Side::Primal),
        x in scalar(),
        y in scalar(),
    ) {
        let combo = &a.scale(&x) + &b.scale(&y);
        prop_assert_eq!(&combo * &c, &(&a * &c).scale(&x) + &(&b * &c).scale(&y));
        prop_assert_eq!(&c * &combo, &(&c * &a).scale(&x) + &(&c * &b).scale(&y));
    }

    #[test]
    fn one_is_a_unit(a in element(Side::Dual)) {
        let one = Element::one(Side::Dual);
        prop_assert_eq!(&one * &a, a.clone());
        prop_assert_eq!(&a * &one, a);
    }

    #[test]
    fn pairing_is_bilinear(a in element(Side::Primal), b in element(Side::Primal), u in element(Side::Dual), x in scalar()) {
        let lhs = pairing(&(&a.scale(&x) + &b), &u).unwrap();
        let rhs = x * pairing(&a, &u).unwrap() + pairing(&b, &u).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn pairing_is_perfect_on_words() {
    for n in 1..=3 {
        let labels: Vec<SubsetMask> = SubsetMask::all_nonempty(n).collect();
        let words: Vec<Word> = (0..=3).flat_map(|d| words_of_degree(&labels, d)).collect();
        for w in &words {
            let p = Element::monomial(Side::Primal, w.clone(), Rational::one());
            for u in &words {
                let d = Element::monomial(Side::Dual, u.clone(), Rational::one());
                let expected = if w == u {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                assert_eq!(pairing(&p, &d).unwrap(), expected, "{w:?} vs {u:?}");
            }
        }
    }
}

#[test]
fn pairing_needs_opposite_sides() {
    let a = Element::generator(Side::Primal, SubsetMask::singleton(1));
    assert!(pairing(&a, &a).is_err());
}
