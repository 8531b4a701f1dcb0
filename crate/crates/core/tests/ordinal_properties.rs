use std::cmp::Ordering;

use proptest::prelude::*;
use scatterkit::classify::{canonical, class_profile, classify, compactify, derived_order_type, homeomorphic, SpaceClass};
use scatterkit::invariants::{descriptor_of, groups_isomorphic, invariants, umf_of_ordinal, Answer};
use scatterkit::ordinal::{Kind, Ordinal};

fn o(s: &str) -> Ordinal {
    s.parse().unwrap()
}

fn ordinal() -> impl Strategy<Value = Ordinal> {
    let leaf = (0u64..4).prop_map(Ordinal::nat);
    let exponent = leaf.prop_recursive(2, 12, 3, |inner| {
        prop::collection::vec((inner, 1u64..5), 0..3).prop_map(build)
    });
    prop::collection::vec((exponent, 1u64..5), 0..4).prop_map(build)
}

fn infinite() -> impl Strategy<Value = Ordinal> {
    ordinal().prop_filter("infinite", |x| !x.is_finite())
}

fn build(mut terms: Vec<(Ordinal, u64)>) -> Ordinal {
    terms.sort_by(|a, b| b.0.cmp(&a.0));
    terms.dedup_by(|a, b| a.0 == b.0);
    Ordinal::from_terms(terms).unwrap()
}

proptest! {
    #[test]
    fn format_parse_round_trip(a in ordinal()) {
        prop_assert_eq!(a.to_string().parse::<Ordinal>().unwrap(), a);
    }

    #[test]
    fn addition_is_associative(a in ordinal(), b in ordinal(), c in ordinal()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn zero_is_neutral(a in ordinal()) {
        prop_assert_eq!(&a + &Ordinal::zero(), a.clone());
        prop_assert_eq!(&Ordinal::zero() + &a, a);
    }

    #[test]
    fn addition_is_monotone_on_the_right(a in ordinal(), b in ordinal(), c in ordinal()) {
        let (lo, hi) = if b <= c { (b, c) } else { (c, b) };
        prop_assert!(&a + &lo <= &a + &hi);
        if lo < hi {
            prop_assert!(&a + &lo < &a + &hi);
        }
        prop_assert!(a <= &a + &lo);
    }

    #[test]
    fn left_absorption(b in ordinal(), e in ordinal()) {
        let power = Ordinal::omega_pow(e.clone());
        if b < power {
            prop_assert_eq!(&b + &power, power);
        }
    }

    #[test]
    fn division_round_trip(g in ordinal(), beta in ordinal()) {
        let (q, r) = g.divide_by_power(&beta);
        prop_assert_eq!(&Ordinal::mul_power(&beta, &q) + &r, g);
        prop_assert!(r < Ordinal::omega_pow(beta));
    }

    #[test]
    fn compare_is_a_total_order(a in ordinal(), b in ordinal()) {
        prop_assert_eq!(a.compare(&b), b.compare(&a).reverse());
        prop_assert_eq!(a.compare(&b) == Ordering::Equal, a == b);
    }

    #[test]
    fn kind_matches_trailing_term(a in ordinal()) {
        let expected = match a.trailing_exponent() {
            None => Kind::Zero,
            Some(e) if e.is_zero() => Kind::Successor,
            Some(_) => Kind::Limit,
        };
        prop_assert_eq!(a.kind(), expected);
    }

    #[test]
    fn canonical_is_idempotent(g in ordinal()) {
        let c = canonical(&g);
        prop_assert_eq!(canonical(&c), c.clone());
        prop_assert_eq!(classify(&c), classify(&g));
        prop_assert!(homeomorphic(&g, &c));
    }

    #[test]
    fn swapping_infinite_summands(a in infinite(), b in infinite(), c in ordinal()) {
        let one = Ordinal::one();
        prop_assert!(homeomorphic(&(&(&a + &b) + &one), &(&(&b + &a) + &one)));
        if !c.is_zero() {
            prop_assert!(homeomorphic(&(&(&a + &b) + &c), &(&(&b + &a) + &c)));
        }
    }

    #[test]
    fn compactification_keeps_leading_term(g in infinite()) {
        let c = compactify(&g);
        prop_assert!(!c.is_limit());
        let (alpha, k) = g.leading().unwrap();
        prop_assert_eq!(classify(&c), SpaceClass::CompactInfinite { alpha: alpha.clone(), k: k.clone() });
    }

    #[test]
    fn top_rank_of_compact_space_has_k_points(g in infinite()) {
        let c = compactify(&g);
        let (alpha, k) = c.leading().unwrap();
        let top = derived_order_type(&c, alpha);
        prop_assert_eq!(top, Ordinal::nat(k.clone()));
        prop_assert!(derived_order_type(&c, &alpha.succ()).is_zero());
    }

    #[test]
    fn one_more_derivative_is_one_more_step(g in ordinal(), beta in 0u64..4) {
        // the next derived set is the derived set of the current one, seen as an ordinal space
        let level = derived_order_type(&g, &Ordinal::nat(beta));
        let step = derived_order_type(&level, &Ordinal::one());
        prop_assert_eq!(derived_order_type(&g, &Ordinal::nat(beta + 1)), step);
    }

    #[test]
    fn oracle_is_symmetric_and_consistent(a in ordinal(), b in ordinal()) {
        let (da, db) = (descriptor_of(&a), descriptor_of(&b));
        let d = groups_isomorphic(&da, &db);
        prop_assert_eq!(d.answer, groups_isomorphic(&db, &da).answer);
        prop_assert_eq!(groups_isomorphic(&da, &da).answer, Answer::Yes);
        if d.answer == Answer::Yes {
            prop_assert_eq!(invariants(&da), invariants(&db));
        }
        prop_assert_eq!(descriptor_of(&canonical(&a)), da);
    }

    #[test]
    fn flow_factors_count_cb_rank(g in ordinal()) {
        prop_assert_eq!(umf_of_ordinal(&g).factor_count(), class_profile(&g).cb_rank());
    }
}

#[test]
fn one_more_derivative_on_a_closed_interval() {
    // X' of [0, w^2] is {w*m : 1 <= m <= w}
    assert_eq!(derived_order_type(&o("w^2 + 1"), &o("1")), o("w + 1"));
    assert_eq!(derived_order_type(&o("w^2*3 + 1"), &o("2")), o("3"));
}
