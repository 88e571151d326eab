//! Randomized structural properties of arena arithmetic.

use num_bigint::BigInt;
use proptest::prelude::*;
use surreal_core::{Arena, Dyadic, Sign, SignSeq};

fn dyadic() -> impl Strategy<Value = Dyadic> {
    (-48i64..=48, 0u32..=4).prop_map(|(n, e)| Dyadic::new(BigInt::from(n), e))
}

fn small_dyadic() -> impl Strategy<Value = Dyadic> {
    (-8i64..=8, 0u32..=2).prop_map(|(n, e)| Dyadic::new(BigInt::from(n), e))
}

fn sign_seq() -> impl Strategy<Value = SignSeq> {
    proptest::collection::vec(prop_oneof![Just(Sign::Minus), Just(Sign::Plus)], 0..=7)
        .prop_map(SignSeq)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn value_round_trips(d in dyadic()) {
        let mut arena = Arena::new();
        let x = arena.from_dyadic(&d).unwrap();
        prop_assert_eq!(arena.value(x), d);
    }

    #[test]
    fn display_round_trips(d in dyadic()) {
        prop_assert_eq!(d.to_string().parse::<Dyadic>().unwrap(), d);
    }

    #[test]
    fn birthday_counts_unit_steps_then_halvings(d in dyadic()) {
        let mut arena = Arena::new();
        let x = arena.from_dyadic(&d).unwrap();
        let steps = if d.is_negative() { -d.ceil() } else { d.floor() };
        let expected = if d.is_integer() {
            steps
        } else {
            steps + 1 + BigInt::from(d.exp())
        };
        prop_assert_eq!(BigInt::from(arena.birthday(x)), expected);
    }

    #[test]
    fn decode_inverts_encode(seq in sign_seq()) {
        let mut arena = Arena::new();
        let x = arena.decode(&seq).unwrap();
        prop_assert_eq!(arena.encode(x), seq);
    }

    #[test]
    fn encode_inverts_decode(d in dyadic()) {
        let mut arena = Arena::new();
        let x = arena.from_dyadic(&d).unwrap();
        let seq = arena.encode(x);
        prop_assert_eq!(arena.decode(&seq).unwrap(), x);
    }

    #[test]
    fn sign_order_mirrors_value_order(a in dyadic(), b in dyadic()) {
        let mut arena = Arena::new();
        let x = arena.from_dyadic(&a).unwrap();
        let y = arena.from_dyadic(&b).unwrap();
        let (sx, sy) = (arena.encode(x), arena.encode(y));
        prop_assert_eq!(sx.cmp(&sy), a.cmp(&b));
    }

    #[test]
    fn addition_is_structurally_commutative(a in dyadic(), b in dyadic()) {
        let mut arena = Arena::new();
        let x = arena.from_dyadic(&a).unwrap();
        let y = arena.from_dyadic(&b).unwrap();
        prop_assert_eq!(arena.add(x, y).unwrap(), arena.add(y, x).unwrap());
    }

    #[test]
    fn negation_is_a_structural_involution(a in dyadic()) {
        let mut arena = Arena::new();
        let x = arena.from_dyadic(&a).unwrap();
        let m = arena.neg(x).unwrap();
        prop_assert_eq!(arena.neg(m).unwrap(), x);
    }

    #[test]
    fn sums_land_strictly_inside_their_cut(a in small_dyadic(), b in small_dyadic()) {
        let mut arena = Arena::new();
        let x = arena.from_dyadic(&a).unwrap();
        let y = arena.from_dyadic(&b).unwrap();
        let s = arena.add(x, y).unwrap();
        for i in 0..arena.node(s).left().len() {
            let l = arena.node(s).left()[i];
            prop_assert!(arena.lt(l, s));
        }
        for i in 0..arena.node(s).right().len() {
            let r = arena.node(s).right()[i];
            prop_assert!(arena.lt(s, r));
        }
    }

    #[test]
    fn addition_matches_dyadic_addition(a in dyadic(), b in dyadic()) {
        let mut arena = Arena::new();
        let x = arena.from_dyadic(&a).unwrap();
        let y = arena.from_dyadic(&b).unwrap();
        let s = arena.add(x, y).unwrap();
        prop_assert_eq!(arena.value(s), &a + &b);
    }

    #[test]
    fn multiplication_matches_dyadic_multiplication(a in small_dyadic(), b in small_dyadic()) {
        let mut arena = Arena::new();
        let x = arena.from_dyadic(&a).unwrap();
        let y = arena.from_dyadic(&b).unwrap();
        let p = arena.mul(x, y).unwrap();
        prop_assert_eq!(arena.value(p), &a * &b);
    }

    #[test]
    fn canonicalize_preserves_value_of_sums(a in small_dyadic(), b in small_dyadic()) {
        let mut arena = Arena::new();
        let x = arena.from_dyadic(&a).unwrap();
        let y = arena.from_dyadic(&b).unwrap();
        let s = arena.add(x, y).unwrap();
        let c = arena.canonicalize(s).unwrap();
        prop_assert!(arena.eq(s, c));
        prop_assert_eq!(arena.birthday(c) <= arena.birthday(s), true);
    }
}
