//! Printing any expression tree and reparsing it must reproduce the tree.

use num_bigint::BigInt;
use proptest::prelude::*;

use surreal_cli::expr::{parse, Cmp, Expr, Func};
use surreal_core::{Dyadic, Sign, SignSeq};

fn numeral() -> impl Strategy<Value = Expr> {
    (-24i64..=24, 0u32..=3).prop_map(|(n, e)| Expr::Num(Dyadic::new(BigInt::from(n), e)))
}

fn signs() -> impl Strategy<Value = Expr> {
    proptest::collection::vec(prop_oneof![Just(Sign::Minus), Just(Sign::Plus)], 0..=4)
        .prop_map(|v| Expr::Signs(SignSeq(v)))
}

/// Negation folds into numerals the same way the parser folds it, so the
/// generated trees stay inside the parser's image.
fn neg(e: Expr) -> Expr {
    match e {
        Expr::Num(d) => Expr::Num(-d),
        other => Expr::Neg(Box::new(other)),
    }
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![numeral(), signs()];
    leaf.prop_recursive(3, 24, 4, |inner| {
        let pair = (inner.clone(), inner.clone());
        prop_oneof![
            (
                proptest::collection::vec(inner.clone(), 0..=2),
                proptest::collection::vec(inner.clone(), 0..=2),
            )
                .prop_map(|(l, r)| Expr::Cut(l, r)),
            inner.clone().prop_map(neg),
            pair.clone().prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            pair.clone().prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            pair.clone().prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (
                prop_oneof![Just(Cmp::Lt), Just(Cmp::Leq), Just(Cmp::Eq), Just(Cmp::Apart)],
                pair.clone(),
            )
                .prop_map(|(op, (a, b))| Expr::Compare(op, Box::new(a), Box::new(b))),
            (
                prop_oneof![
                    Just(Func::Value),
                    Just(Func::Sign),
                    Just(Func::Birthday),
                    Just(Func::Canon),
                ],
                inner,
            )
                .prop_map(|(f, a)| Expr::Call(f, Box::new(a))),
        ]
    })
}

proptest! {
    #[test]
    fn printing_then_parsing_is_the_identity(tree in expr()) {
        let printed = tree.to_string();
        let reparsed = parse(&printed);
        prop_assert_eq!(reparsed, Ok(tree), "printed form: {}", printed);
    }
}
