//! Bottom-up evaluation of expressions against an arena.

use std::fmt;

use num_bigint::BigInt;
use surreal_core::{Arena, Dyadic, Error, NodeId, SignSeq};

use crate::expr::{Cmp, Expr, Func};

/// What an expression evaluates to.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Node(NodeId),
    Bool(bool),
    Dyadic(Dyadic),
    Int(BigInt),
    Signs(SignSeq),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Node(_) => "a surreal number",
            Value::Bool(_) => "a boolean",
            Value::Dyadic(_) => "a dyadic value",
            Value::Int(_) => "an integer",
            Value::Signs(_) => "a sign expansion",
        }
    }
}

/// Why an expression failed to evaluate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalError {
    Core(Error),
    Type { context: &'static str, got: &'static str },
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Core(e) => write!(f, "{e}"),
            EvalError::Type { context, got } => {
                write!(f, "{context} needs a surreal number, not {got}")
            }
        }
    }
}

impl std::error::Error for EvalError {}

impl From<Error> for EvalError {
    fn from(e: Error) -> Self {
        EvalError::Core(e)
    }
}

/// Evaluates `e` bottom-up. Cut literals go through the validating
/// constructor, so ill-ordered cuts surface here, not at parse time.
pub fn eval(arena: &mut Arena, e: &Expr) -> Result<Value, EvalError> {
    match e {
        Expr::Num(d) => Ok(Value::Node(arena.from_dyadic(d)?)),
        Expr::Signs(seq) => Ok(Value::Node(arena.decode(seq)?)),
        Expr::Cut(left, right) => {
            let ls = nodes(arena, left, "a cut option")?;
            let rs = nodes(arena, right, "a cut option")?;
            Ok(Value::Node(arena.make(&ls, &rs)?))
        }
        Expr::Neg(x) => {
            let x = node(arena, x, "negation")?;
            Ok(Value::Node(arena.neg(x)?))
        }
        Expr::Add(x, y) => {
            let (x, y) = pair(arena, x, y, "addition")?;
            Ok(Value::Node(arena.add(x, y)?))
        }
        Expr::Sub(x, y) => {
            let (x, y) = pair(arena, x, y, "subtraction")?;
            Ok(Value::Node(arena.sub(x, y)?))
        }
        Expr::Mul(x, y) => {
            let (x, y) = pair(arena, x, y, "multiplication")?;
            Ok(Value::Node(arena.mul(x, y)?))
        }
        Expr::Compare(op, x, y) => {
            let (x, y) = pair(arena, x, y, "comparison")?;
            let b = match op {
                Cmp::Lt => arena.lt(x, y),
                Cmp::Leq => arena.leq(x, y),
                Cmp::Eq => arena.eq(x, y),
                Cmp::Apart => arena.apart(x, y),
            };
            Ok(Value::Bool(b))
        }
        Expr::Call(func, arg) => {
            let x = node(arena, arg, "a function argument")?;
            Ok(match func {
                Func::Value => Value::Dyadic(arena.value(x)),
                Func::Sign => Value::Signs(arena.encode(x)),
                Func::Birthday => {
                    let c = arena.canonicalize(x)?;
                    Value::Int(BigInt::from(arena.birthday(c)))
                }
                Func::Canon => Value::Node(arena.canonicalize(x)?),
            })
        }
    }
}

fn node(arena: &mut Arena, e: &Expr, context: &'static str) -> Result<NodeId, EvalError> {
    match eval(arena, e)? {
        Value::Node(id) => Ok(id),
        other => Err(EvalError::Type { context, got: other.kind() }),
    }
}

fn pair(
    arena: &mut Arena,
    x: &Expr,
    y: &Expr,
    context: &'static str,
) -> Result<(NodeId, NodeId), EvalError> {
    Ok((node(arena, x, context)?, node(arena, y, context)?))
}

fn nodes(arena: &mut Arena, es: &[Expr], context: &'static str) -> Result<Vec<NodeId>, EvalError> {
    es.iter().map(|e| node(arena, e, context)).collect()
}

/// The canonical cut of `x`, options rendered as dyadic values: `{|}`,
/// `{1/2|1}`, `{|-2}`.
pub fn canonical_cut(arena: &mut Arena, x: NodeId) -> Result<String, Error> {
    let c = arena.canonicalize(x)?;
    let left: Vec<NodeId> = arena.node(c).left().to_vec();
    let right: Vec<NodeId> = arena.node(c).right().to_vec();
    let mut out = String::from("{");
    for (i, &o) in left.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&arena.value(o).to_string());
    }
    out.push('|');
    for (i, &o) in right.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&arena.value(o).to_string());
    }
    out.push('}');
    Ok(out)
}

/// Everything the `eval` command reports about a node-valued result.
pub struct NodeReport {
    pub canonical: String,
    pub value: String,
    pub birthday: u32,
    pub signs: String,
}

impl NodeReport {
    pub fn build(arena: &mut Arena, x: NodeId) -> Result<NodeReport, Error> {
        let canonical = canonical_cut(arena, x)?;
        let value = arena.value(x).to_string();
        let c = arena.canonicalize(x)?;
        Ok(NodeReport {
            canonical,
            value,
            birthday: arena.birthday(c),
            signs: arena.encode(c).to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn run(src: &str) -> Result<Value, EvalError> {
        let mut arena = Arena::new();
        eval(&mut arena, &parse(src).unwrap())
    }

    #[test]
    fn halves_sum_to_one() {
        assert_eq!(run("{0|1} + {0|1} == 1").unwrap(), Value::Bool(true));
    }

    #[test]
    fn signs_of_three_quarters() {
        let Value::Signs(seq) = run("sign(3/4)").unwrap() else { panic!("not signs") };
        assert_eq!(seq.to_string(), "+-+");
    }

    #[test]
    fn negatives_multiply_to_a_positive() {
        assert_eq!(run("-1 * -1 == 1").unwrap(), Value::Bool(true));
    }

    #[test]
    fn ill_ordered_cuts_fail_at_evaluation() {
        let err = run("{1|0}").unwrap_err();
        assert!(matches!(err, EvalError::Core(Error::CutViolation { .. })));
    }

    #[test]
    fn booleans_do_not_add() {
        let err = run("(1 < 2) + 1").unwrap_err();
        assert_eq!(err, EvalError::Type { context: "addition", got: "a boolean" });
    }

    #[test]
    fn canonical_cut_renders_dyadic_options() {
        let mut arena = Arena::new();
        let e = parse("{0|1} * 2 - 1/4").unwrap();
        let Value::Node(x) = eval(&mut arena, &e).unwrap() else { panic!("not a node") };
        assert_eq!(canonical_cut(&mut arena, x).unwrap(), "{1/2|1}");
        assert_eq!(arena.value(x), "3/4".parse().unwrap());
    }

    #[test]
    fn empty_cut_reports_zero() {
        let mut arena = Arena::new();
        let e = parse("{|}").unwrap();
        let Value::Node(x) = eval(&mut arena, &e).unwrap() else { panic!("not a node") };
        let r = NodeReport::build(&mut arena, x).unwrap();
        assert_eq!(r.canonical, "{|}");
        assert_eq!(r.value, "0");
        assert_eq!(r.birthday, 0);
        assert_eq!(r.signs, "");
    }

    #[test]
    fn birthday_is_canonical() {
        // 1/2 + 1/2 is born later than 1 as a raw cut; birthday() reports the
        // canonical day.
        let Value::Int(day) = run("birthday({0|1} + {0|1})").unwrap() else { panic!("not int") };
        assert_eq!(day, BigInt::from(1));
    }
}
