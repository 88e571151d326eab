//! Exact dyadic rationals `num / 2^exp` and the simplicity rule.
//!
//! Every finitely born surreal number has a dyadic value, so this module is the
//! independent arithmetic oracle for the rest of the crate: node-level results
//! are checked against plain dyadic computation throughout the test suite.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arena::{Arena, NodeId};
use crate::error::Error;

/// An exact dyadic rational `num / 2^exp`.
///
/// Kept canonical: `exp == 0` or `num` is odd, so structural equality is value
/// equality. All constructors normalize.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dyadic {
    num: BigInt,
    exp: u32,
}

impl Dyadic {
    /// Builds `num / 2^exp`, reducing to canonical form.
    pub fn new(num: BigInt, exp: u32) -> Self {
        let mut d = Dyadic { num, exp };
        d.normalize();
        d
    }

    pub fn zero() -> Self {
        Dyadic { num: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic { num: BigInt::one(), exp: 0 }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Dyadic { num: n.into(), exp: 0 }
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn exp(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.exp == 0
    }

    /// Largest integer not above `self`. `>>` on `BigInt` rounds toward
    /// negative infinity, which is exactly floor for negative numerators.
    pub fn floor(&self) -> BigInt {
        &self.num >> self.exp
    }

    /// Smallest integer not below `self`.
    pub fn ceil(&self) -> BigInt {
        -((-&self.num) >> self.exp)
    }

    /// `self / 2`.
    pub fn half(&self) -> Self {
        Dyadic::new(self.num.clone(), self.exp + 1)
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.exp = 0;
            return;
        }
        while self.exp > 0 && !self.num.bit(0) {
            self.num >>= 1;
            self.exp -= 1;
        }
    }

    /// Numerator after rescaling to denominator `2^exp`; requires `exp >= self.exp`.
    fn scaled_num(&self, exp: u32) -> BigInt {
        &self.num << (exp - self.exp)
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::from_int(n)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let exp = self.exp.max(other.exp);
        self.scaled_num(exp).cmp(&other.scaled_num(exp))
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: &Dyadic) -> Dyadic {
        let exp = self.exp.max(rhs.exp);
        Dyadic::new(self.scaled_num(exp) + rhs.scaled_num(exp), exp)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: &Dyadic) -> Dyadic {
        let exp = self.exp.max(rhs.exp);
        Dyadic::new(self.scaled_num(exp) - rhs.scaled_num(exp), exp)
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;

    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.num * &rhs.num, self.exp + rhs.exp)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        // Negation preserves canonical form; skip renormalizing.
        Dyadic { num: -&self.num, exp: self.exp }
    }
}

impl Add for Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: Dyadic) -> Dyadic {
        &self + &rhs
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: Dyadic) -> Dyadic {
        &self - &rhs
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;

    fn mul(self, rhs: Dyadic) -> Dyadic {
        &self * &rhs
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        -&self
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, BigInt::one() << self.exp)
        }
    }
}

/// Failure to read a dyadic from text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseDyadicError(pub &'static str);

impl fmt::Display for ParseDyadicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

impl core::error::Error for ParseDyadicError {}

impl FromStr for Dyadic {
    type Err = ParseDyadicError;

    /// Accepts an integer or `p/q` where `q` is a power of two.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let num = BigInt::from_str(num_str).map_err(|_| ParseDyadicError("invalid numerator"))?;
        let exp = match den_str {
            None => 0,
            Some(d) => {
                let den = BigInt::from_str(d).map_err(|_| ParseDyadicError("invalid denominator"))?;
                if !den.is_positive() {
                    return Err(ParseDyadicError("denominator must be positive"));
                }
                let exp = den.bits() - 1;
                if BigInt::one() << exp != den {
                    return Err(ParseDyadicError("denominator must be a power of two"));
                }
                exp as u32
            }
        };
        Ok(Dyadic::new(num, exp))
    }
}

/// The earliest-born dyadic strictly between the bounds (either may be absent).
///
/// "Earliest born" means: an integer if one fits, the one of smallest absolute
/// value with ties to 0; otherwise the unique dyadic of minimal denominator
/// exponent inside the interval.
pub fn simplest_between(lo: Option<&Dyadic>, hi: Option<&Dyadic>) -> Result<Dyadic, Error> {
    if let (Some(l), Some(r)) = (lo, hi) {
        if l >= r {
            return Err(Error::EmptyInterval);
        }
    }
    if lo.is_none_or(Dyadic::is_negative) && hi.is_none_or(Dyadic::is_positive) {
        return Ok(Dyadic::zero());
    }

    // The bounds now pin the interval to one side of zero, so the integer
    // candidate closest to zero and the unit bracket for the halving walk are
    // both determined by the bound nearer to zero.
    let (int_candidate, unit_lo) = if lo.is_some_and(|l| !l.is_negative()) {
        // Interval is above a nonnegative bound: smallest integer above it.
        (lo.unwrap().floor() + 1, lo.unwrap().floor())
    } else {
        // Interval is below a nonpositive bound: largest integer below it.
        let r = hi.unwrap();
        let n = if r.is_integer() { r.floor() - 1 } else { r.floor() };
        (n.clone(), n)
    };
    let candidate = Dyadic::from_int(int_candidate);
    let inside = lo.is_none_or(|l| l < &candidate) && hi.is_none_or(|r| &candidate < r);
    if inside {
        return Ok(candidate);
    }

    // No integer fits: halve inside the unit bracket until a midpoint lands
    // strictly between the bounds. Both bounds are present here, since a
    // one-sided interval always contains an integer.
    let mut a = Dyadic::from_int(unit_lo.clone());
    let mut b = Dyadic::from_int(unit_lo + 1);
    let (l, r) = (lo.unwrap(), hi.unwrap());
    loop {
        let mid = (&a + &b).half();
        if &mid <= l {
            a = mid;
        } else if &mid >= r {
            b = mid;
        } else {
            return Ok(mid);
        }
    }
}

impl Arena {
    /// The exact dyadic value of a node: the simplest value strictly between
    /// the largest left-option value and the smallest right-option value.
    pub fn value(&mut self, x: NodeId) -> Dyadic {
        if let Some(v) = self.value_memo.get(&x) {
            return v.clone();
        }
        let mut max_left: Option<Dyadic> = None;
        for i in 0..self.node(x).left().len() {
            let l = self.node(x).left()[i];
            let v = self.value(l);
            if max_left.as_ref().is_none_or(|m| v > *m) {
                max_left = Some(v);
            }
        }
        let mut min_right: Option<Dyadic> = None;
        for i in 0..self.node(x).right().len() {
            let r = self.node(x).right()[i];
            let v = self.value(r);
            if min_right.as_ref().is_none_or(|m| v < *m) {
                min_right = Some(v);
            }
        }
        let v = simplest_between(max_left.as_ref(), min_right.as_ref())
            .expect("interned cuts have a nonempty interior");
        self.value_memo.insert(x, v.clone());
        v
    }

    /// The canonical node for a dyadic value: the cut between its bracketing
    /// ancestors on the binary search path from zero.
    ///
    /// Integers come out as `{n-1|}` / `{|n+1}` chains, a non-integer as
    /// `{a|b}` where `a` and `b` are the nearest earlier-born dyadics around
    /// it. Canonical nodes of equal value are interned to one id.
    pub fn from_dyadic(&mut self, d: &Dyadic) -> Result<NodeId, Error> {
        if let Some(&id) = self.canon_by_value.get(d) {
            return Ok(id);
        }
        let mut lo: Option<(Dyadic, NodeId)> = None;
        let mut hi: Option<(Dyadic, NodeId)> = None;
        loop {
            let cur = simplest_between(lo.as_ref().map(|p| &p.0), hi.as_ref().map(|p| &p.0))
                .expect("search interval stays nonempty");
            let left: Vec<NodeId> = lo.iter().map(|p| p.1).collect();
            let right: Vec<NodeId> = hi.iter().map(|p| p.1).collect();
            let node = self.make(&left, &right)?;
            // Every node on the path is canonical with known value; seed the
            // caches so later evaluations and canonicalizations are lookups.
            self.value_memo.entry(node).or_insert_with(|| cur.clone());
            self.canon_by_value.entry(cur.clone()).or_insert(node);
            self.canon_memo.entry(node).or_insert(node);
            if cur == *d {
                return Ok(node);
            }
            if *d < cur {
                hi = Some((cur, node));
            } else {
                lo = Some((cur, node));
            }
        }
    }
}

/// Dyadic literals appear all over the test suite; this keeps them terse.
#[cfg(test)]
pub(crate) fn dy(s: &str) -> Dyadic {
    Dyadic::from_str(s).expect("literal dyadic")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_normalize() {
        assert_eq!(Dyadic::new(BigInt::from(6), 2), dy("3/2"));
        assert_eq!(Dyadic::new(BigInt::from(4), 2), dy("1"));
        assert_eq!(Dyadic::new(BigInt::zero(), 7), Dyadic::zero());
        assert_eq!(dy("3/4").exp(), 2);
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&dy("1/2") + &dy("1/2"), dy("1"));
        assert_eq!(&dy("3/4") - &dy("1"), dy("-1/4"));
        assert_eq!(&dy("3/4") * &dy("1/2"), dy("3/8"));
        assert_eq!(-&dy("3/4"), dy("-3/4"));
        assert_eq!(&dy("-5/2") * &dy("-2"), dy("5"));
    }

    #[test]
    fn ordering() {
        assert!(dy("1/2") < dy("3/4"));
        assert!(dy("-1") < dy("-1/2"));
        assert!(dy("2") > dy("3/2"));
        assert_eq!(dy("4/8"), dy("1/2"));
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(dy("3/4").floor(), BigInt::zero());
        assert_eq!(dy("-5/2").floor(), BigInt::from(-3));
        assert_eq!(dy("-5").floor(), BigInt::from(-5));
        assert_eq!(dy("-5/2").ceil(), BigInt::from(-2));
        assert_eq!(dy("3").ceil(), BigInt::from(3));
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "1", "-2", "1/2", "-3/4", "2049/2048"] {
            assert_eq!(alloc::format!("{}", dy(s)), s);
        }
    }

    #[test]
    fn rejects_non_dyadic_denominators() {
        assert!(Dyadic::from_str("1/3").is_err());
        assert!(Dyadic::from_str("1/0").is_err());
        assert!(Dyadic::from_str("1/-4").is_err());
    }

    #[test]
    fn simplest_with_no_bounds_is_zero() {
        assert_eq!(simplest_between(None, None).unwrap(), Dyadic::zero());
    }

    #[test]
    fn simplest_between_zero_and_one() {
        assert_eq!(
            simplest_between(Some(&Dyadic::zero()), Some(&Dyadic::one())).unwrap(),
            dy("1/2")
        );
    }

    #[test]
    fn simplest_above_a_half() {
        assert_eq!(simplest_between(Some(&dy("1/2")), None).unwrap(), dy("1"));
    }

    #[test]
    fn simplest_prefers_small_magnitude() {
        assert_eq!(simplest_between(Some(&dy("-7/2")), Some(&dy("-1"))).unwrap(), dy("-2"));
        assert_eq!(simplest_between(Some(&dy("5/4")), Some(&dy("17/2"))).unwrap(), dy("2"));
        assert_eq!(simplest_between(None, Some(&dy("-5/2"))).unwrap(), dy("-3"));
        assert_eq!(simplest_between(Some(&dy("-1/2")), Some(&dy("0"))).unwrap(), dy("-1/4"));
        assert_eq!(simplest_between(Some(&dy("5/8")), Some(&dy("7/8"))).unwrap(), dy("3/4"));
    }

    #[test]
    fn value_of_small_cuts() {
        let mut arena = Arena::new();
        let z = arena.zero();
        let one = arena.make(&[z], &[]).unwrap();
        let neg_one = arena.make(&[], &[z]).unwrap();
        let half = arena.make(&[z], &[one]).unwrap();
        let also_one = arena.make(&[neg_one, z], &[]).unwrap();

        assert_eq!(arena.value(z), dy("0"));
        assert_eq!(arena.value(half), dy("1/2"));
        assert_eq!(arena.value(also_one), dy("1"));
    }

    #[test]
    fn from_dyadic_builds_canonical_cuts() {
        let mut arena = Arena::new();
        let two = arena.from_dyadic(&dy("2")).unwrap();
        let one = arena.from_dyadic(&dy("1")).unwrap();
        assert_eq!(arena.node(two).left(), &[one]);
        assert!(arena.node(two).right().is_empty());

        let three_quarters = arena.from_dyadic(&dy("3/4")).unwrap();
        let half = arena.from_dyadic(&dy("1/2")).unwrap();
        assert_eq!(arena.node(three_quarters).left(), &[half]);
        assert_eq!(arena.node(three_quarters).right(), &[one]);

        assert_eq!(arena.from_dyadic(&dy("0")).unwrap(), arena.zero());
    }

    #[test]
    fn from_dyadic_round_trips_through_value() {
        let mut arena = Arena::new();
        for s in ["0", "1", "-3", "1/2", "-3/4", "5/8", "41/16", "-129/32"] {
            let d = dy(s);
            let node = arena.from_dyadic(&d).unwrap();
            assert_eq!(arena.value(node), d, "value(from_dyadic({s}))");
            let again = arena.from_dyadic(&d).unwrap();
            assert_eq!(node, again, "canonical nodes are interned once");
        }
    }

    #[test]
    fn empty_interval_is_rejected() {
        assert_eq!(
            simplest_between(Some(&Dyadic::one()), Some(&Dyadic::one())),
            Err(Error::EmptyInterval)
        );
        assert_eq!(
            simplest_between(Some(&Dyadic::one()), Some(&Dyadic::zero())),
            Err(Error::EmptyInterval)
        );
    }
}
