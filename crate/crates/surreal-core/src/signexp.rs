//! Sign expansions: each canonical node as its `+`/`-` path from zero.
//!
//! The path down the binary tree of canonical values, one sign per day, is an
//! order isomorphism once sequences are compared with the gap rule: at the
//! first disagreement a `-` sorts below a missing entry, which sorts below a
//! `+`.

use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use alloc::vec::Vec;

use crate::arena::{Arena, NodeId};
use crate::dyadic::{simplest_between, Dyadic};
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

/// A finite sign sequence, ordered by the gap rule.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SignSeq(pub Vec<Sign>);

impl SignSeq {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl PartialOrd for SignSeq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SignSeq {
    /// Lexicographic with absent entries strictly between `-` and `+`: a
    /// sequence extends below its prefix with `-` and above it with `+`.
    fn cmp(&self, other: &Self) -> Ordering {
        for i in 0..self.len().min(other.len()) {
            match self.0[i].cmp(&other.0[i]) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        match self.len().cmp(&other.len()) {
            Ordering::Equal => Ordering::Equal,
            // `self` is the shorter prefix: `other`'s next sign decides.
            Ordering::Less => match other.0[self.len()] {
                Sign::Plus => Ordering::Less,
                Sign::Minus => Ordering::Greater,
            },
            Ordering::Greater => match self.0[other.len()] {
                Sign::Plus => Ordering::Greater,
                Sign::Minus => Ordering::Less,
            },
        }
    }
}

impl fmt::Display for SignSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Sign::Plus => "+",
                Sign::Minus => "-",
            })?;
        }
        Ok(())
    }
}

/// Failure to read a sign sequence from text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseSignSeqError(pub char);

impl fmt::Display for ParseSignSeqError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sign sequences contain only '+' and '-', found {:?}", self.0)
    }
}

impl core::error::Error for ParseSignSeqError {}

impl FromStr for SignSeq {
    type Err = ParseSignSeqError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                other => Err(ParseSignSeqError(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(SignSeq)
    }
}

impl Arena {
    /// The sign expansion of `x`'s canonical form: one sign per step of the
    /// value walk from zero, `+` for each step up, `-` for each step down.
    /// Length equals the canonical birthday.
    pub fn encode(&mut self, x: NodeId) -> SignSeq {
        let d = self.value(x);
        let mut lo: Option<Dyadic> = None;
        let mut hi: Option<Dyadic> = None;
        let mut signs = Vec::new();
        loop {
            let cur = simplest_between(lo.as_ref(), hi.as_ref())
                .expect("walk interval stays nonempty");
            if cur == d {
                return SignSeq(signs);
            }
            if d < cur {
                signs.push(Sign::Minus);
                hi = Some(cur);
            } else {
                signs.push(Sign::Plus);
                lo = Some(cur);
            }
        }
    }

    /// The canonical node reached by walking `seq` from zero. Inverse of
    /// [`Arena::encode`] on canonical nodes.
    pub fn decode(&mut self, seq: &SignSeq) -> Result<NodeId, Error> {
        let mut lo: Option<(Dyadic, NodeId)> = None;
        let mut hi: Option<(Dyadic, NodeId)> = None;
        let mut cur_val = Dyadic::zero();
        let mut cur = self.zero();
        for &s in &seq.0 {
            match s {
                Sign::Plus => lo = Some((cur_val, cur)),
                Sign::Minus => hi = Some((cur_val, cur)),
            }
            cur_val = simplest_between(lo.as_ref().map(|p| &p.0), hi.as_ref().map(|p| &p.0))
                .expect("walk interval stays nonempty");
            let left: Vec<NodeId> = lo.iter().map(|p| p.1).collect();
            let right: Vec<NodeId> = hi.iter().map(|p| p.1).collect();
            cur = self.make(&left, &right)?;
            self.value_memo.entry(cur).or_insert_with(|| cur_val.clone());
            self.canon_by_value.entry(cur_val.clone()).or_insert(cur);
            self.canon_memo.entry(cur).or_insert(cur);
        }
        Ok(cur)
    }
}
