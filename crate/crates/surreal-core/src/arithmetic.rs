//! Negation, addition, and the two multiplications.
//!
//! Addition and negation work on any node. Multiplication comes in three
//! layers: `mul_pos` for nonnegative operands (the short two-term-per-side
//! cut), `mul` for arbitrary operands via difference pairs, and `mul_conway`
//! (the classical three-term cut) kept solely as an independent cross-check.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::arena::{Arena, NodeId};
use crate::dyadic::Dyadic;
use crate::error::Error;

/// `a - b` with both components positive. Any node can be written this way,
/// which is what extends positive multiplication to the whole arena.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiffPair {
    pub a: NodeId,
    pub b: NodeId,
}

impl Arena {
    /// `{-x^R | -x^L}`, the additive inverse.
    pub fn neg(&mut self, x: NodeId) -> Result<NodeId, Error> {
        if let Some(&r) = self.neg_memo.get(&x) {
            return Ok(r);
        }
        let mut left = Vec::with_capacity(self.node(x).right().len());
        for i in 0..self.node(x).right().len() {
            let r = self.node(x).right()[i];
            left.push(self.neg(r)?);
        }
        let mut right = Vec::with_capacity(self.node(x).left().len());
        for i in 0..self.node(x).left().len() {
            let l = self.node(x).left()[i];
            right.push(self.neg(l)?);
        }
        let r = self.make(&left, &right)?;
        self.neg_memo.insert(x, r);
        Ok(r)
    }

    /// `{x^L + y, x + y^L | x^R + y, x + y^R}`, the genetic sum.
    pub fn add(&mut self, x: NodeId, y: NodeId) -> Result<NodeId, Error> {
        if let Some(&r) = self.add_memo.get(&(x, y)) {
            return Ok(r);
        }
        let mut left = Vec::new();
        for i in 0..self.node(x).left().len() {
            let l = self.node(x).left()[i];
            left.push(self.add(l, y)?);
        }
        for i in 0..self.node(y).left().len() {
            let l = self.node(y).left()[i];
            left.push(self.add(x, l)?);
        }
        let mut right = Vec::new();
        for i in 0..self.node(x).right().len() {
            let r = self.node(x).right()[i];
            right.push(self.add(r, y)?);
        }
        for i in 0..self.node(y).right().len() {
            let r = self.node(y).right()[i];
            right.push(self.add(x, r)?);
        }
        let r = self.make(&left, &right)?;
        self.add_memo.insert((x, y), r);
        Ok(r)
    }

    /// `x + (-y)`.
    pub fn sub(&mut self, x: NodeId, y: NodeId) -> Result<NodeId, Error> {
        let ny = self.neg(y)?;
        self.add(x, ny)
    }

    /// The canonical node with the same value: earliest-born, one id per value.
    pub fn canonicalize(&mut self, x: NodeId) -> Result<NodeId, Error> {
        if let Some(&c) = self.canon_memo.get(&x) {
            return Ok(c);
        }
        let v = self.value(x);
        let c = self.from_dyadic(&v)?;
        self.canon_memo.insert(x, c);
        Ok(c)
    }

    /// Positive multiplication. Operands must be nonnegative; both are
    /// canonicalized before recursion, which is what makes the (birthday of y,
    /// birthday of x) measure strictly decrease.
    ///
    /// The result is the raw cut
    /// `{ x^L*y + (x-x^L)*y^L, x^R*y - (x^R-x)*y^R | x^L*y + (x-x^L)*y^R, x^R*y - (x^R-x)*y^L }`
    /// with each term dropped when the option it mentions is absent. The cut
    /// itself is not canonicalized, so its options stay inspectable sums.
    pub fn mul_pos(&mut self, x: NodeId, y: NodeId) -> Result<NodeId, Error> {
        let cx = self.canonicalize(x)?;
        let cy = self.canonicalize(y)?;
        let zero = self.zero();
        if !self.leq(zero, cx) {
            return Err(Error::NegativeOperand(x));
        }
        if !self.leq(zero, cy) {
            return Err(Error::NegativeOperand(y));
        }
        if cx == zero || cy == zero {
            return Ok(zero);
        }
        self.mul_pos_cut(cx, cy)
    }

    /// The canonical node for `x * y`; operands are canonical and nonnegative.
    ///
    /// Sub-products inside the cut terms are taken canonically. Term values
    /// are untouched by that, but it keeps every sum a sum of canonical nodes:
    /// summing raw product cuts instead would compound their sizes
    /// multiplicatively and exhaust the arena on modest inputs.
    fn mul_pos_value(&mut self, x: NodeId, y: NodeId) -> Result<NodeId, Error> {
        let zero = self.zero();
        if x == zero || y == zero {
            return Ok(zero);
        }
        if let Some(&r) = self.mul_pos_memo.get(&(x, y)) {
            return Ok(r);
        }
        let cut = self.mul_pos_cut(x, y)?;
        let r = self.canonicalize(cut)?;
        self.mul_pos_memo.insert((x, y), r);
        Ok(r)
    }

    /// Assembles the product cut; operands are canonical, nonnegative, and
    /// nonzero.
    fn mul_pos_cut(&mut self, x: NodeId, y: NodeId) -> Result<NodeId, Error> {
        // Canonical nodes carry at most one option per side, but nothing here
        // depends on that; iterate like the general formula.
        let xl: Vec<NodeId> = self.node(x).left().to_vec();
        let xr: Vec<NodeId> = self.node(x).right().to_vec();
        let yl: Vec<NodeId> = self.node(y).left().to_vec();
        let yr: Vec<NodeId> = self.node(y).right().to_vec();

        let mut left = Vec::new();
        let mut right = Vec::new();
        for &l in &xl {
            // x - x^L is positive and canonical, so it feeds straight back in.
            let lx = self.sub(x, l)?;
            let dx = self.canonicalize(lx)?;
            let l_y = self.mul_pos_value(l, y)?;
            for &ly in &yl {
                let t = self.mul_pos_value(dx, ly)?;
                left.push(self.add(l_y, t)?);
            }
            for &ry in &yr {
                let t = self.mul_pos_value(dx, ry)?;
                right.push(self.add(l_y, t)?);
            }
        }
        for &r in &xr {
            let rx = self.sub(r, x)?;
            let dx = self.canonicalize(rx)?;
            let r_y = self.mul_pos_value(r, y)?;
            for &ry in &yr {
                let t = self.mul_pos_value(dx, ry)?;
                left.push(self.sub(r_y, t)?);
            }
            for &ly in &yl {
                let t = self.mul_pos_value(dx, ly)?;
                right.push(self.sub(r_y, t)?);
            }
        }

        self.make(&left, &right)
    }

    /// The classical product cut
    /// `{ x^L*y + x*y^L - x^L*y^L, x^R*y + x*y^R - x^R*y^R | x^L*y + x*y^R - x^L*y^R, x^R*y + x*y^L - x^R*y^L }`
    /// over canonicalized operands. Slower and sign-agnostic; exists so `mul`
    /// and `mul_pos` have something independent to agree with.
    pub fn mul_conway(&mut self, x: NodeId, y: NodeId) -> Result<NodeId, Error> {
        let cx = self.canonicalize(x)?;
        let cy = self.canonicalize(y)?;
        self.mul_conway_cut(cx, cy)
    }

    /// The canonical node for the classical product; operands canonical.
    /// Sub-products are canonical for the same reason as in `mul_pos_value`.
    fn mul_conway_value(&mut self, x: NodeId, y: NodeId) -> Result<NodeId, Error> {
        if let Some(&r) = self.mul_conway_memo.get(&(x, y)) {
            return Ok(r);
        }
        let cut = self.mul_conway_cut(x, y)?;
        let r = self.canonicalize(cut)?;
        self.mul_conway_memo.insert((x, y), r);
        Ok(r)
    }

    /// Assembles the classical product cut; operands are canonical. A node
    /// with no options on either side multiplies to an empty cut, so zero
    /// needs no special case.
    fn mul_conway_cut(&mut self, x: NodeId, y: NodeId) -> Result<NodeId, Error> {
        let xl: Vec<NodeId> = self.node(x).left().to_vec();
        let xr: Vec<NodeId> = self.node(x).right().to_vec();
        let yl: Vec<NodeId> = self.node(y).left().to_vec();
        let yr: Vec<NodeId> = self.node(y).right().to_vec();

        let mut left = Vec::new();
        let mut right = Vec::new();
        let term = |arena: &mut Self, a: NodeId, b: NodeId| -> Result<NodeId, Error> {
            // a*y + x*b - a*b, the common shape of all four term families.
            let ay = arena.mul_conway_value(a, y)?;
            let xb = arena.mul_conway_value(x, b)?;
            let ab = arena.mul_conway_value(a, b)?;
            let s = arena.add(ay, xb)?;
            arena.sub(s, ab)
        };
        for &l in &xl {
            for &ly in &yl {
                let t = term(self, l, ly)?;
                left.push(t);
            }
            for &ry in &yr {
                let t = term(self, l, ry)?;
                right.push(t);
            }
        }
        for &r in &xr {
            for &ry in &yr {
                let t = term(self, r, ry)?;
                left.push(t);
            }
            for &ly in &yl {
                let t = term(self, r, ly)?;
                right.push(t);
            }
        }

        self.make(&left, &right)
    }

    /// A canonical integer `n` with `0 < n` and `x < n`: `max(1, floor(x) + 2)`.
    pub fn int_bound(&mut self, x: NodeId) -> Result<NodeId, Error> {
        let n = (self.value(x).floor() + BigInt::from(2)).max(BigInt::one());
        self.from_dyadic(&Dyadic::from_int(n))
    }

    /// Writes `x` as a difference `n - (n - x)` of positive canonical nodes.
    pub fn to_diff(&mut self, x: NodeId) -> Result<DiffPair, Error> {
        let n = self.int_bound(x)?;
        let d = self.sub(n, x)?;
        let b = self.canonicalize(d)?;
        Ok(DiffPair { a: n, b })
    }

    /// The value a difference pair denotes: `a - b`.
    pub fn from_diff(&mut self, p: DiffPair) -> Result<NodeId, Error> {
        self.sub(p.a, p.b)
    }

    /// Componentwise sum of difference pairs: `(a+a', b+b')`.
    pub fn diff_add(&mut self, p: DiffPair, q: DiffPair) -> Result<DiffPair, Error> {
        let a = self.add(p.a, q.a)?;
        let b = self.add(p.b, q.b)?;
        Ok(DiffPair { a: self.canonicalize(a)?, b: self.canonicalize(b)? })
    }

    /// Product of difference pairs: `(aa' + bb', ab' + ba')`, all four partial
    /// products through `mul_pos`, components canonicalized.
    pub fn mul_diff(&mut self, p: DiffPair, q: DiffPair) -> Result<DiffPair, Error> {
        let aa = self.mul_pos(p.a, q.a)?;
        let bb = self.mul_pos(p.b, q.b)?;
        let ab = self.mul_pos(p.a, q.b)?;
        let ba = self.mul_pos(p.b, q.a)?;
        let pos = self.add(aa, bb)?;
        let neg = self.add(ab, ba)?;
        Ok(DiffPair { a: self.canonicalize(pos)?, b: self.canonicalize(neg)? })
    }

    /// Ring multiplication for arbitrary operands, routed through difference
    /// pairs. The result is canonical.
    pub fn mul(&mut self, x: NodeId, y: NodeId) -> Result<NodeId, Error> {
        let p = self.to_diff(x)?;
        let q = self.to_diff(y)?;
        let r = self.mul_diff(p, q)?;
        let d = self.from_diff(r)?;
        self.canonicalize(d)
    }
}
