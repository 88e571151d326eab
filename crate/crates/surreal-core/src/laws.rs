//! Exhaustive law checking over finite corpora of generated nodes.
//!
//! A corpus is every canonical node born through a given day (optionally
//! filtered by sign), and a law is a named predicate over tuples of corpus
//! nodes. [`check`] enumerates tuples in lexicographic value order and reports
//! how many were tried, how many failed, and the first few counterexamples.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arena::{Arena, NodeId};
use crate::dyadic::Dyadic;
use crate::error::Error;
use crate::tree::Tree;

const MAX_COUNTEREXAMPLES: usize = 10;

/// Which generated values a corpus keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Filter {
    All,
    Positive,
    Nonnegative,
}

impl Filter {
    fn admits(self, v: &Dyadic) -> bool {
        match self {
            Filter::All => true,
            Filter::Positive => v.is_positive(),
            Filter::Nonnegative => !v.is_negative(),
        }
    }

    fn label(self) -> &'static str {
        match self {
            Filter::All => "all",
            Filter::Positive => "positive",
            Filter::Nonnegative => "nonnegative",
        }
    }
}

/// A finite test universe in increasing value order.
pub struct Corpus {
    nodes: Vec<NodeId>,
    max_day: u32,
    filter: Filter,
}

impl Corpus {
    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn max_day(&self) -> u32 {
        self.max_day
    }

    pub fn filter(&self) -> Filter {
        self.filter
    }

    pub fn description(&self) -> String {
        format!("{}, birthday <= {}", self.filter.label(), self.max_day)
    }
}

/// Every canonical node born through `max_day` that passes `filter`,
/// in increasing value order.
pub fn corpus(arena: &mut Arena, max_day: u32, filter: Filter) -> Result<Corpus, Error> {
    let tree = Tree::generate(arena, max_day)?;
    let mut keyed: Vec<(Dyadic, NodeId)> = Vec::with_capacity(tree.len());
    for day in tree.days() {
        for n in day {
            let v = arena.value(n.id);
            if filter.admits(&v) {
                keyed.push((v, n.id));
            }
        }
    }
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Corpus { nodes: keyed.into_iter().map(|(_, id)| id).collect(), max_day, filter })
}

/// What a law predicate gets to work with: the arena, the corpus it is being
/// checked over, and a cache for the corpus-relative derived order.
pub struct Ctx<'a> {
    pub arena: &'a mut Arena,
    pub corpus: &'a Corpus,
    derived_leq_cache: BTreeMap<(NodeId, NodeId), bool>,
}

impl Ctx<'_> {
    /// `x <= y` reconstructed from strict comparisons alone, quantified over
    /// the corpus: every witness below `x` stays below `y`, every witness
    /// above `y` stays above `x`.
    pub fn derived_leq(&mut self, x: NodeId, y: NodeId) -> bool {
        if let Some(&r) = self.derived_leq_cache.get(&(x, y)) {
            return r;
        }
        let mut r = true;
        for i in 0..self.corpus.nodes.len() {
            let c = self.corpus.nodes[i];
            if (self.arena.lt(c, x) && !self.arena.lt(c, y))
                || (self.arena.lt(y, c) && !self.arena.lt(x, c))
            {
                r = false;
                break;
            }
        }
        self.derived_leq_cache.insert((x, y), r);
        r
    }

    fn one(&mut self) -> Result<NodeId, Error> {
        self.arena.from_dyadic(&Dyadic::one())
    }
}

pub type LawFn = fn(&mut Ctx<'_>, &[NodeId]) -> Result<bool, Error>;

/// A named law: a predicate over `arity`-tuples, plus the corpus filter it is
/// meant to run on (premise side conditions like positivity live here).
pub struct LawSpec {
    pub name: &'static str,
    pub arity: u8,
    pub filter: Filter,
    pub summary: &'static str,
    pub check: LawFn,
}

/// Outcome of checking one law over one corpus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub law: String,
    pub corpus: String,
    pub tuples_checked: u64,
    pub failures: u64,
    /// First few failing tuples, rendered as dyadic values.
    pub counterexamples: Vec<Vec<String>>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Checks `law` over every `arity`-tuple of `corpus`, in lexicographic order,
/// stopping after `limit` tuples.
pub fn check(
    arena: &mut Arena,
    law: &LawSpec,
    corpus: &Corpus,
    limit: u64,
) -> Result<Report, Error> {
    let mut report = Report {
        law: law.name.into(),
        corpus: corpus.description(),
        tuples_checked: 0,
        failures: 0,
        counterexamples: Vec::new(),
    };
    let n = corpus.nodes.len();
    let arity = law.arity as usize;
    if n == 0 {
        return Ok(report);
    }

    let mut ctx = Ctx { arena, corpus, derived_leq_cache: BTreeMap::new() };
    let mut idx = alloc::vec![0usize; arity];
    let mut tuple = alloc::vec![corpus.nodes[0]; arity];
    'tuples: while report.tuples_checked < limit {
        for (slot, &i) in tuple.iter_mut().zip(idx.iter()) {
            *slot = corpus.nodes[i];
        }
        report.tuples_checked += 1;
        if !(law.check)(&mut ctx, &tuple)? {
            report.failures += 1;
            if report.counterexamples.len() < MAX_COUNTEREXAMPLES {
                let rendered = tuple.iter().map(|&id| format!("{}", ctx.arena.value(id))).collect();
                report.counterexamples.push(rendered);
            }
        }
        let mut k = arity;
        while k > 0 {
            k -= 1;
            idx[k] += 1;
            if idx[k] < n {
                continue 'tuples;
            }
            idx[k] = 0;
        }
        break;
    }
    Ok(report)
}

/// Looks a law up by name.
pub fn find(name: &str) -> Option<&'static LawSpec> {
    REGISTRY.iter().find(|l| l.name == name)
}

// ---------------------------------------------------------------------------
// Order laws.

fn asym_lt(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    Ok(!(c.arena.lt(t[0], t[1]) && c.arena.lt(t[1], t[0])))
}

fn cotrans_lt(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y, z) = (t[0], t[1], t[2]);
    Ok(!c.arena.lt(x, y) || c.arena.lt(x, z) || c.arena.lt(z, y))
}

fn neg_antisym(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y) = (t[0], t[1]);
    Ok(c.arena.lt(x, y) || c.arena.lt(y, x) || c.arena.eq(x, y))
}

fn add_translates_lt(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y, z) = (t[0], t[1], t[2]);
    if !c.arena.lt(x, y) {
        return Ok(true);
    }
    let xz = c.arena.add(x, z)?;
    let yz = c.arena.add(y, z)?;
    let zx = c.arena.add(z, x)?;
    let zy = c.arena.add(z, y)?;
    Ok(c.arena.lt(xz, yz) && c.arena.lt(zx, zy))
}

fn neg_reverses_lt(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y) = (t[0], t[1]);
    if !c.arena.lt(x, y) {
        return Ok(true);
    }
    let nx = c.arena.neg(x)?;
    let ny = c.arena.neg(y)?;
    Ok(c.arena.lt(ny, nx))
}

fn pos_sum_pos(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y) = (t[0], t[1]);
    let zero = c.arena.zero();
    if !(c.arena.lt(zero, x) && c.arena.lt(zero, y)) {
        return Ok(true);
    }
    let s = c.arena.add(x, y)?;
    Ok(c.arena.lt(zero, s))
}

fn add_strict_mono(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y, z) = (t[0], t[1], t[2]);
    if !(c.arena.lt(x, y) && c.arena.lt(x, z)) {
        return Ok(true);
    }
    let xx = c.arena.add(x, x)?;
    let yz = c.arena.add(y, z)?;
    Ok(c.arena.lt(xx, yz))
}

fn neg_diff_below(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y, z) = (t[0], t[1], t[2]);
    let zero = c.arena.zero();
    if !(c.arena.lt(zero, x) && c.arena.lt(x, y) && c.arena.lt(y, z)) {
        return Ok(true);
    }
    let d = c.arena.sub(y, z)?;
    Ok(c.arena.lt(d, x))
}

fn cross_add_lt(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y, z) = (t[0], t[1], t[2]);
    if !(c.arena.lt(x, y) && c.arena.lt(x, z)) {
        return Ok(true);
    }
    let zx = c.arena.sub(z, x)?;
    let yx = c.arena.sub(y, x)?;
    if !c.arena.lt(zx, yx) {
        return Ok(true);
    }
    let lhs = c.arena.add(x, z)?;
    let rhs = c.arena.add(y, x)?;
    Ok(c.arena.lt(lhs, rhs))
}

fn optionwise_eq(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y) = (t[0], t[1]);
    let matched = |c: &mut Ctx<'_>, xs: &[NodeId], ys: &[NodeId]| {
        xs.iter().all(|&a| ys.iter().any(|&b| c.arena.eq(a, b)))
            && ys.iter().all(|&b| xs.iter().any(|&a| c.arena.eq(a, b)))
    };
    let xl = c.arena.node(x).left().to_vec();
    let yl = c.arena.node(y).left().to_vec();
    let xr = c.arena.node(x).right().to_vec();
    let yr = c.arena.node(y).right().to_vec();
    if !(matched(c, &xl, &yl) && matched(c, &xr, &yr)) {
        return Ok(true);
    }
    Ok(c.arena.eq(x, y))
}

fn neg_distributes_sub(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y) = (t[0], t[1]);
    let d = c.arena.sub(x, y)?;
    let lhs = c.arena.neg(d)?;
    let nx = c.arena.neg(x)?;
    let rhs = c.arena.add(nx, y)?;
    Ok(c.arena.eq(lhs, rhs))
}

// ---------------------------------------------------------------------------
// The derived (non-strict) order and its interaction with addition.

fn derived_leq_agrees(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y) = (t[0], t[1]);
    Ok(c.derived_leq(x, y) == c.arena.leq(x, y))
}

fn trans_lt_leq(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y, z) = (t[0], t[1], t[2]);
    Ok(!(c.arena.lt(x, y) && c.derived_leq(y, z)) || c.arena.lt(x, z))
}

fn trans_leq_lt(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y, z) = (t[0], t[1], t[2]);
    Ok(!(c.derived_leq(x, y) && c.arena.lt(y, z)) || c.arena.lt(x, z))
}

fn trans_leq(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y, z) = (t[0], t[1], t[2]);
    Ok(!(c.derived_leq(x, y) && c.derived_leq(y, z)) || c.derived_leq(x, z))
}

fn add_translates_leq(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y, z) = (t[0], t[1], t[2]);
    if !c.derived_leq(x, y) {
        return Ok(true);
    }
    let xz = c.arena.add(x, z)?;
    let yz = c.arena.add(y, z)?;
    Ok(c.derived_leq(xz, yz))
}

fn nonneg_sum(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y) = (t[0], t[1]);
    let zero = c.arena.zero();
    if !(c.derived_leq(zero, x) && c.derived_leq(zero, y)) {
        return Ok(true);
    }
    let s = c.arena.add(x, y)?;
    Ok(c.derived_leq(zero, s))
}

fn pos_plus_nonneg(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y) = (t[0], t[1]);
    let zero = c.arena.zero();
    if !(c.arena.lt(zero, x) && c.derived_leq(zero, y)) {
        return Ok(true);
    }
    let s = c.arena.add(x, y)?;
    Ok(c.arena.lt(zero, s))
}

// ---------------------------------------------------------------------------
// The additive group.

fn add_ident(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let zero = c.arena.zero();
    let s = c.arena.add(t[0], zero)?;
    Ok(c.arena.eq(s, t[0]))
}

fn add_inv(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let zero = c.arena.zero();
    let d = c.arena.sub(t[0], t[0])?;
    Ok(c.arena.eq(d, zero))
}

fn add_assoc(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y, z) = (t[0], t[1], t[2]);
    let xy = c.arena.add(x, y)?;
    let lhs = c.arena.add(xy, z)?;
    let yz = c.arena.add(y, z)?;
    let rhs = c.arena.add(x, yz)?;
    Ok(c.arena.eq(lhs, rhs))
}

fn add_comm(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y) = (t[0], t[1]);
    let lhs = c.arena.add(x, y)?;
    let rhs = c.arena.add(y, x)?;
    Ok(c.arena.eq(lhs, rhs))
}

// ---------------------------------------------------------------------------
// Positive multiplication.

fn mul_pos_gt_zero(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let zero = c.arena.zero();
    let p = c.arena.mul_pos(t[0], t[1])?;
    Ok(c.arena.lt(zero, p))
}

fn mul_pos_mono(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y, z) = (t[0], t[1], t[2]);
    let xy = c.arena.mul_pos(x, y)?;
    let xz = c.arena.mul_pos(x, z)?;
    let yx = c.arena.mul_pos(y, x)?;
    let zx = c.arena.mul_pos(z, x)?;
    if c.arena.lt(y, z) && !(c.arena.lt(xy, xz) && c.arena.lt(yx, zx)) {
        return Ok(false);
    }
    Ok(!c.arena.leq(y, z) || c.arena.leq(xy, xz))
}

fn dist_pos(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y, z) = (t[0], t[1], t[2]);
    let yz = c.arena.add(y, z)?;
    let lhs = c.arena.mul_pos(x, yz)?;
    let xy = c.arena.mul_pos(x, y)?;
    let xz = c.arena.mul_pos(x, z)?;
    let rhs = c.arena.add(xy, xz)?;
    Ok(c.arena.eq(lhs, rhs))
}

fn mul_pos_ident(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let one = c.one()?;
    let p = c.arena.mul_pos(t[0], one)?;
    Ok(c.arena.eq(p, t[0]))
}

fn mul_pos_comm(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let lhs = c.arena.mul_pos(t[0], t[1])?;
    let rhs = c.arena.mul_pos(t[1], t[0])?;
    Ok(c.arena.eq(lhs, rhs))
}

fn mul_pos_assoc(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y, z) = (t[0], t[1], t[2]);
    let xy = c.arena.mul_pos(x, y)?;
    let lhs = c.arena.mul_pos(xy, z)?;
    let yz = c.arena.mul_pos(y, z)?;
    let rhs = c.arena.mul_pos(x, yz)?;
    Ok(c.arena.eq(lhs, rhs))
}

// ---------------------------------------------------------------------------
// Difference pairs.

fn to_diff_round_trip(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let p = c.arena.to_diff(t[0])?;
    let back = c.arena.from_diff(p)?;
    Ok(c.arena.eq(back, t[0]))
}

fn diff_mul_ident(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let one = c.one()?;
    let p = c.arena.to_diff(t[0])?;
    let e = c.arena.to_diff(one)?;
    let r = c.arena.mul_diff(p, e)?;
    let lhs = c.arena.from_diff(r)?;
    let rhs = c.arena.from_diff(p)?;
    Ok(c.arena.eq(lhs, rhs))
}

fn diff_mul_comm(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let p = c.arena.to_diff(t[0])?;
    let q = c.arena.to_diff(t[1])?;
    let pq = c.arena.mul_diff(p, q)?;
    let qp = c.arena.mul_diff(q, p)?;
    let lhs = c.arena.from_diff(pq)?;
    let rhs = c.arena.from_diff(qp)?;
    Ok(c.arena.eq(lhs, rhs))
}

fn diff_mul_assoc(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let p = c.arena.to_diff(t[0])?;
    let q = c.arena.to_diff(t[1])?;
    let r = c.arena.to_diff(t[2])?;
    let pq = c.arena.mul_diff(p, q)?;
    let lhs_pair = c.arena.mul_diff(pq, r)?;
    let qr = c.arena.mul_diff(q, r)?;
    let rhs_pair = c.arena.mul_diff(p, qr)?;
    let lhs = c.arena.from_diff(lhs_pair)?;
    let rhs = c.arena.from_diff(rhs_pair)?;
    Ok(c.arena.eq(lhs, rhs))
}

fn diff_dist(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let p = c.arena.to_diff(t[0])?;
    let q = c.arena.to_diff(t[1])?;
    let r = c.arena.to_diff(t[2])?;
    let qr = c.arena.diff_add(q, r)?;
    let lhs_pair = c.arena.mul_diff(p, qr)?;
    let pq = c.arena.mul_diff(p, q)?;
    let pr = c.arena.mul_diff(p, r)?;
    let rhs_pair = c.arena.diff_add(pq, pr)?;
    let lhs = c.arena.from_diff(lhs_pair)?;
    let rhs = c.arena.from_diff(rhs_pair)?;
    Ok(c.arena.eq(lhs, rhs))
}

fn to_diff_add_hom(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y) = (t[0], t[1]);
    let s = c.arena.add(x, y)?;
    let fs = c.arena.to_diff(s)?;
    let lhs = c.arena.from_diff(fs)?;
    let p = c.arena.to_diff(x)?;
    let q = c.arena.to_diff(y)?;
    let sum = c.arena.diff_add(p, q)?;
    let rhs = c.arena.from_diff(sum)?;
    Ok(c.arena.eq(lhs, rhs))
}

fn from_diff_add_hom(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y) = (t[0], t[1]);
    let p = c.arena.to_diff(x)?;
    let q = c.arena.to_diff(y)?;
    let sum = c.arena.diff_add(p, q)?;
    let lhs = c.arena.from_diff(sum)?;
    let gp = c.arena.from_diff(p)?;
    let gq = c.arena.from_diff(q)?;
    let rhs = c.arena.add(gp, gq)?;
    Ok(c.arena.eq(lhs, rhs))
}

// ---------------------------------------------------------------------------
// Ring multiplication over all signs.

fn mul_ident(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let one = c.one()?;
    let p = c.arena.mul(t[0], one)?;
    Ok(c.arena.eq(p, t[0]))
}

fn mul_zero(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let zero = c.arena.zero();
    let p = c.arena.mul(t[0], zero)?;
    Ok(c.arena.eq(p, zero))
}

fn mul_comm(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let lhs = c.arena.mul(t[0], t[1])?;
    let rhs = c.arena.mul(t[1], t[0])?;
    Ok(c.arena.eq(lhs, rhs))
}

fn mul_assoc(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y, z) = (t[0], t[1], t[2]);
    let xy = c.arena.mul(x, y)?;
    let lhs = c.arena.mul(xy, z)?;
    let yz = c.arena.mul(y, z)?;
    let rhs = c.arena.mul(x, yz)?;
    Ok(c.arena.eq(lhs, rhs))
}

fn dist(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y, z) = (t[0], t[1], t[2]);
    let yz = c.arena.add(y, z)?;
    let lhs = c.arena.mul(x, yz)?;
    let xy = c.arena.mul(x, y)?;
    let xz = c.arena.mul(x, z)?;
    let rhs = c.arena.add(xy, xz)?;
    Ok(c.arena.eq(lhs, rhs))
}

// ---------------------------------------------------------------------------
// Apartness.

fn apart_irrefl(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    Ok(!c.arena.apart(t[0], t[0]))
}

fn apart_sym(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    Ok(c.arena.apart(t[0], t[1]) == c.arena.apart(t[1], t[0]))
}

fn apart_cotrans(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y, z) = (t[0], t[1], t[2]);
    Ok(!c.arena.apart(x, y) || c.arena.apart(x, z) || c.arena.apart(z, y))
}

// ---------------------------------------------------------------------------
// Cross-checks against the dyadic oracle and the classical product.

fn oracle_add(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y) = (t[0], t[1]);
    let s = c.arena.add(x, y)?;
    Ok(c.arena.value(s) == &c.arena.value(x) + &c.arena.value(y))
}

fn oracle_mul(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y) = (t[0], t[1]);
    let p = c.arena.mul(x, y)?;
    Ok(c.arena.value(p) == &c.arena.value(x) * &c.arena.value(y))
}

fn oracle_neg(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let n = c.arena.neg(t[0])?;
    Ok(c.arena.value(n) == -&c.arena.value(t[0]))
}

fn oracle_order(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let (x, y) = (t[0], t[1]);
    let (vx, vy) = (c.arena.value(x), c.arena.value(y));
    Ok(c.arena.lt(x, y) == (vx < vy)
        && c.arena.leq(x, y) == (vx <= vy)
        && c.arena.eq(x, y) == (vx == vy))
}

fn conway_agree_pos(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let lhs = c.arena.mul_pos(t[0], t[1])?;
    let rhs = c.arena.mul_conway(t[0], t[1])?;
    Ok(c.arena.eq(lhs, rhs))
}

fn conway_agree_mul(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
    let lhs = c.arena.mul(t[0], t[1])?;
    let rhs = c.arena.mul_conway(t[0], t[1])?;
    Ok(c.arena.eq(lhs, rhs))
}

/// Every registered law.
pub const REGISTRY: &[LawSpec] = &[
    LawSpec { name: "ASYM_LT", arity: 2, filter: Filter::All, summary: "strict order is asymmetric", check: asym_lt },
    LawSpec { name: "COTRANS_LT", arity: 3, filter: Filter::All, summary: "x < y forces x < z or z < y", check: cotrans_lt },
    LawSpec { name: "NEG_ANTISYM", arity: 2, filter: Filter::All, summary: "incomparable nodes are equal", check: neg_antisym },
    LawSpec { name: "ADD_TRANSLATES_LT", arity: 3, filter: Filter::All, summary: "adding z on either side preserves strict order", check: add_translates_lt },
    LawSpec { name: "NEG_REVERSES_LT", arity: 2, filter: Filter::All, summary: "negation reverses strict order", check: neg_reverses_lt },
    LawSpec { name: "POS_SUM_POS", arity: 2, filter: Filter::All, summary: "positives are closed under addition", check: pos_sum_pos },
    LawSpec { name: "ADD_STRICT_MONO", arity: 3, filter: Filter::All, summary: "x < y and x < z force x + x < y + z", check: add_strict_mono },
    LawSpec { name: "NEG_DIFF_BELOW", arity: 3, filter: Filter::All, summary: "for 0 < x < y < z, y - z stays below x", check: neg_diff_below },
    LawSpec { name: "CROSS_ADD_LT", arity: 3, filter: Filter::All, summary: "x < y, x < z, z - x < y - x force x + z < y + x", check: cross_add_lt },
    LawSpec { name: "OPTIONWISE_EQ", arity: 2, filter: Filter::All, summary: "cuts whose options match up to eq are equal", check: optionwise_eq },
    LawSpec { name: "NEG_DISTRIBUTES_SUB", arity: 2, filter: Filter::All, summary: "-(x - y) equals -x + y", check: neg_distributes_sub },
    LawSpec { name: "DERIVED_LEQ_AGREES", arity: 2, filter: Filter::All, summary: "the order derived from strict comparisons matches leq", check: derived_leq_agrees },
    LawSpec { name: "TRANS_LT_LEQ", arity: 3, filter: Filter::All, summary: "x < y <= z forces x < z", check: trans_lt_leq },
    LawSpec { name: "TRANS_LEQ_LT", arity: 3, filter: Filter::All, summary: "x <= y < z forces x < z", check: trans_leq_lt },
    LawSpec { name: "TRANS_LEQ", arity: 3, filter: Filter::All, summary: "the derived order is transitive", check: trans_leq },
    LawSpec { name: "ADD_TRANSLATES_LEQ", arity: 3, filter: Filter::All, summary: "adding z preserves the derived order", check: add_translates_leq },
    LawSpec { name: "NONNEG_SUM", arity: 2, filter: Filter::All, summary: "nonnegatives are closed under addition", check: nonneg_sum },
    LawSpec { name: "POS_PLUS_NONNEG", arity: 2, filter: Filter::All, summary: "positive plus nonnegative is positive", check: pos_plus_nonneg },
    LawSpec { name: "ADD_IDENT", arity: 1, filter: Filter::All, summary: "zero is an additive identity", check: add_ident },
    LawSpec { name: "ADD_INV", arity: 1, filter: Filter::All, summary: "x - x collapses to zero", check: add_inv },
    LawSpec { name: "ADD_ASSOC", arity: 3, filter: Filter::All, summary: "addition is associative", check: add_assoc },
    LawSpec { name: "ADD_COMM", arity: 2, filter: Filter::All, summary: "addition is commutative", check: add_comm },
    LawSpec { name: "MUL_POS_GT_ZERO", arity: 2, filter: Filter::Positive, summary: "a product of positives is positive", check: mul_pos_gt_zero },
    LawSpec { name: "MUL_POS_MONO", arity: 3, filter: Filter::Positive, summary: "positive multiplication is monotone in each argument", check: mul_pos_mono },
    LawSpec { name: "DIST_POS", arity: 3, filter: Filter::Positive, summary: "positive multiplication distributes over addition", check: dist_pos },
    LawSpec { name: "MUL_POS_IDENT", arity: 1, filter: Filter::Positive, summary: "one is an identity for positive multiplication", check: mul_pos_ident },
    LawSpec { name: "MUL_POS_COMM", arity: 2, filter: Filter::Positive, summary: "positive multiplication is commutative", check: mul_pos_comm },
    LawSpec { name: "MUL_POS_ASSOC", arity: 3, filter: Filter::Positive, summary: "positive multiplication is associative", check: mul_pos_assoc },
    LawSpec { name: "TO_DIFF_ROUND_TRIP", arity: 1, filter: Filter::All, summary: "from_diff undoes to_diff", check: to_diff_round_trip },
    LawSpec { name: "DIFF_MUL_IDENT", arity: 1, filter: Filter::All, summary: "the pair for one is a multiplicative identity", check: diff_mul_ident },
    LawSpec { name: "DIFF_MUL_COMM", arity: 2, filter: Filter::All, summary: "pair multiplication is commutative", check: diff_mul_comm },
    LawSpec { name: "DIFF_MUL_ASSOC", arity: 3, filter: Filter::All, summary: "pair multiplication is associative", check: diff_mul_assoc },
    LawSpec { name: "DIFF_DIST", arity: 3, filter: Filter::All, summary: "pair multiplication distributes over pair addition", check: diff_dist },
    LawSpec { name: "TO_DIFF_ADD_HOM", arity: 2, filter: Filter::All, summary: "to_diff turns addition into pair addition", check: to_diff_add_hom },
    LawSpec { name: "FROM_DIFF_ADD_HOM", arity: 2, filter: Filter::All, summary: "from_diff turns pair addition into addition", check: from_diff_add_hom },
    LawSpec { name: "MUL_IDENT", arity: 1, filter: Filter::All, summary: "one is a multiplicative identity", check: mul_ident },
    LawSpec { name: "MUL_ZERO", arity: 1, filter: Filter::All, summary: "multiplication by zero gives zero", check: mul_zero },
    LawSpec { name: "MUL_COMM", arity: 2, filter: Filter::All, summary: "multiplication is commutative", check: mul_comm },
    LawSpec { name: "MUL_ASSOC", arity: 3, filter: Filter::All, summary: "multiplication is associative", check: mul_assoc },
    LawSpec { name: "DIST", arity: 3, filter: Filter::All, summary: "multiplication distributes over addition", check: dist },
    LawSpec { name: "APART_IRREFL", arity: 1, filter: Filter::All, summary: "nothing is apart from itself", check: apart_irrefl },
    LawSpec { name: "APART_SYM", arity: 2, filter: Filter::All, summary: "apartness is symmetric", check: apart_sym },
    LawSpec { name: "APART_COTRANS", arity: 3, filter: Filter::All, summary: "apartness from y spreads to any z", check: apart_cotrans },
    LawSpec { name: "ORACLE_ADD", arity: 2, filter: Filter::All, summary: "node addition matches dyadic addition", check: oracle_add },
    LawSpec { name: "ORACLE_MUL", arity: 2, filter: Filter::All, summary: "node multiplication matches dyadic multiplication", check: oracle_mul },
    LawSpec { name: "ORACLE_NEG", arity: 1, filter: Filter::All, summary: "node negation matches dyadic negation", check: oracle_neg },
    LawSpec { name: "ORACLE_ORDER", arity: 2, filter: Filter::All, summary: "node comparisons match dyadic comparisons", check: oracle_order },
    LawSpec { name: "CONWAY_AGREE", arity: 2, filter: Filter::Nonnegative, summary: "positive multiplication matches the classical product", check: conway_agree_pos },
    LawSpec { name: "CONWAY_AGREE_MUL", arity: 2, filter: Filter::All, summary: "ring multiplication matches the classical product", check: conway_agree_mul },
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyadic::dy;

    fn values(arena: &mut Arena, corpus: &Corpus) -> Vec<Dyadic> {
        corpus.nodes().iter().map(|&id| arena.value(id)).collect()
    }

    #[test]
    fn corpus_examples() {
        let mut arena = Arena::new();
        let all1 = corpus(&mut arena, 1, Filter::All).unwrap();
        assert_eq!(values(&mut arena, &all1), ["-1", "0", "1"].map(dy));

        let pos2 = corpus(&mut arena, 2, Filter::Positive).unwrap();
        assert_eq!(values(&mut arena, &pos2), ["1/2", "1", "2"].map(dy));

        let pos0 = corpus(&mut arena, 0, Filter::Positive).unwrap();
        assert!(pos0.nodes().is_empty());

        let nn1 = corpus(&mut arena, 1, Filter::Nonnegative).unwrap();
        assert_eq!(values(&mut arena, &nn1), ["0", "1"].map(dy));
    }

    #[test]
    fn corpus_description_is_stable() {
        let mut arena = Arena::new();
        let c = corpus(&mut arena, 3, Filter::Positive).unwrap();
        assert_eq!(c.description(), "positive, birthday <= 3");
    }

    #[test]
    fn add_comm_passes_exhaustively() {
        let mut arena = Arena::new();
        let c = corpus(&mut arena, 2, Filter::All).unwrap();
        let law = find("ADD_COMM").unwrap();
        let report = check(&mut arena, law, &c, u64::MAX).unwrap();
        assert_eq!(report.tuples_checked, 49);
        assert_eq!(report.failures, 0);
        assert!(report.passed());
    }

    #[test]
    fn limit_truncates_enumeration() {
        let mut arena = Arena::new();
        let c = corpus(&mut arena, 2, Filter::All).unwrap();
        let law = find("ASYM_LT").unwrap();
        let report = check(&mut arena, law, &c, 10).unwrap();
        assert_eq!(report.tuples_checked, 10);
    }

    #[test]
    fn failing_law_reports_counterexamples() {
        // Totality of < is false (x < x fails), so it makes a good probe of
        // the failure path.
        fn lt_total(c: &mut Ctx<'_>, t: &[NodeId]) -> Result<bool, Error> {
            Ok(c.arena.lt(t[0], t[1]) || c.arena.lt(t[1], t[0]))
        }
        let probe = LawSpec {
            name: "LT_TOTAL",
            arity: 2,
            filter: Filter::All,
            summary: "strict order is total (false)",
            check: lt_total,
        };
        let mut arena = Arena::new();
        let c = corpus(&mut arena, 1, Filter::All).unwrap();
        let report = check(&mut arena, &probe, &c, u64::MAX).unwrap();
        assert_eq!(report.failures, 3);
        assert_eq!(report.counterexamples[0], alloc::vec![String::from("-1"), String::from("-1")]);
    }

    #[test]
    fn optionwise_eq_bites_on_matched_options() {
        let mut arena = Arena::new();
        let z = arena.zero();
        let one = arena.from_dyadic(&dy("1")).unwrap();
        let neg_one = arena.from_dyadic(&dy("-1")).unwrap();
        let also_one = arena.make(&[neg_one, z], &[]).unwrap();
        let a = arena.make(&[one], &[]).unwrap();
        let b = arena.make(&[also_one], &[]).unwrap();

        let c = corpus(&mut arena, 0, Filter::All).unwrap();
        let mut ctx = Ctx { arena: &mut arena, corpus: &c, derived_leq_cache: BTreeMap::new() };
        assert!(optionwise_eq(&mut ctx, &[a, b]).unwrap());
        assert!(ctx.arena.eq(a, b));
    }

    #[test]
    fn registry_is_well_formed() {
        let mut names: Vec<&str> = REGISTRY.iter().map(|l| l.name).collect();
        names.sort_unstable();
        let before = names.len();
        names.dedup();
        assert_eq!(names.len(), before, "law names must be unique");
        assert!(REGISTRY.iter().all(|l| (1..=3).contains(&l.arity)));
        assert!(find("DIST_POS").is_some());
        assert!(find("NO_SUCH_LAW").is_none());
    }
}
