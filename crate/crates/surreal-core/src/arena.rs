//! Interned surreal-number nodes and the constructive order on them.
//!
//! A node is a cut between two finite sets of earlier nodes. The arena is
//! append-only and hash-consed: structurally equal cuts share one `NodeId`, so
//! id equality is structural equality. Semantic equality is [`Arena::eq`],
//! which is strictly coarser (`{-1,0|}` and `{0|}` are distinct nodes with
//! equal values).

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::dyadic::Dyadic;
use crate::error::Error;

/// Nodes created unless `SURREAL_NODE_BUDGET` (or [`Arena::with_budget`]) says otherwise.
pub const DEFAULT_NODE_BUDGET: usize = 1 << 22;

/// Index of a node in its arena. Ids from different arenas must not be mixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// One cut. Option lists are sorted by id and duplicate-free.
#[derive(Clone, Debug)]
pub struct SurrealNode {
    left: Box<[NodeId]>,
    right: Box<[NodeId]>,
    birthday: u32,
}

impl SurrealNode {
    pub fn left(&self) -> &[NodeId] {
        &self.left
    }

    pub fn right(&self) -> &[NodeId] {
        &self.right
    }

    /// Day this representation was born: 1 + the latest option birthday.
    pub fn birthday(&self) -> u32 {
        self.birthday
    }
}

/// Append-only store of interned nodes plus the memo tables for every
/// recursion keyed by node ids. Single-writer: all operations take `&mut self`
/// because even queries fill memos.
pub struct Arena {
    nodes: Vec<SurrealNode>,
    intern: BTreeMap<(Box<[NodeId]>, Box<[NodeId]>), NodeId>,
    budget: usize,
    zero: NodeId,
    leq_memo: BTreeMap<(NodeId, NodeId), bool>,
    lt_memo: BTreeMap<(NodeId, NodeId), bool>,
    // Caches owned by the sibling modules (evaluation, arithmetic).
    pub(crate) value_memo: BTreeMap<NodeId, Dyadic>,
    pub(crate) canon_memo: BTreeMap<NodeId, NodeId>,
    pub(crate) canon_by_value: BTreeMap<Dyadic, NodeId>,
    pub(crate) neg_memo: BTreeMap<NodeId, NodeId>,
    pub(crate) add_memo: BTreeMap<(NodeId, NodeId), NodeId>,
    pub(crate) mul_pos_memo: BTreeMap<(NodeId, NodeId), NodeId>,
    pub(crate) mul_conway_memo: BTreeMap<(NodeId, NodeId), NodeId>,
}

impl Arena {
    pub fn new() -> Self {
        Self::with_budget(DEFAULT_NODE_BUDGET)
    }

    /// An arena that refuses to grow past `budget` nodes.
    pub fn with_budget(budget: usize) -> Self {
        let mut arena = Arena {
            nodes: Vec::new(),
            intern: BTreeMap::new(),
            budget,
            zero: NodeId(0),
            leq_memo: BTreeMap::new(),
            lt_memo: BTreeMap::new(),
            value_memo: BTreeMap::new(),
            canon_memo: BTreeMap::new(),
            canon_by_value: BTreeMap::new(),
            neg_memo: BTreeMap::new(),
            add_memo: BTreeMap::new(),
            mul_pos_memo: BTreeMap::new(),
            mul_conway_memo: BTreeMap::new(),
        };
        arena.zero = arena.make(&[], &[]).expect("budget admits the empty cut");
        arena
    }

    /// The empty cut, born on day zero.
    pub fn zero(&self) -> NodeId {
        self.zero
    }

    pub fn node(&self, id: NodeId) -> &SurrealNode {
        &self.nodes[id.index()]
    }

    pub fn birthday(&self, id: NodeId) -> u32 {
        self.node(id).birthday
    }

    /// Number of nodes interned so far.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Interns the cut `{ left | right }`.
    ///
    /// Options are deduplicated and sorted, so any permutation of the same id
    /// sets yields the same node. New cuts are checked pairwise: every left
    /// option must sit strictly below every right option.
    pub fn make(&mut self, left: &[NodeId], right: &[NodeId]) -> Result<NodeId, Error> {
        let mut left: Vec<NodeId> = left.to_vec();
        let mut right: Vec<NodeId> = right.to_vec();
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();

        let key = (left.into_boxed_slice(), right.into_boxed_slice());
        if let Some(&id) = self.intern.get(&key) {
            return Ok(id);
        }

        let (left, right) = key;
        for &l in left.iter() {
            for &r in right.iter() {
                if !self.lt(l, r) {
                    return Err(Error::CutViolation { left: l, right: r });
                }
            }
        }
        if self.nodes.len() >= self.budget {
            return Err(Error::ResourceLimit { budget: self.budget });
        }

        let birthday = left
            .iter()
            .chain(right.iter())
            .map(|&o| self.nodes[o.index()].birthday + 1)
            .max()
            .unwrap_or(0);
        let id = NodeId(self.nodes.len() as u32);
        self.nodes.push(SurrealNode { left: left.clone(), right: right.clone(), birthday });
        self.intern.insert((left, right), id);
        Ok(id)
    }

    /// `x <= y`: every left option of `x` is below `y`, and `x` is below every
    /// right option of `y`.
    pub fn leq(&mut self, x: NodeId, y: NodeId) -> bool {
        if let Some(&r) = self.leq_memo.get(&(x, y)) {
            return r;
        }
        let mut r = true;
        for i in 0..self.node(x).left.len() {
            let l = self.node(x).left[i];
            if !self.lt(l, y) {
                r = false;
                break;
            }
        }
        if r {
            for i in 0..self.node(y).right.len() {
                let u = self.node(y).right[i];
                if !self.lt(x, u) {
                    r = false;
                    break;
                }
            }
        }
        self.leq_memo.insert((x, y), r);
        r
    }

    /// `x < y`: `x` fits below some left option of `y`, or some right option
    /// of `x` fits below `y`. No negation anywhere in the recursion.
    pub fn lt(&mut self, x: NodeId, y: NodeId) -> bool {
        if let Some(&r) = self.lt_memo.get(&(x, y)) {
            return r;
        }
        let mut r = false;
        for i in 0..self.node(y).left.len() {
            let l = self.node(y).left[i];
            if self.leq(x, l) {
                r = true;
                break;
            }
        }
        if !r {
            for i in 0..self.node(x).right.len() {
                let u = self.node(x).right[i];
                if self.leq(u, y) {
                    r = true;
                    break;
                }
            }
        }
        self.lt_memo.insert((x, y), r);
        r
    }

    /// Semantic equality: `leq` both ways.
    pub fn eq(&mut self, x: NodeId, y: NodeId) -> bool {
        self.leq(x, y) && self.leq(y, x)
    }

    /// `x` and `y` are observably distinct: one is strictly below the other.
    pub fn apart(&mut self, x: NodeId, y: NodeId) -> bool {
        self.lt(x, y) || self.lt(y, x)
    }
}

impl Default for Arena {
    fn default() -> Self {
        Self::new()
    }
}
