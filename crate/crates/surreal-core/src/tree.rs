//! Day-by-day generation of the canonical binary tree of values.
//!
//! Day 0 holds zero; every node born on day `n` spawns a left and a right
//! child on day `n+1`, each the cut against the nearest earlier-born neighbor.
//! Day `n` therefore holds `2^n` nodes with values running from `-n` to `n`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::arena::{Arena, NodeId};
use crate::dyadic::Dyadic;
use crate::error::Error;

/// Which child of its parent a tree node is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Root,
    Left,
    Right,
}

/// A node's place in the generated tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub id: NodeId,
    pub parent: Option<NodeId>,
    pub side: Side,
    pub day: u32,
}

/// The tree generated through some day, catalogued per day in value order.
pub struct Tree {
    days: Vec<Vec<TreeNode>>,
    index: BTreeMap<NodeId, TreeNode>,
}

/// One checked condition with the cases it covered and any violations found.
#[derive(Clone, Debug)]
pub struct ConditionEntry {
    pub condition: &'static str,
    pub checked: usize,
    pub violations: Vec<String>,
}

/// Outcome of [`Tree::check_conditions`], one entry per structural condition.
#[derive(Clone, Debug)]
pub struct ConditionReport {
    pub entries: Vec<ConditionEntry>,
}

impl ConditionReport {
    pub fn total_violations(&self) -> usize {
        self.entries.iter().map(|e| e.violations.len()).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.total_violations() == 0
    }
}

impl Tree {
    /// Generates days `0..=days`.
    ///
    /// Fails with `ResourceLimit` up front when the full tree (`2^(days+1)-1`
    /// nodes) cannot fit in the arena budget.
    pub fn generate(arena: &mut Arena, days: u32) -> Result<Tree, Error> {
        let needed = if days >= usize::BITS - 1 {
            usize::MAX
        } else {
            (1usize << (days + 1)) - 1
        };
        if needed > arena.budget() {
            return Err(Error::ResourceLimit { budget: arena.budget() });
        }

        let zero = arena.zero();
        let root = TreeNode { id: zero, parent: None, side: Side::Root, day: 0 };
        let mut tree = Tree { days: Vec::with_capacity(days as usize + 1), index: BTreeMap::new() };
        tree.days.push(alloc::vec![root]);
        tree.index.insert(zero, root);

        // All values born so far, kept sorted; neighbors in this list are the
        // option nodes for the next day's children.
        let mut born: Vec<(Dyadic, NodeId)> = alloc::vec![(Dyadic::zero(), zero)];

        for day in 1..=days {
            let parents: Vec<NodeId> = tree.days[day as usize - 1].iter().map(|n| n.id).collect();
            let mut today: Vec<(Dyadic, TreeNode)> = Vec::with_capacity(parents.len() * 2);
            for parent in parents {
                let parent_value = arena.value(parent);
                let pos = born
                    .binary_search_by(|(v, _)| v.cmp(&parent_value))
                    .expect("parent was recorded in the born list");
                let lower = (pos > 0).then(|| born[pos - 1].1);
                let upper = born.get(pos + 1).map(|&(_, id)| id);

                let left_opts: Vec<NodeId> = lower.into_iter().collect();
                let left_child = arena.make(&left_opts, &[parent])?;
                today.push((
                    arena.value(left_child),
                    TreeNode { id: left_child, parent: Some(parent), side: Side::Left, day },
                ));

                let right_opts: Vec<NodeId> = upper.into_iter().collect();
                let right_child = arena.make(&[parent], &right_opts)?;
                today.push((
                    arena.value(right_child),
                    TreeNode { id: right_child, parent: Some(parent), side: Side::Right, day },
                ));
            }
            today.sort_by(|a, b| a.0.cmp(&b.0));
            for (v, n) in &today {
                tree.index.insert(n.id, *n);
                born.push((v.clone(), n.id));
            }
            born.sort_by(|a, b| a.0.cmp(&b.0));
            tree.days.push(today.into_iter().map(|(_, n)| n).collect());
        }
        Ok(tree)
    }

    /// Per-day catalogue, each day in increasing value order.
    pub fn days(&self) -> &[Vec<TreeNode>] {
        &self.days
    }

    /// Total nodes generated.
    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn contains(&self, id: NodeId) -> bool {
        self.index.contains_key(&id)
    }

    pub fn get(&self, id: NodeId) -> Option<&TreeNode> {
        self.index.get(&id)
    }

    /// The path of node ids from the root down to `x`, inclusive.
    pub fn branch(&self, x: NodeId) -> Result<Vec<NodeId>, Error> {
        let mut path = Vec::new();
        let mut cur = *self.index.get(&x).ok_or(Error::NotInTree(x))?;
        path.push(cur.id);
        while let Some(p) = cur.parent {
            cur = self.index[&p];
            path.push(cur.id);
        }
        path.reverse();
        Ok(path)
    }

    /// The last day on which the branches of `x` and `y` still agree.
    pub fn bifurcation(&self, x: NodeId, y: NodeId) -> Result<u32, Error> {
        if x == y {
            return Err(Error::SameNode(x));
        }
        if !self.contains(y) {
            return Err(Error::NotInTree(y));
        }
        let bx = self.branch(x)?;
        let by = self.branch(y)?;
        let shared = bx.iter().zip(&by).take_while(|(a, b)| a == b).count();
        // Both branches start at the root, so they share at least day 0.
        Ok(shared as u32 - 1)
    }

    /// Verifies the structural conditions the tree is supposed to satisfy,
    /// reporting every node (or pair) that breaks one.
    ///
    /// Checked per node: the branch to the root exists with matching sides;
    /// the floor integer brackets the node (`n <= x <= n+1`); nonzero integers
    /// hang off the previous integer while zero is the unique parentless
    /// node; the arena birthday equals the tree depth. Checked per pair:
    /// bifurcation is defined and the branches really do split there.
    pub fn check_conditions(&self, arena: &mut Arena) -> Result<ConditionReport, Error> {
        let mut entries = Vec::new();
        let all: Vec<TreeNode> =
            self.days.iter().flat_map(|day| day.iter().copied()).collect();

        let mut ancestry = ConditionEntry { condition: "ancestor-branch", checked: 0, violations: Vec::new() };
        for n in &all {
            ancestry.checked += 1;
            let branch = self.branch(n.id)?;
            if branch.first() != Some(&self.days[0][0].id) {
                ancestry.violations.push(format!("{}: branch does not start at the root", arena.value(n.id)));
                continue;
            }
            if branch.len() as u32 != n.day + 1 {
                ancestry.violations.push(format!("{}: branch length {} on day {}", arena.value(n.id), branch.len(), n.day));
            }
            let side_ok = match (n.side, n.parent) {
                (Side::Root, None) => true,
                (Side::Left, Some(p)) => arena.lt(n.id, p),
                (Side::Right, Some(p)) => arena.lt(p, n.id),
                _ => false,
            };
            if !side_ok {
                ancestry.violations.push(format!("{}: recorded side disagrees with the order", arena.value(n.id)));
            }
        }
        entries.push(ancestry);

        let mut bifurcation = ConditionEntry { condition: "bifurcation", checked: 0, violations: Vec::new() };
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                bifurcation.checked += 1;
                let day = match self.bifurcation(a.id, b.id) {
                    Ok(day) => day,
                    Err(_) => {
                        bifurcation.violations.push(format!(
                            "({}, {}): bifurcation undefined",
                            arena.value(a.id),
                            arena.value(b.id)
                        ));
                        continue;
                    }
                };
                let ba = self.branch(a.id)?;
                let bb = self.branch(b.id)?;
                let agree = ba.iter().zip(&bb).take_while(|(x, y)| x == y).count() as u32;
                if agree != day + 1 {
                    bifurcation.violations.push(format!(
                        "({}, {}): branches agree through day {} but bifurcation says {}",
                        arena.value(a.id),
                        arena.value(b.id),
                        agree - 1,
                        day
                    ));
                }
            }
        }
        entries.push(bifurcation);

        let mut bracket = ConditionEntry { condition: "integer-bracket", checked: 0, violations: Vec::new() };
        for n in &all {
            bracket.checked += 1;
            let floor = self.floor_witness(arena, n.id);
            let lo = arena.from_dyadic(&Dyadic::from_int(floor.clone()))?;
            let hi = arena.from_dyadic(&Dyadic::from_int(floor + 1))?;
            if !(arena.leq(lo, n.id) && arena.leq(n.id, hi)) {
                bracket.violations.push(format!("{}: floor witness fails to bracket", arena.value(n.id)));
            }
        }
        entries.push(bracket);

        let mut regularity = ConditionEntry { condition: "limit-or-regular", checked: 0, violations: Vec::new() };
        for n in &all {
            let v = arena.value(n.id);
            if !v.is_integer() {
                continue;
            }
            regularity.checked += 1;
            if v.is_zero() {
                // Zero is the lone limit: nothing generated it.
                if n.parent.is_some() {
                    regularity.violations.push(format!("0 has a parent on day {}", n.day));
                }
                continue;
            }
            // A nonzero integer is regular: its parent is the previous integer.
            let toward_zero = v.num() - v.num().signum();
            let parent_value = n.parent.map(|p| arena.value(p));
            if parent_value != Some(Dyadic::from_int(toward_zero)) {
                regularity.violations.push(format!("{v}: parent is not the previous integer"));
            }
        }
        entries.push(regularity);

        let mut depth = ConditionEntry { condition: "birthday-depth", checked: 0, violations: Vec::new() };
        for n in &all {
            depth.checked += 1;
            if arena.birthday(n.id) != n.day {
                depth.violations.push(format!(
                    "{}: arena birthday {} but tree day {}",
                    arena.value(n.id),
                    arena.birthday(n.id),
                    n.day
                ));
            }
        }
        entries.push(depth);

        Ok(ConditionReport { entries })
    }

    /// Integer `n` with `n <= x <= n+1`, read off the dyadic value.
    fn floor_witness(&self, arena: &mut Arena, x: NodeId) -> BigInt {
        arena.value(x).floor()
    }
}
