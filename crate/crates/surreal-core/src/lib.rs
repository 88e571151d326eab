//! Exact arithmetic on finitely born surreal numbers.
//!
//! Numbers are cuts `{ left options | right options }` interned in an [`Arena`];
//! inequality, addition, and multiplication are computed by structural recursion
//! and every node's value is independently available as an exact dyadic rational,
//! so the two routes keep each other honest.

#![no_std]

extern crate alloc;

mod arena;
mod arithmetic;
mod dyadic;
mod error;
pub mod laws;
mod signexp;
mod tree;

pub use arena::{Arena, NodeId, SurrealNode, DEFAULT_NODE_BUDGET};
pub use arithmetic::DiffPair;
pub use dyadic::{simplest_between, Dyadic, ParseDyadicError};
pub use error::Error;
pub use signexp::{ParseSignSeqError, Sign, SignSeq};
pub use tree::{ConditionEntry, ConditionReport, Side, Tree, TreeNode};
