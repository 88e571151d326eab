use core::fmt;

use crate::arena::NodeId;

/// Everything that can go wrong in this crate.
///
/// Arithmetic on well-formed inputs never fails on its own, but any operation
/// that allocates nodes can hit the arena budget, so node-producing functions
/// return `Result` and thread these through.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A cut was requested whose options overlap: some left option is not
    /// strictly below some right option.
    CutViolation { left: NodeId, right: NodeId },
    /// The arena node budget would be exceeded.
    ResourceLimit { budget: usize },
    /// A positive-multiplication operand was below zero.
    NegativeOperand(NodeId),
    /// `simplest_between` was asked for a value inside an empty interval.
    EmptyInterval,
    /// The node exists in the arena but was never generated into the tree.
    NotInTree(NodeId),
    /// Bifurcation of a node with itself is undefined.
    SameNode(NodeId),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::CutViolation { left, right } => write!(
                f,
                "cut violation: left option {left:?} is not strictly below right option {right:?}"
            ),
            Error::ResourceLimit { budget } => {
                write!(f, "node budget of {budget} exhausted")
            }
            Error::NegativeOperand(id) => {
                write!(f, "positive multiplication requires nonnegative operands, got {id:?}")
            }
            Error::EmptyInterval => write!(f, "no value lies strictly between the given bounds"),
            Error::NotInTree(id) => write!(f, "node {id:?} is not part of the generated tree"),
            Error::SameNode(id) => write!(f, "bifurcation of {id:?} with itself is undefined"),
        }
    }
}

impl core::error::Error for Error {}
