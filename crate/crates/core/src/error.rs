use thiserror::Error;

use crate::matroid::ElementId;

/// Errors raised by instance construction, minor operations and solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {id} is out of range for a ground set of size {size}")]
    IdOutOfRange { id: ElementId, size: usize },

    #[error("the ground set is empty")]
    EmptyGroundSet,

    #[error("the matroid has rank 0, so every basis is empty")]
    ZeroRank,

    #[error("the graph is disconnected and has no spanning tree")]
    Disconnected,

    #[error("cost vector has {got} entries but the ground set has {expected} elements")]
    CostLength { expected: usize, got: usize },

    #[error("element {id} has second cost {b}, outside 0..={beta}")]
    CostOutOfRange { id: ElementId, b: u32, beta: u32 },

    #[error("this operation needs a binary second objective (beta = 1), got beta = {0}")]
    NotBinary(u32),

    #[error("the set to contract is not independent in the minor")]
    NotIndependent,

    #[error("the given set is not a basis of the minor")]
    NotABasis,

    #[error("element {0} is already contained in the basis")]
    ElementInBasis(ElementId),

    #[error("element {0} is not part of the minor's ground set")]
    NotInGroundSet(ElementId),

    #[error("{0} requires a uniform matroid")]
    NotUniform(&'static str),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("the efficient set is empty")]
    EmptyEfficientSet,

    /// A proven property failed to hold at runtime. Always a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
