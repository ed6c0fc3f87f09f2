use alloc::string::String;

use crate::geometry::{Cell, GridPoint};
use crate::polyalg::Variable;

/// Coarse classification of an [`Error`], used by front ends to pick exit
/// codes and HTTP statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorKind {
    /// The input does not describe a valid collection of cells.
    Input,
    /// The input is valid but violates the precondition of the operation.
    Precondition,
    /// A resource limit (time or S-pair budget) was exceeded.
    Limit,
    /// Should not happen; indicates a bug.
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("a collection of cells must contain at least one cell")]
    EmptyCollection,
    #[error("duplicate cell with lower left corner {0}")]
    DuplicateCell(Cell),
    #[error("coordinate out of bounds at {0} (|i|, |j| must not exceed {bound})", bound = crate::geometry::COORDINATE_BOUND)]
    CoordinateOutOfBounds(GridPoint),
    #[error("not a unit cell: corners {0} and {1}")]
    NotUnitCell(GridPoint, GridPoint),

    #[error("variable {0} is not in the ring")]
    UnknownVariable(Variable),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("{0}")]
    InvalidField(String),

    #[error("the collection is not weakly connected")]
    NotWeaklyConnected,
    #[error("the convex-collection order needs a weakly connected convex collection")]
    NotConvex,
    #[error("convex-collection order failed validation: {0}")]
    ConvexOrderInvalid(String),
    #[error("the ideal is not homogeneous")]
    NotHomogeneous,
    #[error("monomial order is not an elimination order for the requested block")]
    NotEliminationOrder,
    #[error("expected monomial generators")]
    NotMonomial,
    #[error("matrix does not belong to the given collection")]
    MatrixMismatch,

    #[error("S-pair budget of {0} exhausted")]
    PairBudgetExceeded(usize),
    #[error("computation interrupted (timeout or cancellation)")]
    Interrupted,

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            EmptyCollection | DuplicateCell(_) | CoordinateOutOfBounds(_) | NotUnitCell(..) => {
                ErrorKind::Input
            }
            UnknownVariable(_)
            | RingMismatch
            | InvalidField(_)
            | NotWeaklyConnected
            | NotConvex
            | ConvexOrderInvalid(_)
            | NotHomogeneous
            | NotEliminationOrder
            | NotMonomial
            | MatrixMismatch => ErrorKind::Precondition,
            PairBudgetExceeded(_) | Interrupted => ErrorKind::Limit,
            Internal(_) => ErrorKind::Internal,
        }
    }

    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        use Error::*;
        match self {
            EmptyCollection => "empty_collection",
            DuplicateCell(_) => "duplicate_cell",
            CoordinateOutOfBounds(_) => "coordinate_out_of_bounds",
            NotUnitCell(..) => "not_unit_cell",
            UnknownVariable(_) => "unknown_variable",
            RingMismatch => "ring_mismatch",
            InvalidField(_) => "invalid_field",
            NotWeaklyConnected => "not_weakly_connected",
            NotConvex => "not_convex",
            ConvexOrderInvalid(_) => "convex_order_invalid",
            NotHomogeneous => "not_homogeneous",
            NotEliminationOrder => "not_elimination_order",
            NotMonomial => "not_monomial",
            MatrixMismatch => "matrix_mismatch",
            PairBudgetExceeded(_) => "pair_budget_exceeded",
            Interrupted => "timeout",
            Internal(_) => "internal",
        }
    }
}
