//! Inner 2-minor ideals of collections of cells.
//!
//! The crate builds the polyomino ideal `I_P` of a finite collection of unit
//! cells in the integer grid, its attached matrix `M(P)`, and the toric ideal
//! `J_P` given by the monomial parametrization through maximal edge intervals
//! and holes. A small Buchberger engine provides reduced Gröbner bases,
//! initial ideals, elimination and minimal generators; Hilbert series of the
//! coordinate ring are computed from the initial ideal.
//!
//! Everything here is `no_std` with `alloc`. Timeouts and cancellation are
//! supplied by the caller through [`Interrupt`].

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod geometry;
pub mod groebner;
pub mod hilbert;
pub mod ideals;
pub mod interrupt;
pub mod polyalg;
pub mod toric;

pub use error::{Error, ErrorKind};
pub use interrupt::{Interrupt, Limits, NeverInterrupt};

pub type Result<T, E = Error> = core::result::Result<T, E>;
