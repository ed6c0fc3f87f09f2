//! Exact sparse multivariate polynomials.
//!
//! A [`Ring`] fixes a coefficient field, an ordered universe of
//! [`Variable`]s and a [`MonomialOrder`]. Polynomials keep a handle to their
//! ring and are always normalized: terms strictly decreasing, no zero
//! coefficients.

mod field;
mod monomial;
mod order;
mod poly;
mod ring;

pub use field::{is_prime, Field, FieldSpec, Fp, Rational, DEFAULT_PRIME};
pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub(crate) use poly::{merge_add, same_ring};
pub use poly::{Polynomial, Term};
pub use ring::{build_ring, convex_ranking, Ring, RingRef, Variable};
