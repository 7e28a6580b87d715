//! Generalized Schubert calculus for formal group laws of the form
//! `F(x, y) = (x + y − μ1 xy) / (1 + μ2 xy)`: divided difference operators, Bott-Samelson
//! classes on flag varieties, the coinvariant ring, a deformed Hecke algebra, and products of
//! smooth Schubert classes on Grassmannians.
//!
//! All arithmetic is exact over `Z[μ1, μ2]`.

pub mod coinv;
pub mod combi;
pub mod ddo;
pub mod error;
pub mod fgl;
pub mod grass;
pub mod hecke;
pub mod polycore;
#[cfg(test)]
mod proptests;
pub mod scalar;
pub mod schubert;

pub use error::{Error, Result};

pub type Integer = num_bigint::BigInt;
pub type Poly = polycore::Polynomial<Integer>;
pub type HeckeElem = hecke::HeckeElement<Integer>;
