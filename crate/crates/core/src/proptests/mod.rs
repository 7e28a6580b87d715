//! Randomized checks of the algebraic invariants.

mod algebra;
mod polynomial;
mod strategies;
