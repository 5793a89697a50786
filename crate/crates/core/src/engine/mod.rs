//! Series computations for the refined Frobenius series: the base series
//! dictionary, the functional-equation iterator, the closed-form solutions,
//! and the algebraic checks tying them together.

pub mod base;
pub mod change;
pub mod checks;
pub mod closed;
pub mod companion;
pub mod functional;
pub mod m2;
pub mod phi;
pub mod extract;
pub mod symfunc;
pub mod unlabelled;
