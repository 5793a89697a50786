//! Exact algebraic plumbing: rationals, sparse multivariate Laurent
//! polynomials, truncated power series, localizations and small solvers.

pub mod lagrange;
pub mod linalg;
pub mod multipoly;
pub mod quad;
pub mod rat;
pub mod series;
pub mod useries;

pub use multipoly::{Mono, MultiPoly};
pub use quad::QuadSeries;
pub use rat::Rat;
pub use series::{SVar, Series};
pub use useries::USeries;
