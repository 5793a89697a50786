//! Exact computation of m-Tamari lattices, the symmetric-group action on their
//! labelled intervals, and the refined Frobenius series attached to that action.
//!
//! The crate is organized in layers:
//!
//! * [`algebra`] — arbitrary-precision rationals, sparse multivariate Laurent
//!   polynomials, truncated formal power series, localizations at `1+u`, a
//!   quadratic extension by `sqrt(1+4u)`, and exact linear solving.
//! * [`combinatorics`] — m-ballot paths, ascents and contacts, labellings,
//!   integer partitions and permutations.
//! * [`lattice`] — the m-Tamari lattice on m-ballot paths: covers, order,
//!   meet/join, intervals, the recursive interval decomposition, and the
//!   embedding of the m-case into the ordinary case.
//! * [`action`] — the symmetric-group action on labelled intervals, characters
//!   by brute-force fixed-point counting, and the definitional Frobenius sum.
//! * [`formulas`] — the closed product formulas for characters, dimensions and
//!   interval counts, checked elsewhere against brute force.
//! * [`engine`] — the generating-function side: the functional equation for the
//!   refined Frobenius series, its closed-form solutions, the companion ring of
//!   the characteristic equation, and the tower of auxiliary series that solves
//!   the general case.
//! * [`verify`] — the cross-check suites tying all of the above together.
//!
//! Every computation is exact. Rational arithmetic never rounds, series are
//! truncated at explicit orders, and each division or specialization that the
//! theory asserts to be exact is certified at run time (nonzero remainders are
//! hard errors, never silently dropped).

pub mod error;

pub mod algebra;
pub mod combinatorics;
pub mod lattice;
pub mod action;
pub mod formulas;
pub mod engine;
pub mod verify;

pub use error::{Error, Result};

pub use algebra::multipoly::{Mono, MultiPoly};
pub use algebra::rat::Rat;
pub use algebra::series::{SVar, Series};

pub use combinatorics::labelling::Labelling;
pub use combinatorics::partition::Partition;
pub use combinatorics::path::{BallotPath, Step};
pub use combinatorics::perm::Perm;

pub use lattice::interval::{Interval, PointedInterval};
pub use lattice::TamariLattice;

pub use action::{LabelledInterval, LabelledPath};

pub use verify::{CheckResult, Suite};
