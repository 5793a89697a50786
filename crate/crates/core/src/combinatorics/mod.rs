//! Paths, labellings, partitions and permutations: the finite objects the
//! lattice and the group action are built on.

pub mod labelling;
pub mod partition;
pub mod path;
pub mod perm;

pub use labelling::Labelling;
pub use partition::Partition;
pub use path::{BallotPath, Step};
pub use perm::Perm;
