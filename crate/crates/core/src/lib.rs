//! Exact computations on finite graded lattices: flag f- and h-vectors,
//! order-complex homology, Möbius functions, Cohen-Macaulayness, and
//! machine checks of lower bounds on flag vectors over exhaustively
//! enumerated lattices.

pub mod canon;
pub mod catalog;
pub mod complex;
pub mod corpus;
pub mod error;
pub mod flag;
pub mod format;
pub mod linalg;
pub mod poset;
pub mod subset;
pub mod surgery;
pub mod topology;
pub mod verifier;

pub use complex::{CoefficientSpec, HomologyProfile, SimplicialComplex};
pub use error::{Error, Result};
pub use flag::{FlagKind, FlagVector, RankSubset};
pub use poset::Poset;
pub use subset::ElementSubset;
