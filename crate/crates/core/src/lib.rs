//! Exact combinatorics of finite root systems and Weyl groups: closed subsets,
//! the `Γ(I,J,K)` family, free parabolic double cosets, torus-fixed-point sets
//! of combinatorial Slodowy varieties, 4d mirror brane bookkeeping, type A brane
//! diagrams and star-shaped quiver data.
//!
//! Everything is exact integer arithmetic. Root systems are built from Cartan
//! data in Bourbaki numbering; Weyl group elements are permutations of root
//! indices.

pub mod branes;
pub mod closedsets;
pub mod config;
pub mod error;
pub mod fixedpoints;
pub mod mirror;
pub mod quivers;
pub mod rootsys;
pub mod simple;
pub mod subset;
pub mod verify;
pub mod weyl;

pub use config::Config;
pub use error::{Error, Result};
pub use rootsys::{CartanType, RootId, RootSystem};
pub use simple::Simple;
pub use subset::RootSubset;
pub use weyl::{CosetSpace, ElemId, Side, WeylGroup};
