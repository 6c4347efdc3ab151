//! Exact computation of Heisenberg products and Aguiar coefficients of
//! symmetric-group representations, with the stabilization bounds known for
//! Aguiar-stable triples.
//!
//! All arithmetic is exact; every overflow surfaces as [`Error::Overflow`].

pub mod cache;
pub mod characters;
pub mod error;
pub mod heisenberg;
pub mod kronecker;
pub mod lr;
pub mod partitions;
pub mod stability;

pub use error::{Error, Result};
pub use partitions::{CycleType, Partition};
