//! Combinatorics of double point schemes in P^1 x P^1 with ACM support.
//!
//! Everything in this crate is driven by a single partition `lambda`
//! describing the support of a set of double points whose support is
//! arithmetically Cohen-Macaulay.  From `lambda` we can read off the
//! completion of the scheme, the corners of its degree matrix, and the
//! shifts in the bigraded minimal free resolution of its defining ideal,
//! one mapping cone step per corner.
//!
//! The crate is `no_std` (with `alloc`); all operations are pure and
//! deterministic.  Exact verification against point evaluation matrices
//! lives in the companion `bigres` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
pub mod completion;
pub mod corners;
pub mod engine;
pub mod partition;
pub mod resolution;
pub mod romer;
pub mod scheme;

pub use error::Error;
pub use partition::Partition;
pub use resolution::{Bidegree, FreeResolution, ShiftMultiset};
pub use scheme::{AlphaBeta, FatPointScheme};

pub type Result<T> = core::result::Result<T, Error>;
