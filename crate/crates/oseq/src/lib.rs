//! Matroid h-vectors, pure order ideals, and pure O-sequence searches.
//!
//! The crate is organized around three layers:
//!
//! * [`monomial`] and [`ideal`]: monomials, pure order ideals, and their
//!   face-number (f-vector) computations with degree-descent pruning.
//! * [`complex`] and [`matroid`]: simplicial complexes and matroids with
//!   duality, links/deletions, parallel classes, skeletons, and the
//!   necessary-condition filters for h-vectors.
//! * [`constructions`], [`compat`], and [`search`]: the named matroid and
//!   order-ideal families, the weighted compatibility orders with their
//!   gluing operation, and the socle-space searches (exhaustive enumeration
//!   and the class-ordered guided search).
//!
//! [`io`] provides the text and JSON formats for matroids and order ideals.
//!
//! With the default `parallel` feature, enumeration and guided search run on
//! the ambient rayon thread pool; results are identical to the sequential
//! fallback regardless of worker count.

pub mod combin;
pub mod compat;
pub mod complex;
pub mod constructions;
mod error;
pub mod ideal;
pub mod io;
pub mod matroid;
pub mod monomial;
pub mod search;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
