//! Homeomorphism groups of scattered spaces, made executable.
//!
//! The crate covers ordinal arithmetic in Cantor normal form, the
//! classification of ordinal spaces up to homeomorphism, Cantor-Bendixson
//! analysis, finite spaces and their homeomorphism groups, the encoding of
//! graphs as scattered spaces, and symbolic invariants of the homeomorphism
//! groups of ordinal spaces.

pub mod classify;
mod error;
pub mod finite;
pub mod flows;
pub mod graph;
pub mod invariants;
mod limits;
pub mod ordinal;
pub mod verify;

pub use error::{Error, Result};
pub use limits::{Limits, MAX_POINTS_ENV};
