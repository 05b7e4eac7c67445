//! Fundamental groupoids on sets of base points, computed exactly.
//!
//! The crate is organised bottom-up:
//!
//! - [`groupoid`]: words, presented groupoids, spanning-tree retractions onto
//!   object groups, quotients and free products.
//! - [`analysis`]: Smith normal form, abelianization, Tietze moves.
//! - [`pushout`]: the object group of a pushout of groupoids over a set `J`
//!   with totally disconnected `C`, the free group `F` on the `f_x`, and the
//!   retraction `G(p) -> F` with its certificates.
//! - [`complex`]: finite 2-dimensional cell complexes, complements of closed
//!   subcomplexes, covers and edge-path groupoids.
//! - [`verify`]: separation, the Phragmen-Brouwer property, arc complements
//!   and the Jordan curve checks, including the van Kampen pipeline.
//! - [`cli`]: JSON file formats and the `gjordan` command line.
//!
//! Runnable walkthroughs live in this crate's `examples/` directory.

pub mod analysis;
pub mod cli;
pub mod complex;
pub mod error;
pub mod groupoid;
pub mod pushout;
mod serde_bigint;
pub mod union_find;
pub mod verify;

pub use error::{Error, Result};
