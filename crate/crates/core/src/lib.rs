//! Pure braid words mapped into `G_n^3` and its extension by `σ` letters,
//! free-product invariants of braids and of single crossings, certificates
//! of non-cancellability, and bounded rewrite search.

pub mod cancellability;
pub mod error;
pub mod explorer;
pub mod homomorphisms;
pub mod invariants;
pub mod presentations;
pub mod words;

pub use error::{Error, Result};
