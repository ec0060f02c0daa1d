//! Exact computation with self-maps of projective space: regularity
//! certificates, group actions on maps, invariant theory, fixed-point
//! analysis of the induced action on coefficients, counting surface
//! group representations, and intersection theory on P^1-bundles.

pub mod algebra;
pub mod chow;
pub mod equivariant;
pub mod error;
pub mod homcount;
pub mod json;
pub mod maps;
pub mod selftest;
pub mod stability;

pub use error::{Error, Result};
