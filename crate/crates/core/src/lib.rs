//! Exact computations with Specht modules presented by column tabloids and
//! dual Garnir relations, and the comb-bracket model of the multilinear free
//! LAnKe component on `2n - 1` generators.

pub mod cli;
pub mod error;
pub mod garnir;
pub mod json;
pub mod lanke;
pub mod linalg;
pub mod maps;
pub mod partition;
pub mod spectrum;
pub mod tabloid;

pub use error::{Error, Result};
