//! Exact rational linear algebra over a fixed, ordered basis.
//!
//! Every vector carries its [`Ambient`] so mixing vectors from different
//! modules is caught instead of silently producing garbage indices.

mod echelon;
mod operator;
pub(crate) mod rational;
mod vector;

use std::fmt;

pub use echelon::{echelonize, member, solve_in_span, subspace_equal, SpanSolver, Subspace};
pub use operator::{nullity_shifted, LinearOperator};
pub use rational::{format_rational, parse_rational, Rational};
pub use vector::ModuleVector;

use crate::partition::{multinomial, Partition};

/// The ordered basis a vector is written in.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ambient {
    /// Plain coordinates `0..dim`.
    Coords(usize),
    /// Ordered column tabloids of a shape (the module of column tabloids).
    Column(Partition),
    /// Row tabloids of a shape.
    Row(Partition),
}

impl Ambient {
    pub fn dim(&self) -> usize {
        match self {
            Ambient::Coords(d) => *d,
            Ambient::Column(shape) => multinomial(&shape.column_lengths()) as usize,
            Ambient::Row(shape) => multinomial(shape.parts()) as usize,
        }
    }

    pub fn shape(&self) -> Option<&Partition> {
        match self {
            Ambient::Coords(_) => None,
            Ambient::Column(s) | Ambient::Row(s) => Some(s),
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ambient::Coords(d) => write!(f, "Q^{d}"),
            Ambient::Column(s) => write!(f, "column tabloids {s}"),
            Ambient::Row(s) => write!(f, "row tabloids {s}"),
        }
    }
}
