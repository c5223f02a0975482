//! Exact invariants of secant varieties of rational normal curves:
//! characteristic classes, Hilbert series, Euler characteristics, polar
//! degrees and the tables of projective degrees of their gradient maps.

pub mod algebra;
pub mod error;

pub use error::{Error, Result};
pub mod charclass;
pub mod json;
pub mod hilbert;
pub mod secant;
pub mod conjecture;
pub mod golden;
pub mod verify;
