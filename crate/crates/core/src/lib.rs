//! Latin-Hadamard matrices and the component decomposition of Pearson's
//! chi-square statistic.
//!
//! The crate builds the structured Latin square `S_w`, signs it into
//! matrices with mutually orthogonal columns, turns those into orthonormal
//! eigenbases of the rescaled multinomial covariance, and uses them to split
//! `X²` into single-degree-of-freedom components. Supporting modules cover
//! Cayley–Dickson algebras and zero divisors, Radon's function, a reference
//! 16×16 orthogonal design, and a seeded Monte Carlo power harness.

pub mod algebra;
pub mod chisq;
pub mod cli;
pub mod coloring;
pub mod design;
pub mod error;
pub mod latin;
pub mod montecarlo;
pub mod reference;
pub mod sign;

pub use error::{Error, Result};
pub use latin::{CornerQuad, LatinSquare};
pub use sign::Sign;
