//! Exact characteristic-number computations for complex projective spaces
//! and cyclic branched covers of complex hyperbolic manifolds.
//!
//! - [`exact_algebra`]: rationals, binomials, integer partitions
//! - [`power_series`]: truncated power series, the cyclic-cover function `sign(t)`
//! - [`chern_calculus`]: Chern polynomials, Chern numbers of `CP^n`, Pontrjagin classes
//! - [`hirzebruch_genera`]: L-polynomials, signatures, the constant `Σ/χ = 1/(n+1)`
//! - [`branched_cover`]: signature, Euler characteristic and Chern-ratio
//!   obstruction of a branched cover
//! - [`cli`]: the `chern-ratios` command-line interface

pub mod branched_cover;
pub mod chern_calculus;
pub mod cli;
mod error;
pub mod exact_algebra;
pub mod hirzebruch_genera;
pub mod power_series;

pub use error::{Error, Result};
pub use exact_algebra::{Partition, Rational};
