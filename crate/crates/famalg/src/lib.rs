//! Exact-arithmetic construction of the classical family algebra of the
//! adjoint representation of sl(n).
//!
//! The object of study is the algebra of G-equivariant maps from the dual
//! space of sl(n) into its endomorphisms, with polynomial entries.  The crate
//! builds its generators `L`, `R`, `S` (and the symmetric/antisymmetric pair
//! `N`, `M`), verifies the complete defining relation suite as exact
//! polynomial identities, produces the monomial basis over the ring of
//! symmetric invariants together with numerical rank certificates, and checks
//! the table of generalized exponents against Kostka–Foulkes charge
//! statistics.  Every identity is decided over the rationals; nothing is
//! approximated.
//!
//! Module map:
//!
//! * [`rat`] — exact rational scalars and dense rational matrices;
//! * [`lie`] — sl(n), its trace form, structure constants, and exact
//!   one-parameter group elements;
//! * [`poly`] — sparse multivariate polynomials and polynomial matrices;
//! * [`casimir`] — the fundamental matrix `F`, power-trace invariants `c_k`,
//!   and characteristic coefficients `d_k`;
//! * [`family`] — the generators, their algebraic operations, and
//!   equivariance checks;
//! * [`relations`] — the relation suites with reporting;
//! * [`independence`] — the monomial basis and rank certificates;
//! * [`exponents`] — generalized exponents, q-analogues, and charge
//!   statistics;
//! * [`report`] / [`cli`] — stable reports and the command-line entry point.

#![forbid(unsafe_code)]

pub mod casimir;
pub mod cli;
pub mod exponents;
pub mod family;
pub mod independence;
pub mod lie;
pub mod poly;
pub mod rat;
pub mod relations;
pub mod report;

use thiserror::Error;

/// Default seed for every randomized certificate and spot check.
pub const DEFAULT_SEED: u64 = 0xFA417A;

/// Default number of evaluation points for rank certificates.
pub const DEFAULT_POINTS: usize = 3;

/// Errors surfaced by constructors and the command-line layer.
#[derive(Debug, Error)]
pub enum FamalgError {
    /// `n` too small to carry the construction (need `n ≥ 2`).
    #[error("invalid dimension parameter n = {0}: need n >= 2")]
    InvalidDimension(usize),

    /// `exp(t·ad E_ij)` needs two distinct indices in `1..=n`.
    #[error("invalid nilpotent generator E({i},{j}) for n = {n}: need distinct indices in 1..={n}")]
    InvalidGenerator { i: usize, j: usize, n: usize },

    /// The requested `n` is outside the supported range of a command.
    #[error("unsupported n = {n} for {what} (supported: {supported})")]
    Unsupported { n: usize, what: &'static str, supported: &'static str },

    /// A run configuration field is out of range.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
