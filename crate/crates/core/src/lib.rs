//! Exact q-series and partition statistics for minimal, odd and maximal
//! excludants.
//!
//! - [`series`]: truncated power series over big integers, q-Pochhammer products
//! - [`qfunctions`]: the generating functions, each in all of its equivalent forms
//! - [`partitions`]: brute-force enumeration and the statistics it yields
//! - [`identities`]: identity registry and exact verification harness
//! - [`asymptotics`]: Dedekind sums, the Rademacher-type formula, limits as `q → 1⁻`
//! - [`cli`]: command-line front end

pub mod asymptotics;
pub mod cli;
pub mod error;
pub mod identities;
pub mod partitions;
pub mod qfunctions;
pub mod series;

pub use error::{Error, Result};
pub use series::{poch, FactorSign, IntSeries, PochLength};
