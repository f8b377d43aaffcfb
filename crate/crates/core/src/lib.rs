//! Exact arithmetic for unramified local transfer of classical groups,
//! quadratic and Hermitian form invariants over the rationals, Weil-Deligne
//! representations, and finite-field character sums.

pub mod arith;
pub mod cli;
pub mod finite;
pub mod forms;
pub mod satake;
pub mod wd;
pub mod error;

pub use error::{Error, Result};
