//! Weil-Deligne representations with monomial Frobenius spectrum.

pub mod integral;
pub mod matrix;
pub mod rep;

pub use integral::{congruent_wd, integral_model, reduce_wd, IntegralModel};
pub use matrix::QMat;
pub use rep::{frobenius_ss, glparam_of_wd, validate, wd_of_glparam, ValidationReport, WDRep};
