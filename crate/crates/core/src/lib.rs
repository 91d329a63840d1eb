//! Gauss hypergeometric function ₂F₁[a,b;c;x] on [0, 1]: series and
//! closed-form evaluation, linear and quadratic interpolants on the nodes
//! {0, ½, 1} with a-priori error bounds, Gauss's continued fraction for
//! ₂F₁[a+1,b;c+1;x]/₂F₁[a,b;c;x], and monotonicity audits of the gamma
//! quotient that controls the quadratic error bound.

// `!(x > y)` is used on purpose so that NaN fails validation
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod contfrac;
mod error;
pub mod interp;
pub mod report;
pub mod specfun;

pub use error::{Error, Result};
pub use specfun::{EvalOptions, ParameterTriple};
