//! Special-function kernels for ₂F₁ on [0, 1].
//!
//! | Function | Value |
//! |----------|-------|
//! | [`log_gamma`], [`gamma_signed`] | ln Γ, and Γ with explicit sign |
//! | [`digamma`] | ψ = Γ′/Γ |
//! | [`pochhammer`] | (a)_n |
//! | [`hyp2f1`] | series on [0, 1), Gauss value at 1 |
//! | [`bailey_half`], [`quadratic_transform_half`] | closed forms at x = ½ |
//! | [`kummer_minus_one`], [`pfaff_transform`] | the x = −1 route to x = ½ |
//!
//! All functions are pure and thread-safe.

mod gamma;
mod identities;
mod series;

pub use gamma::{
    cos_pi, digamma, gamma_ratio, gamma_signed, is_nonpositive_integer, legendre_duplication_check,
    log_gamma, pochhammer, sin_pi, LN_SQRT_PI,
};
pub use identities::{
    bailey_half, gamma_form_at_one, kummer_minus_one, pfaff_transform, quadratic_transform_half,
    reflection_form_at_one, COSINE_POLE_EPS,
};
pub use series::{
    gauss_value_at_one, hyp2f1, hyp2f1_derivative, hyp2f1_series, EvalOptions, ParameterTriple,
};
