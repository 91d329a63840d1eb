//! Gamma-family kernels: ln Γ, signed Γ for negative arguments, ψ, and
//! the Pochhammer symbol.
//!
//! Everything that multiplies or divides gamma values works in log space
//! with an explicit sign so that ratios with large arguments do not
//! overflow.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// ln √π, the value of ln Γ(1/2).
pub const LN_SQRT_PI: f64 = 0.572_364_942_924_700_087_071_713_675_677;

/// `true` for 0, −1, −2, … (the poles of Γ).
pub fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

/// sin(πx) with exact argument reduction modulo 2.
pub fn sin_pi(x: f64) -> f64 {
    if x < 0.0 {
        return -sin_pi(-x);
    }
    let mut r = x % 2.0;
    let mut sign = 1.0;
    if r > 1.0 {
        r -= 1.0;
        sign = -1.0;
    }
    if r > 0.5 {
        r = 1.0 - r;
    }
    sign * (PI * r).sin()
}

/// cos(πx) with exact argument reduction modulo 2.
pub fn cos_pi(x: f64) -> f64 {
    let mut r = x.abs() % 2.0;
    if r > 1.0 {
        r = 2.0 - r;
    }
    if r == 0.5 {
        0.0
    } else if r < 0.25 {
        (PI * r).cos()
    } else if r < 0.75 {
        (PI * (0.5 - r)).sin()
    } else {
        -(PI * (1.0 - r)).cos()
    }
}

/// ln Γ(x) for x > 0.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("log_gamma requires x > 0, got {x}")));
    }
    Ok(libm::lgamma(x))
}

/// Γ(x) as `(ln|Γ(x)|, sign)` for any real x that is not a pole.
///
/// Arguments below 1/2 go through Γ(x)Γ(1−x) = π / sin(πx).
pub fn gamma_signed(x: f64) -> Result<(f64, f64)> {
    if !x.is_finite() {
        return Err(Error::domain(format!("gamma of non-finite argument {x}")));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::pole(format!("gamma pole at {x}")));
    }
    if x >= 0.5 {
        return Ok((libm::lgamma(x), 1.0));
    }
    let s = sin_pi(x);
    let log_abs = PI.ln() - s.abs().ln() - libm::lgamma(1.0 - x);
    Ok((log_abs, s.signum()))
}

/// Γ(num₀)Γ(num₁)⋯ / (Γ(den₀)Γ(den₁)⋯) evaluated in log space.
///
/// A pole in the numerator is an error. A pole in the denominator makes
/// the whole ratio zero, since 1/Γ is entire.
pub fn gamma_ratio(num: &[f64], den: &[f64]) -> Result<f64> {
    if den.iter().any(|&x| is_nonpositive_integer(x)) {
        for &x in num {
            gamma_signed(x)?;
        }
        return Ok(0.0);
    }
    let mut log_abs = 0.0;
    let mut sign = 1.0;
    for &x in num {
        let (l, s) = gamma_signed(x)?;
        log_abs += l;
        sign *= s;
    }
    for &x in den {
        let (l, s) = gamma_signed(x)?;
        log_abs -= l;
        sign *= s;
    }
    Ok(sign * log_abs.exp())
}

/// Residual of Γ(c/2)Γ((1+c)/2) = 2^{1−c}√π Γ(c), measured in log space
/// as |lhs − rhs| / max(1, |rhs|).
pub fn legendre_duplication_check(c: f64) -> Result<f64> {
    if !(c > 0.0) {
        return Err(Error::domain(format!(
            "duplication check requires c > 0, got {c}"
        )));
    }
    let lhs = log_gamma(0.5 * c)? + log_gamma(0.5 * (1.0 + c))?;
    let rhs = (1.0 - c) * std::f64::consts::LN_2 + LN_SQRT_PI + log_gamma(c)?;
    Ok((lhs - rhs).abs() / rhs.abs().max(1.0))
}

// B_{2k} / (2k), k = 1..7
const DIGAMMA_ASYMPTOTIC: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
];

/// Digamma ψ(x) = Γ′(x)/Γ(x) for x > 0.
///
/// Shifts x above 10 with ψ(x) = ψ(x+1) − 1/x, then sums the asymptotic
/// expansion ln x − 1/(2x) − Σ B_{2k}/(2k x^{2k}).
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("digamma requires x > 0, got {x}")));
    }
    let mut x = x;
    let mut shift = 0.0;
    while x < 10.0 {
        shift += 1.0 / x;
        x += 1.0;
    }
    let inv2 = 1.0 / (x * x);
    let mut poly = 0.0;
    for &coef in DIGAMMA_ASYMPTOTIC.iter().rev() {
        poly = poly * inv2 + coef;
    }
    Ok(x.ln() - 0.5 / x - poly * inv2 - shift)
}

/// Shifted factorial (a)_n = a(a+1)⋯(a+n−1), with (a)_0 = 1.
pub fn pochhammer(a: f64, n: u32) -> f64 {
    (0..n).fold(1.0, |acc, k| acc * (a + k as f64))
}
