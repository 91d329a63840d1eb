//! Reference implementations used only by tests. None of these call into
//! the library, so agreement with it is evidence rather than tautology.

#![allow(dead_code)]

use std::f64::consts::PI;

/// ₂F₁ by plain term recurrence, stopping once five consecutive terms
/// fall below 1e−18 of the running sum. The stored terms are then summed
/// from the smallest up, which keeps rounding error low without
/// compensation.
pub fn naive_2f1(a: f64, b: f64, c: f64, x: f64, max_terms: usize) -> f64 {
    let mut terms = vec![1.0f64];
    let (mut t, mut running, mut small) = (1.0f64, 1.0f64, 0);
    for n in 0..max_terms {
        let n = n as f64;
        t *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x;
        if t == 0.0 {
            break;
        }
        terms.push(t);
        running += t;
        if t.abs() <= 1e-18 * running.abs() {
            small += 1;
            if small >= 5 {
                break;
            }
        } else {
            small = 0;
        }
    }
    terms.iter().rev().sum()
}

/// Exactly `n_terms` terms of the series (fewer if it terminates), summed
/// smallest first. Used at x = 1 where the tail is bounded analytically.
pub fn naive_2f1_long(a: f64, b: f64, c: f64, x: f64, n_terms: usize) -> f64 {
    let mut terms = Vec::with_capacity(n_terms + 1);
    let mut t = 1.0f64;
    terms.push(t);
    for n in 0..n_terms {
        let n = n as f64;
        t *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x;
        if t == 0.0 {
            break;
        }
        terms.push(t);
    }
    terms.iter().rev().sum()
}

/// ln Γ(x) for x > 0 via upward shift and the Stirling series.
pub fn stirling_lgamma(x: f64) -> f64 {
    assert!(x > 0.0);
    let mut x = x;
    let mut shift = 0.0;
    while x < 20.0 {
        shift += x.ln();
        x += 1.0;
    }
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let series = inv
        * (1.0 / 12.0
            - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 * (1.0 / 1680.0 - inv2 / 1188.0))));
    (x - 0.5) * x.ln() - x + 0.5 * (2.0 * PI).ln() + series - shift
}

/// Γ-ratio by the Stirling oracle for positive arguments only.
pub fn stirling_gamma_ratio(num: &[f64], den: &[f64]) -> f64 {
    let s: f64 = num.iter().map(|&v| stirling_lgamma(v)).sum::<f64>()
        - den.iter().map(|&v| stirling_lgamma(v)).sum::<f64>();
    s.exp()
}

/// Γ(x) for any non-integer real x: Stirling for x > 0, reflection
/// Γ(x) = π / (sin(πx) Γ(1−x)) otherwise.
pub fn signed_gamma(x: f64) -> f64 {
    if x > 0.0 {
        stirling_lgamma(x).exp()
    } else {
        PI / ((PI * x).sin() * stirling_lgamma(1.0 - x).exp())
    }
}

pub fn signed_gamma_ratio(num: &[f64], den: &[f64]) -> f64 {
    num.iter().map(|&v| signed_gamma(v)).product::<f64>()
        / den.iter().map(|&v| signed_gamma(v)).product::<f64>()
}

pub fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(f64::MIN_POSITIVE)
}

/// Uniform grid of `n` points on [0, 1].
pub fn unit_grid(n: usize) -> Vec<f64> {
    (0..n).map(|i| i as f64 / (n - 1) as f64).collect()
}
