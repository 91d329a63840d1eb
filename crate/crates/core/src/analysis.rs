//! Monotonicity audit of the gamma quotient
//!
//! ```text
//! g(c) = Γ(c)Γ(c−4) / (Γ(c−a)Γ(c+a−1)),   c > 4
//! ```
//!
//! which controls the error bound of the Bailey-node quadratic
//! interpolant. The decrease of g in c is known for 1 < a < 4 and
//! −3 < a < 0; for 0 ≤ a ≤ 1 it is only conjectured, so the scan here
//! reports evidence and never treats a violation as an error.
//!
//! Each grid point is checked twice: by the sign of the forward
//! difference of ln g along the c grid, and by the sign of
//! ψ(c) + ψ(c−4) − ψ(c−a) − ψ(c+a−1). Disagreement between the two
//! points at a numerical problem, not a counterexample.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::interp::error_bound_q1;
use crate::report::fmt_full;
use crate::specfun::{digamma, log_gamma};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(x: f64) -> Sign {
        if x < 0.0 {
            Sign::Negative
        } else if x > 0.0 {
            Sign::Positive
        } else {
            Sign::Zero
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        }
    }
}

fn check_point(a: f64, c: f64) -> Result<()> {
    if c.is_nan() || c <= 4.0 {
        return Err(Error::domain(format!(
            "g(a, c) requires c > 4, got c = {c}"
        )));
    }
    if !(c - a > 0.0 && c + a - 1.0 > 0.0) {
        return Err(Error::domain(format!(
            "g(a, c) requires c - a > 0 and c + a - 1 > 0, got a = {a}, c = {c}"
        )));
    }
    Ok(())
}

fn log_g(a: f64, c: f64) -> Result<f64> {
    check_point(a, c)?;
    Ok(log_gamma(c)? + log_gamma(c - 4.0)? - log_gamma(c - a)? - log_gamma(c + a - 1.0)?)
}

/// g(a, c) = Γ(c)Γ(c−4) / (Γ(c−a)Γ(c+a−1)), evaluated in log space.
pub fn gamma_quotient_g(a: f64, c: f64) -> Result<f64> {
    Ok(log_g(a, c)?.exp())
}

/// g′(c)/g(c) = ψ(c) + ψ(c−4) − ψ(c−a) − ψ(c+a−1).
pub fn log_derivative(a: f64, c: f64) -> Result<f64> {
    check_point(a, c)?;
    Ok(digamma(c)? + digamma(c - 4.0)? - digamma(c - a)? - digamma(c + a - 1.0)?)
}

pub fn log_derivative_sign(a: f64, c: f64) -> Result<Sign> {
    Ok(Sign::of(log_derivative(a, c)?))
}

/// Ranges of a where the decrease of g in c is proved.
pub fn in_proved_range(a: f64) -> bool {
    (a > 1.0 && a < 4.0) || (a > -3.0 && a < 0.0)
}

/// Range of a covered only by the conjecture.
pub fn in_conjecture_range(a: f64) -> bool {
    (0.0..=1.0).contains(&a)
}

/// `start, start + step, …` up to `stop` inclusive (within half a step).
pub fn grid(start: f64, stop: f64, step: f64) -> Result<Vec<f64>> {
    if step.is_nan() || step <= 0.0 || stop.is_nan() || start.is_nan() || stop < start {
        return Err(Error::domain(format!(
            "grid needs step > 0 and stop >= start, got {start}..{stop} step {step}"
        )));
    }
    let n = ((stop - start) / step + 0.5).floor() as usize;
    Ok((0..=n).map(|i| start + i as f64 * step).collect())
}

/// Grid of a ∈ {0, 0.05, …, 1}.
pub fn default_a_grid() -> Vec<f64> {
    (0..=20).map(|i| i as f64 * 0.05).collect()
}

/// Grid of c ∈ {4.05, 4.10, …, 30}.
pub fn default_c_grid() -> Vec<f64> {
    (0..=519).map(|j| 4.05 + j as f64 * 0.05).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Verdict {
    MonotoneDecreasing,
    /// Both checks agree that g does not decrease at this c.
    Violated {
        c: f64,
    },
    /// Finite-difference and digamma signs disagree at this c.
    Disagreement {
        c: f64,
    },
}

impl Verdict {
    pub fn is_clean(&self) -> bool {
        matches!(self, Verdict::MonotoneDecreasing)
    }
}

/// Scan of g over an (a, c) grid. Rows are indexed by a, columns by c.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport {
    pub a_grid: Vec<f64>,
    pub c_grid: Vec<f64>,
    pub g_values: Vec<Vec<f64>>,
    /// Sign of the finite difference of ln g at each point; `None` when
    /// the c grid has a single column.
    pub fd_signs: Vec<Vec<Option<Sign>>>,
    pub digamma_signs: Vec<Vec<Sign>>,
    pub verdicts: Vec<Verdict>,
}

impl ScanReport {
    /// (a, verdict) pairs that are not clean.
    pub fn anomalies(&self) -> Vec<(f64, Verdict)> {
        self.a_grid
            .iter()
            .zip(&self.verdicts)
            .filter(|(_, v)| !v.is_clean())
            .map(|(&a, &v)| (a, v))
            .collect()
    }

    pub fn is_clean(&self) -> bool {
        self.verdicts.iter().all(Verdict::is_clean)
    }

    /// Headered CSV: a, c, g, fd_slope_sign, digamma_sign. A missing
    /// finite difference is written as `na`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("a,c,g,fd_slope_sign,digamma_sign\n");
        for (i, &a) in self.a_grid.iter().enumerate() {
            for (j, &c) in self.c_grid.iter().enumerate() {
                let fd = self.fd_signs[i][j].map_or("na", |s| s.as_str());
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    fmt_full(a),
                    fmt_full(c),
                    fmt_full(self.g_values[i][j]),
                    fd,
                    self.digamma_signs[i][j].as_str()
                );
            }
        }
        out
    }
}

fn check_increasing(name: &str, xs: &[f64]) -> Result<()> {
    if xs.is_empty() {
        return Err(Error::domain(format!("{name} grid is empty")));
    }
    if xs.windows(2).any(|w| w[1].is_nan() || w[1] <= w[0]) {
        return Err(Error::domain(format!(
            "{name} grid must be strictly increasing"
        )));
    }
    Ok(())
}

/// Evaluates g on the grid and records, per a, whether g decreases in c.
pub fn conjecture_scan(a_grid: &[f64], c_grid: &[f64]) -> Result<ScanReport> {
    check_increasing("a", a_grid)?;
    check_increasing("c", c_grid)?;
    if a_grid[0] < -3.0 || a_grid[a_grid.len() - 1] > 4.0 {
        return Err(Error::domain("a grid must lie in [-3, 4]"));
    }
    if !(c_grid[0] > 4.0) {
        return Err(Error::domain("c grid must lie in (4, inf)"));
    }

    let mut report = ScanReport {
        a_grid: a_grid.to_vec(),
        c_grid: c_grid.to_vec(),
        g_values: Vec::with_capacity(a_grid.len()),
        fd_signs: Vec::with_capacity(a_grid.len()),
        digamma_signs: Vec::with_capacity(a_grid.len()),
        verdicts: Vec::with_capacity(a_grid.len()),
    };

    for &a in a_grid {
        let logs = c_grid
            .iter()
            .map(|&c| log_g(a, c))
            .collect::<Result<Vec<_>>>()?;
        let digs = c_grid
            .iter()
            .map(|&c| log_derivative_sign(a, c))
            .collect::<Result<Vec<_>>>()?;
        let n = logs.len();
        let fds: Vec<Option<Sign>> = (0..n)
            .map(|j| match n {
                1 => None,
                _ if j + 1 < n => Some(Sign::of(logs[j + 1] - logs[j])),
                _ => Some(Sign::of(logs[j] - logs[j - 1])),
            })
            .collect();

        let mut verdict = Verdict::MonotoneDecreasing;
        for (j, &c) in c_grid.iter().enumerate() {
            if let Some(fd) = fds[j] {
                if fd != digs[j] {
                    verdict = Verdict::Disagreement { c };
                    break;
                }
            }
            if digs[j] != Sign::Negative {
                verdict = Verdict::Violated { c };
                break;
            }
        }

        report.g_values.push(logs.iter().map(|l| l.exp()).collect());
        report.fd_signs.push(fds);
        report.digamma_signs.push(digs);
        report.verdicts.push(verdict);
    }
    Ok(report)
}

/// Bound of the Bailey-node quadratic interpolant along a c grid.
#[derive(Debug, Clone, PartialEq)]
pub struct DecayReport {
    pub a: f64,
    /// (c, bound) pairs.
    pub rows: Vec<(f64, f64)>,
}

impl DecayReport {
    pub fn is_nonincreasing(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].1 <= w[0].1)
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].1 < w[0].1)
    }
}

/// Tabulates the q1 error bound for fixed a as c increases.
pub fn error_decay_report(a: f64, c_grid: &[f64]) -> Result<DecayReport> {
    check_increasing("c", c_grid)?;
    let rows = c_grid
        .iter()
        .map(|&c| Ok((c, error_bound_q1(a, c)?.bound)))
        .collect::<Result<Vec<_>>>()?;
    Ok(DecayReport { a, rows })
}
