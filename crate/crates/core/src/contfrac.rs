//! Gauss's continued fraction
//!
//! ```text
//! ₂F₁[a+1,b;c+1;x] / ₂F₁[a,b;c;x] = 1 / (1 + u₁x / (1 + u₂x / (1 + ⋯)))
//! ```
//!
//! and two interpolating approximations of the quotient on [0, 1]: the
//! straight line R_l through its end values, and the rational R_r formed
//! from the linear interpolants of numerator and denominator.

use crate::error::{Error, Result};
use crate::interp::Poly2;
use crate::specfun::{gamma_signed, gauss_value_at_one, is_nonpositive_integer, ParameterTriple};

pub const DEFAULT_DEPTH: usize = 40;
pub const DEFAULT_GRID: usize = 1001;

/// Replacement for an exactly vanishing denominator in the forward scheme.
const TINY: f64 = 1e-300;

/// Tolerance on |ln Γ(c) + ln Γ(c−a−b) − ln Γ(c−a) − ln Γ(c−b)| for the
/// coincidence test.
pub const COINCIDENCE_TOL: f64 = 1e-12;

/// Sup-norm errors closer than this are reported as a tie.
pub const TIE_TOL: f64 = 1e-10;

/// A parameter triple plus the number of partial quotients to keep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CfSpec {
    p: ParameterTriple,
    depth: usize,
}

impl CfSpec {
    pub fn new(p: ParameterTriple, depth: usize) -> Result<Self> {
        if depth == 0 {
            return Err(Error::domain("continued fraction depth must be at least 1"));
        }
        // the numerator triple (a+1, b, c+1)
        ParameterTriple::new(p.a() + 1.0, p.b(), p.c() + 1.0)?;
        Ok(CfSpec { p, depth })
    }

    pub fn params(&self) -> &ParameterTriple {
        &self.p
    }

    pub fn depth(&self) -> usize {
        self.depth
    }
}

/// Partial numerator coefficient u_n (n ≥ 1):
///
/// * u_{2k−1} = (a−c−k+1)(b+k−1) / ((c+2k−2)(c+2k−1))
/// * u_{2k}   = (b−c−k)(a+k) / ((c+2k−1)(c+2k))
pub fn cf_partial_coefficient(p: &ParameterTriple, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("partial coefficients are indexed from 1"));
    }
    let (a, b, c) = (p.a(), p.b(), p.c());
    let (num, d0, d1) = if n % 2 == 1 {
        let k = n.div_ceil(2) as f64;
        (
            (a - c - (k - 1.0)) * (b + k - 1.0),
            c + 2.0 * k - 2.0,
            c + 2.0 * k - 1.0,
        )
    } else {
        let k = (n / 2) as f64;
        ((b - c - k) * (a + k), c + 2.0 * k - 1.0, c + 2.0 * k)
    };
    let den = d0 * d1;
    if den == 0.0 {
        return Err(Error::pole(format!(
            "zero denominator in partial coefficient {n}"
        )));
    }
    Ok(num / den)
}

fn check_argument(x: f64) -> Result<()> {
    if !(x.abs() < 1.0) {
        return Err(Error::domain(format!(
            "continued fraction requires |x| < 1, got {x}"
        )));
    }
    Ok(())
}

/// Truncated continued fraction, evaluated bottom-up from `spec.depth()`.
pub fn cf_eval(spec: &CfSpec, x: f64) -> Result<f64> {
    check_argument(x)?;
    let mut tail = 1.0;
    for n in (1..=spec.depth).rev() {
        tail = 1.0 + cf_partial_coefficient(&spec.p, n)? * x / tail;
        if tail == 0.0 {
            return Err(Error::Instability(format!(
                "denominator vanished at level {n} for x = {x}"
            )));
        }
    }
    Ok(1.0 / tail)
}

/// One step of the forward (modified Lentz) evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Convergent {
    /// Number of partial quotients included.
    pub depth: usize,
    pub value: f64,
    /// A vanishing intermediate denominator was replaced by a tiny value
    /// at this or an earlier depth.
    pub tiny_substituted: bool,
}

/// Successive convergents of the continued fraction, computed forward
/// with the modified Lentz scheme. Use this when the depth is not known
/// in advance.
#[derive(Debug, Clone)]
pub struct ForwardConvergents {
    p: ParameterTriple,
    x: f64,
    n: usize,
    // state for 1 + K(u_n x / 1)
    f: f64,
    c: f64,
    d: f64,
    flagged: bool,
}

impl ForwardConvergents {
    pub fn new(p: ParameterTriple, x: f64) -> Result<Self> {
        check_argument(x)?;
        Ok(ForwardConvergents {
            p,
            x,
            n: 0,
            f: 1.0,
            c: 1.0,
            d: 0.0,
            flagged: false,
        })
    }
}

impl Iterator for ForwardConvergents {
    type Item = Result<Convergent>;

    fn next(&mut self) -> Option<Self::Item> {
        self.n += 1;
        let an = match cf_partial_coefficient(&self.p, self.n) {
            Ok(u) => u * self.x,
            Err(e) => return Some(Err(e)),
        };
        let mut d = 1.0 + an * self.d;
        if d == 0.0 {
            d = TINY;
            self.flagged = true;
        }
        let mut c = 1.0 + an / self.c;
        if c == 0.0 {
            c = TINY;
            self.flagged = true;
        }
        self.d = 1.0 / d;
        self.c = c;
        self.f *= c * self.d;
        Some(Ok(Convergent {
            depth: self.n,
            value: 1.0 / self.f,
            tiny_substituted: self.flagged,
        }))
    }
}

/// Forward evaluation to a fixed depth.
pub fn cf_eval_forward(spec: &CfSpec, x: f64) -> Result<Convergent> {
    ForwardConvergents::new(spec.p, x)?
        .nth(spec.depth - 1)
        .expect("iterator is unbounded")
}

/// R_l(x) = 1 + b/(c−b)·x, the line through g(0) = 1 and g(1) = c/(c−b).
pub fn cf_linear_interpolant(p: &ParameterTriple) -> Result<Poly2> {
    let (a, b, c) = (p.a(), p.b(), p.c());
    if !(c - b > a) {
        return Err(Error::constraint(format!(
            "R_l requires c - b > a, got c - b = {}",
            c - b
        )));
    }
    if c - b == 0.0 {
        return Err(Error::constraint("R_l requires c != b"));
    }
    Ok(Poly2::linear(1.0, b / (c - b)))
}

/// Ratio of two linear polynomials.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RationalApprox {
    pub numerator: Poly2,
    pub denominator: Poly2,
}

impl RationalApprox {
    /// Both polynomials must be at most linear, and the denominator must
    /// not vanish on [0, 1].
    pub fn new(numerator: Poly2, denominator: Poly2) -> Result<Self> {
        if !numerator.is_linear() || !denominator.is_linear() {
            return Err(Error::domain(
                "rational approximant takes linear polynomials",
            ));
        }
        let (d0, d1) = (denominator.eval(0.0), denominator.eval(1.0));
        if d0 == 0.0 || d1 == 0.0 || d0.signum() != d1.signum() {
            return Err(Error::constraint(format!(
                "denominator vanishes on [0, 1] (values {d0} and {d1} at the ends)"
            )));
        }
        Ok(RationalApprox {
            numerator,
            denominator,
        })
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.numerator.eval(x) / self.denominator.eval(x)
    }
}

/// R_r(x) = P̃_l(x) / P_l(x), where P_l interpolates ₂F₁[a,b;c;x] and P̃_l
/// interpolates ₂F₁[a+1,b;c+1;x] at 0 and 1.
///
/// Both polynomials are divided through by Γ(c−a)Γ(c−b), so the
/// coefficients are 1 and f(1) − 1 (denominator), 1 and c f(1)/(c−b) − 1
/// (numerator), with f(1) the Gauss value.
pub fn cf_rational_interpolant(p: &ParameterTriple) -> Result<RationalApprox> {
    let (b, c) = (p.b(), p.c());
    let f1 = gauss_value_at_one(p)?;
    if c - b == 0.0 {
        return Err(Error::constraint("R_r requires c != b"));
    }
    RationalApprox::new(
        Poly2::linear(1.0, c / (c - b) * f1 - 1.0),
        Poly2::linear(1.0, f1 - 1.0),
    )
}

/// `true` iff Γ(c)Γ(c−a−b) = Γ(c−a)Γ(c−b), the condition under which
/// R_l and R_r are the same function.
pub fn coincidence_check(p: &ParameterTriple) -> Result<bool> {
    let (a, b, c) = (p.a(), p.b(), p.c());
    if !(c - a - b > 0.0) {
        return Err(Error::constraint(format!(
            "coincidence test requires c - a - b > 0, got {}",
            c - a - b
        )));
    }
    if is_nonpositive_integer(c - a) || is_nonpositive_integer(c - b) {
        // right-hand side is infinite, left-hand side finite
        return Ok(false);
    }
    let (l1, s1) = gamma_signed(c)?;
    let (l2, s2) = gamma_signed(c - a - b)?;
    let (l3, s3) = gamma_signed(c - a)?;
    let (l4, s4) = gamma_signed(c - b)?;
    Ok(s1 * s2 == s3 * s4 && (l1 + l2 - l3 - l4).abs() <= COINCIDENCE_TOL)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Winner {
    Linear,
    Rational,
    Tie,
}

impl Winner {
    pub fn as_str(&self) -> &'static str {
        match self {
            Winner::Linear => "R_l",
            Winner::Rational => "R_r",
            Winner::Tie => "tie",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonPoint {
    pub x: f64,
    /// Continued-fraction value (the Gauss limit c/(c−b) at x = 1).
    pub g: f64,
    pub r_l: f64,
    pub r_r: f64,
}

impl ComparisonPoint {
    pub fn err_l(&self) -> f64 {
        (self.r_l - self.g).abs()
    }

    pub fn err_r(&self) -> f64 {
        (self.r_r - self.g).abs()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CfComparison {
    pub points: Vec<ComparisonPoint>,
    pub sup_err_l: f64,
    pub sup_err_r: f64,
    pub winner: Winner,
}

/// Compares R_l and R_r against the depth-truncated continued fraction
/// on a uniform grid of `grid_size` points over [0, 1].
pub fn cf_compare(p: &ParameterTriple, depth: usize, grid_size: usize) -> Result<CfComparison> {
    if grid_size < 2 {
        return Err(Error::domain(format!(
            "grid needs at least 2 points, got {grid_size}"
        )));
    }
    let spec = CfSpec::new(*p, depth)?;
    let r_l = cf_linear_interpolant(p)?;
    let r_r = cf_rational_interpolant(p)?;
    let g_one = p.c() / (p.c() - p.b());

    let points = (0..grid_size)
        .map(|i| {
            let x = i as f64 / (grid_size - 1) as f64;
            let g = if i == grid_size - 1 {
                g_one
            } else {
                cf_eval(&spec, x)?
            };
            Ok(ComparisonPoint {
                x,
                g,
                r_l: r_l.eval(x),
                r_r: r_r.eval(x),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let sup_err_l = points
        .iter()
        .map(ComparisonPoint::err_l)
        .fold(0.0, f64::max);
    let sup_err_r = points
        .iter()
        .map(ComparisonPoint::err_r)
        .fold(0.0, f64::max);
    let winner = if (sup_err_l - sup_err_r).abs() <= TIE_TOL {
        Winner::Tie
    } else if sup_err_l < sup_err_r {
        Winner::Linear
    } else {
        Winner::Rational
    };
    Ok(CfComparison {
        points,
        sup_err_l,
        sup_err_r,
        winner,
    })
}
