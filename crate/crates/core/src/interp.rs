//! Linear and quadratic interpolants of ₂F₁ on the nodes {0, 1} and
//! {0, ½, 1}, with their a-priori error bounds.
//!
//! Node values never come from summing the series near x = 1: f(1) is
//! always a Gauss (or trigonometric) closed form, and f(½) comes from
//! whichever identity fits the parameter family:
//!
//! * [`linear_interpolant`]: f(0) = 1, f(1) from Gauss summation.
//! * [`quadratic_interpolant_q1`]: ₂F₁[a, 1−a; c; x], f(½) from Bailey's
//!   identity.
//! * [`quadratic_interpolant_q2`]: ₂F₁[a, b; (a+b+1)/2; x], f(½) from the
//!   quadratic transformation, f(1) in cosine form.
//! * [`quadratic_interpolant_q2_kummer`]: same function, f(½) through the
//!   Pfaff transformation and Kummer's value at −1.

use std::fmt;

use crate::error::{Error, Result};
use crate::specfun::{
    bailey_half, gamma_form_at_one, gamma_ratio, gauss_value_at_one, hyp2f1, kummer_minus_one,
    pochhammer, quadratic_transform_half, reflection_form_at_one, EvalOptions, ParameterTriple,
};

/// c0 + c1·x + c2·x². A linear polynomial has c2 = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Poly2 {
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
}

impl Poly2 {
    pub fn new(c0: f64, c1: f64, c2: f64) -> Self {
        Poly2 { c0, c1, c2 }
    }

    pub fn linear(c0: f64, c1: f64) -> Self {
        Poly2 { c0, c1, c2: 0.0 }
    }

    pub fn constant(c0: f64) -> Self {
        Poly2 {
            c0,
            c1: 0.0,
            c2: 0.0,
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.c2 * x + self.c1) * x + self.c0
    }

    pub fn derivative(&self, x: f64) -> f64 {
        2.0 * self.c2 * x + self.c1
    }

    pub fn is_linear(&self) -> bool {
        self.c2 == 0.0
    }

    /// Monomial coefficients of the Lagrange interpolant through `nodes`.
    pub fn interpolate(nodes: &NodeSet) -> Self {
        let xs = nodes.nodes();
        let mut out = Poly2::constant(0.0);
        for (i, (&xi, &fi)) in xs.iter().zip(nodes.values()).enumerate() {
            // L_i as a monic product over the other nodes, scaled by 1/denom
            let others: Vec<f64> = xs
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &x)| x)
                .collect();
            let denom: f64 = others.iter().map(|&xj| xi - xj).product();
            let w = fi / denom;
            match others.as_slice() {
                [x1] => {
                    out.c1 += w;
                    out.c0 -= w * x1;
                }
                [x1, x2] => {
                    out.c2 += w;
                    out.c1 -= w * (x1 + x2);
                    out.c0 += w * x1 * x2;
                }
                _ => unreachable!("NodeSet holds two or three nodes"),
            }
        }
        out
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·x + {}·x²", self.c0, self.c1, self.c2)
    }
}

/// Identity used to obtain a node value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeSource {
    Series,
    GaussOne,
    Bailey,
    QuadTransform,
    ReflectionForm,
    KummerPfaff,
}

impl NodeSource {
    pub fn as_str(&self) -> &'static str {
        match self {
            NodeSource::Series => "series",
            NodeSource::GaussOne => "gauss_one",
            NodeSource::Bailey => "bailey",
            NodeSource::QuadTransform => "quad_transform",
            NodeSource::ReflectionForm => "reflection_form",
            NodeSource::KummerPfaff => "kummer_pfaff",
        }
    }
}

/// Interpolation nodes with their function values and provenance.
///
/// Holds two or three distinct nodes, the first of which is x = 0 with
/// f(0) = 1.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeSet {
    nodes: Vec<f64>,
    values: Vec<f64>,
    sources: Vec<NodeSource>,
}

impl NodeSet {
    pub fn new(nodes: Vec<f64>, values: Vec<f64>, sources: Vec<NodeSource>) -> Result<Self> {
        if !(2..=3).contains(&nodes.len()) {
            return Err(Error::domain(format!(
                "need 2 or 3 nodes, got {}",
                nodes.len()
            )));
        }
        if values.len() != nodes.len() || sources.len() != nodes.len() {
            return Err(Error::domain("nodes, values and sources differ in length"));
        }
        if nodes[0] != 0.0 || values[0] != 1.0 {
            return Err(Error::domain("first node must be x = 0 with f(0) = 1"));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::domain(format!("non-finite node value {v}")));
        }
        lagrange_basis(&nodes, 0.0)?;
        Ok(NodeSet {
            nodes,
            values,
            sources,
        })
    }

    /// {0, 1} with f(1) given.
    pub fn linear(f1: f64, source: NodeSource) -> Result<Self> {
        NodeSet::new(
            vec![0.0, 1.0],
            vec![1.0, f1],
            vec![NodeSource::Series, source],
        )
    }

    /// {0, ½, 1} with f(½) and f(1) given.
    pub fn quadratic(half: (f64, NodeSource), one: (f64, NodeSource)) -> Result<Self> {
        NodeSet::new(
            vec![0.0, 0.5, 1.0],
            vec![1.0, half.0, one.0],
            vec![NodeSource::Series, half.1, one.1],
        )
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn sources(&self) -> &[NodeSource] {
        &self.sources
    }
}

/// Lagrange fundamental polynomials L_i(x) for pairwise-distinct nodes.
pub fn lagrange_basis(nodes: &[f64], x: f64) -> Result<Vec<f64>> {
    for (i, &xi) in nodes.iter().enumerate() {
        if nodes[..i].contains(&xi) {
            return Err(Error::domain(format!("duplicate interpolation node {xi}")));
        }
    }
    Ok(nodes
        .iter()
        .enumerate()
        .map(|(i, &xi)| {
            nodes
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &xj)| (x - xj) / (xi - xj))
                .product()
        })
        .collect())
}

/// max |x(x−½)(x−1)| over [0, 1], attained at x = ½ ± √3/6.
pub fn node_polynomial_max() -> f64 {
    1.0 / (12.0 * 3f64.sqrt())
}

/// Which estimate produced an [`ErrorBound`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// |f − P_l| for general (a, b, c).
    Linear,
    /// |f − P_q| for general (a, b, c), any quadratic on {0, ½, 1}.
    Quadratic,
    /// |f − P_q1| for ₂F₁[a, 1−a; c; x].
    QuadraticBailey,
    /// |f − P_q2| for ₂F₁[a, b; (a+b+1)/2; x].
    QuadraticHalfSum,
}

/// Hypotheses that were checked before the bound was evaluated.
#[derive(Debug, Clone, PartialEq)]
pub struct Validity {
    pub kind: BoundKind,
    pub conditions: &'static [&'static str],
}

/// A-priori bound on max_{x∈[0,1]} |f(x) − P(x)|.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorBound {
    pub bound: f64,
    /// The interpolant is exact for these parameters.
    pub vanishes: bool,
    pub validity: Validity,
}

impl ErrorBound {
    fn new(
        bound: f64,
        vanishes: bool,
        kind: BoundKind,
        conditions: &'static [&'static str],
    ) -> Self {
        let bound = if vanishes { 0.0 } else { bound.abs() };
        ErrorBound {
            bound,
            vanishes,
            validity: Validity { kind, conditions },
        }
    }
}

fn is_one_of(x: f64, set: &[f64]) -> bool {
    set.contains(&x)
}

/// Nodes {0, 1} for P_l.
pub fn linear_nodes(p: &ParameterTriple) -> Result<NodeSet> {
    NodeSet::linear(gauss_value_at_one(p)?, NodeSource::GaussOne)
}

/// P_l(x) = 1 + (f(1) − 1)x, requires c − a − b > 0.
pub fn linear_interpolant(p: &ParameterTriple) -> Result<Poly2> {
    let f1 = gauss_value_at_one(p)?;
    Ok(Poly2::linear(1.0, f1 - 1.0))
}

/// |f − P_l| ≤ |a(a+1)b(b+1)|/8 · Γ(c)Γ(c−a−b−2) / (Γ(c−a)Γ(c−b))
/// for a, b, c > −2 and c − a − b > 2.
pub fn linear_error_bound(p: &ParameterTriple) -> Result<ErrorBound> {
    const CONDITIONS: &[&str] = &["a > -2", "b > -2", "c > -2", "c - a - b > 2"];
    let (a, b, c) = (p.a(), p.b(), p.c());
    if !(a > -2.0 && b > -2.0 && c > -2.0) {
        return Err(Error::constraint(format!(
            "linear bound requires a, b, c > -2, got ({a}, {b}, {c})"
        )));
    }
    if !(c - a - b > 2.0) {
        return Err(Error::constraint(format!(
            "linear bound requires c - a - b > 2, got {}",
            c - a - b
        )));
    }
    if is_one_of(a, &[0.0, -1.0]) || is_one_of(b, &[0.0, -1.0]) {
        return Ok(ErrorBound::new(0.0, true, BoundKind::Linear, CONDITIONS));
    }
    let prefactor = (pochhammer(a, 2) * pochhammer(b, 2)).abs() / 8.0;
    let ratio = gamma_ratio(&[c, c - a - b - 2.0], &[c - a, c - b])?;
    Ok(ErrorBound::new(
        prefactor * ratio,
        false,
        BoundKind::Linear,
        CONDITIONS,
    ))
}

/// Nodes {0, ½, 1} for a general triple, with f(½) from the series.
pub fn quadratic_nodes(p: &ParameterTriple, opts: &EvalOptions) -> Result<NodeSet> {
    NodeSet::quadratic(
        (hyp2f1(p, 0.5, opts)?, NodeSource::Series),
        (gauss_value_at_one(p)?, NodeSource::GaussOne),
    )
}

/// Quadratic interpolant of a general ₂F₁[a,b;c;x] on {0, ½, 1}.
pub fn quadratic_interpolant(p: &ParameterTriple, opts: &EvalOptions) -> Result<Poly2> {
    Ok(Poly2::interpolate(&quadratic_nodes(p, opts)?))
}

/// Monomial coefficients of the quadratic through (0, 1), (½, h), (1, g).
fn quadratic_from_values(half: f64, one: f64) -> Poly2 {
    Poly2::new(1.0, 4.0 * half - one - 3.0, 2.0 - 4.0 * half + 2.0 * one)
}

/// Nodes {0, ½, 1} of ₂F₁[a, 1−a; c; x].
pub fn q1_nodes(a: f64, c: f64) -> Result<NodeSet> {
    if !(c > 1.0) {
        return Err(Error::constraint(format!("P_q1 requires c > 1, got {c}")));
    }
    let half = bailey_half(a, c)?;
    let one = gauss_value_at_one(&ParameterTriple::new(a, 1.0 - a, c)?)?;
    NodeSet::quadratic((half, NodeSource::Bailey), (one, NodeSource::GaussOne))
}

/// Quadratic interpolant of ₂F₁[a, 1−a; c; x] for c > 1:
/// (2 − 4B + 2G)x² + (4B − G − 3)x + 1, with B = f(½), G = f(1).
pub fn quadratic_interpolant_q1(a: f64, c: f64) -> Result<Poly2> {
    let nodes = q1_nodes(a, c)?;
    Ok(quadratic_from_values(nodes.values[1], nodes.values[2]))
}

fn check_half_sum_family(a: f64, b: f64) -> Result<()> {
    if !(a + b < 1.0) {
        return Err(Error::constraint(format!(
            "requires a + b < 1, got {}",
            a + b
        )));
    }
    Ok(())
}

/// f(1) of ₂F₁[a, b; (a+b+1)/2; x]: cosine form, or the Γ-ratio form when
/// cos(π(a+b)/2) is too close to zero.
fn half_sum_value_at_one(a: f64, b: f64) -> Result<(f64, NodeSource)> {
    match reflection_form_at_one(a, b) {
        Ok(v) => Ok((v, NodeSource::ReflectionForm)),
        Err(Error::Pole(_)) => Ok((gamma_form_at_one(a, b)?, NodeSource::GaussOne)),
        Err(e) => Err(e),
    }
}

/// Nodes {0, ½, 1} of ₂F₁[a, b; (a+b+1)/2; x] via the quadratic
/// transformation.
pub fn q2_nodes(a: f64, b: f64) -> Result<NodeSet> {
    check_half_sum_family(a, b)?;
    let half = quadratic_transform_half(a, b)?;
    NodeSet::quadratic(
        (half, NodeSource::QuadTransform),
        half_sum_value_at_one(a, b)?,
    )
}

/// Quadratic interpolant of ₂F₁[a, b; (a+b+1)/2; x] for a + b < 1,
/// a + b ∉ {−1, −3, …}.
pub fn quadratic_interpolant_q2(a: f64, b: f64) -> Result<Poly2> {
    let nodes = q2_nodes(a, b)?;
    Ok(quadratic_from_values(nodes.values[1], nodes.values[2]))
}

/// Nodes for the same family obtained through Pfaff's transformation and
/// Kummer's value: f(½) = 2^a ₂F₁[a, c−b; c; −1]. Adds the constraint
/// a − b < 1.
pub fn q2_kummer_nodes(a: f64, b: f64) -> Result<NodeSet> {
    check_half_sum_family(a, b)?;
    if !(a - b < 1.0) {
        return Err(Error::constraint(format!(
            "Kummer route requires a - b < 1, got {}",
            a - b
        )));
    }
    let c = 0.5 * (a + b + 1.0);
    ParameterTriple::new(a, b, c)?;
    let half = 2f64.powf(a) * kummer_minus_one(a, c - b)?;
    NodeSet::quadratic(
        (half, NodeSource::KummerPfaff),
        half_sum_value_at_one(a, b)?,
    )
}

pub fn quadratic_interpolant_q2_kummer(a: f64, b: f64) -> Result<Poly2> {
    let nodes = q2_kummer_nodes(a, b)?;
    Ok(quadratic_from_values(nodes.values[1], nodes.values[2]))
}

/// |f − P_q| ≤ (M/6)|(a)₃(b)₃| Γ(c)Γ(c−a−b−3) / (Γ(c−a)Γ(c−b)) for
/// a, b, c > −3 and c − a − b > 3, with M = [`node_polynomial_max`].
pub fn quadratic_error_bound(p: &ParameterTriple) -> Result<ErrorBound> {
    const CONDITIONS: &[&str] = &["a > -3", "b > -3", "c > -3", "c - a - b > 3"];
    let (a, b, c) = (p.a(), p.b(), p.c());
    if !(a > -3.0 && b > -3.0 && c > -3.0) {
        return Err(Error::constraint(format!(
            "quadratic bound requires a, b, c > -3, got ({a}, {b}, {c})"
        )));
    }
    if !(c - a - b > 3.0) {
        return Err(Error::constraint(format!(
            "quadratic bound requires c - a - b > 3, got {}",
            c - a - b
        )));
    }
    const ZEROS: [f64; 3] = [0.0, -1.0, -2.0];
    if is_one_of(a, &ZEROS) || is_one_of(b, &ZEROS) {
        return Ok(ErrorBound::new(0.0, true, BoundKind::Quadratic, CONDITIONS));
    }
    let prefactor = node_polynomial_max() / 6.0 * (pochhammer(a, 3) * pochhammer(b, 3)).abs();
    let ratio = gamma_ratio(&[c, c - a - b - 3.0], &[c - a, c - b])?;
    Ok(ErrorBound::new(
        prefactor * ratio,
        false,
        BoundKind::Quadratic,
        CONDITIONS,
    ))
}

/// Bound for P_q1 (b = 1 − a): −3 < a < 4 and c > 4.
pub fn error_bound_q1(a: f64, c: f64) -> Result<ErrorBound> {
    const CONDITIONS: &[&str] = &["-3 < a < 4", "c > 4"];
    if !(a > -3.0 && a < 4.0) {
        return Err(Error::constraint(format!(
            "E_q1 bound requires -3 < a < 4, got {a}"
        )));
    }
    if !(c > 4.0) {
        return Err(Error::constraint(format!(
            "E_q1 bound requires c > 4, got {c}"
        )));
    }
    if is_one_of(a, &[-2.0, -1.0, 0.0, 1.0, 2.0, 3.0]) {
        return Ok(ErrorBound::new(
            0.0,
            true,
            BoundKind::QuadraticBailey,
            CONDITIONS,
        ));
    }
    let poly = a * (a + 1.0) * (a + 2.0) * (1.0 - a) * (2.0 - a) * (3.0 - a);
    let ratio = gamma_ratio(&[c, c - 4.0], &[c - a, c + a - 1.0])?;
    Ok(ErrorBound::new(
        node_polynomial_max() / 6.0 * poly.abs() * ratio,
        false,
        BoundKind::QuadraticBailey,
        CONDITIONS,
    ))
}

/// Bound for P_q2 (c = (a+b+1)/2): −7 < a + b < −5 and a, b ≥ −3.
///
/// The restriction a, b ≥ −3 comes from the general quadratic bound this
/// one specialises: the estimate of f‴ by its value at x = 1 needs the
/// coefficients of ₂F₁[a+3, b+3; c+3; x] to be nonnegative. Without it
/// the formula is not a bound; at (a, b) = (−2.35, −3.37) the true error
/// is about 20 times the formula. Vanishing cases return 0 regardless,
/// since the interpolant is then exact.
///
/// Some of the gamma arguments are negative here; the magnitude of the
/// signed quotient is used.
pub fn error_bound_q2(a: f64, b: f64) -> Result<ErrorBound> {
    const CONDITIONS: &[&str] = &["-7 < a + b < -5", "a >= -3", "b >= -3"];
    let s = a + b;
    if !(s > -7.0 && s < -5.0) {
        return Err(Error::constraint(format!(
            "E_q2 bound requires -7 < a + b < -5, got {s}"
        )));
    }
    const ZEROS: [f64; 3] = [0.0, -1.0, -2.0];
    if is_one_of(a, &ZEROS) || is_one_of(b, &ZEROS) {
        return Ok(ErrorBound::new(
            0.0,
            true,
            BoundKind::QuadraticHalfSum,
            CONDITIONS,
        ));
    }
    if !(a >= -3.0 && b >= -3.0) {
        return Err(Error::constraint(format!(
            "E_q2 bound requires a, b >= -3, got ({a}, {b})"
        )));
    }
    Ok(ErrorBound::new(
        q2_formula(a, b)?,
        false,
        BoundKind::QuadraticHalfSum,
        CONDITIONS,
    ))
}

fn q2_formula(a: f64, b: f64) -> Result<f64> {
    let s = a + b;
    let prefactor = node_polynomial_max() / 6.0 * (pochhammer(a, 3) * pochhammer(b, 3)).abs();
    let ratio = gamma_ratio(
        &[0.5 * (s + 1.0), 0.5 * (-s - 5.0)],
        &[0.5 * (b - a + 1.0), 0.5 * (a - b + 1.0)],
    )?;
    Ok(prefactor * ratio.abs())
}
