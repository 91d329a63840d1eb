//! Power-series evaluation of ₂F₁[a,b;c;x] and its derivatives.

use crate::error::{Error, Result};

use super::gamma::{gamma_ratio, is_nonpositive_integer, pochhammer};

/// Real parameters (a, b, c) of ₂F₁[a,b;c;·].
///
/// Construction rejects c ∈ {0, −1, −2, …}, where the series is undefined.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParameterTriple {
    a: f64,
    b: f64,
    c: f64,
}

impl ParameterTriple {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::domain(format!(
                "non-finite parameters ({a}, {b}, {c})"
            )));
        }
        if is_nonpositive_integer(c) {
            return Err(Error::pole(format!("c = {c} is a non-positive integer")));
        }
        Ok(ParameterTriple { a, b, c })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// c − a − b > 0, the condition for a finite value at x = 1.
    pub fn gauss_summable(&self) -> bool {
        self.c - self.a - self.b > 0.0
    }

    /// (a+k, b+k, c+k), the triple of the k-th derivative.
    pub fn shifted(&self, k: u32) -> Result<Self> {
        let k = k as f64;
        ParameterTriple::new(self.a + k, self.b + k, self.c + k)
    }
}

/// Series termination controls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    /// Stop once two consecutive tail estimates (last term scaled by
    /// r/(1−r) for term ratio r) are ≤ tol·|partial sum|.
    pub tol: f64,
    pub max_terms: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            tol: 1e-14,
            max_terms: 1_000_000,
        }
    }
}

impl EvalOptions {
    pub fn new(tol: f64, max_terms: usize) -> Result<Self> {
        if !(tol > 0.0) {
            return Err(Error::domain(format!("tol must be positive, got {tol}")));
        }
        if max_terms == 0 {
            return Err(Error::domain("max_terms must be at least 1"));
        }
        Ok(EvalOptions { tol, max_terms })
    }
}

/// Neumaier-compensated accumulator.
#[derive(Debug, Default, Clone, Copy)]
struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    fn new(first: f64) -> Self {
        CompensatedSum {
            sum: first,
            comp: 0.0,
        }
    }

    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Degree of the polynomial when a or b is a non-positive integer.
fn terminating_degree(a: f64, b: f64) -> Option<u64> {
    [a, b]
        .into_iter()
        .filter(|&x| is_nonpositive_integer(x))
        .map(|x| (-x) as u64)
        .min()
}

fn term_ratio(a: f64, b: f64, c: f64, z: f64, n: f64) -> f64 {
    (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z
}

/// Sum of Σ (a)_n (b)_n / ((c)_n n!) zⁿ for −1 ≤ z < 1.
///
/// Terminating series are summed exactly. For z < −1/2 the tail is
/// alternating and slowly convergent, so it goes through repeated
/// averaging of partial sums (Euler transform).
pub fn hyp2f1_series(p: &ParameterTriple, z: f64, opts: &EvalOptions) -> Result<f64> {
    let (a, b, c) = (p.a, p.b, p.c);
    if !(-1.0..1.0).contains(&z) {
        return Err(Error::domain(format!(
            "series argument {z} outside [-1, 1)"
        )));
    }
    if let Some(m) = terminating_degree(a, b) {
        let mut acc = CompensatedSum::new(1.0);
        let mut term = 1.0;
        for n in 0..m {
            term *= term_ratio(a, b, c, z, n as f64);
            acc.add(term);
        }
        return Ok(acc.value());
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    if z < -0.5 {
        return alternating_sum(a, b, c, z, opts);
    }

    let mut acc = CompensatedSum::new(1.0);
    let mut term = 1.0;
    let mut passes = 0;
    for n in 0..opts.max_terms {
        let ratio = term_ratio(a, b, c, z, n as f64);
        term *= ratio;
        acc.add(term);
        let s = acc.value();
        // geometric tail estimate once the ratio has settled below 1
        let r = ratio.abs();
        let tail = if r < 1.0 {
            term.abs() * (r / (1.0 - r)).max(1.0)
        } else {
            f64::INFINITY
        };
        if tail <= opts.tol * s.abs() {
            passes += 1;
            if passes == 2 {
                return Ok(s);
            }
        } else {
            passes = 0;
        }
    }
    let s = acc.value();
    Err(Error::Convergence {
        terms: opts.max_terms,
        last_ratio: (term / s).abs(),
    })
}

const EULER_MAX_LEVELS: usize = 160;

fn alternating_sum(a: f64, b: f64, c: f64, z: f64, opts: &EvalOptions) -> Result<f64> {
    // Past this index every factor (a+n), (b+n), (c+n) is positive and the
    // terms alternate in sign with a smooth magnitude.
    let start = [a, b, c]
        .into_iter()
        .map(|x| (-x).max(0.0).ceil() as usize)
        .max()
        .unwrap_or(0)
        + 20;
    let total = start + EULER_MAX_LEVELS;
    if total > opts.max_terms {
        return Err(Error::Convergence {
            terms: opts.max_terms,
            last_ratio: f64::NAN,
        });
    }

    let mut acc = CompensatedSum::new(1.0);
    let mut term = 1.0;
    let mut partial = Vec::with_capacity(EULER_MAX_LEVELS + 1);
    let mut scale: f64 = 1.0;
    for n in 0..total {
        term *= term_ratio(a, b, c, z, n as f64);
        acc.add(term);
        scale = scale.max(acc.value().abs());
        if n + 1 >= start {
            partial.push(acc.value());
        }
    }

    let euler = |levels: usize| -> f64 {
        let mut row: Vec<f64> = partial[..=levels].to_vec();
        for width in (1..=levels).rev() {
            for i in 0..width {
                row[i] = 0.5 * (row[i] + row[i + 1]);
            }
        }
        row[0]
    };

    let floor = 8.0 * f64::EPSILON * scale;
    let mut prev = euler(8);
    let mut levels = 12;
    while levels < partial.len() {
        let est = euler(levels);
        if (est - prev).abs() <= opts.tol * est.abs() + floor {
            return Ok(est);
        }
        prev = est;
        levels += 4;
    }
    Err(Error::Convergence {
        terms: total,
        last_ratio: f64::NAN,
    })
}

/// ₂F₁[a,b;c;x] for x ∈ [0, 1].
///
/// x = 1 is never summed: it returns the Gauss value and therefore needs
/// c − a − b > 0.
pub fn hyp2f1(p: &ParameterTriple, x: f64, opts: &EvalOptions) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain(format!("x = {x} outside [0, 1]")));
    }
    if x == 1.0 {
        return gauss_value_at_one(p);
    }
    hyp2f1_series(p, x, opts)
}

/// Γ(c−a−b)Γ(c) / (Γ(c−a)Γ(c−b)), the value of ₂F₁ at x = 1.
pub fn gauss_value_at_one(p: &ParameterTriple) -> Result<f64> {
    let excess = p.c - p.a - p.b;
    if !(excess > 0.0) {
        return Err(Error::constraint(format!(
            "x = 1 requires c - a - b > 0, got {excess}"
        )));
    }
    gamma_ratio(&[excess, p.c], &[p.c - p.a, p.c - p.b])
}

/// k-th derivative in x via d/dx ₂F₁[a,b;c;x] = (ab/c) ₂F₁[a+1,b+1;c+1;x].
pub fn hyp2f1_derivative(
    p: &ParameterTriple,
    x: f64,
    order: u32,
    opts: &EvalOptions,
) -> Result<f64> {
    let scale = pochhammer(p.a, order) * pochhammer(p.b, order) / pochhammer(p.c, order);
    if scale == 0.0 {
        return Ok(0.0);
    }
    let shifted = p.shifted(order)?;
    Ok(scale * hyp2f1(&shifted, x, opts)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(a: f64, b: f64, c: f64) -> ParameterTriple {
        ParameterTriple::new(a, b, c).unwrap()
    }

    #[test]
    fn rejects_pole_c() {
        assert!(matches!(
            ParameterTriple::new(1.0, 2.0, -3.0),
            Err(Error::Pole(_))
        ));
        assert!(matches!(
            ParameterTriple::new(1.0, 2.0, 0.0),
            Err(Error::Pole(_))
        ));
        assert!(ParameterTriple::new(1.0, 2.0, -2.5).is_ok());
    }

    #[test]
    fn options_validation() {
        assert!(EvalOptions::new(0.0, 10).is_err());
        assert!(EvalOptions::new(1e-10, 0).is_err());
        assert_eq!(EvalOptions::default().max_terms, 1_000_000);
    }

    #[test]
    fn table_one_values() {
        let p = triple(1.0, 2.0, 6.0);
        let o = EvalOptions::default();
        assert_eq!(hyp2f1(&p, 0.0, &o).unwrap(), 1.0);
        assert!((hyp2f1(&p, 0.25, &o).unwrap() - 1.0936).abs() < 5e-5);
        assert!((hyp2f1(&p, 1.0, &o).unwrap() - 5.0 / 3.0).abs() < 1e-14);
        let t2 = hyp2f1(&triple(3.9, -2.9, 5.0), 1.0, &o).unwrap();
        assert!((t2 - 0.0367).abs() < 5e-5);
    }

    #[test]
    fn gauss_value_cases() {
        assert!((gauss_value_at_one(&triple(0.0, 1.7, 4.2)).unwrap() - 1.0).abs() < 1e-14);
        let v = gauss_value_at_one(&triple(0.9, 0.1, 6.0)).unwrap();
        assert!((v - 1.0182).abs() < 5e-5);
        assert!(matches!(
            gauss_value_at_one(&triple(1.0, 2.0, 3.0)),
            Err(Error::Constraint(_))
        ));
    }

    #[test]
    fn terminating_series_is_exact() {
        // ₂F₁[−2, b; c; x] = 1 − 2b/c x + b(b+1)/(c(c+1)) x²
        let (b, c, x) = (1.5, 2.5, 0.7);
        let expected = 1.0 - 2.0 * b / c * x + b * (b + 1.0) / (c * (c + 1.0)) * x * x;
        let got = hyp2f1(&triple(-2.0, b, c), x, &EvalOptions::default()).unwrap();
        assert!((got - expected).abs() < 1e-15);
        // also at the alternating edge z = −1
        let got = hyp2f1_series(&triple(-2.0, b, c), -1.0, &EvalOptions::default()).unwrap();
        let expected = 1.0 + 2.0 * b / c + b * (b + 1.0) / (c * (c + 1.0));
        assert!((got - expected).abs() < 1e-15);
    }

    #[test]
    fn convergence_failure_reported() {
        let opts = EvalOptions::new(1e-14, 50).unwrap();
        let err = hyp2f1(&triple(1.0, 2.0, 6.0), 0.99, &opts).unwrap_err();
        assert!(matches!(err, Error::Convergence { terms: 50, .. }));
    }

    #[test]
    fn domain_errors() {
        let p = triple(1.0, 2.0, 6.0);
        assert!(matches!(
            hyp2f1(&p, 1.5, &EvalOptions::default()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            hyp2f1(&p, -0.1, &EvalOptions::default()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn elementary_closed_forms() {
        let o = EvalOptions::default();
        // ₂F₁[1,1;2;x] = −ln(1−x)/x
        for x in [0.1, 0.5, 0.9, 0.99] {
            let got = hyp2f1(&triple(1.0, 1.0, 2.0), x, &o).unwrap();
            let expected = -(1.0 - x).ln() / x;
            assert!((got - expected).abs() <= 1e-13 * expected, "x = {x}");
        }
        // ₂F₁[1,1;2;−1] = ln 2, at the Euler-summed edge
        let got = hyp2f1_series(&triple(1.0, 1.0, 2.0), -1.0, &o).unwrap();
        assert!((got - std::f64::consts::LN_2).abs() < 1e-14);
        // ₂F₁[a,b;b;x] = (1−x)^{−a}
        let got = hyp2f1_series(&triple(0.7, 2.3, 2.3), -0.8, &o).unwrap();
        assert!((got - 1.8f64.powf(-0.7)).abs() < 1e-14);
    }

    #[test]
    fn derivative_shift_rule() {
        let o = EvalOptions::default();
        let p = triple(1.0, 2.0, 6.0);
        assert!((hyp2f1_derivative(&p, 0.0, 1, &o).unwrap() - 2.0 / 6.0).abs() < 1e-15);
        assert!((hyp2f1_derivative(&p, 0.0, 2, &o).unwrap() - 2.0 / 7.0).abs() < 1e-15);
        let zero_a = triple(0.0, 2.0, 6.0);
        for k in 1..=3 {
            assert_eq!(hyp2f1_derivative(&zero_a, 0.4, k, &o).unwrap(), 0.0);
        }
        assert_eq!(
            hyp2f1_derivative(&p, 0.4, 0, &o).unwrap(),
            hyp2f1(&p, 0.4, &o).unwrap()
        );
    }
}
