//! Closed-form values of ₂F₁ at x = ½ and x = −1, the Pfaff
//! transformation, and the trigonometric form of the x = 1 value when
//! c = (a+b+1)/2.

use std::f64::consts::PI;

use crate::error::{Error, Result};

use super::gamma::{cos_pi, gamma_ratio, is_nonpositive_integer};
use super::series::{gauss_value_at_one, hyp2f1_series, EvalOptions, ParameterTriple};

/// Below this magnitude cos(π(a+b)/2) is treated as a zero of the
/// trigonometric form.
pub const COSINE_POLE_EPS: f64 = 1e-10;

/// ₂F₁[a, 1−a; c; ½] = Γ(c/2)Γ((1+c)/2) / (Γ((c+a)/2)Γ((1+c−a)/2)).
pub fn bailey_half(a: f64, c: f64) -> Result<f64> {
    if is_nonpositive_integer(c) {
        return Err(Error::pole(format!("c = {c} is a non-positive integer")));
    }
    gamma_ratio(
        &[0.5 * c, 0.5 * (1.0 + c)],
        &[0.5 * (c + a), 0.5 * (1.0 + c - a)],
    )
}

/// ₂F₁[a, b; (a+b+1)/2; ½] = √π Γ((a+b+1)/2) / (Γ((a+1)/2)Γ((b+1)/2)).
///
/// Valid for a + b < 1 and a + b ∉ {−1, −3, −5, …}.
pub fn quadratic_transform_half(a: f64, b: f64) -> Result<f64> {
    if !(a + b < 1.0) {
        return Err(Error::constraint(format!(
            "requires a + b < 1, got {}",
            a + b
        )));
    }
    let c = 0.5 * (a + b + 1.0);
    if is_nonpositive_integer(c) {
        return Err(Error::pole(format!(
            "a + b = {} is a negative odd integer",
            a + b
        )));
    }
    Ok(PI.sqrt() * gamma_ratio(&[c], &[0.5 * (a + 1.0), 0.5 * (b + 1.0)])?)
}

/// Kummer's value ₂F₁[a′, b′; a′−b′+1; −1]
/// = Γ(a′−b′+1)Γ(a′/2+1) / (Γ(a′+1)Γ(a′/2−b′+1)), for b′ < 1.
pub fn kummer_minus_one(a1: f64, b1: f64) -> Result<f64> {
    if !(b1 < 1.0) {
        return Err(Error::constraint(format!("requires b' < 1, got {b1}")));
    }
    let c = a1 - b1 + 1.0;
    if is_nonpositive_integer(c) {
        return Err(Error::constraint(format!(
            "1 + a' - b' = {c} is a non-positive integer"
        )));
    }
    gamma_ratio(&[c, 0.5 * a1 + 1.0], &[a1 + 1.0, 0.5 * a1 - b1 + 1.0])
}

/// ₂F₁[a,b;c;x] = (1−x)^{−a} ₂F₁[a, c−b; c; −x/(1−x)] for x ∈ [0, ½].
///
/// The right-hand side is summed as a series in the transformed argument,
/// which lies in [−1, 0].
pub fn pfaff_transform(p: &ParameterTriple, x: f64, opts: &EvalOptions) -> Result<f64> {
    if !(0.0..=0.5).contains(&x) {
        return Err(Error::domain(format!(
            "Pfaff route requires x in [0, 1/2], got {x}"
        )));
    }
    if x == 0.0 {
        return Ok(1.0);
    }
    let transformed = ParameterTriple::new(p.a(), p.c() - p.b(), p.c())?;
    let z = -x / (1.0 - x);
    Ok((1.0 - x).powf(-p.a()) * hyp2f1_series(&transformed, z, opts)?)
}

/// ₂F₁[a,b;(a+b+1)/2;1] in the form cos(π(b−a)/2) / cos(π(b+a)/2)
/// obtained through Euler's reflection formula.
pub fn reflection_form_at_one(a: f64, b: f64) -> Result<f64> {
    let den = cos_pi(0.5 * (a + b));
    if den.abs() < COSINE_POLE_EPS {
        return Err(Error::pole(format!(
            "cos(pi (a+b)/2) vanishes for a + b = {}",
            a + b
        )));
    }
    Ok(cos_pi(0.5 * (b - a)) / den)
}

/// The same x = 1 value in Γ-ratio form,
/// Γ((1−a−b)/2)Γ((a+b+1)/2) / (Γ((a+1−b)/2)Γ((b+1−a)/2)).
pub fn gamma_form_at_one(a: f64, b: f64) -> Result<f64> {
    let p = ParameterTriple::new(a, b, 0.5 * (a + b + 1.0))?;
    gauss_value_at_one(&p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::hyp2f1;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn bailey_trivial_cases() {
        for c in [1.5, 3.0, 7.25] {
            assert!((bailey_half(0.0, c).unwrap() - 1.0).abs() < 1e-14);
            assert!((bailey_half(1.0, c).unwrap() - 1.0).abs() < 1e-14);
        }
        assert!(matches!(bailey_half(0.3, -2.0), Err(Error::Pole(_))));
    }

    #[test]
    fn bailey_matches_series() {
        let o = EvalOptions::default();
        let p = ParameterTriple::new(0.9, 0.1, 1.5).unwrap();
        let series = hyp2f1(&p, 0.5, &o).unwrap();
        assert!(rel(bailey_half(0.9, 1.5).unwrap(), series) <= 1e-12);
    }

    #[test]
    fn quadratic_transform_cases() {
        let o = EvalOptions::default();
        assert!((quadratic_transform_half(0.0, 0.4).unwrap() - 1.0).abs() < 1e-14);
        let p = ParameterTriple::new(0.1, 0.3, 0.7).unwrap();
        let series = hyp2f1(&p, 0.5, &o).unwrap();
        assert!(rel(quadratic_transform_half(0.1, 0.3).unwrap(), series) <= 1e-12);

        // terminating: a = −2, c = (b−1)/2
        let b = 2.2;
        let p = ParameterTriple::new(-2.0, b, 0.5 * (b - 1.0)).unwrap();
        let series = hyp2f1(&p, 0.5, &o).unwrap();
        assert!(rel(quadratic_transform_half(-2.0, b).unwrap(), series) <= 1e-12);

        assert!(matches!(
            quadratic_transform_half(0.6, 0.4),
            Err(Error::Constraint(_))
        ));
        assert!(matches!(
            quadratic_transform_half(-1.0, -2.0),
            Err(Error::Pole(_))
        ));
        // a = −1 puts a pole in the denominator: value is exactly zero
        assert_eq!(quadratic_transform_half(-1.0, 0.5).unwrap(), 0.0);
    }

    #[test]
    fn kummer_cases() {
        assert!((kummer_minus_one(0.0, 0.3).unwrap() - 1.0).abs() < 1e-14);
        // 2^a K(a, c−b) = quadratic transform value, c = (a+b+1)/2
        let (a, b) = (0.1, 0.3);
        let c = 0.5 * (a + b + 1.0);
        let via_kummer = 2f64.powf(a) * kummer_minus_one(a, c - b).unwrap();
        assert!(rel(via_kummer, quadratic_transform_half(a, b).unwrap()) <= 1e-12);

        // Pfaff at x = ½: ₂F₁[a′,b′;c′;−1] = 2^{−a′} ₂F₁[a′, c′−b′; c′; ½]
        let (a1, b1) = (0.5, 0.25);
        let c1 = a1 - b1 + 1.0;
        let oracle = 2f64.powf(-a1)
            * hyp2f1(
                &ParameterTriple::new(a1, c1 - b1, c1).unwrap(),
                0.5,
                &EvalOptions::default(),
            )
            .unwrap();
        assert!(rel(kummer_minus_one(a1, b1).unwrap(), oracle) <= 1e-12);

        assert!(matches!(
            kummer_minus_one(0.5, 1.0),
            Err(Error::Constraint(_))
        ));
        assert!(matches!(
            kummer_minus_one(-3.0, 0.0),
            Err(Error::Constraint(_))
        ));
    }

    #[test]
    fn pfaff_cases() {
        let o = EvalOptions::default();
        let p = ParameterTriple::new(1.0, 2.0, 6.0).unwrap();
        assert_eq!(pfaff_transform(&p, 0.0, &o).unwrap(), 1.0);
        let v = pfaff_transform(&p, 0.25, &o).unwrap();
        assert!((v - 1.0936).abs() < 5e-5);
        assert!(rel(v, hyp2f1(&p, 0.25, &o).unwrap()) <= 1e-12);

        let p = ParameterTriple::new(0.9, 0.1, 5.0).unwrap();
        let v = pfaff_transform(&p, 0.5, &o).unwrap();
        assert!((v - 1.0099).abs() < 5e-5);
        assert!(rel(v, hyp2f1(&p, 0.5, &o).unwrap()) <= 1e-12);

        assert!(matches!(
            pfaff_transform(&p, 0.6, &o),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn two_forms_at_one_agree() {
        let (a, b) = (0.1, 0.3);
        let cosine = reflection_form_at_one(a, b).unwrap();
        assert!((cosine - (0.1 * PI).cos() / (0.2 * PI).cos()).abs() < 1e-15);
        assert!((cosine - 1.17557).abs() < 1e-5);
        assert!(rel(gamma_form_at_one(a, b).unwrap(), cosine) <= 1e-13);
        assert!(
            rel(
                gamma_form_at_one(-2.6, -2.7).unwrap(),
                reflection_form_at_one(-2.6, -2.7).unwrap()
            ) <= 1e-12
        );
        assert!(matches!(
            reflection_form_at_one(0.5, 0.5),
            Err(Error::Pole(_))
        ));
    }
}
