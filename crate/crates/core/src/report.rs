//! Reproduction data: the three comparison tables, figure curves, and
//! the number formatting shared by CSV output.
//!
//! Tables are computed at full precision; [`round4`] is applied only when
//! they are rendered for comparison against four-decimal reference cells.

use std::fmt::Write as _;

use crate::contfrac::{cf_compare, DEFAULT_DEPTH};
use crate::error::{Error, Result};
use crate::interp::{
    error_bound_q1, linear_error_bound, linear_interpolant, quadratic_interpolant_q1,
    quadratic_interpolant_q2, Poly2,
};
use crate::specfun::{hyp2f1, EvalOptions, ParameterTriple};

/// Nodes at which the tables compare function and interpolant.
pub const TABLE_NODES: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

/// Full round-trip precision: 17 significant digits.
pub fn fmt_full(x: f64) -> String {
    format!("{x:.16e}")
}

/// Ten significant digits, without exponent for moderate magnitudes.
pub fn fmt_sig10(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..10).contains(&exp) {
        format!("{:.*}", (9 - exp).max(0) as usize, x)
    } else {
        format!("{x:.9e}")
    }
}

/// Parameter labels: 1 − 0.9 prints as 0.1, not 0.09999999999999998.
fn fmt_label(x: f64) -> String {
    format!("{}", (x * 1e12).round() / 1e12 + 0.0)
}

/// Rounds to four decimals, ties to even.
pub fn round4(x: f64) -> f64 {
    // adding 0.0 turns a rounded -0.0 into 0.0
    (x * 1e4).round_ties_even() / 1e4 + 0.0
}

/// [`round4`] rendered with exactly four decimals.
pub fn fmt_round4(x: f64) -> String {
    format!("{:.4}", round4(x))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub x: f64,
    pub actual: f64,
    pub approx: f64,
    pub abs_error: f64,
    pub bound: f64,
}

/// One parameter triple of a comparison table.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub params: ParameterTriple,
    pub rows: Vec<TableRow>,
}

impl Table {
    fn build(params: ParameterTriple, poly: Poly2, bound: f64, opts: &EvalOptions) -> Result<Self> {
        let rows = TABLE_NODES
            .iter()
            .map(|&x| {
                let actual = hyp2f1(&params, x, opts)?;
                let approx = poly.eval(x);
                Ok(TableRow {
                    x,
                    actual,
                    approx,
                    abs_error: (actual - approx).abs(),
                    bound,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Table { params, rows })
    }
}

/// Parameters of the table families, by table number.
pub fn table_params(which: u8) -> Result<Vec<ParameterTriple>> {
    let triples: &[(f64, f64)] = match which {
        1 => return Ok(vec![ParameterTriple::new(1.0, 2.0, 6.0)?]),
        2 => &[(3.9, 5.0), (3.9, 6.0)],
        3 => &[(0.9, 5.0), (0.9, 6.0)],
        _ => return Err(Error::domain(format!("no table {which}; choose 1, 2 or 3"))),
    };
    triples
        .iter()
        .map(|&(a, c)| ParameterTriple::new(a, 1.0 - a, c))
        .collect()
}

/// Table 1 uses the linear interpolant on (1, 2, 6); tables 2 and 3 the
/// Bailey-node quadratic on ₂F₁[a, 1−a; c; x].
pub fn table(which: u8, opts: &EvalOptions) -> Result<Vec<Table>> {
    table_params(which)?
        .into_iter()
        .map(|p| {
            if which == 1 {
                Table::build(
                    p,
                    linear_interpolant(&p)?,
                    linear_error_bound(&p)?.bound,
                    opts,
                )
            } else {
                let (a, c) = (p.a(), p.c());
                Table::build(
                    p,
                    quadratic_interpolant_q1(a, c)?,
                    error_bound_q1(a, c)?.bound,
                    opts,
                )
            }
        })
        .collect()
}

/// CSV with every numeric cell rounded to four decimals.
pub fn tables_to_csv(tables: &[Table]) -> String {
    let mut out = String::from("a,b,c,x,actual,approx,abs_error,bound\n");
    for t in tables {
        let p = t.params;
        for r in &t.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                fmt_label(p.a()),
                fmt_label(p.b()),
                fmt_label(p.c()),
                r.x,
                fmt_round4(r.actual),
                fmt_round4(r.approx),
                fmt_round4(r.abs_error),
                fmt_round4(r.bound)
            );
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureKind {
    /// Linear interpolant of ₂F₁[1,2;6;x].
    Linear,
    /// Bailey-node quadratic of ₂F₁[0.9,0.1;1.5;x].
    QuadraticBailey,
    /// Half-sum quadratic of ₂F₁[0.1,0.3;0.7;x].
    QuadraticHalfSum,
    /// R_l against the continued fraction for (1, 2, 6).
    CfLinear,
    /// R_r against the continued fraction for (1, 2, 6).
    CfRational,
    /// Bailey-node error curves for a = 3.9, c = 4.5..6.5.
    DecayHigh,
    /// Bailey-node error curves for a = 0.9, c = 4.1..6.1.
    DecayLow,
}

impl FigureKind {
    pub const ALL: [FigureKind; 7] = [
        FigureKind::Linear,
        FigureKind::QuadraticBailey,
        FigureKind::QuadraticHalfSum,
        FigureKind::CfLinear,
        FigureKind::CfRational,
        FigureKind::DecayHigh,
        FigureKind::DecayLow,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FigureKind::Linear => "pl",
            FigureKind::QuadraticBailey => "pq1",
            FigureKind::QuadraticHalfSum => "pq2",
            FigureKind::CfLinear => "rl",
            FigureKind::CfRational => "rr",
            FigureKind::DecayHigh => "eq1a",
            FigureKind::DecayLow => "eq1b",
        }
    }

    pub fn from_name(name: &str) -> Option<FigureKind> {
        FigureKind::ALL.into_iter().find(|k| k.name() == name)
    }
}

/// Tabulated curves; every row has one value per header column.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureData {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
}

impl FigureData {
    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&v| fmt_full(v)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

fn uniform_grid(n: usize) -> Vec<f64> {
    (0..n).map(|i| i as f64 / (n - 1) as f64).collect()
}

fn curve(
    p: &ParameterTriple,
    poly: Poly2,
    xs: &[f64],
    opts: &EvalOptions,
) -> Result<Vec<[f64; 4]>> {
    xs.iter()
        .map(|&x| {
            let f = hyp2f1(p, x, opts)?;
            let approx = poly.eval(x);
            Ok([x, f, approx, (f - approx).abs()])
        })
        .collect()
}

/// Figure curves sampled at `grid` equally spaced points of [0, 1].
pub fn figure(kind: FigureKind, grid: usize, opts: &EvalOptions) -> Result<FigureData> {
    if grid < 2 {
        return Err(Error::domain(format!(
            "figure grid needs at least 2 points, got {grid}"
        )));
    }
    let xs = uniform_grid(grid);
    let plain = |p: ParameterTriple, poly: Poly2| -> Result<FigureData> {
        Ok(FigureData {
            header: vec!["x", "f", "approx", "error"],
            rows: curve(&p, poly, &xs, opts)?
                .into_iter()
                .map(Vec::from)
                .collect(),
        })
    };
    let decay = |a: f64, cs: [f64; 5]| -> Result<FigureData> {
        let mut rows = Vec::with_capacity(cs.len() * grid);
        for c in cs {
            let p = ParameterTriple::new(a, 1.0 - a, c)?;
            for r in curve(&p, quadratic_interpolant_q1(a, c)?, &xs, opts)? {
                rows.push(vec![c, r[0], r[1], r[2], r[3]]);
            }
        }
        Ok(FigureData {
            header: vec!["c", "x", "f", "approx", "error"],
            rows,
        })
    };
    let continued = |rational: bool| -> Result<FigureData> {
        let cmp = cf_compare(&ParameterTriple::new(1.0, 2.0, 6.0)?, DEFAULT_DEPTH, grid)?;
        let rows = cmp
            .points
            .iter()
            .map(|pt| {
                let (approx, err) = if rational {
                    (pt.r_r, pt.err_r())
                } else {
                    (pt.r_l, pt.err_l())
                };
                vec![pt.x, pt.g, approx, err]
            })
            .collect();
        Ok(FigureData {
            header: vec!["x", "f", "approx", "error"],
            rows,
        })
    };

    match kind {
        FigureKind::Linear => {
            let p = ParameterTriple::new(1.0, 2.0, 6.0)?;
            plain(p, linear_interpolant(&p)?)
        }
        FigureKind::QuadraticBailey => plain(
            ParameterTriple::new(0.9, 0.1, 1.5)?,
            quadratic_interpolant_q1(0.9, 1.5)?,
        ),
        FigureKind::QuadraticHalfSum => plain(
            ParameterTriple::new(0.1, 0.3, 0.7)?,
            quadratic_interpolant_q2(0.1, 0.3)?,
        ),
        FigureKind::CfLinear => continued(false),
        FigureKind::CfRational => continued(true),
        FigureKind::DecayHigh => decay(3.9, [4.5, 5.0, 5.5, 6.0, 6.5]),
        FigureKind::DecayLow => decay(0.9, [4.1, 4.6, 5.1, 5.6, 6.1]),
    }
}
