//! Command dispatch for the `hyperinterp` binary.
//!
//! Everything lives here rather than in `main.rs` so integration tests can
//! call [`run`] directly as well as through the built executable.
//!
//! Exit codes: 0 ok, 1 I/O failure, 2 bad input (domain or constraint),
//! 3 convergence or numerical instability, 4 pole, 10 scan anomaly.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use hyperinterp::analysis::{
    conjecture_scan, default_a_grid, default_c_grid, grid, in_proved_range, Verdict,
};
use hyperinterp::contfrac::{cf_compare, DEFAULT_DEPTH, DEFAULT_GRID};
use hyperinterp::interp::{
    error_bound_q1, error_bound_q2, linear_error_bound, linear_interpolant, quadratic_error_bound,
    quadratic_interpolant, quadratic_interpolant_q1, quadratic_interpolant_q2, ErrorBound, Poly2,
};
use hyperinterp::report::{figure, fmt_full, fmt_sig10, table, tables_to_csv, FigureKind};
use hyperinterp::specfun::{gauss_value_at_one, hyp2f1, hyp2f1_series, pfaff_transform};
use hyperinterp::{Error, EvalOptions, ParameterTriple};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CONVERGENCE: i32 = 3;
pub const EXIT_POLE: i32 = 4;
pub const EXIT_SCAN_ANOMALY: i32 = 10;

#[derive(Debug, Parser)]
#[command(
    name = "hyperinterp",
    version,
    about = "Polynomial interpolation of the Gauss hypergeometric function"
)]
pub struct Cli {
    /// Relative tolerance for series summation
    #[arg(long, global = true, default_value_t = 1e-14)]
    pub tol: f64,

    /// Term budget for series summation
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub max_terms: usize,

    /// Write CSV output to this file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate 2F1[a,b;c;x]
    #[command(allow_negative_numbers = true)]
    Eval {
        a: f64,
        b: f64,
        c: f64,
        x: f64,
        #[arg(long, value_enum, default_value_t = Method::Series)]
        method: Method,
    },
    /// Print interpolant coefficients and its error bound
    ///
    /// Parameters: `linear a b c`, `quadratic a b c`, `q1 a c`, `q2 a b`.
    #[command(allow_negative_numbers = true)]
    Interp {
        #[arg(value_enum)]
        kind: InterpKind,
        #[arg(required = true, num_args = 2..=3)]
        params: Vec<f64>,
    },
    /// Reproduce a comparison table (1, 2 or 3), rounded to 4 decimals
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
    },
    /// Emit figure data as CSV
    Figure {
        #[arg(value_enum)]
        which: FigureArg,
        #[arg(long, default_value_t = 101)]
        grid: usize,
    },
    /// Compare R_l and R_r against the truncated continued fraction
    #[command(allow_negative_numbers = true)]
    CfCompare {
        a: f64,
        b: f64,
        c: f64,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
    },
    /// Scan g(a, c) for monotonic decrease in c
    ///
    /// Without bounds the default grid is used: a in 0..1 step 0.05,
    /// c in 4.05..30 step 0.05.
    #[command(allow_negative_numbers = true)]
    Scan {
        #[arg(num_args = 6, value_names = ["A_MIN", "A_MAX", "A_STEP", "C_MIN", "C_MAX", "C_STEP"])]
        bounds: Option<Vec<f64>>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Series,
    Pfaff,
    GaussOne,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InterpKind {
    Linear,
    Quadratic,
    Q1,
    Q2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureArg {
    Pl,
    Pq1,
    Pq2,
    Rl,
    Rr,
    Eq1a,
    Eq1b,
}

impl FigureArg {
    fn kind(self) -> FigureKind {
        match self {
            FigureArg::Pl => FigureKind::Linear,
            FigureArg::Pq1 => FigureKind::QuadraticBailey,
            FigureArg::Pq2 => FigureKind::QuadraticHalfSum,
            FigureArg::Rl => FigureKind::CfLinear,
            FigureArg::Rr => FigureKind::CfRational,
            FigureArg::Eq1a => FigureKind::DecayHigh,
            FigureArg::Eq1b => FigureKind::DecayLow,
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Domain(_) | Error::Constraint(_) => EXIT_INPUT,
        Error::Convergence { .. } | Error::Instability(_) => EXIT_CONVERGENCE,
        Error::Pole(_) => EXIT_POLE,
    }
}

/// What a command produced: the data body (redirected by `--out`), an
/// optional summary line that always goes to stdout, and the exit code.
struct Output {
    body: String,
    summary: Option<String>,
    code: i32,
}

impl Output {
    fn data(body: String) -> Self {
        Output {
            body,
            summary: None,
            code: EXIT_OK,
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing to the given streams. Returns the process exit code.
pub fn run_with<I, T>(
    args: I,
    stdout: &mut dyn std::io::Write,
    stderr: &mut dyn std::io::Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = if e.use_stderr() {
                e.render().to_string()
            } else {
                e.to_string()
            };
            let sink: &mut dyn std::io::Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &out.body),
                None => stdout.write_all(out.body.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: cannot write output: {e}");
                return EXIT_IO;
            }
            if let Some(s) = out.summary {
                let _ = writeln!(stdout, "{s}");
            }
            out.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

/// [`run_with`] on the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(
        args,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}

fn execute(cli: &Cli) -> hyperinterp::Result<Output> {
    let opts = EvalOptions::new(cli.tol, cli.max_terms)?;
    match &cli.command {
        Command::Eval { a, b, c, x, method } => {
            let p = ParameterTriple::new(*a, *b, *c)?;
            let value = match method {
                Method::Series if *x == 1.0 => hyp2f1(&p, *x, &opts)?,
                Method::Series => hyp2f1_series(&p, *x, &opts)?,
                Method::Pfaff => pfaff_transform(&p, *x, &opts)?,
                Method::GaussOne => {
                    if *x != 1.0 {
                        return Err(Error::Domain(format!(
                            "gauss-one evaluates at x = 1 only, got x = {x}"
                        )));
                    }
                    gauss_value_at_one(&p)?
                }
            };
            Ok(Output::data(format!("{}\n", fmt_sig10(value))))
        }
        Command::Interp { kind, params } => cmd_interp(*kind, params, &opts),
        Command::Table { which } => Ok(Output::data(tables_to_csv(&table(*which, &opts)?))),
        Command::Figure { which, grid } => {
            Ok(Output::data(figure(which.kind(), *grid, &opts)?.to_csv()))
        }
        Command::CfCompare {
            a,
            b,
            c,
            depth,
            grid,
        } => {
            let cmp = cf_compare(&ParameterTriple::new(*a, *b, *c)?, *depth, *grid)?;
            let mut body = String::from("x,g,r_l,r_r,err_l,err_r\n");
            for pt in &cmp.points {
                let cells = [pt.x, pt.g, pt.r_l, pt.r_r, pt.err_l(), pt.err_r()].map(fmt_full);
                let _ = writeln!(body, "{}", cells.join(","));
            }
            Ok(Output {
                body,
                summary: Some(format!(
                    "# winner: {} (sup_err_l = {}, sup_err_r = {})",
                    cmp.winner.as_str(),
                    fmt_sig10(cmp.sup_err_l),
                    fmt_sig10(cmp.sup_err_r)
                )),
                code: EXIT_OK,
            })
        }
        Command::Scan { bounds } => cmd_scan(bounds.as_deref()),
    }
}

fn cmd_interp(kind: InterpKind, params: &[f64], opts: &EvalOptions) -> hyperinterp::Result<Output> {
    let want = match kind {
        InterpKind::Linear | InterpKind::Quadratic => 3,
        InterpKind::Q1 | InterpKind::Q2 => 2,
    };
    if params.len() != want {
        return Err(Error::Domain(format!(
            "{kind:?} takes {want} parameters, got {}",
            params.len()
        )));
    }
    let (poly, bound): (Poly2, hyperinterp::Result<ErrorBound>) = match kind {
        InterpKind::Linear => {
            let p = ParameterTriple::new(params[0], params[1], params[2])?;
            (linear_interpolant(&p)?, linear_error_bound(&p))
        }
        InterpKind::Quadratic => {
            let p = ParameterTriple::new(params[0], params[1], params[2])?;
            (quadratic_interpolant(&p, opts)?, quadratic_error_bound(&p))
        }
        InterpKind::Q1 => (
            quadratic_interpolant_q1(params[0], params[1])?,
            error_bound_q1(params[0], params[1]),
        ),
        InterpKind::Q2 => (
            quadratic_interpolant_q2(params[0], params[1])?,
            error_bound_q2(params[0], params[1]),
        ),
    };
    // an interpolant can exist where its bound's hypotheses fail
    let (bound_cell, summary) = match bound {
        Ok(b) => (fmt_full(b.bound), None),
        Err(e) => ("na".to_string(), Some(format!("# bound unavailable: {e}"))),
    };
    let body = format!(
        "c0,c1,c2,bound\n{},{},{},{}\n",
        fmt_full(poly.c0),
        fmt_full(poly.c1),
        fmt_full(poly.c2),
        bound_cell
    );
    Ok(Output {
        body,
        summary,
        code: EXIT_OK,
    })
}

fn cmd_scan(bounds: Option<&[f64]>) -> hyperinterp::Result<Output> {
    let (a_grid, c_grid) = match bounds {
        None => (default_a_grid(), default_c_grid()),
        Some(b) => (grid(b[0], b[1], b[2])?, grid(b[3], b[4], b[5])?),
    };
    let report = conjecture_scan(&a_grid, &c_grid)?;
    let anomalies = report.anomalies();
    let mut summary = String::new();
    if anomalies.is_empty() {
        summary.push_str("# verdict: monotone-decreasing everywhere");
    } else {
        for (i, (a, v)) in anomalies.iter().enumerate() {
            if i > 0 {
                summary.push('\n');
            }
            let range = if in_proved_range(*a) {
                "proved range"
            } else {
                "unproved range"
            };
            let _ = match v {
                Verdict::Violated { c } => write!(summary, "# verdict: violated at (a, c) = ({a}, {c}) [{range}]"),
                Verdict::Disagreement { c } => write!(
                    summary,
                    "# verdict: finite-difference and digamma signs disagree at (a, c) = ({a}, {c}) [{range}]"
                ),
                Verdict::MonotoneDecreasing => Ok(()),
            };
        }
    }
    let code = if anomalies.is_empty() {
        EXIT_OK
    } else {
        EXIT_SCAN_ANOMALY
    };
    Ok(Output {
        body: report.to_csv(),
        summary: Some(summary),
        code,
    })
}
