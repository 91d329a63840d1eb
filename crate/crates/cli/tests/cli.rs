//! End-to-end runs of the `hyperinterp` executable.
//!
//! Golden files under `tests/golden` were produced by the binary itself
//! with default tolerances; any change in output is a regression until
//! the files are deliberately regenerated.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperinterp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Data rows of a CSV body, skipping the header and `#` summary lines.
fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    let header = lines
        .next()
        .unwrap()
        .split(',')
        .map(str::to_owned)
        .collect::<Vec<_>>();
    let rows = lines
        .map(|l| l.split(',').map(str::to_owned).collect::<Vec<_>>())
        .collect::<Vec<_>>();
    (header, rows)
}

#[test]
fn goldens_bit_for_bit() {
    let cases: &[(&[&str], &str)] = &[
        (&["table", "1"], "table1.csv"),
        (&["table", "2"], "table2.csv"),
        (&["table", "3"], "table3.csv"),
        (&["figure", "pl", "--grid", "11"], "figure_pl.csv"),
        (&["figure", "pq1", "--grid", "11"], "figure_pq1.csv"),
        (&["figure", "pq2", "--grid", "11"], "figure_pq2.csv"),
        (&["figure", "rl", "--grid", "11"], "figure_rl.csv"),
        (&["figure", "rr", "--grid", "11"], "figure_rr.csv"),
        (&["figure", "eq1a", "--grid", "11"], "figure_eq1a.csv"),
        (&["figure", "eq1b", "--grid", "11"], "figure_eq1b.csv"),
        (
            &["cf-compare", "1", "2", "6", "--grid", "11"],
            "cf_compare_1_2_6.csv",
        ),
        (
            &["scan", "0", "1", "0.25", "4.5", "6", "0.5"],
            "scan_small.csv",
        ),
    ];
    for (args, file) in cases {
        let out = bin(args);
        assert!(out.status.success(), "{args:?}");
        assert_eq!(stdout(&out), golden(file), "{args:?} differs from {file}");
    }
}

#[test]
fn csv_round_trip() {
    for file in [
        "figure_pl.csv",
        "figure_eq1b.csv",
        "cf_compare_1_2_6.csv",
        "table2.csv",
    ] {
        let (header, rows) = parse_csv(&golden(file));
        assert!(!rows.is_empty());
        for row in &rows {
            assert_eq!(row.len(), header.len(), "{file}");
            for cell in row {
                cell.parse::<f64>()
                    .unwrap_or_else(|_| panic!("{file}: bad cell {cell}"));
            }
        }
    }
    // 17 significant digits survive a parse and reprint
    let (_, rows) = parse_csv(&golden("figure_pq2.csv"));
    for cell in rows.iter().flatten() {
        let v: f64 = cell.parse().unwrap();
        assert_eq!(&format!("{v:.16e}"), cell);
    }
}

#[test]
fn table_one_cells() {
    let (header, rows) = parse_csv(&stdout(&bin(&["table", "1"])));
    let col = |name: &str| header.iter().position(|h| h == name).unwrap();
    let at =
        |x: &str, name: &str| rows.iter().find(|r| r[col("x")] == x).unwrap()[col(name)].clone();
    assert_eq!(at("0.5", "actual"), "1.2149");
    assert_eq!(at("0.5", "approx"), "1.3333");
    assert_eq!(at("1", "actual"), "1.6667");
}

#[test]
fn eval_examples() {
    assert_eq!(
        stdout(&bin(&["eval", "1", "2", "6", "0.25"])).trim(),
        "1.093560683"
    );
    assert_eq!(
        stdout(&bin(&["eval", "1", "2", "6", "1", "--method", "gauss-one"])).trim(),
        "1.666666667"
    );
    assert_eq!(
        stdout(&bin(&["eval", "2.5", "-0.5", "3", "0"])).trim(),
        "1.000000000"
    );
    let pfaff = stdout(&bin(&["eval", "1", "2", "6", "0.25", "--method", "pfaff"]));
    assert_eq!(pfaff.trim(), "1.093560683");
}

#[test]
fn exit_codes() {
    let constraint = bin(&["eval", "1", "2", "3", "1"]);
    assert_eq!(constraint.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&constraint.stderr).contains("c - a - b"));
    assert_eq!(bin(&["eval", "1", "2", "-3", "0.5"]).status.code(), Some(4));
    assert_eq!(
        bin(&["--max-terms", "40", "eval", "1", "2", "3.5", "0.99"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        bin(&["eval", "1", "2", "6", "0.75", "--method", "pfaff"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(bin(&["figure", "pl", "--grid", "1"]).status.code(), Some(2));
    assert_eq!(bin(&["bogus"]).status.code(), Some(2));
}

#[test]
fn figure_two_points_hit_nodes() {
    let (_, rows) = parse_csv(&stdout(&bin(&["figure", "pl", "--grid", "2"])));
    assert_eq!(rows.len(), 2);
    for r in rows {
        let f: f64 = r[1].parse().unwrap();
        let approx: f64 = r[2].parse().unwrap();
        assert!((f - approx).abs() <= 1e-14);
    }
}

#[test]
fn cf_compare_winners() {
    let last = |args: &[&str]| stdout(&bin(args)).lines().last().unwrap().to_owned();
    assert!(last(&["cf-compare", "1", "2", "6"]).starts_with("# winner: R_l"));
    assert!(last(&["cf-compare", "0", "2", "6"]).starts_with("# winner: tie"));
    assert!(last(&["cf-compare", "2", "1", "7"]).starts_with("# winner: "));
}

#[test]
fn scan_verdicts() {
    let out = bin(&["scan"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.ends_with("# verdict: monotone-decreasing everywhere\n"));
    // 21 a values by 520 c values, plus header and verdict
    assert_eq!(text.lines().count(), 21 * 520 + 2);

    assert_eq!(
        bin(&["scan", "2", "2", "1", "4.1", "30", "0.1"])
            .status
            .code(),
        Some(0)
    );
    let single = bin(&["scan", "0.5", "0.5", "1", "7", "7", "1"]);
    assert_eq!(single.status.code(), Some(0));
    assert!(stdout(&single).contains(",na,-"));
    assert_eq!(
        bin(&["scan", "-4", "0", "0.5", "5", "6", "0.5"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t1.csv");
    let out = bin(&["table", "1", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        golden("table1.csv")
    );

    // the summary line stays on stdout, the CSV goes to the file
    let path = dir.path().join("cf.csv");
    let out = bin(&[
        "cf-compare",
        "1",
        "2",
        "6",
        "--grid",
        "11",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(stdout(&out).starts_with("# winner: R_l"));
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("x,g,r_l,r_r,err_l,err_r\n") && !written.contains('#'));

    let missing = dir.path().join("no/such/dir/x.csv");
    assert_eq!(
        bin(&["table", "1", "--out", missing.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
}
