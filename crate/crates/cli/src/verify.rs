//! Verification suite drivers: thin loops over the library's checkers that
//! print one pass/fail line per cell and surface the first counterexample.

use std::path::PathBuf;

use clap::{Args, ValueEnum};

use gapcomb::enumerate::GapClass;
use gapcomb::genfun::{
    verify_euler_inverse, verify_euler_pochhammer, verify_ratio_identity, verify_step_identity,
};
use gapcomb::involution::verify_involution;
use gapcomb::reciprocity::{
    build_gamma, build_mu, check_inverse, check_mutual_inverse, MatrixFile, TriangleError,
};

use crate::Failure;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// mu and gamma are mutual inverses at finite truncation
    Inverse,
    /// The m-step counts convolve with the bounded series to 1
    Kidentity,
    /// The restricted composition series is the bounded-over-full quotient
    Gm,
    /// The alternating bounded sums collapse to finite products
    Euler,
    /// The weight-flipping involution satisfies all of its properties
    Involution,
    /// Everything above, at the default ranges
    All,
}

#[derive(Args)]
pub struct VerifyArgs {
    suite: Suite,
    /// Restrict to a single gap bound (default: the suite's range)
    #[arg(long)]
    g: Option<u64>,
    /// Restrict to a single minimum part (default: the suite's range)
    #[arg(long)]
    s: Option<u64>,
    /// Restrict to a single bound parameter (default: the suite's range)
    #[arg(long)]
    m: Option<u64>,
    /// Truncation order in q
    #[arg(long = "N")]
    q_order: Option<usize>,
    /// Matrix dimension for the inverse suite
    #[arg(long)]
    dim: Option<usize>,
    /// Total-size bound for the involution suite
    #[arg(long)]
    bound: Option<u64>,
    /// Check a stored matrix (JSON) against its freshly built counterpart
    #[arg(long = "from-file")]
    from_file: Option<PathBuf>,
}

struct Cell {
    label: String,
    failure: Option<String>,
}

fn range(single: Option<u64>, default: std::ops::RangeInclusive<u64>) -> Vec<u64> {
    match single {
        Some(v) => vec![v],
        None => default.collect(),
    }
}

fn run_inverse(args: &VerifyArgs) -> Result<Vec<Cell>, Failure> {
    let dim = args.dim.unwrap_or(30);
    let mut cells = Vec::new();
    for g in range(args.g, 1..=4) {
        for s in range(args.s, 1..=3) {
            let cls = GapClass::new(g, s);
            let outcome = check_inverse(cls, dim).map_err(|e| match e {
                TriangleError::GapNotPositive => Failure::usage(
                    "verify inverse requires --g at least 1: the mu/gamma reciprocity is stated \
                     for positive gap bounds only",
                ),
                other => Failure::usage(other.to_string()),
            })?;
            cells.push(Cell {
                label: format!("inverse    g={} s={} dim={}", g, s, dim),
                failure: outcome.map(|m| m.to_string()),
            });
        }
    }
    Ok(cells)
}

fn run_kidentity(args: &VerifyArgs) -> Result<Vec<Cell>, Failure> {
    let q_order = args.q_order.unwrap_or(40);
    let mut cells = Vec::new();
    for g in range(args.g, 0..=4) {
        for s in range(args.s, 1..=3) {
            for m in range(args.m, 1..=8) {
                if m < 1 {
                    return Err(Failure::usage("--m must be at least 1 for kidentity"));
                }
                let cls = GapClass::new(g, s);
                let failure = verify_step_identity(cls, m, q_order).map(|f| {
                    format!(
                        "coefficient of q^{} is {}, expected {}",
                        f.degree,
                        f.value,
                        u8::from(f.degree == 0)
                    )
                });
                cells.push(Cell {
                    label: format!("kidentity  g={} s={} m={} N={}", g, s, m, q_order),
                    failure,
                });
            }
        }
    }
    Ok(cells)
}

fn run_gm(args: &VerifyArgs) -> Result<Vec<Cell>, Failure> {
    let q_order = args.q_order.unwrap_or(24);
    let x_order = 6;
    let mut cells = Vec::new();
    for g in range(args.g, 0..=4) {
        for s in range(args.s, 1..=3) {
            for m in range(args.m, 1..=6) {
                if m < 1 {
                    return Err(Failure::usage("--m must be at least 1 for gm"));
                }
                let cls = GapClass::new(g, s);
                let failure = verify_ratio_identity(cls, m, x_order, q_order).map(|f| {
                    format!(
                        "coefficient of x^{} q^{} is {}, expected {}",
                        f.x_power, f.degree, f.got, f.expected
                    )
                });
                cells.push(Cell {
                    label: format!(
                        "gm         g={} s={} m={} L={} N={}",
                        g, s, m, x_order, q_order
                    ),
                    failure,
                });
            }
        }
    }
    Ok(cells)
}

fn run_euler(args: &VerifyArgs) -> Result<Vec<Cell>, Failure> {
    let q_order = args.q_order.unwrap_or(40);
    let mut cells = Vec::new();
    for m in range(args.m, 1..=12) {
        let pochhammer = verify_euler_pochhammer(m, q_order)
            .map(|degree| format!("first failing degree q^{}", degree));
        cells.push(Cell {
            label: format!("euler      pochhammer-form m={} N={}", m, q_order),
            failure: pochhammer,
        });
        let inverse = verify_euler_inverse(m, q_order)
            .map(|degree| format!("first failing degree q^{}", degree));
        cells.push(Cell {
            label: format!("euler      inverse-form m={} N={}", m, q_order),
            failure: inverse,
        });
    }
    Ok(cells)
}

fn run_involution(args: &VerifyArgs) -> Result<Vec<Cell>, Failure> {
    let bound = args.bound.unwrap_or(14);
    let mut cells = Vec::new();
    for g in range(args.g, 0..=3) {
        for s in range(args.s, 1..=2) {
            let cls = GapClass::new(g, s);
            let report = verify_involution(cls, bound)?;
            cells.push(Cell {
                label: format!(
                    "involution g={} s={} bound={} pairs={}",
                    g, s, bound, report.pairs_checked
                ),
                failure: report.violations.first().map(|v| v.to_string()),
            });
        }
    }
    Ok(cells)
}

fn run_from_file(args: &VerifyArgs, path: &PathBuf) -> Result<(), Failure> {
    if args.suite != Suite::Inverse {
        return Err(Failure::usage(
            "--from-file only applies to the inverse suite",
        ));
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {}", path.display(), e)))?;
    let file: MatrixFile = serde_json::from_str(&text)
        .map_err(|e| Failure::usage(format!("malformed matrix file: {}", e)))?;
    let [g] = file.g[..] else {
        return Err(Failure::usage(
            "matrix files for the inverse check carry a single g",
        ));
    };
    if file.s < 1 {
        return Err(Failure::usage(
            "matrix file has s = 0; the minimum part is at least 1",
        ));
    }
    let cls = GapClass::new(g, file.s);
    let stored = file.to_triangle().map_err(|e| match e {
        TriangleError::NotLowerTriangular { row, col } => Failure::finding(format!(
            "stored {} matrix entry ({}, {}) above the diagonal is nonzero",
            file.kind, row, col
        )),
        other => Failure::usage(other.to_string()),
    })?;
    let (mu, gamma) = match file.kind.as_str() {
        "mu" => (stored, build_gamma(cls, file.dim)),
        "gamma" => {
            let mu = build_mu(cls, file.dim).map_err(|e| match e {
                TriangleError::GapNotPositive => {
                    Failure::usage("the stored gamma has g = 0, for which no mu counterpart exists")
                }
                other => Failure::usage(other.to_string()),
            })?;
            (mu, stored)
        }
        other => {
            return Err(Failure::usage(format!(
                "matrix file kind {:?} cannot join an inverse check (expected mu or gamma)",
                other
            )));
        }
    };
    let label = format!(
        "inverse    g={} s={} dim={} from-file={}",
        g,
        file.s,
        file.dim,
        path.display()
    );
    match check_mutual_inverse(&mu, &gamma).map_err(|e| Failure::usage(e.to_string()))? {
        None => {
            println!("{}  pass", label);
            Ok(())
        }
        Some(mismatch) => {
            println!("{}  FAIL  {}", label, mismatch);
            Err(Failure::finding(mismatch.to_string()))
        }
    }
}

pub fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    if args.s == Some(0) {
        return Err(Failure::usage("--s must be at least 1"));
    }
    if let Some(path) = args.from_file.clone() {
        return run_from_file(&args, &path);
    }
    let mut cells = Vec::new();
    match args.suite {
        Suite::Inverse => cells.extend(run_inverse(&args)?),
        Suite::Kidentity => cells.extend(run_kidentity(&args)?),
        Suite::Gm => cells.extend(run_gm(&args)?),
        Suite::Euler => cells.extend(run_euler(&args)?),
        Suite::Involution => cells.extend(run_involution(&args)?),
        Suite::All => {
            cells.extend(run_inverse(&args)?);
            cells.extend(run_kidentity(&args)?);
            cells.extend(run_gm(&args)?);
            cells.extend(run_euler(&args)?);
            cells.extend(run_involution(&args)?);
        }
    }
    let mut first_failure = None;
    for cell in &cells {
        match &cell.failure {
            None => println!("{}  pass", cell.label),
            Some(detail) => {
                println!("{}  FAIL  {}", cell.label, detail);
                if first_failure.is_none() {
                    first_failure = Some(format!("{}: {}", cell.label.trim_end(), detail));
                }
            }
        }
    }
    match first_failure {
        None => Ok(()),
        Some(message) => Err(Failure::finding(message)),
    }
}
