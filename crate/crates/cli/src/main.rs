//! Command-line surface over the gapcomb library: counting, series and
//! matrix dumps, sequence export, and the identity verification suites.
//!
//! Exit codes separate mathematics from plumbing: 0 means every requested
//! check passed, 1 means an identity was violated (a finding, with the first
//! counterexample location printed), 2 means the invocation itself was
//! invalid.

mod verify;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use gapcomb::enumerate::{gap_compositions, gap_partitions, EnumerateError, GapClass};
use gapcomb::genfun::{
    composition_layer_cutoff, m_step_counts_upto, partition_layer_cutoff, series_c, series_c_at,
    series_c_ge_m, series_p, series_p_le_m, GenfunError, SeriesRequest,
};
use gapcomb::reciprocity::{
    build_gamma, build_mu, gamma_product, MatrixFile, Triangle, TriangleError,
};
use gapcomb::XQSeries;

/// How a run ends, beyond a clean exit.
pub enum Failure {
    /// The invocation was invalid; exits 2.
    Usage(String),
    /// An identity was violated; exits 1.
    Finding(String),
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure::Usage(msg.into())
    }

    fn finding(msg: impl Into<String>) -> Self {
        Failure::Finding(msg.into())
    }
}

impl From<EnumerateError> for Failure {
    fn from(e: EnumerateError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<GenfunError> for Failure {
    fn from(e: GenfunError) -> Self {
        Failure::Usage(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "gapcomb",
    version,
    about = "Exact combinatorics of partitions and compositions with bounded gaps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count or list gap-constrained partitions or compositions
    Count(CountArgs),
    /// Print truncated generating-function coefficients
    Series(SeriesArgs),
    /// Build and export a reciprocal matrix (or a product of gamma matrices)
    Matrix(MatrixArgs),
    /// Run an identity verification suite
    Verify(verify::VerifyArgs),
    /// Emit a registered integer sequence in OEIS b-file format
    Oeis(OeisArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountKind {
    Partitions,
    Compositions,
}

#[derive(Args)]
struct CountArgs {
    kind: CountKind,
    /// Size of the objects to count
    #[arg(long)]
    n: u64,
    /// Gap bound of the class
    #[arg(long)]
    g: u64,
    /// Minimum part of the class (at least 1)
    #[arg(long)]
    s: u64,
    /// Partitions only: keep the largest part at most this
    #[arg(long = "max-part")]
    max_part: Option<u64>,
    /// Compositions only: keep the first part at least this
    #[arg(long = "min-first")]
    min_first: Option<u64>,
    /// Compositions only: keep only m-step objects for this m
    #[arg(long = "m-step")]
    m_step: Option<u64>,
    /// Keep only objects with exactly this many parts
    #[arg(long)]
    length: Option<usize>,
    /// Print the objects instead of the count
    #[arg(long)]
    list: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    /// Partition series P(x, q)
    #[value(name = "P")]
    P,
    /// Bounded partition series (largest part at most m)
    #[value(name = "Ple")]
    Ple,
    /// Composition series C(x, q)
    #[value(name = "C")]
    C,
    /// Restricted composition series (first part at least m)
    #[value(name = "Cge")]
    Cge,
}

#[derive(Args)]
struct SeriesArgs {
    which: SeriesKind,
    #[arg(long)]
    g: u64,
    #[arg(long)]
    s: u64,
    /// Truncation order in q
    #[arg(long = "N")]
    q_order: usize,
    /// Truncation order in x (default: every length that can contribute)
    #[arg(long = "L")]
    x_order: Option<usize>,
    /// Bound parameter (required for Ple and Cge)
    #[arg(long)]
    m: Option<u64>,
    /// Substitute this integer for x before printing
    #[arg(long = "at-x", allow_hyphen_values = true)]
    at_x: Option<i64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MatrixKind {
    Mu,
    Gamma,
    Product,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Bfile,
    Pretty,
}

#[derive(Args)]
struct MatrixArgs {
    which: MatrixKind,
    /// Gap bound; `product` accepts a comma-separated list
    #[arg(long, value_delimiter = ',', required = true)]
    g: Vec<u64>,
    #[arg(long)]
    s: u64,
    #[arg(long)]
    dim: usize,
    #[arg(long, value_enum, default_value = "pretty")]
    format: OutputFormat,
}

#[derive(Args)]
struct OeisArgs {
    /// One of: gap-compositions, m-step, partitions
    sequence: String,
    /// Number of terms to emit
    #[arg(long)]
    terms: usize,
    /// Index of the first term
    #[arg(long, default_value_t = 0)]
    offset: u64,
    #[arg(long)]
    g: Option<u64>,
    #[arg(long)]
    s: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap exits 2 on usage errors and 0 for --help/--version.
        Err(e) => e.exit(),
    };
    let result = match cli.command {
        Command::Count(args) => cmd_count(args),
        Command::Series(args) => cmd_series(args),
        Command::Matrix(args) => cmd_matrix(args),
        Command::Verify(args) => verify::cmd_verify(args),
        Command::Oeis(args) => cmd_oeis(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Finding(msg)) => {
            eprintln!("FAIL: {}", msg);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn gap_class(g: u64, s: u64) -> Result<GapClass, Failure> {
    if s < 1 {
        return Err(Failure::usage("--s must be at least 1"));
    }
    Ok(GapClass::new(g, s))
}

fn cmd_count(args: CountArgs) -> Result<(), Failure> {
    let cls = gap_class(args.g, args.s)?;
    let rendered: Vec<(usize, String)> = match args.kind {
        CountKind::Partitions => {
            if args.min_first.is_some() {
                return Err(Failure::usage("--min-first only applies to compositions"));
            }
            if args.m_step.is_some() {
                return Err(Failure::usage("--m-step only applies to compositions"));
            }
            gap_partitions(args.n, cls, args.max_part)?
                .into_iter()
                .map(|p| (p.len(), format!("{:?}", p.parts())))
                .collect()
        }
        CountKind::Compositions => {
            if args.max_part.is_some() {
                return Err(Failure::usage("--max-part only applies to partitions"));
            }
            gap_compositions(args.n, cls, args.min_first, args.m_step)?
                .into_iter()
                .map(|c| (c.len(), format!("{:?}", c.parts())))
                .collect()
        }
    };
    let selected = rendered
        .into_iter()
        .filter(|(len, _)| args.length.is_none_or(|l| *len == l))
        .map(|(_, text)| text);
    if args.list {
        for line in selected {
            println!("{}", line);
        }
    } else {
        println!("{}", selected.count());
    }
    Ok(())
}

fn coefficients_line(coeffs: &[BigInt]) -> String {
    let mut line = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if i > 0 {
            line.push(' ');
        }
        let _ = write!(line, "{}", c);
    }
    line
}

fn cmd_series(args: SeriesArgs) -> Result<(), Failure> {
    let cls = gap_class(args.g, args.s)?;
    let default_l = match args.which {
        SeriesKind::P | SeriesKind::Ple => partition_layer_cutoff(cls, args.q_order),
        SeriesKind::C | SeriesKind::Cge => composition_layer_cutoff(cls, args.q_order),
    };
    let x_order = args.x_order.unwrap_or(default_l);
    let mut req = SeriesRequest::new(cls, x_order, args.q_order);
    if let Some(m) = args.m {
        req = req.with_bound(m);
    }
    let series: XQSeries = match args.which {
        SeriesKind::P => series_p(&req),
        SeriesKind::Ple => series_p_le_m(&req)
            .map_err(|_| Failure::usage("series Ple requires --m (the largest-part bound)"))?,
        SeriesKind::C => series_c(&req),
        SeriesKind::Cge => series_c_ge_m(&req).map_err(|e| match e {
            GenfunError::MissingBound => {
                Failure::usage("series Cge requires --m (the first-part bound)")
            }
            GenfunError::BoundTooSmall => Failure::usage("series Cge requires --m at least 1"),
        })?,
    };
    match args.at_x {
        Some(x0) => println!("{}", coefficients_line(series.eval_x(x0).coeffs())),
        None => {
            for l in 0..=series.x_order() {
                println!("{}", coefficients_line(series.layer(l).coeffs()));
            }
        }
    }
    Ok(())
}

fn pretty_matrix(t: &Triangle) -> String {
    let dim = t.dim();
    let width = (1..=dim)
        .flat_map(|i| (1..=dim).map(move |j| (i, j)))
        .map(|(i, j)| t.get(i, j).to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for i in 1..=dim {
        for j in 1..=dim {
            if j > 1 {
                out.push(' ');
            }
            let _ = write!(out, "{:>width$}", t.get(i, j).to_string(), width = width);
        }
        out.push('\n');
    }
    out
}

fn cmd_matrix(args: MatrixArgs) -> Result<(), Failure> {
    if args.format == OutputFormat::Bfile {
        return Err(Failure::usage(
            "--format bfile only applies to one-dimensional sequences (try the oeis command)",
        ));
    }
    if args.dim < 1 {
        return Err(Failure::usage("--dim must be at least 1"));
    }
    let (triangle, kind) = match args.which {
        MatrixKind::Mu | MatrixKind::Gamma => {
            let [g] = args.g[..] else {
                return Err(Failure::usage("--g takes a single value for mu and gamma"));
            };
            let cls = gap_class(g, args.s)?;
            match args.which {
                MatrixKind::Mu => {
                    let mu = build_mu(cls, args.dim).map_err(|e| match e {
                        TriangleError::GapNotPositive => Failure::usage(
                            "matrix mu requires --g at least 1: the mu/gamma reciprocity is \
                             stated for positive gap bounds only",
                        ),
                        other => Failure::usage(other.to_string()),
                    })?;
                    (mu, "mu")
                }
                _ => (build_gamma(cls, args.dim), "gamma"),
            }
        }
        MatrixKind::Product => {
            let classes: Vec<GapClass> = args
                .g
                .iter()
                .map(|&g| gap_class(g, args.s))
                .collect::<Result<_, _>>()?;
            let product =
                gamma_product(&classes, args.dim).map_err(|e| Failure::usage(e.to_string()))?;
            (product, "product")
        }
    };
    match args.format {
        OutputFormat::Pretty => print!("{}", pretty_matrix(&triangle)),
        OutputFormat::Csv => print!("{}", triangle.to_csv()),
        OutputFormat::Json => {
            let file = MatrixFile::from_triangle(&triangle, kind, args.g.clone(), args.s);
            let text = serde_json::to_string_pretty(&file)
                .expect("matrix files serialize without fallible types");
            println!("{}", text);
        }
        OutputFormat::Bfile => unreachable!("rejected above"),
    }
    Ok(())
}

fn require_flag<T: Copy>(value: Option<T>, flag: &str, sequence: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::usage(format!("sequence '{}' requires {}", sequence, flag)))
}

fn forbid_flag<T>(value: Option<T>, flag: &str, sequence: &str) -> Result<(), Failure> {
    if value.is_some() {
        return Err(Failure::usage(format!(
            "sequence '{}' does not take {}",
            sequence, flag
        )));
    }
    Ok(())
}

fn cmd_oeis(args: OeisArgs) -> Result<(), Failure> {
    if args.terms == 0 {
        return Ok(());
    }
    let n_max = args.offset as usize + args.terms - 1;
    let values: Vec<BigInt> = match args.sequence.as_str() {
        "gap-compositions" => {
            let g = require_flag(args.g, "--g", &args.sequence)?;
            let s = require_flag(args.s, "--s", &args.sequence)?;
            forbid_flag(args.m, "--m", &args.sequence)?;
            series_c_at(gap_class(g, s)?, 1, n_max).coeffs().to_vec()
        }
        "m-step" => {
            let g = require_flag(args.g, "--g", &args.sequence)?;
            let s = require_flag(args.s, "--s", &args.sequence)?;
            let m = require_flag(args.m, "--m", &args.sequence)?;
            m_step_counts_upto(gap_class(g, s)?, m, n_max)
        }
        "partitions" => {
            forbid_flag(args.g, "--g", &args.sequence)?;
            forbid_flag(args.s, "--s", &args.sequence)?;
            forbid_flag(args.m, "--m", &args.sequence)?;
            series_c_at(GapClass::new(1, 1), 1, n_max).coeffs().to_vec()
        }
        other => {
            return Err(Failure::usage(format!(
                "unknown sequence '{}' (registered: gap-compositions, m-step, partitions)",
                other
            )));
        }
    };
    for (i, value) in values.iter().enumerate().skip(args.offset as usize) {
        println!("{} {}", i, value);
    }
    Ok(())
}
