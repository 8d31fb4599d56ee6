//! Command-line front end. Every subcommand validates its inputs, computes,
//! then renders either JSON or an aligned plain-text table carrying the same
//! numbers.
//!
//! Exit status: `0` on success, `2` for invalid requests, `3` when the
//! obstruction polynomial is identically zero.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::branched_cover::{
    cover_report, obstruction_polynomial, obstruction_value, CoverInput, CoverReport, Obstruction,
};
use crate::chern_calculus::{
    cpn_data, pontrjagin_class, pontrjagin_number, ratio_cpn, ChernData, ChernPoly,
};
use crate::error::Error;
use crate::exact_algebra::{Partition, Partitions, Rational};
use crate::hirzebruch_genera::{
    alpha_expansion, l_polynomial, proportionality_constant, signature, LPolynomial,
};
use crate::power_series::sign_series;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "chern-ratios",
    version,
    about = "Exact Chern, Pontrjagin and signature computations for CP^n and cyclic branched covers"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the partitions of n.
    Partitions {
        #[arg(long)]
        n: u32,
    },
    /// Chern numbers of CP^n.
    ChernCpn {
        #[arg(long)]
        n: u32,
    },
    /// Ratio c_I(CP^n) / c_J(CP^n).
    Ratios {
        #[arg(long)]
        n: u32,
        /// Numerator partition, e.g. 3,1.
        #[arg(long)]
        num: Partition,
        /// Denominator partition, e.g. 4.
        #[arg(long)]
        den: Partition,
    },
    /// Pontrjagin classes in Chern classes, and Pontrjagin numbers of a manifold.
    Pontryagin {
        #[command(flatten)]
        manifold: ManifoldArgs,
    },
    /// The k-th L-polynomial in p_1..p_k.
    LGenus {
        /// Weight of the polynomial.
        #[arg(long)]
        k: u32,
    },
    /// Signature from Chern numbers via the L-genus.
    Signature {
        #[command(flatten)]
        manifold: ManifoldArgs,
    },
    /// Expansion of the cyclic-cover signature function sign(t).
    SignSeries {
        /// Branching degree.
        #[arg(long)]
        d: i64,
        /// Coefficients are kept through t^order.
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// Invariants of a cyclic branched cover.
    Cover {
        #[command(flatten)]
        cover: CoverArgs,
    },
    /// The obstruction polynomial in d and its integer roots.
    Obstruction {
        #[command(flatten)]
        cover: CoverArgs,
    },
}

/// A manifold given by Chern numbers: CP^n scaled by `--scale`, or a JSON file.
#[derive(Debug, Args)]
pub struct ManifoldArgs {
    /// Complex dimension; the manifold defaults to CP^n.
    #[arg(long, required_unless_present = "data")]
    pub n: Option<u32>,
    /// Multiply every Chern number of CP^n by this factor.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "data")]
    pub scale: Option<Rational>,
    /// Chern data file: {"n": .., "numbers": {"[2]": "3", ..}}.
    #[arg(long)]
    pub data: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CoverArgs {
    /// Cover description as JSON; replaces the individual flags.
    #[arg(long, conflicts_with_all = ["n", "d", "m", "chi_m", "chi_n", "normal_chern", "sigma_m"])]
    pub input: Option<PathBuf>,
    /// Complex dimension of the cover, even.
    #[arg(long, required_unless_present = "input")]
    pub n: Option<u32>,
    /// Branching degree.
    #[arg(long, required_unless_present = "input", allow_hyphen_values = true)]
    pub d: Option<i64>,
    /// Number of sheets of the unbranched cover M' -> M.
    #[arg(long, default_value_t = 1)]
    pub m: u64,
    /// Euler characteristic of the base M.
    #[arg(long, required_unless_present = "input", allow_hyphen_values = true)]
    pub chi_m: Option<Rational>,
    /// Euler characteristic of the divisor N.
    #[arg(long, required_unless_present = "input", allow_hyphen_values = true)]
    pub chi_n: Option<Rational>,
    /// Top normal Chern numbers c_k((N'_k)^perp), k = 1..n/2, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub normal_chern: Option<Vec<Rational>>,
    /// Signature of the base M; defaults to chi(M)/(n+1).
    #[arg(long, allow_hyphen_values = true)]
    pub sigma_m: Option<Rational>,
    /// Largest d searched for integer roots of the obstruction.
    #[arg(long, default_value_t = 1000)]
    pub scan_bound: i64,
}

impl CoverArgs {
    fn resolve(&self) -> Result<CoverInput, Error> {
        let input = match &self.input {
            Some(path) => read_json::<CoverInput>(path)?,
            None => CoverInput {
                n: self.n.unwrap_or_default(),
                d: self.d.unwrap_or_default(),
                m: self.m,
                chi_m: self.chi_m.clone().unwrap_or_default(),
                chi_n: self.chi_n.clone().unwrap_or_default(),
                normal_chern: self.normal_chern.clone(),
                sigma_m: self.sigma_m.clone(),
            },
        };
        input.validate()?;
        Ok(input)
    }
}

impl ManifoldArgs {
    fn resolve(&self) -> Result<ChernData, Error> {
        if let Some(path) = &self.data {
            let data = read_json::<ChernData>(path)?;
            if let Some(n) = self.n {
                if n != data.n() {
                    return Err(Error::InvalidInput(format!(
                        "--n {n} disagrees with data file dimension {}",
                        data.n()
                    )));
                }
            }
            return Ok(data);
        }
        let data = cpn_data(self.n.unwrap_or_default())?;
        Ok(match &self.scale {
            Some(s) => data.scaled(s),
            None => data,
        })
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::InvalidInput(format!("malformed {}: {e}", path.display())))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioReport {
    pub n: u32,
    pub num: Partition,
    pub den: Partition,
    pub ratio: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PontrjaginClassEntry {
    pub k: u32,
    pub polynomial: ChernPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PontrjaginNumberEntry {
    pub partition: Partition,
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PontrjaginReport {
    pub n: u32,
    pub classes: Vec<PontrjaginClassEntry>,
    pub numbers: Vec<PontrjaginNumberEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureReport {
    pub n: u32,
    pub signature: Rational,
    pub euler_characteristic: Rational,
    pub proportionality_constant: Rational,
    pub alpha_expansion: ChernPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignSeriesReport {
    pub d: i64,
    pub order: usize,
    pub coefficients: crate::power_series::TruncatedSeries,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub input: CoverInput,
    pub value_at_d: Rational,
    pub identically_zero: bool,
    pub obstruction: Option<Obstruction>,
}

/// Parses `args` (including the program name) and runs the command, writing
/// the report to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            let line = rendered
                .lines()
                .next()
                .unwrap_or("error: invalid arguments");
            let _ = writeln!(err, "{line}");
            return EXIT_INVALID;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(CliError::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

#[derive(Debug)]
enum CliError {
    Domain(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Two-column key/value block, keys padded to a common width.
fn write_pairs(out: &mut dyn Write, pairs: &[(&str, String)]) -> io::Result<()> {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (k, v) in pairs {
        writeln!(out, "{k:<width$}  {v}")?;
    }
    Ok(())
}

/// Column-aligned table with a header row.
fn write_table(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> io::Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    writeln!(out, "{}", line(header.to_vec()))?;
    for row in rows {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn opt<T: ToString>(value: &Option<T>) -> String {
    value
        .as_ref()
        .map_or_else(|| "-".to_string(), ToString::to_string)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Partitions { n } => {
            // Streamed: p(n) grows too fast to buffer the table.
            let mut count = 0usize;
            if json {
                write!(out, "{{\"n\":{n},\"partitions\":[")?;
                for p in Partitions::new(*n) {
                    if count > 0 {
                        write!(out, ",")?;
                    }
                    write!(out, "{}", serde_json::to_string(&p)?)?;
                    count += 1;
                }
                writeln!(out, "],\"count\":{count}}}")?;
            } else {
                writeln!(out, "{:>8}  partition", "#")?;
                for p in Partitions::new(*n) {
                    count += 1;
                    writeln!(out, "{count:>8}  {p}")?;
                }
                writeln!(out, "count {count}")?;
            }
        }
        Command::ChernCpn { n } => {
            let data = cpn_data(*n)?;
            if json {
                emit_json(out, &data)?;
            } else {
                writeln!(out, "n = {}", data.n())?;
                let rows: Vec<Vec<String>> = data
                    .numbers()
                    .map(|(p, c)| vec![p.to_string(), c.to_string()])
                    .collect();
                write_table(out, &["partition", "c_I"], &rows)?;
            }
        }
        Command::Ratios { n, num, den } => {
            let report = RatioReport {
                n: *n,
                num: num.clone(),
                den: den.clone(),
                ratio: ratio_cpn(*n, num, den)?,
            };
            if json {
                emit_json(out, &report)?;
            } else {
                write_pairs(
                    out,
                    &[
                        ("n", report.n.to_string()),
                        ("num", report.num.to_string()),
                        ("den", report.den.to_string()),
                        ("ratio", report.ratio.to_string()),
                    ],
                )?;
            }
        }
        Command::Pontryagin { manifold } => {
            let data = manifold.resolve()?;
            let n = data.n();
            if n % 2 == 1 {
                return Err(Error::OddDimension(n).into());
            }
            let classes = (1..=n / 2)
                .map(|k| {
                    Ok(PontrjaginClassEntry {
                        k,
                        polynomial: pontrjagin_class(k, n)?,
                    })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            let numbers = Partitions::new(n / 2)
                .map(|p| {
                    let value = pontrjagin_number(&p, &data)?;
                    Ok(PontrjaginNumberEntry {
                        partition: p,
                        value,
                    })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            let report = PontrjaginReport {
                n,
                classes,
                numbers,
            };
            if json {
                emit_json(out, &report)?;
            } else {
                writeln!(out, "n = {n}")?;
                let rows: Vec<Vec<String>> = report
                    .classes
                    .iter()
                    .map(|c| vec![format!("p{}", c.k), c.polynomial.to_string()])
                    .collect();
                write_table(out, &["class", "in Chern classes"], &rows)?;
                writeln!(out)?;
                let rows: Vec<Vec<String>> = report
                    .numbers
                    .iter()
                    .map(|e| vec![e.partition.to_string(), e.value.to_string()])
                    .collect();
                write_table(out, &["partition", "p_I"], &rows)?;
            }
        }
        Command::LGenus { k } => {
            if *k == 0 {
                return Err(Error::InvalidInput("k must be at least 1".into()).into());
            }
            let l: LPolynomial = l_polynomial(*k);
            if json {
                emit_json(out, &l)?;
            } else {
                writeln!(out, "L_{k} = {l}")?;
                let rows: Vec<Vec<String>> = l
                    .terms()
                    .map(|(p, c)| vec![p.to_string(), c.to_string()])
                    .collect();
                write_table(out, &["pontrjagin_partition", "coefficient"], &rows)?;
            }
        }
        Command::Signature { manifold } => {
            let data = manifold.resolve()?;
            let n = data.n();
            let report = SignatureReport {
                n,
                signature: signature(&data)?,
                euler_characteristic: data.euler_characteristic(),
                proportionality_constant: proportionality_constant(n)?,
                alpha_expansion: alpha_expansion(n)?,
            };
            if json {
                emit_json(out, &report)?;
            } else {
                write_pairs(
                    out,
                    &[
                        ("n", n.to_string()),
                        ("signature", report.signature.to_string()),
                        (
                            "euler_characteristic",
                            report.euler_characteristic.to_string(),
                        ),
                        (
                            "proportionality_constant",
                            report.proportionality_constant.to_string(),
                        ),
                    ],
                )?;
                writeln!(out)?;
                let rows: Vec<Vec<String>> = report
                    .alpha_expansion
                    .terms()
                    .map(|(p, c)| vec![p.to_string(), c.to_string()])
                    .collect();
                write_table(out, &["partition", "alpha"], &rows)?;
            }
        }
        Command::SignSeries { d, order } => {
            let report = SignSeriesReport {
                d: *d,
                order: *order,
                coefficients: sign_series(*d, *order)?,
            };
            if json {
                emit_json(out, &report)?;
            } else {
                writeln!(out, "d = {d}")?;
                let rows: Vec<Vec<String>> = report
                    .coefficients
                    .coefficients()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| vec![k.to_string(), c.to_string()])
                    .collect();
                write_table(out, &["degree", "coefficient"], &rows)?;
            }
        }
        Command::Cover { cover } => {
            let input = cover.resolve()?;
            let report: CoverReport = cover_report(&input, cover.scan_bound)?;
            if json {
                emit_json(out, &report)?;
            } else {
                write_cover_table(out, &report)?;
            }
            if report.obstruction_identically_zero {
                return Ok(EXIT_DEGENERATE);
            }
        }
        Command::Obstruction { cover } => {
            let input = cover.resolve()?;
            let value_at_d = obstruction_value(&input, input.d)?;
            let (obstruction, identically_zero) =
                match obstruction_polynomial(&input, cover.scan_bound) {
                    Ok(o) => (Some(o), false),
                    Err(Error::DegenerateObstruction) => (None, true),
                    Err(e) => return Err(e.into()),
                };
            let report = ObstructionReport {
                input,
                value_at_d,
                identically_zero,
                obstruction,
            };
            if json {
                emit_json(out, &report)?;
            } else {
                let mut pairs = vec![
                    ("n", report.input.n.to_string()),
                    ("d", report.input.d.to_string()),
                    ("value_at_d", report.value_at_d.to_string()),
                    ("identically_zero", report.identically_zero.to_string()),
                ];
                if let Some(o) = &report.obstruction {
                    pairs.push(("polynomial", join(o.polynomial.coefficients())));
                    pairs.push(("T(d)", o.polynomial.to_string()));
                    pairs.push(("scan_bound", o.scan_bound.to_string()));
                    pairs.push(("roots", join(&o.roots)));
                }
                write_pairs(out, &pairs)?;
            }
            if report.identically_zero {
                return Ok(EXIT_DEGENERATE);
            }
        }
    }
    Ok(EXIT_OK)
}

fn write_cover_table(out: &mut dyn Write, r: &CoverReport) -> io::Result<()> {
    let mut pairs = vec![
        ("n", r.input.n.to_string()),
        ("d", r.input.d.to_string()),
        ("m", r.input.m.to_string()),
        ("chi_m", r.input.chi_m.to_string()),
        ("chi_n", r.input.chi_n.to_string()),
        ("chi_m_prime", r.chi_m_prime.to_string()),
        ("chi_n_prime", r.chi_n_prime.to_string()),
        ("sigma_m_prime", r.sigma_m_prime.to_string()),
        ("tower_coefficients", join(&r.tower_coefficients)),
        ("sigma_y", join(&r.sigma_y)),
        ("sigma_x", r.sigma_x.to_string()),
        ("chi_x", r.chi_x.to_string()),
        ("defect_n2", opt(&r.defect_n2)),
        ("defect_n2_closed_form", opt(&r.defect_n2_closed_form)),
        ("defect_slope_per_m", opt(&r.defect_slope_per_m)),
        (
            "euler_term_slope_per_m",
            r.euler_term_slope_per_m.to_string(),
        ),
        ("obstruction_at_d", r.obstruction_at_d.to_string()),
        (
            "obstruction_identically_zero",
            r.obstruction_identically_zero.to_string(),
        ),
    ];
    if let Some(o) = &r.obstruction {
        pairs.push(("obstruction", join(o.polynomial.coefficients())));
        pairs.push(("scan_bound", o.scan_bound.to_string()));
        pairs.push(("roots", join(&o.roots)));
    }
    write_pairs(out, &pairs)
}
