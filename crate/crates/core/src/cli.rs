//! Command-line front end.
//!
//! Every command returns [`OutputRecord`]s whose payload is already rendered
//! to strings, so the three output formats (aligned text, CSV, JSON lines)
//! come out of one code path and are byte-for-byte deterministic.

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rug::ops::Pow;
use rug::Integer;

use crate::bounds::PositiveConstant;
use crate::bounds::{banerjee_bounds, nu, thm1_bounds, thm2_bounds, thm3_bounds, BoundsReport};
use crate::coefficients::{coeff_asymptotic, coeff_bound, coeff_c};
use crate::error::{Error, Result};
use crate::exact_partition::{partition_pentagonal, PartitionTable};
use crate::expansion::{recommended_digits, remainder_adaptive, RemainderResult};
use crate::numerics::{PrecisionContext, Real};
use crate::verify::{run_suite, Suite, SuiteReport, VerifyConfig, MAX_SWEEP_DIGITS};

/// Table commands refuse to run below this many digits.
pub const TABLE_MIN_DIGITS: u32 = 50;
/// Significant digits of the mantissa in table-style rendering.
pub const TABLE_DECIMALS: usize = 10;
/// Significant digits used for coefficient dumps.
pub const COEFF_DIGITS: usize = 30;
/// Significant digits used for single remainder values.
pub const VALUE_DIGITS: usize = 20;

/// The blocks of the first table: `(n, N)`.
pub const TABLE1_CASES: [(usize, usize); 4] = [(200, 4), (500, 6), (200, 5), (500, 7)];
/// The blocks of the second table: `(n, N, C)`.
pub const TABLE2_CASES: [(usize, usize, &str); 4] = [
    (500, 6, "1/4"),
    (1000, 10, "5839"),
    (500, 7, "24"),
    (1000, 11, "866061"),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecordKind {
    Value,
    Table1Row,
    Table2Row,
    SweepResult,
    CoeffRow,
}

impl fmt::Display for RecordKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RecordKind::Value => "value",
            RecordKind::Table1Row => "table1_row",
            RecordKind::Table2Row => "table2_row",
            RecordKind::SweepResult => "sweep_result",
            RecordKind::CoeffRow => "coeff_row",
        })
    }
}

/// One line of output: ordered key/value pairs, values already rendered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutputRecord {
    pub kind: RecordKind,
    pub payload: Vec<(String, String)>,
}

impl OutputRecord {
    pub fn new(kind: RecordKind) -> Self {
        Self {
            kind,
            payload: Vec::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<String>) -> Self {
        self.payload.push((key.to_string(), value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.payload
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    fn keys(&self) -> Vec<&str> {
        self.payload.iter().map(|(k, _)| k.as_str()).collect()
    }
}

/// Renders values as `±0.dddddddddde±x` with a common exponent chosen so the
/// largest magnitude has its mantissa in `[0.1, 1)`, and `decimals` digits
/// after the point for every entry, rounded to nearest.
pub fn render_block(values: &[Real], decimals: usize) -> Vec<String> {
    let Some(mut exponent) = values
        .iter()
        .filter_map(|v| v.decimal_exponent())
        .max()
        .map(|e| e + 1)
    else {
        return values
            .iter()
            .map(|_| format!("0.{}e0", "0".repeat(decimals)))
            .collect();
    };
    let limit = Integer::from(10).pow(decimals as u32);
    loop {
        let digits: Vec<Integer> = values
            .iter()
            .map(|v| scaled_mantissa(v, decimals as i64 - exponent))
            .collect();
        // rounding can carry the largest mantissa up to exactly 1
        if digits.iter().any(|d| d.clone().abs() >= limit) {
            exponent += 1;
            continue;
        }
        return digits
            .iter()
            .map(|d| {
                let sign = if *d < 0 { "-" } else { "" };
                let body = format!("{:0>width$}", d.clone().abs().to_string(), width = decimals);
                format!("{sign}0.{body}e{exponent}")
            })
            .collect();
    }
}

fn scaled_mantissa(v: &Real, shift: i64) -> Integer {
    let ctx = v.context();
    let ten = Real::from_i64(10, ctx);
    let scale = if shift >= 0 {
        ten.powi(shift as i32)
    } else {
        ten.powi(-shift as i32).recip().expect("nonzero")
    };
    (v * scale).round_to_integer()
}

/// One value in block style.
pub fn render_value(value: &Real, decimals: usize) -> String {
    render_block(std::slice::from_ref(value), decimals).remove(0)
}

fn require_table_digits(ctx: PrecisionContext) -> Result<()> {
    if ctx.digits() < TABLE_MIN_DIGITS {
        return Err(Error::InvalidPrecision {
            digits: ctx.digits(),
            min: TABLE_MIN_DIGITS,
        });
    }
    Ok(())
}

/// `p(0..=n_max)`, read from or written to `cache` when given.
pub fn partition_table(n_max: usize, cache: Option<&Path>) -> Result<PartitionTable> {
    match cache {
        Some(path) => PartitionTable::load_or_build(path, n_max),
        None => partition_pentagonal(n_max),
    }
}

// At least `ctx`, and at least the precision recommended for `n`.
fn context_for(n: usize, ctx: PrecisionContext) -> Result<PrecisionContext> {
    let want = recommended_digits(n);
    if ctx.digits() >= want {
        Ok(ctx)
    } else {
        PrecisionContext::new(want)
    }
}

fn remainder(
    n: usize,
    terms: usize,
    table: &PartitionTable,
    ctx: PrecisionContext,
) -> Result<RemainderResult> {
    remainder_adaptive(n, terms, table, context_for(n, ctx)?, MAX_SWEEP_DIGITS)
}

pub fn cmd_partition(n: usize, cache: Option<&Path>) -> Result<OutputRecord> {
    let table = partition_table(n, cache)?;
    let p = table.get(n).expect("table covers n");
    Ok(OutputRecord::new(RecordKind::Value)
        .with("n", n.to_string())
        .with("p(n)", p.to_string()))
}

/// `c_m`, its bound and its asymptotic form for `m` in `0..=m_max`.
pub fn cmd_coeff(m_max: usize, ctx: PrecisionContext) -> Vec<OutputRecord> {
    (0..=m_max)
        .map(|m| {
            OutputRecord::new(RecordKind::CoeffRow)
                .with("m", m.to_string())
                .with("c_m", coeff_c(m, ctx).to_sci_string(COEFF_DIGITS))
                .with("bound", coeff_bound(m, ctx).to_sci_string(COEFF_DIGITS))
                .with(
                    "asymptotic",
                    coeff_asymptotic(m, ctx).to_sci_string(COEFF_DIGITS),
                )
        })
        .collect()
}

pub fn cmd_remainder(
    n: usize,
    terms: usize,
    ctx: PrecisionContext,
    cache: Option<&Path>,
) -> Result<OutputRecord> {
    let table = partition_table(n, cache)?;
    let r = remainder(n, terms, &table, ctx)?;
    let theta = r
        .theta
        .as_ref()
        .map_or_else(|| "-".to_string(), |t| t.to_sci_string(VALUE_DIGITS));
    Ok(OutputRecord::new(RecordKind::Value)
        .with("n", n.to_string())
        .with("N", terms.to_string())
        .with("R", r.remainder.to_sci_string(VALUE_DIGITS))
        .with("theta", theta))
}

/// Which bound `cmd_bounds` evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BoundKind {
    Thm1,
    Thm2,
    Thm3,
    Banerjee,
}

pub fn cmd_bounds(
    n: usize,
    terms: usize,
    kind: BoundKind,
    constant: Option<&PositiveConstant>,
    ctx: PrecisionContext,
    cache: Option<&Path>,
) -> Result<OutputRecord> {
    let c = context_for(n, ctx)?;
    let report = match kind {
        BoundKind::Thm1 => thm1_bounds(n, terms, c)?,
        BoundKind::Thm2 => thm2_bounds(n, terms, c)?,
        BoundKind::Banerjee => banerjee_bounds(n, terms, c)?,
        BoundKind::Thm3 => {
            let constant = constant
                .ok_or_else(|| Error::Domain("the C-constant bound needs --constant".into()))?;
            thm3_bounds(n, terms, constant, c)?
        }
    };
    let table = partition_table(n, cache)?;
    let r = remainder(n, terms, &table, c)?.remainder;
    let rendered = render_block(
        &[r.clone(), report.lower.clone(), report.upper.clone()],
        TABLE_DECIMALS,
    );
    let mut rec = OutputRecord::new(RecordKind::Value)
        .with("theorem", report.theorem.to_string())
        .with("n", n.to_string())
        .with("N", terms.to_string());
    if let Some(k) = &report.constant {
        rec = rec.with("C", k.to_string());
    }
    Ok(rec
        .with("R", rendered[0].clone())
        .with("lower", rendered[1].clone())
        .with("upper", rendered[2].clone())
        .with("valid", report.valid.to_string())
        .with("encloses", report.encloses(&r).to_string()))
}

pub fn cmd_nu(
    terms: usize,
    constant: &PositiveConstant,
    ctx: PrecisionContext,
) -> Result<OutputRecord> {
    let v = nu(terms, constant, ctx)?;
    Ok(OutputRecord::new(RecordKind::Value)
        .with("N", terms.to_string())
        .with("C", constant.to_string())
        .with("nu", v.to_string()))
}

fn table_row(kind: RecordKind, report: &BoundsReport, r: &Real) -> OutputRecord {
    let rendered = render_block(
        &[r.clone(), report.lower.clone(), report.upper.clone()],
        TABLE_DECIMALS,
    );
    let mut rec = OutputRecord::new(kind)
        .with("n", report.n.to_string())
        .with("N", report.terms.to_string());
    if let Some(c) = &report.constant {
        rec = rec.with("C", c.to_string());
    }
    rec.with("R", rendered[0].clone())
        .with("lower", rendered[1].clone())
        .with("upper", rendered[2].clone())
}

/// Exact remainders against the first-omitted-term bounds.
pub fn cmd_table1(ctx: PrecisionContext, cache: Option<&Path>) -> Result<Vec<OutputRecord>> {
    require_table_digits(ctx)?;
    let n_max = TABLE1_CASES.iter().map(|c| c.0).max().unwrap_or(0);
    let table = partition_table(n_max, cache)?;
    TABLE1_CASES
        .iter()
        .map(|&(n, terms)| {
            let r = remainder(n, terms, &table, ctx)?.remainder;
            let b = thm1_bounds(n, terms, ctx)?;
            Ok(table_row(RecordKind::Table1Row, &b, &r))
        })
        .collect()
}

/// Exact remainders against the bounds with an explicit constant `C`.
pub fn cmd_table2(ctx: PrecisionContext, cache: Option<&Path>) -> Result<Vec<OutputRecord>> {
    require_table_digits(ctx)?;
    let n_max = TABLE2_CASES.iter().map(|c| c.0).max().unwrap_or(0);
    let table = partition_table(n_max, cache)?;
    TABLE2_CASES
        .iter()
        .map(|&(n, terms, constant)| {
            let constant: PositiveConstant = constant.parse()?;
            let r = remainder(n, terms, &table, ctx)?.remainder;
            let b = thm3_bounds(n, terms, &constant, ctx)?;
            Ok(table_row(RecordKind::Table2Row, &b, &r))
        })
        .collect()
}

pub fn cmd_verify(
    suite: Suite,
    config: &VerifyConfig,
    ctx: PrecisionContext,
) -> Result<(SuiteReport, OutputRecord)> {
    let report = run_suite(suite, config, ctx)?;
    let rec = OutputRecord::new(RecordKind::SweepResult)
        .with("suite", suite.name())
        .with("checked", report.checked.to_string())
        .with("status", if report.passed() { "pass" } else { "fail" })
        .with(
            "counterexample",
            report.counterexample.clone().unwrap_or_else(|| "-".into()),
        );
    Ok((report, rec))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Human,
    Csv,
    Json,
}

// Consecutive records sharing the same keys form one table/CSV section.
fn sections(records: &[OutputRecord]) -> Vec<&[OutputRecord]> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=records.len() {
        if i == records.len() || records[i].keys() != records[start].keys() {
            if start < i {
                out.push(&records[start..i]);
            }
            start = i;
        }
    }
    out
}

/// Writes `records` in the requested format.
pub fn write_records(out: &mut dyn Write, records: &[OutputRecord], format: Format) -> Result<()> {
    match format {
        Format::Human => write_human(out, records),
        Format::Csv => write_csv(out, records),
        Format::Json => write_json(out, records),
    }
}

fn write_human(out: &mut dyn Write, records: &[OutputRecord]) -> Result<()> {
    for (i, section) in sections(records).into_iter().enumerate() {
        if i > 0 {
            writeln!(out)?;
        }
        let keys = section[0].keys();
        let widths: Vec<usize> = keys
            .iter()
            .enumerate()
            .map(|(j, k)| {
                section
                    .iter()
                    .map(|r| r.payload[j].1.chars().count())
                    .max()
                    .unwrap_or(0)
                    .max(k.chars().count())
            })
            .collect();
        let line = |cells: Vec<&str>| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}", w = *w))
                .collect::<Vec<_>>()
                .join("  ")
        };
        writeln!(out, "{}", line(keys.clone()))?;
        for r in section {
            writeln!(
                out,
                "{}",
                line(r.payload.iter().map(|(_, v)| v.as_str()).collect())
            )?;
        }
    }
    Ok(())
}

fn write_csv(out: &mut dyn Write, records: &[OutputRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for section in sections(records) {
        w.write_record(section[0].keys())
            .map_err(|e| Error::Parse(format!("csv: {e}")))?;
        for r in section {
            w.write_record(r.payload.iter().map(|(_, v)| v))
                .map_err(|e| Error::Parse(format!("csv: {e}")))?;
        }
    }
    w.flush()?;
    Ok(())
}

fn write_json(out: &mut dyn Write, records: &[OutputRecord]) -> Result<()> {
    for r in records {
        let object: serde_json::Map<String, serde_json::Value> = r
            .payload
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
            .collect();
        writeln!(out, "{}", serde_json::Value::Object(object))?;
    }
    Ok(())
}

/// Asymptotic expansion of the partition function: exact remainders,
/// error bounds and verification sweeps.
#[derive(Debug, Parser)]
#[command(name = "partition-asymptotics", version)]
pub struct Cli {
    /// Decimal digits of working precision.
    #[arg(long, global = true, default_value_t = 80)]
    pub digits: u32,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// File used to persist the table of p(n).
    #[arg(long, global = true, env = "PARTITION_ASYMPTOTICS_CACHE")]
    pub cache: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact number of partitions of n.
    Partition { n: usize },
    /// Expansion coefficients c_0..c_M with their bound and asymptotic form.
    Coeff {
        #[arg(long, default_value_t = 20)]
        m_max: usize,
    },
    /// Exact remainder after N terms at n.
    Remainder { n: usize, terms: usize },
    /// Bounds for the remainder after N terms at n.
    Bounds {
        n: usize,
        terms: usize,
        #[arg(long, value_enum, default_value_t = BoundKind::Thm1)]
        theorem: BoundKind,
        /// Constant C, e.g. 3.474 or 1/4 (thm3 only).
        #[arg(long)]
        constant: Option<PositiveConstant>,
    },
    /// Threshold beyond which the bounds with constant C hold.
    Nu {
        terms: usize,
        constant: PositiveConstant,
    },
    /// Remainders and first-omitted-term bounds at the reference points.
    Table1,
    /// Remainders and bounds with explicit constants at the reference points.
    Table2,
    /// Run a verification sweep; exits nonzero on a counterexample.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = VerifyConfig::default().n_max)]
        n_max: usize,
        #[arg(long, default_value_t = VerifyConfig::default().m_max)]
        m_max: usize,
        #[arg(long, default_value_t = VerifyConfig::default().terms_max)]
        terms_max: usize,
        #[arg(long, default_value_t = VerifyConfig::default().thm3_span)]
        span: usize,
    },
}

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Runs a parsed command line, writing to `out`. Returns the process exit
/// code: `0` on success, `1` when a verification sweep found a
/// counterexample.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let ctx = PrecisionContext::new(cli.digits)?;
    let cache = cli.cache.as_deref();
    let mut status = 0;
    let records = match &cli.command {
        Command::Partition { n } => vec![cmd_partition(*n, cache)?],
        Command::Coeff { m_max } => cmd_coeff(*m_max, ctx),
        Command::Remainder { n, terms } => vec![cmd_remainder(*n, *terms, ctx, cache)?],
        Command::Bounds {
            n,
            terms,
            theorem,
            constant,
        } => vec![cmd_bounds(
            *n,
            *terms,
            *theorem,
            constant.as_ref(),
            ctx,
            cache,
        )?],
        Command::Nu { terms, constant } => vec![cmd_nu(*terms, constant, ctx)?],
        Command::Table1 => cmd_table1(ctx, cache)?,
        Command::Table2 => cmd_table2(ctx, cache)?,
        Command::Verify {
            suite,
            n_max,
            m_max,
            terms_max,
            span,
        } => {
            let config = VerifyConfig {
                n_max: *n_max,
                m_max: *m_max,
                terms_max: *terms_max,
                thm3_span: *span,
            };
            let (report, rec) = cmd_verify(*suite, &config, ctx)?;
            if !report.passed() {
                status = 1;
            }
            vec![rec]
        }
    };
    write_records(out, &records, cli.format)?;
    Ok(status)
}
