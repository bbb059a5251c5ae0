//! Verification sweeps over the inequalities the library relies on.
//!
//! Each [`Suite`] checks one family of statements on a finite grid and stops
//! at the first counterexample. Remainders are computed with
//! [`remainder_adaptive`], so points that lose too much to cancellation are
//! retried at higher precision instead of failing.

use std::fmt;
use std::str::FromStr;

use crate::bounds::{nu, thm1_bounds, thm2_bounds, thm3_bounds, PositiveConstant};
use crate::coefficients::{coeff_asymptotic, coeff_bound, coeff_c, first_monotonicity_violation};
use crate::error::{Error, Result};
use crate::exact_partition::{partition_dp_table, partition_pentagonal, PartitionTable};
use crate::expansion::{
    exponential_error, r_hat, recommended_digits, remainder_adaptive, t_bracket_simple,
};
use crate::numerics::{PrecisionContext, Real};
use crate::series::gf_coefficients;

/// Ceiling on the precision the sweeps may escalate to.
pub const MAX_SWEEP_DIGITS: u32 = 640;

/// The `(N, C)` pairs swept for the `C`-constant bounds.
pub const THM3_CASES: [(usize, &str); 5] = [
    (4, "3.474"),
    (6, "1/4"),
    (7, "24"),
    (10, "5839"),
    (11, "866061"),
];

/// Both ends of the monotonicity check for the simplified `T(n)` bracket.
pub const T_BRACKET_RANGE: (usize, usize) = (8, 5000);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Lemma1,
    Lemma2,
    Lemma3,
    Thm1,
    Thm2,
    Thm3,
    Gf,
    Asymptotics,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Lemma1,
        Suite::Lemma2,
        Suite::Lemma3,
        Suite::Thm1,
        Suite::Thm2,
        Suite::Thm3,
        Suite::Gf,
        Suite::Asymptotics,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma1 => "lemma1",
            Suite::Lemma2 => "lemma2",
            Suite::Lemma3 => "lemma3",
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Thm3 => "thm3",
            Suite::Gf => "gf",
            Suite::Asymptotics => "asymptotics",
            Suite::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

/// Grid sizes for the sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest `n` for sweeps over `n`.
    pub n_max: usize,
    /// Largest coefficient index for sweeps over `m`.
    pub m_max: usize,
    /// Largest number of retained terms `N` for the remainder sweeps.
    pub terms_max: usize,
    /// How far past `ν_N(C)` the `C`-constant sweep runs.
    pub thm3_span: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            n_max: 500,
            m_max: 400,
            terms_max: 12,
            thm3_span: 200,
        }
    }
}

/// Outcome of one suite.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    /// Number of individual inequalities checked.
    pub checked: usize,
    /// The first violated statement, if any.
    pub counterexample: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "{}: pass ({} checks)", self.suite, self.checked),
            Some(c) => write!(f, "{}: FAIL after {} checks: {c}", self.suite, self.checked),
        }
    }
}

// Counts checks and remembers the first failure.
struct Tally {
    suite: Suite,
    checked: usize,
    counterexample: Option<String>,
}

impl Tally {
    fn new(suite: Suite) -> Self {
        Self {
            suite,
            checked: 0,
            counterexample: None,
        }
    }

    /// Records one check; returns `false` once a counterexample is known.
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
        self.counterexample.is_none()
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            suite: self.suite,
            checked: self.checked,
            counterexample: self.counterexample,
        }
    }
}

/// Runs one suite at precision `ctx`.
pub fn run_suite(
    suite: Suite,
    config: &VerifyConfig,
    ctx: PrecisionContext,
) -> Result<SuiteReport> {
    log::info!(
        "running suite {suite} with {config:?} at {} digits",
        ctx.digits()
    );
    match suite {
        Suite::Lemma1 => lemma1(config),
        Suite::Lemma2 => lemma2(config, ctx),
        Suite::Lemma3 => lemma3(config, ctx),
        Suite::Thm1 => thm1(config, ctx),
        Suite::Thm2 => thm2(config, ctx),
        Suite::Thm3 => thm3(config, ctx),
        Suite::Gf => gf(config, ctx),
        Suite::Asymptotics => asymptotics(ctx),
        Suite::Oracle => oracle(config),
    }
}

/// Precision for remainder work at `n`: at least the recommended digits.
fn sweep_context(n: usize, ctx: PrecisionContext) -> Result<PrecisionContext> {
    let want = recommended_digits(n);
    if ctx.digits() >= want {
        Ok(ctx)
    } else {
        PrecisionContext::new(want)
    }
}

fn lemma1(config: &VerifyConfig) -> Result<SuiteReport> {
    let mut tally = Tally::new(Suite::Lemma1);
    tally.checked = config.m_max;
    if let Some(m) = first_monotonicity_violation(config.m_max)? {
        tally.counterexample = Some(format!("|c_{m}| >= |c_{}|", m - 1));
    }
    Ok(tally.finish())
}

fn lemma2(config: &VerifyConfig, ctx: PrecisionContext) -> Result<SuiteReport> {
    let mut tally = Tally::new(Suite::Lemma2);
    for m in 0..=config.m_max {
        let c = coeff_c(m, ctx).abs();
        let b = coeff_bound(m, ctx);
        if !tally.check(c <= b, || format!("|c_{m}| = {c} exceeds bound {b}")) {
            break;
        }
    }
    Ok(tally.finish())
}

fn lemma3(config: &VerifyConfig, ctx: PrecisionContext) -> Result<SuiteReport> {
    let mut tally = Tally::new(Suite::Lemma3);
    let table = partition_pentagonal(config.n_max)?;
    for n in 1..=config.n_max {
        let c = sweep_context(n, ctx)?;
        let r = r_hat(n, &table, c)?.abs();
        let e = exponential_error(n, c);
        if !tally.check(r <= e, || format!("|R̂({n})| = {r} exceeds {e}")) {
            return Ok(tally.finish());
        }
    }
    let limit = Real::parse("0.97", ctx)?;
    let at_432 = t_bracket_simple(432, ctx);
    if !tally.check(at_432 < limit, || format!("T bracket at 432 is {at_432}")) {
        return Ok(tally.finish());
    }
    let (lo, hi) = T_BRACKET_RANGE;
    let mut prev = t_bracket_simple(lo, ctx);
    for n in lo + 1..=hi {
        let cur = t_bracket_simple(n, ctx);
        if !tally.check(cur < prev, || format!("T bracket increases at n = {n}")) {
            break;
        }
        prev = cur;
    }
    Ok(tally.finish())
}

fn thm1(config: &VerifyConfig, ctx: PrecisionContext) -> Result<SuiteReport> {
    let mut tally = Tally::new(Suite::Thm1);
    let table = partition_pentagonal(config.n_max)?;
    'outer: for n in 1..=config.n_max {
        let c = sweep_context(n, ctx)?;
        for terms in 0..=config.terms_max {
            let r = remainder_adaptive(n, terms, &table, c, MAX_SWEEP_DIGITS)?.remainder;
            let b = thm1_bounds(n, terms, c)?;
            let ok = tally.check(b.encloses(&r), || {
                format!("R_{terms}({n}) = {r} outside ({}, {})", b.lower, b.upper)
            });
            if !ok {
                break 'outer;
            }
        }
    }
    Ok(tally.finish())
}

fn thm2(config: &VerifyConfig, ctx: PrecisionContext) -> Result<SuiteReport> {
    let mut tally = Tally::new(Suite::Thm2);
    let table = partition_pentagonal(config.n_max)?;
    'outer: for n in 1..=config.n_max {
        let c = sweep_context(n, ctx)?;
        for terms in 0..=config.terms_max {
            let r = remainder_adaptive(n, terms, &table, c, MAX_SWEEP_DIGITS)?.remainder;
            let b2 = thm2_bounds(n, terms, c)?;
            let b1 = thm1_bounds(n, terms, c)?;
            let ok = tally.check(b2.encloses(&r), || {
                format!("R_{terms}({n}) = {r} outside ({}, {})", b2.lower, b2.upper)
            }) && tally.check(b1.is_within(&b2), || {
                format!("first-term interval not nested at n = {n}, N = {terms}")
            });
            if !ok {
                break 'outer;
            }
        }
    }
    Ok(tally.finish())
}

fn thm3(config: &VerifyConfig, ctx: PrecisionContext) -> Result<SuiteReport> {
    let mut tally = Tally::new(Suite::Thm3);
    let mut starts = Vec::new();
    for (terms, constant) in THM3_CASES {
        let constant: PositiveConstant = constant.parse()?;
        let start = nu(terms, &constant, ctx)?.max(1) as usize;
        starts.push((terms, constant, start));
    }
    let top = starts.iter().map(|s| s.2).max().unwrap_or(1) + config.thm3_span;
    let table = partition_pentagonal(top)?;
    'outer: for (terms, constant, start) in starts {
        for n in start..=start + config.thm3_span {
            let c = sweep_context(n, ctx)?;
            let r = remainder_adaptive(n, terms, &table, c, MAX_SWEEP_DIGITS)?.remainder;
            let b = thm3_bounds(n, terms, &constant, c)?;
            let ok = tally.check(b.valid && b.encloses(&r), || {
                format!(
                    "C = {constant}: R_{terms}({n}) = {r} outside ({}, {})",
                    b.lower, b.upper
                )
            });
            if !ok {
                break 'outer;
            }
        }
    }
    Ok(tally.finish())
}

/// Largest order checked by the generating-function suite.
fn gf_order(config: &VerifyConfig) -> usize {
    config.m_max.min(100)
}

fn gf(config: &VerifyConfig, ctx: PrecisionContext) -> Result<SuiteReport> {
    let mut tally = Tally::new(Suite::Gf);
    let order = gf_order(config);
    let tol = Real::parse(&format!("1e-{}", ctx.digits().saturating_sub(15)), ctx)?;
    let root24 = Real::from_i64(24, ctx).sqrt()?;
    let mut scale = Real::one(ctx);
    for (m, g) in gf_coefficients(order, ctx).iter().enumerate() {
        let want = coeff_c(m, ctx) * &scale;
        let rel = ((g - &want) / &want).abs();
        if !tally.check(rel < tol, || {
            format!("coefficient {m}: relative deviation {rel}")
        }) {
            break;
        }
        scale = scale * &root24;
    }
    Ok(tally.finish())
}

/// `|c_m / coeff_asymptotic(m) - 1|`.
pub fn asymptotic_deviation(m: usize, ctx: PrecisionContext) -> Real {
    (coeff_c(m, ctx) / coeff_asymptotic(m, ctx) - 1).abs()
}

fn asymptotics(ctx: PrecisionContext) -> Result<SuiteReport> {
    let mut tally = Tally::new(Suite::Asymptotics);
    let d50 = asymptotic_deviation(50, ctx);
    let d300 = asymptotic_deviation(300, ctx);
    let limit = Real::parse("0.05", ctx)?;
    let _ = tally.check(d300 < d50, || {
        format!("deviation {d300} at 300 is not below {d50} at 50")
    }) && tally.check(d300 < limit, || {
        format!("deviation {d300} at 300 is not below 0.05")
    });
    Ok(tally.finish())
}

fn oracle(config: &VerifyConfig) -> Result<SuiteReport> {
    let mut tally = Tally::new(Suite::Oracle);
    let fast = partition_pentagonal(config.n_max)?;
    let slow = partition_dp_table(config.n_max, config.n_max.max(1))?;
    check_tables(&mut tally, &fast, &slow);
    Ok(tally.finish())
}

fn check_tables(tally: &mut Tally, fast: &PartitionTable, slow: &[crate::BigInteger]) {
    for (n, (a, b)) in fast.values().iter().zip(slow).enumerate() {
        if !tally.check(a == b, || format!("p({n}): recurrence {a}, counting {b}")) {
            break;
        }
    }
}
