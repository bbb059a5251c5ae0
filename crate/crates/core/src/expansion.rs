//! Truncated expansion, exact remainders and the quantities used to bound
//! them.
//!
//! `R_N(n)` is recovered from the exact value of `p(n)`:
//!
//! ```text
//! R_N(n) = 4√3·n·p(n)·exp(-π√(2n/3)) - Σ_{m<N} c_m / n^{m/2}
//! ```
//!
//! so it never depends on any of the bounds checked against it.

use crate::coefficients::coeff_c;
use crate::error::{Error, Result};
use crate::exact_partition::PartitionTable;
use crate::numerics::{const_pi, PrecisionContext, Real};

/// Significant digits the remainder must retain after cancellation.
pub const MIN_SIGNIFICANT_DIGITS: f64 = 10.0;
/// Digits of the working precision reserved for accumulated rounding.
pub const ROUNDING_RESERVE_DIGITS: f64 = 12.0;

const TAIL_EXTRA_DIGITS: i32 = 5;
const TAIL_SMALL_RUN: usize = 3;

/// One evaluation of `R_N(n)`.
#[derive(Clone, Debug)]
pub struct RemainderResult {
    pub n: usize,
    /// Number of retained terms `N`.
    pub terms: usize,
    pub remainder: Real,
    pub partial_sum: Real,
    pub prefactor: Real,
    /// `θ_N(n)`, when the tail could be summed.
    pub theta: Option<Real>,
}

impl RemainderResult {
    /// `prefactor · (partial_sum + remainder)`, which should reproduce `p(n)`.
    pub fn reconstruct(&self) -> Real {
        &self.prefactor * (&self.partial_sum + &self.remainder)
    }
}

fn sqrt(x: Real) -> Real {
    x.sqrt().expect("argument is non-negative")
}

fn exp(x: Real) -> Real {
    x.exp().expect("exponent is moderate")
}

/// `π√(2n/3)`.
fn hr_exponent(n: usize, ctx: PrecisionContext) -> Real {
    const_pi(ctx) * sqrt(Real::from_i64(2 * n as i64, ctx) / 3)
}

/// `μ(n) = (π/6)·√(24n − 1)`.
pub fn mu(n: usize, ctx: PrecisionContext) -> Real {
    const_pi(ctx) / 6 * sqrt(Real::from_i64(24 * n as i64 - 1, ctx))
}

/// `exp(π√(2n/3)) / (4√3·n)`.
pub fn prefactor(n: usize, ctx: PrecisionContext) -> Real {
    let denom = sqrt(Real::from_i64(3, ctx)) * (4 * n as i64);
    exp(hr_exponent(n, ctx)) / denom
}

/// `exp(-(π/2)√(2n/3))`, the exponentially small term in every bound.
pub fn exponential_error(n: usize, ctx: PrecisionContext) -> Real {
    exp(-(hr_exponent(n, ctx) / 2))
}

/// `4√3·n·p(n)·exp(-π√(2n/3))`, i.e. `p(n)` divided by the prefactor.
pub fn normalized_partition(
    n: usize,
    table: &PartitionTable,
    ctx: PrecisionContext,
) -> Result<Real> {
    let p = table.get(n).ok_or_else(|| {
        Error::Domain(format!(
            "p({n}) is not in the table (n_max = {})",
            table.n_max()
        ))
    })?;
    let scale = sqrt(Real::from_i64(3, ctx)) * (4 * n as i64);
    Ok(scale * Real::from_integer(p, ctx) * exp(-hr_exponent(n, ctx)))
}

/// `c_m / n^{m/2}`.
pub fn expansion_term(n: usize, m: usize, ctx: PrecisionContext) -> Real {
    let root_n = sqrt(Real::from_i64(n as i64, ctx));
    coeff_c(m, ctx) / root_n.powi(m as i32)
}

/// `Σ_{m=0}^{N-1} c_m / n^{m/2}`.
pub fn partial_sum(n: usize, terms: usize, ctx: PrecisionContext) -> Real {
    assert!(n >= 1, "n must be positive");
    let root_n = sqrt(Real::from_i64(n as i64, ctx));
    let mut sum = Real::zero(ctx);
    let mut scale = Real::one(ctx);
    for m in 0..terms {
        sum = sum + coeff_c(m, ctx) / &scale;
        scale = scale * &root_n;
    }
    sum
}

/// `Σ_{m=from}^{∞} c_m / n^{m/2}`, truncated once three consecutive terms are
/// below `10^-(digits+5)` relative to the running sum.
pub fn tail_sum(n: usize, from: usize, ctx: PrecisionContext) -> Result<Real> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    let cutoff = Real::from_i64(10, ctx).powi(-(ctx.digits() as i32 + TAIL_EXTRA_DIGITS));
    let root_n = sqrt(Real::from_i64(n as i64, ctx));
    let max_terms = from + 20 * ctx.digits() as usize + 100;
    let mut scale = root_n.powi(from as i32);
    let mut sum = Real::zero(ctx);
    let mut small_run = 0;
    for m in from..max_terms {
        let term = coeff_c(m, ctx) / &scale;
        sum = sum + &term;
        if term.abs() < &cutoff * &sum.abs() {
            small_run += 1;
            if small_run == TAIL_SMALL_RUN {
                return Ok(sum);
            }
        } else {
            small_run = 0;
        }
        scale = scale * &root_n;
    }
    Err(Error::Precision(format!(
        "tail of the expansion at n = {n} did not settle within {max_terms} terms"
    )))
}

/// The full convergent series `Σ_{m≥0} c_m / n^{m/2}`.
pub fn full_sum(n: usize, ctx: PrecisionContext) -> Result<Real> {
    tail_sum(n, 0, ctx)
}

/// Closed form of the full series,
/// `(24n/(24n−1))·exp(μ(n) − π√(2n/3))·(1 − 1/μ(n))`.
pub fn full_sum_closed_form(n: usize, ctx: PrecisionContext) -> Real {
    let mu = mu(n, ctx);
    let ratio = Real::from_i64(24 * n as i64, ctx) / (24 * n as i64 - 1);
    let damp = exp(&mu - hr_exponent(n, ctx));
    let one = Real::one(ctx);
    ratio * damp * (&one - one.clone() / mu)
}

/// `θ_N(n)`: the tail from index `N` divided by its first term.
pub fn theta(n: usize, terms: usize, ctx: PrecisionContext) -> Result<Real> {
    let tail = tail_sum(n, terms, ctx)?;
    Ok(tail / expansion_term(n, terms, ctx))
}

/// Decimal digits recommended for remainder work at `n`.
pub fn recommended_digits(n: usize) -> u32 {
    let x = std::f64::consts::PI * (2.0 * n as f64 / 3.0).sqrt() / std::f64::consts::LN_10;
    30 + x.ceil() as u32
}

// Digits of `value` that survive when it is the small difference of
// quantities as large as `largest`, after the rounding reserve.
fn surviving_digits(value: &Real, largest: &Real, ctx: PrecisionContext) -> f64 {
    if value.is_zero() {
        return f64::NEG_INFINITY;
    }
    let lost = (largest.abs().to_f64().log10() - value.abs().to_f64().log10()).max(0.0);
    f64::from(ctx.digits()) - ROUNDING_RESERVE_DIGITS - lost
}

fn guard_cancellation(
    what: &str,
    value: &Real,
    largest: &Real,
    ctx: PrecisionContext,
) -> Result<()> {
    let kept = surviving_digits(value, largest, ctx);
    if kept < MIN_SIGNIFICANT_DIGITS {
        return Err(Error::Precision(format!(
            "{what}: only {kept:.1} significant digits survive at {} digits; raise the precision",
            ctx.digits()
        )));
    }
    Ok(())
}

/// Exact `R_N(n)` from the tabulated `p(n)`.
///
/// Fails with [`Error::Precision`] when cancellation leaves fewer than
/// [`MIN_SIGNIFICANT_DIGITS`] digits once [`ROUNDING_RESERVE_DIGITS`] are set
/// aside for rounding.
pub fn remainder_exact(
    n: usize,
    terms: usize,
    table: &PartitionTable,
    ctx: PrecisionContext,
) -> Result<RemainderResult> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    if ctx.digits() < recommended_digits(n) {
        log::warn!(
            "{} digits is below the recommended {} for n = {n}",
            ctx.digits(),
            recommended_digits(n)
        );
    }
    let normalized = normalized_partition(n, table, ctx)?;
    let partial = partial_sum(n, terms, ctx);
    let remainder = &normalized - &partial;

    let largest = (0..terms)
        .map(|m| expansion_term(n, m, ctx).abs())
        .fold(normalized.abs().max(partial.abs()), Real::max);
    guard_cancellation(&format!("R_{terms}({n})"), &remainder, &largest, ctx)?;

    let theta = theta(n, terms, ctx).ok();
    Ok(RemainderResult {
        n,
        terms,
        remainder,
        partial_sum: partial,
        prefactor: prefactor(n, ctx),
        theta,
    })
}

/// Like [`remainder_exact`] but doubles the precision on cancellation, up to
/// `max_digits`.
pub fn remainder_adaptive(
    n: usize,
    terms: usize,
    table: &PartitionTable,
    ctx: PrecisionContext,
    max_digits: u32,
) -> Result<RemainderResult> {
    let mut c = ctx;
    loop {
        match remainder_exact(n, terms, table, c) {
            Err(Error::Precision(_)) if c.digits() * 2 <= max_digits => c = c.scale(2),
            other => return other,
        }
    }
}

/// `R̂(n)`: the gap between `p(n)` (normalized) and the full series.
pub fn r_hat(n: usize, table: &PartitionTable, ctx: PrecisionContext) -> Result<Real> {
    let normalized = normalized_partition(n, table, ctx)?;
    let full = full_sum(n, ctx)?;
    let r = &normalized - &full;
    let largest = normalized.abs().max(full.abs());
    guard_cancellation(&format!("R̂({n})"), &r, &largest, ctx)?;
    Ok(r)
}

/// The bracket of the five-term estimate for `|T(n)|`, before the final
/// factor `e^{-μ/2}`.
pub fn t_bracket_full(n: usize, ctx: PrecisionContext) -> Real {
    let mu = mu(n, ctx);
    let two = Real::from_i64(2, ctx);
    let r2 = sqrt(two.clone());
    let c13 = two.cbrt(); // 2^{1/3}
    let c23 = &c13 * &c13; // 2^{2/3}
    let inv_r2 = r2.recip().expect("nonzero");
    let e_half = exp(-(&mu / 2));
    let e_one = exp(-mu.clone());
    let e_three_half = exp(-(&mu * 3 / 2));
    let twelve_c13 = &c13 * 12;

    let t1 = inv_r2.clone();
    let t2 = (&twelve_c13 - &r2) / &mu;
    let t3 = (&mu * &mu / &c23 - &twelve_c13) * &e_half;
    let t4 = (&inv_r2 + (Real::from_i64(2, ctx) - &twelve_c13) / &mu) * &e_one;
    let t5 = (Real::one(ctx) + mu.recip().expect("nonzero")) * &e_three_half;
    t1 + t2 + t3 + t4 + t5
}

/// Upper estimate for `|T(n)|` with all five terms.
pub fn t_bound_full(n: usize, ctx: PrecisionContext) -> Real {
    t_bracket_full(n, ctx) * exp(-(mu(n, ctx) / 2))
}

/// `1/√2 + 14/μ + ((2/3)μ² − 13)·e^{-μ/2}`.
pub fn t_bracket_simple(n: usize, ctx: PrecisionContext) -> Real {
    let mu = mu(n, ctx);
    let inv_r2 = sqrt(Real::from_i64(2, ctx)).recip().expect("nonzero");
    let e_half = exp(-(&mu / 2));
    inv_r2 + Real::from_i64(14, ctx) / &mu + (&mu * &mu * 2 / 3 - 13) * e_half
}

/// The simpler estimate `t_bracket_simple(n)·e^{-μ/2}`.
pub fn t_bound_simple(n: usize, ctx: PrecisionContext) -> Real {
    t_bracket_simple(n, ctx) * exp(-(mu(n, ctx) / 2))
}
