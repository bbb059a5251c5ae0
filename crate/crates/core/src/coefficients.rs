//! The expansion coefficients `c_m`.
//!
//! Every coefficient has the closed form
//!
//! ```text
//! (4√6)^m · c_m = (-1)^m · Σ_{k=0}^{⌊(m+1)/2⌋} C(m+1, k) · (m+1-k)/(m+1-2k)! · (π/6)^(m-2k)
//! ```
//!
//! which [`coeff_exact`] keeps as a Laurent polynomial in π with positive
//! rational coefficients. Numerical values come from [`coeff_c`] (memoized
//! per `(m, digits)`), magnitude comparisons that must be certified go
//! through outward-rounded enclosures in [`compare_magnitudes`].

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use rug::float::{Constant, Round};
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::error::{Error, Result};
use crate::numerics::{const_pi, cosh_real, sinh_real, PrecisionContext, Real};

/// `Σ q_e · π^e`, the exact value of `(4√6)^m · |c_m|` for `m = scale_exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiPolynomial {
    terms: BTreeMap<i64, Rational>,
    scale_exponent: usize,
}

impl PiPolynomial {
    /// Exponent of π mapped to its (strictly positive) rational coefficient.
    pub fn terms(&self) -> &BTreeMap<i64, Rational> {
        &self.terms
    }

    pub fn scale_exponent(&self) -> usize {
        self.scale_exponent
    }

    /// Value of `Σ q_e π^e` at the given precision.
    pub fn evaluate(&self, ctx: PrecisionContext) -> Real {
        let pi = const_pi(ctx);
        self.terms.iter().fold(Real::zero(ctx), |acc, (&e, q)| {
            acc + Real::from_rational(q, ctx) * pi.powi(e as i32)
        })
    }

    /// An interval `[lo, hi]` guaranteed to contain `Σ q_e π^e`, computed with
    /// outward rounding at `bits` bits.
    pub fn enclose(&self, bits: u32) -> (Float, Float) {
        let pi_lo = Float::with_val_round(bits, Constant::Pi, Round::Down).0;
        let pi_hi = Float::with_val_round(bits, Constant::Pi, Round::Up).0;
        let mut lo = Float::new(bits);
        let mut hi = Float::new(bits);
        for (&e, q) in &self.terms {
            let e = e as i32;
            // π^e is increasing in π for e >= 0 and decreasing for e < 0
            let (base_lo, base_hi) = if e >= 0 {
                (&pi_lo, &pi_hi)
            } else {
                (&pi_hi, &pi_lo)
            };
            let p_lo = Float::with_val_round(bits, base_lo.pow(e), Round::Down).0;
            let p_hi = Float::with_val_round(bits, base_hi.pow(e), Round::Up).0;
            let q_lo = Float::with_val_round(bits, q, Round::Down).0;
            let q_hi = Float::with_val_round(bits, q, Round::Up).0;
            let t_lo = Float::with_val_round(bits, &q_lo * &p_lo, Round::Down).0;
            let t_hi = Float::with_val_round(bits, &q_hi * &p_hi, Round::Up).0;
            lo = Float::with_val_round(bits, &lo + &t_lo, Round::Down).0;
            hi = Float::with_val_round(bits, &hi + &t_hi, Round::Up).0;
        }
        (lo, hi)
    }
}

fn factorial(n: u32) -> Integer {
    Integer::from(Integer::factorial(n))
}

fn binomial(n: u32, k: u32) -> Integer {
    Integer::from(Integer::binomial_u(n, k))
}

/// The exact π-polynomial form of `(4√6)^m · |c_m|`.
pub fn coeff_exact(m: usize) -> PiPolynomial {
    let m1 = m as u32 + 1;
    let mut terms = BTreeMap::new();
    for k in 0..=(m1 / 2) {
        let e = m as i64 - 2 * k as i64;
        let mut q = Rational::from(binomial(m1, k) * (m1 - k));
        q /= factorial(m1 - 2 * k);
        // (π/6)^e
        if e >= 0 {
            q /= Integer::from(6).pow(e as u32);
        } else {
            q *= Integer::from(6).pow((-e) as u32);
        }
        terms.insert(e, q);
    }
    PiPolynomial {
        terms,
        scale_exponent: m,
    }
}

type CoeffCache = RwLock<HashMap<(usize, u32), Real>>;

fn cache() -> &'static CoeffCache {
    static CACHE: OnceLock<CoeffCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `4√6`.
fn scale_base(ctx: PrecisionContext) -> Real {
    Real::from_i64(96, ctx).sqrt().expect("positive")
}

/// `c_m` at the precision of `ctx`, memoized.
pub fn coeff_c(m: usize, ctx: PrecisionContext) -> Real {
    let key = (m, ctx.digits());
    if let Some(v) = cache()
        .read()
        .expect("coefficient cache poisoned")
        .get(&key)
    {
        return v.clone();
    }
    let value = compute_coeff(m, ctx);
    cache()
        .write()
        .expect("coefficient cache poisoned")
        .entry(key)
        .or_insert(value)
        .clone()
}

fn compute_coeff(m: usize, ctx: PrecisionContext) -> Real {
    let wide = ctx.widen(8);
    let poly = coeff_exact(m).evaluate(wide);
    let v = poly / scale_base(wide).powi(m as i32);
    let v = if m % 2 == 1 { -v } else { v };
    v.with_context(ctx)
}

/// `c_0, …, c_{count-1}`.
pub fn coefficients(count: usize, ctx: PrecisionContext) -> Vec<Real> {
    (0..count).map(|m| coeff_c(m, ctx)).collect()
}

/// `(6√2/π^{3/2}) · sinh(π/6)`, the even-index constant.
pub fn sinh_constant(ctx: PrecisionContext) -> Real {
    base_constant(ctx) * sinh_real(&(const_pi(ctx) / 6)).expect("finite")
}

/// `(6√2/π^{3/2}) · cosh(π/6)`, the odd-index constant.
pub fn cosh_constant(ctx: PrecisionContext) -> Real {
    base_constant(ctx) * cosh_real(&(const_pi(ctx) / 6)).expect("finite")
}

fn base_constant(ctx: PrecisionContext) -> Real {
    let pi = const_pi(ctx);
    let root2 = Real::from_i64(2, ctx).sqrt().expect("positive");
    root2 * 6 / (&pi * pi.sqrt().expect("positive"))
}

// √(2j+1)/(√24)^{2j} for m = 2j, √(2j+2)/(√24)^{2j+1} for m = 2j+1
fn asymptotic_shape(m: usize, ctx: PrecisionContext) -> Real {
    let root24 = Real::from_i64(24, ctx).sqrt().expect("positive");
    Real::from_i64(m as i64 + 1, ctx).sqrt().expect("positive") / root24.powi(m as i32)
}

/// Upper bound for `|c_m|` that avoids evaluating the coefficient.
pub fn coeff_bound(m: usize, ctx: PrecisionContext) -> Real {
    let j = (m / 2) as i64;
    let shape = asymptotic_shape(m, ctx);
    let one = Real::one(ctx);
    if m.is_multiple_of(2) {
        let corr = (&one + one.clone() / (4 * j + 1)).sqrt().expect("positive");
        sinh_constant(ctx) * shape * corr
    } else {
        let corr = (&one - one.clone() / (4 * j + 5)).sqrt().expect("positive");
        cosh_constant(ctx) * shape * corr
    }
}

/// Leading large-`m` behaviour of `c_m`, sign included.
pub fn coeff_asymptotic(m: usize, ctx: PrecisionContext) -> Real {
    let shape = asymptotic_shape(m, ctx);
    if m.is_multiple_of(2) {
        sinh_constant(ctx) * shape
    } else {
        -(cosh_constant(ctx) * shape)
    }
}

/// The `m`-th Maclaurin coefficient of
/// `(3/(√2π)) · (e^{π/6}(1+z)^{-3/2} - e^{-π/6}(1-z)^{-3/2})`, divided by
/// `(√24)^m` so that it is directly comparable with `c_m`.
pub fn darboux_approximant(m: usize, ctx: PrecisionContext) -> Real {
    let pi = const_pi(ctx);
    let a = (&pi / 6).exp().expect("finite");
    let b = (-(&pi / 6)).exp().expect("finite");
    let signed = if m.is_multiple_of(2) { &a - &b } else { -a - b };
    // C(m + 1/2, m) = Π_{k=1}^{m} (2k+1)/(2k)
    let mut binom = Rational::from(1);
    for k in 1..=m as u64 {
        binom *= Rational::from((2 * k + 1, 2 * k));
    }
    let root2 = Real::from_i64(2, ctx).sqrt().expect("positive");
    let root24 = Real::from_i64(24, ctx).sqrt().expect("positive");
    Real::from_i64(3, ctx) / (root2 * &pi) * signed * Real::from_rational(&binom, ctx)
        / root24.powi(m as i32)
}

// (4√6)^d enclosed at `bits`
fn enclose_scale_power(d: usize, bits: u32) -> (Float, Float) {
    let d = d as u32;
    let int_part = Integer::from(4).pow(d) * Integer::from(6).pow(d / 2);
    let lo = Float::with_val_round(bits, &int_part, Round::Down).0;
    let hi = Float::with_val_round(bits, &int_part, Round::Up).0;
    if d.is_multiple_of(2) {
        return (lo, hi);
    }
    let mut s_lo = Float::with_val(bits, 6);
    s_lo.sqrt_round(Round::Down);
    let mut s_hi = Float::with_val(bits, 6);
    s_hi.sqrt_round(Round::Up);
    (
        Float::with_val_round(bits, &lo * &s_lo, Round::Down).0,
        Float::with_val_round(bits, &hi * &s_hi, Round::Up).0,
    )
}

/// Certified comparison of `|c_a|` with `|c_b|`.
///
/// Both magnitudes are compared in the form `P_h` versus `(4√6)^{h-l} P_l`
/// with outward-rounded enclosures; precision doubles until the intervals
/// separate.
pub fn compare_magnitudes(a: usize, b: usize) -> Result<Ordering> {
    if a == b {
        return Ok(Ordering::Equal);
    }
    let (l, h) = if a < b { (a, b) } else { (b, a) };
    let pl = coeff_exact(l);
    let ph = coeff_exact(h);
    let mut bits = 128u32;
    while bits <= 1 << 16 {
        let (pl_lo, pl_hi) = pl.enclose(bits);
        let (ph_lo, ph_hi) = ph.enclose(bits);
        let (s_lo, s_hi) = enclose_scale_power(h - l, bits);
        let lhs_lo = Float::with_val_round(bits, &pl_lo * &s_lo, Round::Down).0;
        let lhs_hi = Float::with_val_round(bits, &pl_hi * &s_hi, Round::Up).0;
        // |c_l| vs |c_h|  <=>  (4√6)^{h-l} P_l  vs  P_h
        let low_vs_high = if lhs_lo > ph_hi {
            Some(Ordering::Greater)
        } else if lhs_hi < ph_lo {
            Some(Ordering::Less)
        } else {
            None
        };
        if let Some(ord) = low_vs_high {
            return Ok(if a == l { ord } else { ord.reverse() });
        }
        bits *= 2;
    }
    Err(Error::Precision(format!(
        "could not separate |c_{a}| and |c_{b}|"
    )))
}

/// First `m <= m_max` with `|c_m| >= |c_{m-1}|`, certified exactly.
pub fn first_monotonicity_violation(m_max: usize) -> Result<Option<usize>> {
    for m in 1..=m_max {
        if compare_magnitudes(m, m - 1)? != Ordering::Less {
            return Ok(Some(m));
        }
    }
    Ok(None)
}
