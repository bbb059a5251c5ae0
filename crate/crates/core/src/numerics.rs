//! Precision contexts, arbitrary-precision reals and the handful of special
//! functions the rest of the crate needs.
//!
//! A [`Real`] is an MPFR float bound to a [`PrecisionContext`]. The context
//! fixes a nominal number of decimal digits; the float itself carries a few
//! guard bits beyond that so that short chains of correctly rounded
//! operations stay within a couple of units in the last nominal place.
//! Rounding is round-to-nearest everywhere.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::float::{Constant, Round};
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::error::{Error, Result};

/// Smallest accepted working precision in decimal digits.
pub const MIN_DIGITS: u32 = 30;

const GUARD_BITS: u32 = 24;
const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Working precision, in decimal significant digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrecisionContext {
    digits: u32,
}

impl PrecisionContext {
    /// Rejects anything below [`MIN_DIGITS`].
    pub fn new(digits: u32) -> Result<Self> {
        if digits < MIN_DIGITS {
            return Err(Error::InvalidPrecision {
                digits,
                min: MIN_DIGITS,
            });
        }
        Ok(Self { digits })
    }

    pub fn digits(self) -> u32 {
        self.digits
    }

    /// Bits corresponding to the nominal decimal precision.
    pub fn nominal_bits(self) -> u32 {
        (f64::from(self.digits) * LOG2_10).ceil() as u32
    }

    /// Bits actually carried by values in this context.
    pub fn working_bits(self) -> u32 {
        self.nominal_bits() + GUARD_BITS
    }

    /// A context with `extra` more digits.
    pub fn widen(self, extra: u32) -> Self {
        Self {
            digits: self.digits + extra,
        }
    }

    /// A context with `factor` times as many digits.
    pub fn scale(self, factor: u32) -> Self {
        Self {
            digits: self.digits * factor,
        }
    }

    /// `10^(-digits)`, the relative resolution of this context.
    pub fn epsilon(self) -> Real {
        Real::from_i64(10, self).powi(-(self.digits as i32))
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        Self { digits: 80 }
    }
}

/// A finite arbitrary-precision real number bound to a precision context.
#[derive(Clone, Debug)]
pub struct Real {
    value: Float,
    ctx: PrecisionContext,
}

impl Real {
    fn wrap(value: Float, ctx: PrecisionContext) -> Self {
        debug_assert!(value.is_finite(), "non-finite value escaped: {value}");
        Self { value, ctx }
    }

    fn checked(value: Float, ctx: PrecisionContext, what: &str) -> Result<Self> {
        if value.is_finite() {
            Ok(Self { value, ctx })
        } else {
            Err(Error::Domain(format!("{what} produced a non-finite value")))
        }
    }

    pub fn zero(ctx: PrecisionContext) -> Self {
        Self::from_i64(0, ctx)
    }

    pub fn one(ctx: PrecisionContext) -> Self {
        Self::from_i64(1, ctx)
    }

    pub fn from_i64(v: i64, ctx: PrecisionContext) -> Self {
        Self::wrap(Float::with_val(ctx.working_bits(), v), ctx)
    }

    pub fn from_integer(v: &Integer, ctx: PrecisionContext) -> Self {
        Self::wrap(Float::with_val(ctx.working_bits(), v), ctx)
    }

    pub fn from_rational(v: &Rational, ctx: PrecisionContext) -> Self {
        Self::wrap(Float::with_val(ctx.working_bits(), v), ctx)
    }

    /// Exact for all finite `f64` inputs.
    pub fn from_f64(v: f64, ctx: PrecisionContext) -> Result<Self> {
        Self::checked(Float::with_val(ctx.working_bits(), v), ctx, "from_f64")
    }

    /// Parses a decimal literal such as `-0.1234e-5`.
    pub fn parse(s: &str, ctx: PrecisionContext) -> Result<Self> {
        let parsed = Float::parse(s.trim()).map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
        Self::checked(Float::with_val(ctx.working_bits(), parsed), ctx, "parse")
    }

    pub fn context(&self) -> PrecisionContext {
        self.ctx
    }

    pub fn as_float(&self) -> &Float {
        &self.value
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    /// Re-rounds into another context.
    pub fn with_context(&self, ctx: PrecisionContext) -> Self {
        Self::wrap(Float::with_val(ctx.working_bits(), &self.value), ctx)
    }

    /// Rounds to exactly the nominal precision of the context, dropping the
    /// guard bits.
    pub fn round_to_nominal(&self) -> Self {
        let bits = self.ctx.nominal_bits();
        let r = Float::with_val(bits, &self.value);
        Self::wrap(Float::with_val(self.ctx.working_bits(), r), self.ctx)
    }

    /// One unit in the last place at the nominal precision of the context.
    pub fn ulp(&self) -> Real {
        let exp = self.value.get_exp().unwrap_or(0);
        let e = exp - self.ctx.nominal_bits() as i32;
        let two = Float::with_val(self.ctx.working_bits(), 2);
        Self::wrap(two.pow(e), self.ctx)
    }

    /// `|self - other|` measured in ulps of `self`.
    pub fn ulps_from(&self, other: &Real) -> f64 {
        let diff = (self - other).abs();
        if diff.is_zero() {
            return 0.0;
        }
        let scale = if self.is_zero() {
            other.ulp()
        } else {
            self.ulp()
        };
        (diff / scale).to_f64()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.value.is_sign_positive() && !self.value.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.value.is_sign_negative() && !self.value.is_zero()
    }

    /// `-1`, `0` or `1`.
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn abs(&self) -> Real {
        Self::wrap(self.value.clone().abs(), self.ctx)
    }

    pub fn max(self, other: Real) -> Real {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: Real) -> Real {
        if other < self {
            other
        } else {
            self
        }
    }

    /// Decimal exponent `e` with `10^e <= |self| < 10^(e+1)`. `None` for zero.
    pub fn decimal_exponent(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let l = Float::with_val(64, self.value.abs_ref()).log10();
        let mut e = l.to_f64().floor() as i64;
        // guard against log10 rounding across an integer
        let ten = Float::with_val(self.ctx.working_bits(), 10);
        let abs = self.value.clone().abs();
        while Float::with_val(self.ctx.working_bits(), (&ten).pow(e as i32)) > abs {
            e -= 1;
        }
        while Float::with_val(self.ctx.working_bits(), (&ten).pow((e + 1) as i32)) <= abs {
            e += 1;
        }
        Some(e)
    }

    pub fn recip(&self) -> Result<Real> {
        if self.is_zero() {
            return Err(Error::Domain("reciprocal of zero".into()));
        }
        Ok(Self::wrap(self.value.clone().recip(), self.ctx))
    }

    pub fn checked_div(&self, rhs: &Real) -> Result<Real> {
        if rhs.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        let ctx = self.ctx.max(rhs.ctx);
        Ok(Self::wrap(
            Float::with_val(ctx.working_bits(), &self.value / &rhs.value),
            ctx,
        ))
    }

    pub fn powi(&self, e: i32) -> Real {
        Self::wrap(
            Float::with_val(self.ctx.working_bits(), (&self.value).pow(e)),
            self.ctx,
        )
    }

    /// `self^exponent` for positive `self`.
    pub fn pow(&self, exponent: &Real) -> Result<Real> {
        if !self.is_positive() {
            return Err(Error::Domain(format!(
                "pow requires a positive base, got {self}"
            )));
        }
        let ctx = self.ctx.max(exponent.ctx);
        let v = Float::with_val(ctx.working_bits(), (&self.value).pow(&exponent.value));
        Self::checked(v, ctx, "pow")
    }

    pub fn sqrt(&self) -> Result<Real> {
        sqrt_real(self)
    }

    pub fn exp(&self) -> Result<Real> {
        exp_real(self)
    }

    pub fn ln(&self) -> Result<Real> {
        if !self.is_positive() {
            return Err(Error::Domain(format!(
                "ln requires a positive argument, got {self}"
            )));
        }
        Ok(Self::wrap(self.value.clone().ln(), self.ctx))
    }

    pub fn cbrt(&self) -> Real {
        Self::wrap(self.value.clone().cbrt(), self.ctx)
    }

    pub fn sin(&self) -> Real {
        Self::wrap(self.value.clone().sin(), self.ctx)
    }

    pub fn ceil_to_integer(&self) -> Integer {
        self.value
            .clone()
            .ceil()
            .to_integer()
            .expect("finite value has an integer ceiling")
    }

    pub fn round_to_integer(&self) -> Integer {
        self.value
            .clone()
            .round()
            .to_integer()
            .expect("finite value rounds to an integer")
    }

    /// Scientific rendering with `sig` significant digits, e.g. `-4.43e-1`.
    pub fn to_sci_string(&self, sig: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let s = self
            .value
            .to_string_radix_round(10, Some(sig.max(1)), Round::Nearest);
        normalize_sci(&s)
    }
}

// rug renders either "1.2345e-2" or, for moderate exponents, positional
// "-16.62" / "0.0123"; bring everything to `d.ddd…e±x`.
fn normalize_sci(s: &str) -> String {
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", s),
    };
    let (mantissa, exp) = match body.split_once('e') {
        Some((m, e)) => (m, e.parse::<i64>().expect("rug exponent")),
        None => (body, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let digits = format!("{int_part}{frac_part}");
    let lead = digits.find(|c| c != '0').unwrap_or(0);
    // value = 0.d1d2d3… × 10^(int_len + exp)
    let exponent = int_part.len() as i64 - lead as i64 - 1 + exp;
    let significant = &digits[lead..];
    let (first, rest) = significant.split_at(1.min(significant.len()));
    if rest.is_empty() {
        format!("{sign}{first}e{exponent}")
    } else {
        format!("{sign}{first}.{rest}e{exponent}")
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = f.precision().unwrap_or(self.ctx.digits as usize);
        f.write_str(&self.to_sci_string(sig))
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.partial_cmp(&other.value)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                let ctx = self.ctx.max(rhs.ctx);
                Real::wrap(Float::with_val(ctx.working_bits(), &self.value $op &rhs.value), ctx)
            }
        }
        impl $trait<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                &self $op &rhs
            }
        }
        impl $trait<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                &self $op rhs
            }
        }
        impl $trait<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self $op &rhs
            }
        }
        impl $trait<i64> for &Real {
            type Output = Real;
            fn $method(self, rhs: i64) -> Real {
                self $op Real::from_i64(rhs, self.ctx)
            }
        }
        impl $trait<i64> for Real {
            type Output = Real;
            fn $method(self, rhs: i64) -> Real {
                &self $op rhs
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
// Division panics on a zero divisor; use `checked_div` when it can be zero.
binop!(Div, div, /);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::wrap(-self.value, self.ctx)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        -self.clone()
    }
}

/// π at the working precision of `ctx`.
pub fn const_pi(ctx: PrecisionContext) -> Real {
    Real::wrap(Float::with_val(ctx.working_bits(), Constant::Pi), ctx)
}

/// Euler's number.
pub fn const_e(ctx: PrecisionContext) -> Real {
    Real::wrap(Float::with_val(ctx.working_bits(), 1).exp(), ctx)
}

pub fn exp_real(x: &Real) -> Result<Real> {
    Real::checked(x.value.clone().exp(), x.ctx, "exp")
}

pub fn sinh_real(x: &Real) -> Result<Real> {
    Real::checked(x.value.clone().sinh(), x.ctx, "sinh")
}

pub fn cosh_real(x: &Real) -> Result<Real> {
    Real::checked(x.value.clone().cosh(), x.ctx, "cosh")
}

pub fn sqrt_real(x: &Real) -> Result<Real> {
    if x.is_negative() {
        return Err(Error::Domain(format!("sqrt of negative value {x}")));
    }
    Ok(Real::wrap(x.value.clone().sqrt(), x.ctx))
}

/// The real branch `W_{-1}` of the inverse of `w·e^w`, defined on
/// `[-1/e, 0)` with values in `(-∞, -1]`.
///
/// Near the branch point the solution comes from the series in
/// `p = -√(2(1 + e·x))`; elsewhere the start is the two-term logarithmic
/// asymptotic. Either start is polished with Halley's iteration at a few
/// extra digits until the step falls below the context resolution.
pub fn lambert_w_minus1(x: &Real) -> Result<Real> {
    let ctx = x.context();
    if !x.is_negative() {
        return Err(Error::Domain(format!(
            "W_-1 is defined on [-1/e, 0), got {x}"
        )));
    }
    let wctx = ctx.widen(10);
    let xw = x.with_context(wctx);
    let e = const_e(wctx);

    // 1 + e·x measures the distance from the branch point.
    let t = &e * &xw + 1;
    // the input is itself rounded, so allow a few ulps on the wrong side
    let slack = x.abs().ulp() * 8 * &e;
    if t < -&slack {
        return Err(Error::Domain(format!("W_-1 argument {x} is below -1/e")));
    }
    if t <= slack {
        return Ok(Real::from_i64(-1, ctx));
    }

    let eps = wctx.epsilon();
    let p = -(t.clone() * 2).sqrt()?;

    if t < Real::from_f64(0.25, wctx)? {
        let series = branch_point_series(&p);
        // the omitted terms are O(p^7)
        if p.abs().powi(7) < eps {
            return Ok(clamp_branch(series.with_context(ctx)));
        }
        let w = halley(&xw, series, &eps)?;
        return Ok(clamp_branch(w.with_context(ctx)));
    }

    let l1 = (-&xw).ln()?;
    let l2 = (-&l1).ln()?;
    let start = &l1 - &l2 + &l2 / &l1;
    let w = halley(&xw, start, &eps)?;
    Ok(clamp_branch(w.with_context(ctx)))
}

// W_{-1}(x) = -1 + p - p²/3 + 11p³/72 - 43p⁴/540 + 769p⁵/17280 - 221p⁶/8505
fn branch_point_series(p: &Real) -> Real {
    let ctx = p.context();
    let coeffs: [(i64, i64); 7] = [
        (-1, 1),
        (1, 1),
        (-1, 3),
        (11, 72),
        (-43, 540),
        (769, 17280),
        (-221, 8505),
    ];
    // Horner from the top
    let mut acc = Real::zero(ctx);
    for &(num, den) in coeffs.iter().rev() {
        acc = acc * p + Real::from_rational(&Rational::from((num, den)), ctx);
    }
    acc
}

fn halley(x: &Real, start: Real, eps: &Real) -> Result<Real> {
    const MAX_ITER: usize = 200;
    let mut w = start;
    for _ in 0..MAX_ITER {
        let ew = w.exp()?;
        let f = &w * &ew - x;
        let wp1 = &w + 1;
        if wp1.is_zero() {
            return Ok(w);
        }
        let denom = &ew * &wp1 - (&w + 2) * &f / (wp1 * 2);
        if denom.is_zero() {
            return Ok(w);
        }
        let step = f / denom;
        w = &w - &step;
        if step.abs() <= eps * &w.abs() {
            return Ok(w);
        }
    }
    Err(Error::Precision(format!(
        "Halley iteration for W_-1({x}) did not converge"
    )))
}

fn clamp_branch(w: Real) -> Real {
    if w > Real::from_i64(-1, w.context()) {
        Real::from_i64(-1, w.context())
    } else {
        w
    }
}
