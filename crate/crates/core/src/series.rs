//! Truncated formal power series.
//!
//! Just enough arithmetic to expand the generating function of the scaled
//! coefficients `(√24)^m c_m` from scratch: sums, Cauchy products, `exp` of a
//! series without constant term and real powers of a series with constant
//! term one. Everything is truncated at a fixed order.

use crate::error::{Error, Result};
use crate::numerics::{const_pi, PrecisionContext, Real};

/// Maclaurin coefficients `coeffs[0..=order]`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Real>,
    ctx: PrecisionContext,
}

impl PowerSeries {
    /// Builds a series from its coefficients; the order is `coeffs.len() - 1`.
    /// Finiteness is guaranteed by [`Real`] itself.
    pub fn from_coeffs(coeffs: Vec<Real>, ctx: PrecisionContext) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain(
                "a power series needs at least one coefficient".into(),
            ));
        }
        let coeffs = coeffs.into_iter().map(|c| c.with_context(ctx)).collect();
        Ok(Self { coeffs, ctx })
    }

    /// Builds a series from small integer coefficients, padding with zeros up
    /// to `order`.
    pub fn from_i64s(values: &[i64], order: usize, ctx: PrecisionContext) -> Self {
        let coeffs = (0..=order)
            .map(|k| Real::from_i64(values.get(k).copied().unwrap_or(0), ctx))
            .collect();
        Self { coeffs, ctx }
    }

    pub fn zero(order: usize, ctx: PrecisionContext) -> Self {
        Self::from_i64s(&[], order, ctx)
    }

    pub fn one(order: usize, ctx: PrecisionContext) -> Self {
        Self::from_i64s(&[1], order, ctx)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn context(&self) -> PrecisionContext {
        self.ctx
    }

    pub fn coeffs(&self) -> &[Real] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Option<&Real> {
        self.coeffs.get(k)
    }

    /// Every coefficient multiplied by `factor`.
    pub fn scale(&self, factor: &Real) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c * factor).collect();
        Self {
            coeffs,
            ctx: self.ctx,
        }
    }

    /// Multiplication by `z`, keeping the order.
    pub fn shift(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(Real::zero(self.ctx));
        coeffs.extend(self.coeffs[..self.order()].iter().cloned());
        Self {
            coeffs,
            ctx: self.ctx,
        }
    }

    /// Substitutes `z ↦ z²`, keeping the order.
    pub fn compose_square(&self) -> Self {
        let mut out = Self::zero(self.order(), self.ctx);
        for (k, c) in self.coeffs.iter().enumerate() {
            if 2 * k > self.order() {
                break;
            }
            out.coeffs[2 * k] = c.clone();
        }
        out
    }
}

fn check_contexts(a: &PowerSeries, b: &PowerSeries) {
    assert_eq!(
        a.ctx, b.ctx,
        "power series arithmetic needs matching precision contexts"
    );
}

/// Coefficientwise sum, truncated at the smaller order.
pub fn series_add(a: &PowerSeries, b: &PowerSeries) -> PowerSeries {
    check_contexts(a, b);
    let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
    PowerSeries { coeffs, ctx: a.ctx }
}

/// Cauchy product, truncated at the smaller order.
pub fn series_mul(a: &PowerSeries, b: &PowerSeries) -> PowerSeries {
    check_contexts(a, b);
    let order = a.order().min(b.order());
    let coeffs = (0..=order)
        .map(|k| {
            (0..=k).fold(Real::zero(a.ctx), |acc, j| {
                acc + &a.coeffs[j] * &b.coeffs[k - j]
            })
        })
        .collect();
    PowerSeries { coeffs, ctx: a.ctx }
}

/// `exp(a)` for a series with zero constant term, from `(e^a)' = a' e^a`.
pub fn series_exp(a: &PowerSeries) -> Result<PowerSeries> {
    if !a.coeffs[0].is_zero() {
        return Err(Error::Domain(format!(
            "series_exp needs a zero constant term, found {}",
            a.coeffs[0]
        )));
    }
    let ctx = a.ctx;
    let mut out: Vec<Real> = Vec::with_capacity(a.coeffs.len());
    out.push(Real::one(ctx));
    for k in 1..=a.order() {
        let mut acc = Real::zero(ctx);
        for j in 1..=k {
            acc = acc + &a.coeffs[j] * &out[k - j] * j as i64;
        }
        out.push(acc / k as i64);
    }
    Ok(PowerSeries { coeffs: out, ctx })
}

/// `base^alpha` for a series with constant term one, from
/// `(f^α)' f = α f' f^α`.
pub fn series_binomial_power(base: &PowerSeries, alpha: &Real) -> Result<PowerSeries> {
    if base.coeffs[0] != Real::one(base.ctx) {
        return Err(Error::Domain(format!(
            "series_binomial_power needs constant term 1, found {}",
            base.coeffs[0]
        )));
    }
    let ctx = base.ctx;
    let alpha = alpha.with_context(ctx);
    let mut out: Vec<Real> = Vec::with_capacity(base.coeffs.len());
    out.push(Real::one(ctx));
    for n in 1..=base.order() {
        let mut acc = Real::zero(ctx);
        for j in 1..=n {
            let weight = &alpha * j as i64 - (n - j) as i64;
            acc = acc + weight * &base.coeffs[j] * &out[n - j];
        }
        out.push(acc / n as i64);
    }
    Ok(PowerSeries { coeffs: out, ctx })
}

/// Maclaurin coefficients up to `z^order` of
/// `exp(-(π/6) z/(√(1-z²)+1)) · (1/(1-z²) - (6/π) z/(1-z²)^{3/2})`,
/// which equal `(√24)^m c_m`.
pub fn gf_coefficients(order: usize, ctx: PrecisionContext) -> Vec<Real> {
    gf_series(order, ctx).coeffs
}

/// The same expansion as [`gf_coefficients`], as a series.
pub fn gf_series(order: usize, ctx: PrecisionContext) -> PowerSeries {
    let pi = const_pi(ctx);
    let half = Real::one(ctx) / 2;
    let one_minus_z2 = PowerSeries::from_i64s(&[1, 0, -1], order, ctx);
    let power =
        |alpha: Real| series_binomial_power(&one_minus_z2, &alpha).expect("constant term is one");

    // z/(1+√(1-z²)) = (z/2) · ((1+√(1-z²))/2)^{-1}
    let root = power(half.clone());
    let normalized = series_add(&root, &PowerSeries::one(order, ctx)).scale(&half);
    let inverse =
        series_binomial_power(&normalized, &Real::from_i64(-1, ctx)).expect("constant term is one");
    let inner = inverse.shift().scale(&half);
    let damping = series_exp(&inner.scale(&-(&pi / 6))).expect("zero constant term");

    let geometric = power(Real::from_i64(-1, ctx));
    let steep = power(Real::from_i64(-3, ctx) / 2).shift();
    let algebraic = series_add(&geometric, &steep.scale(&-(Real::from_i64(6, ctx) / &pi)));
    series_mul(&damping, &algebraic)
}
