//! Two-sided bounds for `R_N(n)`.
//!
//! - [`thm1_bounds`] uses the first omitted coefficient `c_N` itself.
//! - [`thm2_bounds`] replaces `|c_N|` by its closed-form upper bound.
//! - [`thm3_bounds`] absorbs the exponential term into an algebraic one for
//!   `n >= ν_N(C)` (see [`nu`]).
//! - [`banerjee_bounds`] is the earlier literature bound, kept for comparison
//!   only; its validity threshold is not computable here.

use std::fmt;
use std::str::FromStr;

use rug::ops::Pow;
use rug::{Integer, Rational};

use crate::coefficients::{coeff_bound, coeff_c, cosh_constant, sinh_constant};
use crate::error::{Error, Result};
use crate::expansion::exponential_error;
use crate::numerics::{const_e, const_pi, lambert_w_minus1, PrecisionContext, Real};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    T1,
    T2,
    T3,
    Banerjee,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::T1 => "T1",
            Theorem::T2 => "T2",
            Theorem::T3 => "T3",
            Theorem::Banerjee => "Banerjee",
        })
    }
}

/// An exact positive rational, parsed from `3.474`, `1/4`, `866061` or `1e-4`.
///
/// Displays the way it was written; equality compares values only.
#[derive(Clone, Debug)]
pub struct PositiveConstant {
    value: Rational,
    label: String,
}

impl PositiveConstant {
    pub fn new(value: Rational) -> Result<Self> {
        if value <= 0 {
            return Err(Error::Domain(format!(
                "constant must be positive, got {value}"
            )));
        }
        let label = value.to_string();
        Ok(Self { value, label })
    }

    pub fn as_rational(&self) -> &Rational {
        &self.value
    }

    pub fn to_real(&self, ctx: PrecisionContext) -> Real {
        Real::from_rational(&self.value, ctx)
    }
}

impl PartialEq for PositiveConstant {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl Eq for PositiveConstant {}

impl From<u32> for PositiveConstant {
    fn from(v: u32) -> Self {
        assert!(v > 0, "constant must be positive");
        Self {
            value: Rational::from(v),
            label: v.to_string(),
        }
    }
}

impl fmt::Display for PositiveConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

impl FromStr for PositiveConstant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a positive constant: {s:?}"));
        let value = if let Some((num, den)) = s.split_once('/') {
            let num: Integer = num.trim().parse().map_err(|_| bad())?;
            let den: Integer = den.trim().parse().map_err(|_| bad())?;
            if den == 0 {
                return Err(bad());
            }
            Rational::from((num, den))
        } else {
            parse_decimal(s).ok_or_else(bad)?
        };
        let mut c = Self::new(value)?;
        c.label = s.to_string();
        Ok(c)
    }
}

// `[+]digits[.digits][e[+-]digits]` as an exact rational
fn parse_decimal(s: &str) -> Option<Rational> {
    let s = s.strip_prefix('+').unwrap_or(s);
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let digits: Integer = format!("{int_part}{frac_part}").parse().ok()?;
    let scale = exponent - frac_part.len() as i32;
    let ten = Integer::from(10);
    Some(if scale >= 0 {
        Rational::from(digits * ten.pow(scale as u32))
    } else {
        Rational::from((digits, ten.pow((-scale) as u32)))
    })
}

/// Interval `(lower, upper)` for `R_N(n)` together with its provenance.
#[derive(Clone, Debug)]
pub struct BoundsReport {
    pub n: usize,
    /// Number of retained terms `N`.
    pub terms: usize,
    pub constant: Option<PositiveConstant>,
    pub lower: Real,
    pub upper: Real,
    pub theorem: Theorem,
    /// Whether the preconditions of the bound were verified to hold.
    pub valid: bool,
}

impl BoundsReport {
    /// Strict enclosure `lower < value < upper`.
    pub fn encloses(&self, value: &Real) -> bool {
        self.lower < *value && *value < self.upper
    }

    pub fn width(&self) -> Real {
        &self.upper - &self.lower
    }

    /// Whether `self` lies inside `other`.
    pub fn is_within(&self, other: &BoundsReport) -> bool {
        other.lower <= self.lower && self.upper <= other.upper
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    Ok(())
}

// √(N+1) / (√(24n))^N
fn algebraic_shape(n: usize, terms: usize, ctx: PrecisionContext) -> Real {
    let root = Real::from_i64(24 * n as i64, ctx).sqrt().expect("positive");
    Real::from_i64(terms as i64 + 1, ctx)
        .sqrt()
        .expect("positive")
        / root.powi(terms as i32)
}

fn root_n_power(n: usize, terms: usize, ctx: PrecisionContext) -> Real {
    Real::from_i64(n as i64, ctx)
        .sqrt()
        .expect("positive")
        .powi(terms as i32)
}

/// Bounds in terms of the first omitted term `c_N / n^{N/2}`.
pub fn thm1_bounds(n: usize, terms: usize, ctx: PrecisionContext) -> Result<BoundsReport> {
    check_n(n)?;
    let e = exponential_error(n, ctx);
    let first_omitted = coeff_c(terms, ctx) / root_n_power(n, terms, ctx);
    let (lower, upper) = if terms.is_multiple_of(2) {
        (-e.clone(), first_omitted + e)
    } else {
        (first_omitted - &e, e)
    };
    Ok(BoundsReport {
        n,
        terms,
        constant: None,
        lower,
        upper,
        theorem: Theorem::T1,
        valid: true,
    })
}

/// As [`thm1_bounds`] with `|c_N|` replaced by [`coeff_bound`].
pub fn thm2_bounds(n: usize, terms: usize, ctx: PrecisionContext) -> Result<BoundsReport> {
    check_n(n)?;
    let e = exponential_error(n, ctx);
    // coeff_bound carries the (√24)^N; the remaining n^{N/2} completes (√(24n))^N
    let magnitude = coeff_bound(terms, ctx) / root_n_power(n, terms, ctx);
    let (lower, upper) = if terms.is_multiple_of(2) {
        (-e.clone(), magnitude + e)
    } else {
        (-magnitude - &e, e)
    };
    Ok(BoundsReport {
        n,
        terms,
        constant: None,
        lower,
        upper,
        theorem: Theorem::T2,
        valid: true,
    })
}

/// `ν_N(C) = ⌈(3/2)·((2N/π)·W_{-1}(−(π/(12N))·(C√(N+1))^{1/N}))²⌉`.
pub fn nu(terms: usize, c: &PositiveConstant, ctx: PrecisionContext) -> Result<u64> {
    if terms == 0 {
        return Err(Error::Domain("ν_N(C) requires N >= 1".into()));
    }
    let wide = ctx.widen(10);
    let pi = const_pi(wide);
    let big_n = terms as i64;
    let base = c.to_real(wide) * Real::from_i64(big_n + 1, wide).sqrt()?;
    let root = base.pow(&(Real::one(wide) / big_n))?;
    let arg = -(&pi / (12 * big_n)) * root;
    let branch = -const_e(wide).recip()?;
    if arg < branch {
        return Err(Error::Domain(format!(
            "ν_{terms}({c}) is undefined: W_-1 argument {} is below -1/e",
            arg.to_sci_string(12)
        )));
    }
    let w = lambert_w_minus1(&arg)?;
    let scaled = Real::from_i64(2 * big_n, wide) / &pi * w;
    let value = &scaled * &scaled * 3 / 2;
    value
        .ceil_to_integer()
        .to_u64()
        .ok_or_else(|| Error::Resource(format!("ν_{terms}({c}) does not fit in u64")))
}

/// Purely algebraic bounds, valid once `n >= ν_N(C)`.
///
/// Below the threshold the report is still produced, with `valid = false`.
pub fn thm3_bounds(
    n: usize,
    terms: usize,
    c: &PositiveConstant,
    ctx: PrecisionContext,
) -> Result<BoundsReport> {
    check_n(n)?;
    if terms == 0 {
        return Err(Error::Domain(
            "the algebraic bound needs N >= 1 (even N = 2j with j >= 1)".into(),
        ));
    }
    let threshold = nu(terms, c, ctx)?;
    let j = (terms / 2) as i64;
    let shape = algebraic_shape(n, terms, ctx);
    let cr = c.to_real(ctx);
    let one = Real::one(ctx);
    let (lower, upper) = if terms.is_multiple_of(2) {
        let k = sinh_constant(ctx) * (&one + one.clone() / (4 * j + 1)).sqrt()?;
        (-(&cr * &shape), (&cr + k) * &shape)
    } else {
        let k = cosh_constant(ctx) * (&one - one.clone() / (4 * j + 5)).sqrt()?;
        (-((&cr + k) * &shape), &cr * &shape)
    };
    Ok(BoundsReport {
        n,
        terms,
        constant: Some(c.clone()),
        lower,
        upper,
        theorem: Theorem::T3,
        valid: n as u64 >= threshold,
    })
}

/// The comparison bound from the literature. Its threshold is unknown here,
/// so `valid` is always `false`.
pub fn banerjee_bounds(n: usize, terms: usize, ctx: PrecisionContext) -> Result<BoundsReport> {
    check_n(n)?;
    if terms < 2 {
        return Err(Error::Domain("the comparison bound needs N >= 2".into()));
    }
    let j = (terms / 2) as i64;
    let pi = const_pi(ctx);
    let growth = (Real::from_i64(6, ctx) / pi).powi(terms as i32);
    let root = Real::from_i64(24 * n as i64, ctx)
        .sqrt()?
        .powi(terms as i32);
    let (lo_c, hi_c, radicand) = if terms.is_multiple_of(2) {
        (13, 16, j + 1)
    } else {
        (21, 11, j + 2)
    };
    let base = growth * Real::from_i64(radicand, ctx).sqrt()? / root;
    Ok(BoundsReport {
        n,
        terms,
        constant: None,
        lower: -(&base * lo_c),
        upper: base * hi_c,
        theorem: Theorem::Banerjee,
        valid: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_partition::partition_pentagonal;
    use crate::expansion::remainder_exact;

    fn ctx(d: u32) -> PrecisionContext {
        PrecisionContext::new(d).unwrap()
    }

    // |x - printed| within half a unit of the printed 10th decimal
    fn matches_printed(x: &Real, printed: &str) {
        let c = x.context();
        let (_, exp) = printed.split_once('e').unwrap();
        let exp: i32 = exp.parse().unwrap();
        let tol = Real::from_i64(10, c).powi(exp - 10) / 2;
        let v = Real::parse(printed, c).unwrap();
        assert!((x - &v).abs() <= tol, "{x} vs {printed}");
    }

    #[test]
    fn parses_constants() {
        let c: PositiveConstant = "3.474".parse().unwrap();
        assert_eq!(c.as_rational(), &Rational::from((3474, 1000)));
        let q: PositiveConstant = "1/4".parse().unwrap();
        assert_eq!(q.as_rational(), &Rational::from((1, 4)));
        let i: PositiveConstant = "866061".parse().unwrap();
        assert_eq!(i.as_rational(), &Rational::from(866061));
        let e: PositiveConstant = "1e-4".parse().unwrap();
        assert_eq!(e.as_rational(), &Rational::from((1, 10000)));
        let t: PositiveConstant = ".5".parse().unwrap();
        assert_eq!(t.as_rational(), &Rational::from((1, 2)));
        for bad in ["0", "-1", "abc", "1/0", "", "1.2.3", "0/5"] {
            assert!(bad.parse::<PositiveConstant>().is_err(), "{bad}");
        }
    }

    #[test]
    fn table1_bounds() {
        let c = ctx(80);
        let cases = [
            (200, 4, "-0.1326689978e-7", "0.9713458636e-7"),
            (200, 5, "-0.1582129737e-7", "0.1326689978e-7"),
            (500, 6, "-0.0350755832e-11", "0.1660290513e-11"),
            (500, 7, "-0.3758934747e-12", "0.3507558324e-12"),
        ];
        for (n, big_n, lo, hi) in cases {
            let b = thm1_bounds(n, big_n, c).unwrap();
            matches_printed(&b.lower, lo);
            matches_printed(&b.upper, hi);
            assert!(b.valid);
        }
    }

    #[test]
    fn table2_bounds() {
        let c = ctx(80);
        // the printed lower bound at (500, 6, 1/4) is off by one in the last
        // digit; the exact value is -√7/(4·12000³)
        let k: PositiveConstant = "1/4".parse().unwrap();
        let b = thm3_bounds(500, 6, &k, c).unwrap();
        matches_printed(&b.upper, "0.1709265000e-11");
        let exact =
            -(Real::from_i64(7, c).sqrt().unwrap()) / (Real::from_i64(12000, c).powi(3) * 4);
        assert!(b.lower.ulps_from(&exact) <= 4.0);
        matches_printed(&b.lower, "-0.0382776521e-11");
        let cases = [
            (1000, 10, "5839", "-0.2432084216e-17", "0.2432440132e-17"),
            (500, 7, "24", "-0.3837969630e-12", "0.3586095691e-12"),
            (1000, 11, "866061", "-0.2432081529e-17", "0.2432076748e-17"),
        ];
        for (n, big_n, cs, lo, hi) in cases {
            let k: PositiveConstant = cs.parse().unwrap();
            let b = thm3_bounds(n, big_n, &k, c).unwrap();
            matches_printed(&b.lower, lo);
            matches_printed(&b.upper, hi);
            assert!(b.valid, "n={n} N={big_n} C={cs}");
        }
    }

    #[test]
    fn thm2_formula_and_relaxation() {
        let c = ctx(60);
        let b = thm2_bounds(500, 6, c).unwrap();
        let expected =
            coeff_bound(6, c) / Real::from_i64(500, c).powi(3) + exponential_error(500, c);
        assert!(b.upper.ulps_from(&expected) <= 4.0);
        for n in [1usize, 7, 200, 500] {
            for big_n in 0..=12 {
                let t1 = thm1_bounds(n, big_n, c).unwrap();
                let t2 = thm2_bounds(n, big_n, c).unwrap();
                assert!(t1.is_within(&t2), "n={n} N={big_n}");
            }
        }
        // pinned at 50 digits: even N = 4 at n = 200
        let t2 = thm2_bounds(200, 4, ctx(50)).unwrap();
        assert_eq!(t2.upper.to_sci_string(10), "9.867265388e-8");
    }

    #[test]
    fn nu_reproduces_116() {
        let c = ctx(80);
        let k: PositiveConstant = "3.474".parse().unwrap();
        assert_eq!(nu(4, &k, c).unwrap(), 116);
        let small: PositiveConstant = "0.0001".parse().unwrap();
        assert!(nu(4, &small, c).unwrap() > 116);
    }

    #[test]
    fn nu_domain() {
        let c = ctx(40);
        let huge: PositiveConstant = "1000000".parse().unwrap();
        assert!(matches!(nu(2, &huge, c), Err(Error::Domain(_))));
        assert!(matches!(
            nu(0, &PositiveConstant::from(1), c),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            thm3_bounds(10, 0, &PositiveConstant::from(1), c),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn nu_nonincreasing_in_c() {
        let c = ctx(40);
        for big_n in [2usize, 5, 11] {
            let mut prev = u64::MAX;
            let mut k = Rational::from((1, 10));
            while k <= 1_000_000 {
                match nu(big_n, &PositiveConstant::new(k.clone()).unwrap(), c) {
                    Ok(v) => {
                        assert!(v <= prev, "N={big_n} C={k}");
                        prev = v;
                    }
                    Err(Error::Domain(_)) => {}
                    Err(e) => panic!("{e}"),
                }
                k *= Rational::from((3, 2));
            }
        }
    }

    #[test]
    fn corollary_constants() {
        let c = ctx(60);
        let k: PositiveConstant = "3.474".parse().unwrap();
        let n = 1000usize;
        let b = thm3_bounds(n, 4, &k, c).unwrap();
        let n2 = Real::from_i64((n * n) as i64, c);
        let lo = (-(&b.lower) * &n2).to_f64();
        let hi = (&b.upper * &n2).to_f64();
        assert!((lo - 0.013486).abs() < 1e-6, "{lo}");
        assert!((hi - 0.016903).abs() < 1e-6, "{hi}");
        let ban = banerjee_bounds(n, 4, c).unwrap();
        let blo = (-(&ban.lower) * &n2).to_f64();
        let bhi = (&ban.upper * &n2).to_f64();
        assert!((blo - 0.52010).abs() < 1e-4, "{blo}");
        assert!((bhi - 0.64012).abs() < 1e-4, "{bhi}");
        assert!(blo < 0.55 && bhi < 0.65);
        // the comparison bound is about 38 times wider on the upper side
        assert!((bhi / hi - 37.87).abs() < 0.05, "{}", bhi / hi);
        assert!(!ban.valid);
    }

    #[test]
    fn banerjee_domain_and_growth() {
        let c = ctx(40);
        assert!(banerjee_bounds(10, 1, c).is_err());
        assert!(banerjee_bounds(10, 2, c).is_ok());
        // relative to the closed-form widths the comparison bound grows like (6/π)^N
        let n = 10_000;
        let ratio = |big_n| {
            let b = banerjee_bounds(n, big_n, c).unwrap().width();
            let t = coeff_bound(big_n, c) / root_n_power(n, big_n, c);
            (b / t).to_f64()
        };
        let six_over_pi = 6.0 / std::f64::consts::PI;
        let growth = ratio(12) / ratio(10);
        assert!(
            (growth / (six_over_pi * six_over_pi) - 1.0).abs() < 0.1,
            "{growth}"
        );
    }

    #[test]
    fn small_sweep_encloses() {
        let table = partition_pentagonal(60).unwrap();
        let c = ctx(60);
        for n in 1..=60 {
            for big_n in 0..=6 {
                let r = remainder_exact(n, big_n, &table, c).unwrap().remainder;
                assert!(
                    thm1_bounds(n, big_n, c).unwrap().encloses(&r),
                    "n={n} N={big_n}"
                );
                assert!(
                    thm2_bounds(n, big_n, c).unwrap().encloses(&r),
                    "n={n} N={big_n}"
                );
            }
        }
    }
}
