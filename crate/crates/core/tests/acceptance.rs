//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use partition_asymptotics::bounds::{nu, thm1_bounds, thm2_bounds, thm3_bounds};
use partition_asymptotics::cli::{cmd_table1, cmd_table2, OutputRecord};
use partition_asymptotics::coefficients::{coeff_bound, coeff_c, first_monotonicity_violation};
use partition_asymptotics::exact_partition::{partition_dp_table, partition_pentagonal};
use partition_asymptotics::expansion::{
    expansion_term, full_sum_closed_form, normalized_partition, remainder_adaptive, theta,
};
use partition_asymptotics::series::gf_coefficients;
use partition_asymptotics::verify::{asymptotic_deviation, run_suite, Suite, VerifyConfig};
use partition_asymptotics::{PositiveConstant, PrecisionContext, Real};

const MAX_DIGITS: u32 = 640;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ctx(digits: u32) -> PrecisionContext {
    PrecisionContext::new(digits).expect("valid precision")
}

fn real(s: &str, c: PrecisionContext) -> Real {
    Real::parse(s, c).expect("decimal literal")
}

fn compare_rows(rows: &[OutputRecord], printed: &[[&str; 3]]) -> Outcome {
    let mut mismatches = Vec::new();
    for (row, want) in rows.iter().zip(printed) {
        for (key, want) in ["R", "lower", "upper"].iter().zip(want) {
            let got = row.get(key).unwrap_or("<missing>");
            if got != *want {
                let n = row.get("n").unwrap_or("?");
                let terms = row.get("N").unwrap_or("?");
                mismatches.push(format!(
                    "(n={n}, N={terms}) {key}: got {got}, printed {want}"
                ));
            }
        }
    }
    let total = printed.len() * 3;
    if rows.len() != printed.len() {
        return Err(format!(
            "expected {} rows, got {}",
            printed.len(),
            rows.len()
        ));
    }
    if mismatches.is_empty() {
        Ok(format!("{total}/{total} entries match"))
    } else {
        Err(format!(
            "{}/{total} entries match; {}",
            total - mismatches.len(),
            mismatches.join("; ")
        ))
    }
}

fn table1() -> Outcome {
    let rows = cmd_table1(ctx(80), None).map_err(|e| e.to_string())?;
    compare_rows(
        &rows,
        &[
            ["0.9016237417e-7", "-0.1326689978e-7", "0.9713458636e-7"],
            ["0.1523607771e-11", "-0.0350755832e-11", "0.1660290513e-11"],
            ["0.0629468759e-7", "-0.1582129737e-7", "0.1326689978e-7"],
            ["0.2140730897e-12", "-0.3758934747e-12", "0.3507558324e-12"],
        ],
    )
}

fn table2() -> Outcome {
    let rows = cmd_table2(ctx(80), None).map_err(|e| e.to_string())?;
    compare_rows(
        &rows,
        &[
            ["0.1523607771e-11", "-0.0382776520e-11", "0.1709265000e-11"],
            ["0.1676334056e-17", "-0.2432084216e-17", "0.2432440132e-17"],
            ["0.2140730897e-12", "-0.3837969630e-12", "0.3586095691e-12"],
            ["0.1675981042e-17", "-0.2432081529e-17", "0.2432076748e-17"],
        ],
    )
}

fn nu_reference() -> Outcome {
    let c: PositiveConstant = "3.474".parse().map_err(|e| format!("{e}"))?;
    let v = nu(4, &c, ctx(80)).map_err(|e| e.to_string())?;
    if v == 116 {
        Ok("nu_4(3.474) = 116".into())
    } else {
        Err(format!("nu_4(3.474) = {v}"))
    }
}

// Rounds |x| to `places` decimal places.
fn round_places(x: &Real, places: i32) -> f64 {
    let scale = Real::from_i64(10, x.context()).powi(places);
    let r = (x.abs() * &scale).round_to_integer().to_f64();
    r / 10f64.powi(places)
}

fn corollary() -> Outcome {
    let c = ctx(80);
    let k: PositiveConstant = "3.474".parse().map_err(|e| format!("{e}"))?;
    let b = thm3_bounds(116, 4, &k, c).map_err(|e| e.to_string())?;
    let n2 = Real::from_i64(116 * 116, c);
    let lo_const = &b.lower * &n2;
    let hi_const = &b.upper * &n2;
    // the constants are quoted as 0.0135 and 0.017
    let lo_printed = round_places(&lo_const, 4);
    let hi_printed = round_places(&hi_const, 3);
    if lo_printed != 0.0135 || hi_printed != 0.017 {
        return Err(format!(
            "constants {} and {} round to {lo_printed} and {hi_printed}",
            lo_const.to_sci_string(8),
            hi_const.to_sci_string(8)
        ));
    }
    let table = partition_pentagonal(1000).map_err(|e| e.to_string())?;
    let lo = real("0.0135", c);
    let hi = real("0.017", c);
    for n in 116..=1000usize {
        let r = remainder_adaptive(n, 4, &table, c, MAX_DIGITS)
            .map_err(|e| e.to_string())?
            .remainder;
        let n2 = Real::from_i64((n * n) as i64, c);
        if !(-(&lo / &n2) < r && r < &hi / &n2) {
            return Err(format!("n = {n}: R_4 = {}", r.to_sci_string(12)));
        }
    }
    Ok(format!(
        "constants {} / {}; 885 points enclosed",
        lo_const.to_sci_string(5),
        hi_const.to_sci_string(5)
    ))
}

fn enclosure_sweep(check_thm2: bool) -> Outcome {
    let table = partition_pentagonal(500).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for n in 1..=500usize {
        let c = ctx(80);
        for terms in 0..=12usize {
            let r = remainder_adaptive(n, terms, &table, c, MAX_DIGITS)
                .map_err(|e| e.to_string())?
                .remainder;
            let b1 = thm1_bounds(n, terms, c).map_err(|e| e.to_string())?;
            if check_thm2 {
                let b2 = thm2_bounds(n, terms, c).map_err(|e| e.to_string())?;
                if !b2.encloses(&r) {
                    return Err(format!("n={n} N={terms}: thm2 does not enclose {r:.12}"));
                }
                if !b1.is_within(&b2) {
                    return Err(format!("n={n} N={terms}: thm1 interval not inside thm2"));
                }
            } else if !b1.encloses(&r) {
                return Err(format!("n={n} N={terms}: thm1 does not enclose {r:.12}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} points"))
}

fn lemma1() -> Outcome {
    match first_monotonicity_violation(400).map_err(|e| e.to_string())? {
        None => Ok("|c_m| strictly decreasing for m <= 400 (certified)".into()),
        Some(m) => Err(format!("|c_{m}| >= |c_{}|", m - 1)),
    }
}

fn lemma2() -> Outcome {
    let c = ctx(80);
    for m in 0..=400 {
        let v = coeff_c(m, c).abs();
        let b = coeff_bound(m, c);
        if v > b {
            return Err(format!("m = {m}: |c_m| = {v:.10} > {b:.10}"));
        }
    }
    Ok("401 coefficients within bound".into())
}

fn lemma3() -> Outcome {
    let config = VerifyConfig {
        n_max: 500,
        ..VerifyConfig::default()
    };
    let report = run_suite(Suite::Lemma3, &config, ctx(80)).map_err(|e| e.to_string())?;
    if report.passed() {
        Ok(format!("{} checks", report.checked))
    } else {
        Err(report.to_string())
    }
}

fn generating_function() -> Outcome {
    let c = ctx(60);
    let root24 = Real::from_i64(24, c).sqrt().map_err(|e| e.to_string())?;
    let mut worst = Real::zero(c);
    let mut scale = Real::one(c);
    for (m, g) in gf_coefficients(100, c).iter().enumerate() {
        let want = coeff_c(m, c) * &scale;
        worst = worst.max(((g - &want) / &want).abs());
        scale = scale * &root24;
    }
    if worst < real("1e-45", c) {
        Ok(format!("max relative deviation {}", worst.to_sci_string(3)))
    } else {
        Err(format!("max relative deviation {}", worst.to_sci_string(3)))
    }
}

fn asymptotics() -> Outcome {
    let c = ctx(80);
    let d50 = asymptotic_deviation(50, c);
    let d300 = asymptotic_deviation(300, c);
    let summary = format!(
        "dev(50) = {}, dev(300) = {}",
        d50.to_sci_string(12),
        d300.to_sci_string(12)
    );
    let pinned =
        d50.to_sci_string(12) == "3.13724024624e-3" && d300.to_sci_string(12) == "5.25522230400e-4";
    if d300 < d50 && d300 < real("0.05", c) && pinned {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn oracle() -> Outcome {
    let fast = partition_pentagonal(2000).map_err(|e| e.to_string())?;
    let slow = partition_dp_table(2000, 2000).map_err(|e| e.to_string())?;
    match fast.values().iter().zip(&slow).position(|(a, b)| a != b) {
        None => Ok("p(0..=2000) agree".into()),
        Some(n) => Err(format!("p({n}) differs")),
    }
}

fn mediant_identity() -> Outcome {
    let table = partition_pentagonal(200).map_err(|e| e.to_string())?;
    let c = ctx(80);
    let tol = real("1e-60", c);
    for n in 1..=200usize {
        // the full series has a closed form, independent of the tail summation
        let full = full_sum_closed_form(n, c);
        let r_hat = normalized_partition(n, &table, c).map_err(|e| e.to_string())? - &full;
        for terms in 0..=10usize {
            let r = remainder_adaptive(n, terms, &table, c, MAX_DIGITS)
                .map_err(|e| e.to_string())?
                .remainder;
            let first = expansion_term(n, terms, c);
            let th = (&r - &r_hat) / &first;
            if !(th.is_positive() && th < Real::one(c)) {
                return Err(format!("n={n} N={terms}: theta = {th:.12}"));
            }
            let summed = theta(n, terms, c).map_err(|e| e.to_string())?;
            if (&th - &summed).abs() * first.abs() > tol {
                return Err(format!(
                    "n={n} N={terms}: theta {th:.20} vs summed tail {summed:.20}"
                ));
            }
        }
    }
    Ok("2200 points, theta in (0, 1)".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("Table 1 reproduction", table1),
        ("Table 2 reproduction", table2),
        ("nu_4(3.474) = 116", nu_reference),
        ("corollary bounds for N = 4, C = 3.474", corollary),
        ("first-term bounds enclose R_N(n)", || {
            enclosure_sweep(false)
        }),
        ("closed-form bounds enclose R_N(n) and nest", || {
            enclosure_sweep(true)
        }),
        ("|c_m| strictly decreasing", lemma1),
        ("|c_m| <= coefficient bound", lemma2),
        ("exponential error and T(n) bracket", lemma3),
        ("generating function", generating_function),
        ("coefficient asymptotics", asymptotics),
        ("pentagonal recurrence = counting DP", oracle),
        ("alternating-tail mediant", mediant_identity),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.1}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.1}s): {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
