//! The expansion coefficients c_m: exact form in powers of π, numerical
//! value, explicit bound and large-m approximation.
//!
//!     cargo run --example coefficients

use partition_asymptotics::coefficients::{
    coeff_asymptotic, coeff_bound, coeff_c, coeff_exact, first_monotonicity_violation,
};
use partition_asymptotics::PrecisionContext;

fn main() -> partition_asymptotics::Result<()> {
    let ctx = PrecisionContext::new(50)?;
    for m in 0..=3 {
        let exact = coeff_exact(m);
        let terms: Vec<String> = exact
            .terms()
            .iter()
            .map(|(power, q)| format!("({q})·π^{power}"))
            .collect();
        println!("(4√6)^{m}·|c_{m}| = {}", terms.join(" + "));
    }
    println!();
    println!(
        "{:>4} {:>24} {:>24} {:>24}",
        "m", "c_m", "bound", "asymptotic"
    );
    for m in [0, 1, 2, 5, 10, 50, 100, 300] {
        println!(
            "{m:>4} {:>24} {:>24} {:>24}",
            coeff_c(m, ctx).to_sci_string(15),
            coeff_bound(m, ctx).to_sci_string(15),
            coeff_asymptotic(m, ctx).to_sci_string(15)
        );
    }
    match first_monotonicity_violation(200)? {
        None => println!("|c_m| is strictly decreasing for m <= 200 (certified)"),
        Some(m) => println!("monotonicity fails at m = {m}"),
    }
    Ok(())
}
