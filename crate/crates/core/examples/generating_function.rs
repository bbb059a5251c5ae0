//! Expands the generating function of (√24)^m c_m with truncated power-series
//! arithmetic and compares it with the closed-form coefficients.
//!
//!     cargo run --example generating_function

use partition_asymptotics::coefficients::coeff_c;
use partition_asymptotics::series::gf_coefficients;
use partition_asymptotics::{PrecisionContext, Real};

fn main() -> partition_asymptotics::Result<()> {
    let ctx = PrecisionContext::new(60)?;
    let root24 = Real::from_i64(24, ctx).sqrt()?;
    let g = gf_coefficients(100, ctx);
    let mut worst = Real::zero(ctx);
    for (m, gm) in g.iter().enumerate() {
        let direct = coeff_c(m, ctx) * root24.powi(m as i32);
        let rel = ((gm - &direct) / &direct).abs();
        if m <= 5 || m % 25 == 0 {
            println!(
                "m = {m:>3}: series {:>28}  relative gap {}",
                gm.to_sci_string(20),
                rel.to_sci_string(3)
            );
        }
        worst = worst.max(rel);
    }
    println!(
        "largest relative gap for m <= 100: {}",
        worst.to_sci_string(3)
    );
    Ok(())
}
