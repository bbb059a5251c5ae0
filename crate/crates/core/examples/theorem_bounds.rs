//! The available bounds on R_N(n) side by side with the exact value.
//!
//!     cargo run --example theorem_bounds -- 500 6

use partition_asymptotics::bounds::{banerjee_bounds, thm1_bounds, thm2_bounds, thm3_bounds};
use partition_asymptotics::exact_partition::partition_pentagonal;
use partition_asymptotics::expansion::remainder_exact;
use partition_asymptotics::{PositiveConstant, PrecisionContext};

fn main() -> partition_asymptotics::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().ok());
    let n = args.next().flatten().unwrap_or(500);
    let terms = args.next().flatten().unwrap_or(6);
    let ctx = PrecisionContext::new(80)?;
    let table = partition_pentagonal(n)?;
    let r = remainder_exact(n, terms, &table, ctx)?.remainder;
    println!("R_{terms}({n}) = {}", r.to_sci_string(12));

    let constant: PositiveConstant = "1/4".parse()?;
    let mut reports = vec![thm1_bounds(n, terms, ctx)?, thm2_bounds(n, terms, ctx)?];
    if terms > 0 {
        reports.push(thm3_bounds(n, terms, &constant, ctx)?);
    }
    if terms >= 2 {
        reports.push(banerjee_bounds(n, terms, ctx)?);
    }
    for b in reports {
        println!(
            "{:>9}: ({:>20}, {:>20})  width {:>20}  valid {:5}  encloses {}",
            b.theorem.to_string(),
            b.lower.to_sci_string(12),
            b.upper.to_sci_string(12),
            b.width().to_sci_string(12),
            b.valid,
            b.encloses(&r)
        );
    }
    Ok(())
}
