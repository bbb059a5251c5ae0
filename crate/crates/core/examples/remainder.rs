//! Exact remainders of the truncated expansion and the alternating-tail
//! mediant θ.
//!
//!     cargo run --example remainder -- 1000 10

use partition_asymptotics::exact_partition::partition_pentagonal;
use partition_asymptotics::expansion::{r_hat, recommended_digits, remainder_adaptive};
use partition_asymptotics::PrecisionContext;

fn main() -> partition_asymptotics::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().ok());
    let n = args.next().flatten().unwrap_or(1000);
    let terms = args.next().flatten().unwrap_or(10);
    let ctx = PrecisionContext::new(recommended_digits(n).max(50))?;
    let table = partition_pentagonal(n)?;

    // start low on purpose: the precision is doubled until the cancellation
    // in p(n) - (partial sum) leaves enough digits
    let start = PrecisionContext::new(30)?;
    let r = remainder_adaptive(n, terms, &table, start, 1000)?;
    println!("R_{terms}({n}) = {}", r.remainder.to_sci_string(25));
    println!("computed at {} digits", r.remainder.context().digits());
    if let Some(theta) = &r.theta {
        println!("theta = {}", theta.to_sci_string(25));
    }
    println!("R^({n}) = {}", r_hat(n, &table, ctx)?.to_sci_string(10));
    Ok(())
}
