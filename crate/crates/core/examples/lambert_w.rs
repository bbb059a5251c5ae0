//! The lower real branch of the Lambert W function.
//!
//!     cargo run --example lambert_w

use partition_asymptotics::numerics::{const_e, lambert_w_minus1};
use partition_asymptotics::{PrecisionContext, Real};

fn main() -> partition_asymptotics::Result<()> {
    let ctx = PrecisionContext::new(40)?;
    let branch_point = -const_e(ctx).recip()?;
    println!(
        "W(-1/e) = {}",
        lambert_w_minus1(&branch_point)?.to_sci_string(30)
    );
    for s in ["-0.3", "-0.2", "-0.1", "-0.01", "-1e-6", "-1e-20"] {
        let x = Real::parse(s, ctx)?;
        let w = lambert_w_minus1(&x)?;
        let residual = &w * w.exp()? - &x;
        println!(
            "W({s:>6}) = {:>38}   w·e^w - x = {}",
            w.to_sci_string(30),
            residual.to_sci_string(3)
        );
    }
    Ok(())
}
