//! The threshold ν_N(C) past which the exponentially small error is absorbed
//! into an algebraic bound with constant C.
//!
//!     cargo run --example nu_threshold

use partition_asymptotics::bounds::nu;
use partition_asymptotics::{PositiveConstant, PrecisionContext};

fn main() -> partition_asymptotics::Result<()> {
    let ctx = PrecisionContext::new(60)?;
    let constants = ["0.0001", "1/4", "1", "3.474", "24", "5839", "866061"];
    print!("{:>4}", "N");
    for c in constants {
        print!(" {c:>10}");
    }
    println!();
    for terms in [1, 2, 4, 6, 7, 10, 11, 20] {
        print!("{terms:>4}");
        for c in constants {
            let c: PositiveConstant = c.parse()?;
            match nu(terms, &c, ctx) {
                Ok(v) => print!(" {v:>10}"),
                Err(_) => print!(" {:>10}", "-"),
            }
        }
        println!();
    }
    Ok(())
}
