//! Runs every verification sweep with its default grid.
//!
//!     cargo run --release --example verify_suites

use std::time::Instant;

use partition_asymptotics::verify::{run_suite, Suite, VerifyConfig};
use partition_asymptotics::PrecisionContext;

fn main() -> partition_asymptotics::Result<()> {
    let ctx = PrecisionContext::new(80)?;
    let config = VerifyConfig::default();
    let mut failures = 0;
    for suite in Suite::ALL {
        let start = Instant::now();
        let report = run_suite(suite, &config, ctx)?;
        println!("{report} in {:.2}s", start.elapsed().as_secs_f64());
        failures += usize::from(!report.passed());
    }
    if failures > 0 {
        std::process::exit(1);
    }
    Ok(())
}
