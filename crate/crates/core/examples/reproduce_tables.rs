//! Prints both reference tables of exact remainders and bounds.
//!
//!     cargo run --example reproduce_tables

use partition_asymptotics::cli::{cmd_table1, cmd_table2, write_records, Format};
use partition_asymptotics::PrecisionContext;

fn main() -> partition_asymptotics::Result<()> {
    let ctx = PrecisionContext::new(80)?;
    let mut out = std::io::stdout();
    println!("First-omitted-term bounds");
    write_records(&mut out, &cmd_table1(ctx, None)?, Format::Human)?;
    println!();
    println!("Bounds with an explicit constant C");
    write_records(&mut out, &cmd_table2(ctx, None)?, Format::Human)?;
    Ok(())
}
