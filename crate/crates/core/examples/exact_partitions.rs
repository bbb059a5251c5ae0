//! Exact partition numbers, cross-checked against an independent counter and
//! persisted to a cache file.
//!
//!     cargo run --example exact_partitions -- 1000

use partition_asymptotics::exact_partition::{partition_dp, partition_pentagonal, PartitionTable};

fn main() -> partition_asymptotics::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1000);
    let table = partition_pentagonal(n)?;
    for k in [0, 1, 5, 10, 100, n] {
        println!("p({k}) = {}", table.get(k).expect("in range"));
    }
    let slow = partition_dp(n)?;
    println!(
        "counting DP agrees: {}",
        &slow == table.get(n).expect("in range")
    );

    let path = std::env::temp_dir().join("partition-table-example.tsv");
    table.save(&path)?;
    let again = PartitionTable::load_or_build(&path, n / 2)?;
    println!(
        "cached table at {} covers n <= {}",
        path.display(),
        again.n_max()
    );
    Ok(())
}
