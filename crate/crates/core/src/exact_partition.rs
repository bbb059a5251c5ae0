//! Exact values of the partition function.
//!
//! [`partition_pentagonal`] builds a table with Euler's pentagonal-number
//! recurrence and is the production path. [`partition_dp`] counts partitions
//! with the classic "coins" dynamic program over parts `1..=n`; it shares no
//! code with the recurrence and serves as its oracle.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

pub use rug::Integer as BigInteger;

use crate::error::{Error, Result};

/// Default cap on `n_max` for the pentagonal recurrence.
pub const DEFAULT_PENTAGONAL_CAP: usize = 1_000_000;
/// Default cap on `n` for the quadratic DP oracle.
pub const DEFAULT_DP_CAP: usize = 50_000;

/// `values[k] = p(k)` for `0 <= k <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionTable {
    values: Vec<BigInteger>,
}

impl PartitionTable {
    /// Wraps a list of values after checking the table invariants.
    pub fn from_values(values: Vec<BigInteger>) -> Result<Self> {
        validate(&values)?;
        Ok(Self { values })
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<&BigInteger> {
        self.values.get(n)
    }

    pub fn values(&self) -> &[BigInteger] {
        &self.values
    }

    /// Writes one `n<TAB>p(n)` line per entry.
    pub fn to_line_format(&self) -> String {
        let mut out = String::new();
        for (n, p) in self.values.iter().enumerate() {
            let _ = writeln!(out, "{n}\t{p}");
        }
        out
    }

    pub fn from_line_format(text: &str) -> Result<Self> {
        let mut values = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim_end_matches('\r');
            if line.is_empty() {
                continue;
            }
            let (idx, val) = line.split_once('\t').ok_or_else(|| {
                Error::Parse(format!("line {}: expected `n<TAB>p(n)`", lineno + 1))
            })?;
            let idx: usize = idx
                .parse()
                .map_err(|e| Error::Parse(format!("line {}: bad index: {e}", lineno + 1)))?;
            if idx != values.len() {
                return Err(Error::InvalidTable(format!(
                    "line {}: expected index {}, found {idx}",
                    lineno + 1,
                    values.len()
                )));
            }
            let val: BigInteger = val
                .parse()
                .map_err(|e| Error::Parse(format!("line {}: bad value: {e}", lineno + 1)))?;
            values.push(val);
        }
        Self::from_values(values)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_line_format())?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_line_format(&fs::read_to_string(path)?)
    }

    /// Loads `path` if it covers `n_max`, otherwise rebuilds the table and
    /// rewrites the file.
    pub fn load_or_build(path: &Path, n_max: usize) -> Result<Self> {
        if path.exists() {
            match Self::load(path) {
                Ok(t) if t.n_max() >= n_max => return Ok(t),
                Ok(_) => {}
                Err(e) => log::warn!(
                    "ignoring unreadable partition cache {}: {e}",
                    path.display()
                ),
            }
        }
        let table = partition_pentagonal(n_max)?;
        table.save(path)?;
        Ok(table)
    }
}

fn validate(values: &[BigInteger]) -> Result<()> {
    match values.first() {
        None => return Err(Error::InvalidTable("empty table".into())),
        Some(v) if *v != 1 => {
            return Err(Error::InvalidTable(format!("p(0) must be 1, found {v}")))
        }
        _ => {}
    }
    if values.iter().any(|v| *v < 0) {
        return Err(Error::InvalidTable("negative entry".into()));
    }
    for k in 2..values.len() {
        if values[k] <= values[k - 1] {
            return Err(Error::InvalidTable(format!(
                "values must increase: p({k}) = {} <= p({}) = {}",
                values[k],
                k - 1,
                values[k - 1]
            )));
        }
    }
    Ok(())
}

/// `p(0..=n_max)` by Euler's pentagonal recurrence, with the default cap.
pub fn partition_pentagonal(n_max: usize) -> Result<PartitionTable> {
    partition_pentagonal_capped(n_max, DEFAULT_PENTAGONAL_CAP)
}

pub fn partition_pentagonal_capped(n_max: usize, cap: usize) -> Result<PartitionTable> {
    if n_max > cap {
        return Err(Error::Resource(format!(
            "pentagonal table up to {n_max} exceeds cap {cap}"
        )));
    }
    let mut p: Vec<BigInteger> = Vec::with_capacity(n_max + 1);
    p.push(BigInteger::from(1));
    for n in 1..=n_max {
        let mut acc = BigInteger::new();
        for k in 1.. {
            // generalized pentagonal numbers k(3k-1)/2 and k(3k+1)/2
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = g1 + k;
            let plus = k % 2 == 1;
            if plus {
                acc += &p[n - g1];
            } else {
                acc -= &p[n - g1];
            }
            if g2 <= n {
                if plus {
                    acc += &p[n - g2];
                } else {
                    acc -= &p[n - g2];
                }
            }
        }
        p.push(acc);
    }
    Ok(PartitionTable { values: p })
}

/// `p(n)` by counting partitions with parts `1..=n`, with the default cap.
pub fn partition_dp(n: usize) -> Result<BigInteger> {
    Ok(partition_dp_table(n, DEFAULT_DP_CAP)?
        .pop()
        .expect("non-empty"))
}

/// All of `p(0..=n)` from one run of the counting DP.
pub fn partition_dp_table(n: usize, cap: usize) -> Result<Vec<BigInteger>> {
    if n > cap {
        return Err(Error::Resource(format!("DP up to {n} exceeds cap {cap}")));
    }
    let mut ways = vec![BigInteger::new(); n + 1];
    ways[0] = BigInteger::from(1);
    for part in 1..=n {
        for total in part..=n {
            let (lo, hi) = ways.split_at_mut(total);
            hi[0] += &lo[total - part];
        }
    }
    Ok(ways)
}
