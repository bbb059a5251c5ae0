//! Exact values of the partition function p(n), the Poincaré-type asymptotic
//! expansion
//!
//! ```text
//! p(n) ~ exp(π√(2n/3)) / (4√3 n) · Σ_{m≥0} c_m / n^{m/2}
//! ```
//!
//! and computable two-sided bounds for the remainder after truncating it to
//! `N` terms.
//!
//! The crate is organised bottom-up:
//!
//! - [`numerics`]: precision contexts, arbitrary-precision [`Real`]s and the
//!   Lambert W function on branch −1.
//! - [`exact_partition`]: p(n) by Euler's pentagonal recurrence and by an
//!   independent counting DP.
//! - [`coefficients`]: the coefficients `c_m` in exact π-polynomial form, their
//!   upper bounds and their large-`m` approximants.
//! - [`expansion`]: partial sums, exact remainders `R_N(n)`, the exponentially
//!   small `R̂(n)` and the alternating-tail mediant `θ_N(n)`.
//! - [`bounds`]: the enclosures of `R_N(n)`, the threshold `ν_N(C)` and a
//!   comparison bound from the literature.
//! - [`series`]: truncated power series used to check the generating function
//!   of the coefficients.
//! - [`cli`] and [`verify`]: record rendering, table reproduction and the
//!   verification suites behind the `partition-asymptotics` binary.
//!
//! ```
//! use partition_asymptotics::bounds::thm1_bounds;
//! use partition_asymptotics::exact_partition::partition_pentagonal;
//! use partition_asymptotics::expansion::remainder_exact;
//! use partition_asymptotics::PrecisionContext;
//!
//! let ctx = PrecisionContext::new(80)?;
//! let table = partition_pentagonal(500)?;
//! let r = remainder_exact(500, 6, &table, ctx)?;
//! let b = thm1_bounds(500, 6, ctx)?;
//! assert!(b.encloses(&r.remainder));
//! # Ok::<(), partition_asymptotics::Error>(())
//! ```

pub mod bounds;
pub mod cli;
pub mod coefficients;
pub mod error;
pub mod exact_partition;
pub mod expansion;
pub mod numerics;
pub mod series;
pub mod verify;

pub use bounds::{BoundsReport, PositiveConstant, Theorem};
pub use coefficients::PiPolynomial;
pub use error::{Error, Result};
pub use exact_partition::{BigInteger, PartitionTable};
pub use expansion::RemainderResult;
pub use numerics::{PrecisionContext, Real};
pub use series::PowerSeries;
