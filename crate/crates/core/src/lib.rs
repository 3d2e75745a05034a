//! Rank statistics of strongly unimodal sequences and integer partitions.
//!
//! - [`partition`]: partitions, strongly unimodal sequences, Durfee rectangle
//!   symbols and exhaustive enumerators.
//! - [`qseries`]: truncated big-integer power series and the generating
//!   function routes to `u(m,n)`.
//! - [`sets`]: predicate-defined partition families and their block splits.
//! - [`maps`]: the bijections and injections between those families, with a
//!   verification engine.
//! - [`stats`]: rank and crank counts, `ospt(n)`, and the identity and
//!   inequality checks.

pub mod error;
pub mod maps;
pub mod partition;
pub mod qseries;
pub mod sets;
pub mod stats;

pub use error::{Error, Result};
pub use partition::{
    distinct_partitions, partitions_of, seq_rank, strongly_unimodal_of, DurfeeSymbol, Partition,
    StronglyUnimodalSeq,
};
pub use qseries::{
    gauss_binomial, partition_count, pochhammer, series_mul, u_table_from_bivariate, u_table_from_gf,
    QSeries, RankTable, Terms,
};
