//! Exact verification of combinatorial telescoping constructions for
//! partition identities: MacMahon's finite form of the Jacobi triple product
//! and Andrews' identity on parity in partitions.
//!
//! Everything is exact: coefficients are big integers, families are enumerated
//! completely (or completely below a weight cap), and every claimed bijection
//! or involution is checked element by element into a [`telescope::Certificate`].

pub mod andrews12;
pub mod cli;
pub mod macmahon;
pub mod partitions;
pub mod qalgebra;
pub mod render;
pub mod telescope;

pub use partitions::{Partition, SquareSide};
pub use qalgebra::{LaurentPoly, TruncatedSeries};
pub use telescope::{Certificate, MarkedObject, Status, Weighted};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parts {0:?} are not nonincreasing")]
    NotNonincreasing(Vec<u32>),
    #[error("expected a z-free series, found z^{z_exp}")]
    NotZFree { z_exp: i64 },
    #[error("expected nonnegative q-exponents, found q^{q_exp}")]
    NegativeQExponent { q_exp: i64 },
    #[error("{object} is outside the domain of {map} at {params}")]
    OutsideDomain { map: &'static str, params: String, object: String },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("cap {cap} is below n^2 = {min}")]
    CapTooSmall { cap: u32, min: u32 },
    #[error("no target reached within {steps} applications")]
    IterationBudgetExceeded { steps: usize },
}
