//! Tableaux sums for the generalized q,t-Catalan polynomials `F(d)` and the
//! series `H(d)`.
//!
//! Both are sums over standard tableaux with `n` boxes of
//! `z_1^{d_n} ... z_n^{d_1}` times products of binomials in the contents
//! `z_i = q^{c-1} t^{r-1}`. Any factor that would read `(1 - 1)` is left
//! out, numerator or denominator alike, before anything is multiplied.

mod sums;
mod tableaux;

use thiserror::Error;

pub use sums::{
    catalan_f, catalan_f3_explicit, check_d3_independence, hilbert_h, omega, D3Report,
    FactorSlot, Side,
};
pub use tableaux::{standard_tableaux, Partition, Syt, MAX_BOXES};

/// Largest `n` accepted by the tableaux sums.
pub const MAX_SUM_BOXES: usize = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalanError {
    #[error("n = {n} is outside the supported range 1..={max}")]
    Guard { n: usize, max: usize },
    #[error("degree vector {0:?} is not ascending")]
    NotAscending(Vec<u32>),
    #[error("the tableaux sum is not a polynomial: {0}")]
    NonPolynomial(String),
    #[error("need d1 <= d2, got ({0}, {1})")]
    InvalidPair(u32, u32),
}
