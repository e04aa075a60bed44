//! The ideals `J(d1, d2) = (a,b)^d1 ∩ (c,d)^d2 ∩ (a-c, b-d)^d1` in
//! `Q[a,b,c,d]` and their `2n`-variable analogues
//! `J'(d) = ∩_{i<j} (t_i - t_j, x_i - x_j)^{min(d_i, d_j)}`.
//!
//! Variables `a, c, t_i` carry q-degree one and `b, d, x_i` carry t-degree
//! one. Membership is decided by linear changes of coordinates and monomial
//! inspection, which makes every bidegree slice of the ideal the kernel of
//! an explicit integer matrix. That kernel is the oracle the explicit
//! generators, the monomial basis and the closed-form Hilbert series are
//! checked against.

mod checks;
mod generators;
mod hilbert;
mod membership;
mod oracle;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::Var;

pub use checks::{
    check_generation, check_j111, j111_factorization, product_generators, GenerationReport,
    J111Report, SliceFailure,
};
pub use generators::{expected_generator_count, generator, generator_list, Family, GeneratorDescriptor};
pub use hilbert::{hilbert_closed, hilbert_from_basis, hilbert_oracle};
pub use membership::{member_j, member_j_general, member_linear_power, member_m};
pub use oracle::{
    graded_dim_oracle, graded_dim_oracle_general, graded_piece_oracle, slice_monomials,
    span_rank, GradedPiece,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("J(d1, d2) needs d1 <= d2, got ({d1}, {d2})")]
    InvalidSpec { d1: u32, d2: u32 },
    #[error("invalid degree vector {0:?}: need at least two entries in ascending order")]
    InvalidGeneralSpec(Vec<u32>),
    #[error("membership is only defined for polynomials, got a Laurent monomial")]
    Laurent,
    #[error("linear forms are dependent")]
    DependentForms,
    #[error("form is not a homogeneous linear polynomial: {0}")]
    NotLinear(String),
    #[error("polynomial already uses the auxiliary variable {0}")]
    VariableClash(Var),
    #[error("index ({i}, {j}) out of range for family {family:?} at (d1, d2) = ({d1}, {d2})")]
    IndexOutOfRange {
        family: Family,
        i: u32,
        j: u32,
        d1: u32,
        d2: u32,
    },
}

/// The pair `(d1, d2)` with `d1 <= d2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IdealSpec {
    pub d1: u32,
    pub d2: u32,
}

impl IdealSpec {
    pub fn new(d1: u32, d2: u32) -> Result<Self, IdealError> {
        if d1 > d2 {
            return Err(IdealError::InvalidSpec { d1, d2 });
        }
        Ok(Self { d1, d2 })
    }

    /// The matching three-point vector `(d1, d2, d2)`.
    pub fn general(&self) -> GeneralIdealSpec {
        GeneralIdealSpec {
            d: vec![self.d1, self.d2, self.d2],
        }
    }
}

/// An ascending degree vector `d_1 <= ... <= d_n`, `n >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneralIdealSpec {
    d: Vec<u32>,
}

impl GeneralIdealSpec {
    pub fn new(d: Vec<u32>) -> Result<Self, IdealError> {
        if d.len() < 2 || d.windows(2).any(|w| w[0] > w[1]) {
            return Err(IdealError::InvalidGeneralSpec(d));
        }
        Ok(Self { d })
    }

    pub fn n(&self) -> usize {
        self.d.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.d
    }

    /// `d_ij = min(d_i, d_j)` with zero-based indices.
    pub fn dij(&self, i: usize, j: usize) -> u32 {
        self.d[i].min(self.d[j])
    }

    /// All pairs `i < j` (zero-based) with their exponent.
    pub fn pairs(&self) -> Vec<(usize, usize, u32)> {
        let n = self.n();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, self.dij(i, j)))
            .collect()
    }
}
