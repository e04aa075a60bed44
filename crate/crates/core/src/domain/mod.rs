//! The fundamental-domain polytope and the `n = 3` combinatorics around
//! it: the two-row partition `λ = (d1 + d2, d1)` below the line
//! `x + d2 y = d1 + 2 d2 + ε`, the area and dinv statistics on its
//! subdiagrams, their bijection with a trapezoid of lattice points, and
//! the match with generators of `J(d1, d2)`.

mod diagrams;
mod polytope;

use thiserror::Error;

pub use diagrams::{
    area, dinv, full_bijection_check, half_hexagon_points, lambda_and_line, phi, phi_case,
    subdiagrams, trapezoid_points, BijectionReport, LineCheck, PhiCase, Trapezoid, TwoRowDiagram,
};
pub use polytope::{
    polytope_vertices, vertex, zonotope_check, Hull, LatticePoint, Perm, PolytopeSpec,
    ZonotopeReport, MAX_VERTEX_N, MAX_ZONOTOPE_N,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DomainError {
    #[error("degree vector {0:?} is not ascending")]
    NotAscending(Vec<u32>),
    #[error("n = {n} exceeds the supported maximum {max}")]
    Guard { n: usize, max: usize },
    #[error("need d1 <= d2, got ({0}, {1})")]
    InvalidPair(u32, u32),
    #[error("diagram ({0}, {1}) is not contained in λ")]
    NotContained(u32, u32),
}
