//! Exact polynomial arithmetic over the rationals.
//!
//! [`Poly`] is a sparse Laurent polynomial in named variables. [`RExpr`] is a
//! rational function in `q, t` whose denominator is a product of binomials
//! `1 - q^a t^b`, and [`TruncSeries`] holds its expansion on a finite
//! bidegree window.

mod mono;
mod polynomial;
mod rexpr;
mod series;
mod var;

use thiserror::Error;

pub use mono::Mono;
pub use polynomial::{int, qt_bracket, Coeff, Poly};
pub use rexpr::{inv_product, BinomialFactor, RExpr};
pub use series::{TruncSeries, Window};
pub use var::{Var, WeightTable};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid window {0:?}")]
    InvalidWindow(Window),
    #[error("expansion has q-degree {0} < 0, not a power series in q")]
    NotQPowerSeries(i32),
}

/// Common-denominator sum of rational expressions.
pub fn rexpr_sum(terms: &[RExpr]) -> RExpr {
    RExpr::sum(terms)
}

/// Equality of rational functions, decided by cross-multiplication.
pub fn rexpr_eq(x: &RExpr, y: &RExpr) -> bool {
    x.eq_value(y)
}

/// Quotient of `p` by `d` when `d` divides `p` in the polynomial ring.
pub fn exact_div(p: &Poly, d: &Poly) -> Option<Poly> {
    p.exact_div(d)
}

pub fn expand_series(x: &RExpr, window: Window) -> Result<TruncSeries, PolyError> {
    x.expand(window)
}
