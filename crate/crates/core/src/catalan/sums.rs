use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::poly::{qt_bracket, BinomialFactor, Mono, Poly, RExpr, Var};

use super::tableaux::standard_tableaux;
use super::{CatalanError, MAX_SUM_BOXES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Numerator,
    Denominator,
}

/// One factor `1 - q^a t^b` of a product, before and after normalization.
///
/// `normalized` is `None` for a `(1 - 1)` factor, which is dropped. When
/// `flipped` is set, `1 - m = -m (1 - m^{-1})` was used and the sign and
/// monomial `-m` belong to the owning expression.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSlot {
    pub side: Side,
    pub exponents: (i32, i32),
    pub normalized: Option<BinomialFactor>,
    pub flipped: bool,
}

impl FactorSlot {
    fn new(side: Side, m: &Mono) -> Self {
        let exponents = (m.exp(Var::Q), m.exp(Var::T));
        let (normalized, flipped) = match BinomialFactor::normalize(exponents.0, exponents.1) {
            Some((f, flip)) => (Some(f), flip),
            None => (None, false),
        };
        Self {
            side,
            exponents,
            normalized,
            flipped,
        }
    }

    pub fn is_dropped(&self) -> bool {
        self.normalized.is_none()
    }

    /// The factor's value, or its inverse on the denominator side; one if dropped.
    pub fn value(&self) -> RExpr {
        let (a, b) = self.exponents;
        match (self.side, self.is_dropped()) {
            (_, true) => RExpr::one(),
            (Side::Numerator, false) => RExpr::one_minus(a, b),
            (Side::Denominator, false) => RExpr::inv_one_minus(a, b).expect("not a (1 - 1) factor"),
        }
    }
}

/// `ω(x) = (1 - x)(1 - qtx) / ((1 - qx)(1 - tx))`, factor by factor.
pub fn omega(x: &Mono) -> Vec<FactorSlot> {
    let qt = Mono::qt(1, 1);
    vec![
        FactorSlot::new(Side::Numerator, x),
        FactorSlot::new(Side::Numerator, &x.mul(&qt)),
        FactorSlot::new(Side::Denominator, &x.mul(&Mono::qt(1, 0))),
        FactorSlot::new(Side::Denominator, &x.mul(&Mono::qt(0, 1))),
    ]
}

fn product(slots: &[FactorSlot]) -> RExpr {
    slots.iter().fold(RExpr::one(), |acc, s| acc.mul(&s.value()))
}

fn check_vector(d: &[u32]) -> Result<(), CatalanError> {
    if d.is_empty() || d.len() > MAX_SUM_BOXES {
        return Err(CatalanError::Guard {
            n: d.len(),
            max: MAX_SUM_BOXES,
        });
    }
    if d.windows(2).any(|w| w[0] > w[1]) {
        return Err(CatalanError::NotAscending(d.to_vec()));
    }
    Ok(())
}

/// The summand of one tableau; `with_qt` selects the `F` variant.
fn summand(z: &[Mono], d: &[u32], with_qt: bool) -> RExpr {
    let n = z.len();
    // z_1^{d_n} ... z_n^{d_1}
    let lead = (0..n).fold(Mono::one(), |acc, i| acc.mul(&z[i].pow(d[n - 1 - i] as i32)));
    let mut slots = Vec::new();
    for i in 1..n {
        slots.push(FactorSlot::new(Side::Denominator, &z[i].inv()));
        if with_qt {
            slots.push(FactorSlot::new(Side::Denominator, &Mono::qt(1, 1).mul(&z[i - 1]).div(&z[i])));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            slots.extend(omega(&z[i].div(&z[j])));
        }
    }
    product(&slots).mul_mono(&lead)
}

fn tableaux_sum(d: &[u32], with_qt: bool) -> Result<RExpr, CatalanError> {
    check_vector(d)?;
    let tableaux = standard_tableaux(d.len())?;
    let terms: Vec<RExpr> = tableaux
        .par_iter()
        .map(|t| summand(&t.contents(), d, with_qt))
        .collect();
    Ok(RExpr::sum(&terms))
}

/// `F(d_1, ..., d_n)` for an ascending vector, as a polynomial.
///
/// The rational tableaux sum is reduced by exact division; a nonzero
/// remainder is reported as [`CatalanError::NonPolynomial`].
pub fn catalan_f(d: &[u32]) -> Result<Poly, CatalanError> {
    let sum = tableaux_sum(d, true)?.reduced();
    sum.to_polynomial()
        .ok_or_else(|| CatalanError::NonPolynomial(sum.to_string()))
}

/// `H(d_1, ..., d_n)`: the tableaux sum divided by `(1-q)^n (1-t)^n`.
pub fn hilbert_h(d: &[u32]) -> Result<RExpr, CatalanError> {
    let n = d.len();
    let sum = tableaux_sum(d, false)?;
    let pairs: Vec<(i32, i32)> = std::iter::repeat_n((1, 0), n).chain(std::iter::repeat_n((0, 1), n)).collect();
    Ok(sum.mul(&crate::poly::inv_product(&pairs)).reduced())
}

/// `sum_{j=0}^{d1} (qt)^j [2 d1 + d2 + 1 - 3j]_{q,t}`.
pub fn catalan_f3_explicit(d1: u32, d2: u32) -> Result<Poly, CatalanError> {
    if d1 > d2 {
        return Err(CatalanError::InvalidPair(d1, d2));
    }
    Ok((0..=d1)
        .map(|j| qt_bracket(2 * d1 + d2 + 1 - 3 * j).mul_mono(&Mono::qt(j as i32, j as i32)))
        .sum())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct D3Report {
    pub d1: u32,
    pub d2: u32,
    pub values: Vec<(u32, Poly)>,
    pub constant: bool,
}

/// Evaluate `F(d1, d2, d3)` over `d3s` and report whether it changes.
pub fn check_d3_independence(d1: u32, d2: u32, d3s: &[u32]) -> Result<D3Report, CatalanError> {
    let mut values = Vec::new();
    for &d3 in d3s {
        values.push((d3, catalan_f(&[d1, d2, d3])?));
    }
    let constant = values.windows(2).all(|w| w[0].1 == w[1].1);
    Ok(D3Report {
        d1,
        d2,
        values,
        constant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn slots_exps(v: &[FactorSlot]) -> Vec<((i32, i32), bool)> {
        v.iter().map(|s| (s.exponents, s.is_dropped())).collect()
    }

    #[test]
    fn omega_factors() {
        let w = omega(&Mono::qt(1, 0));
        assert_eq!(slots_exps(&w), [((1, 0), false), ((2, 1), false), ((2, 0), false), ((1, 1), false)]);
        let w = omega(&Mono::qt(-1, -1));
        assert!(w[1].is_dropped());
        assert!(w[0].flipped);
        let w = omega(&Mono::one());
        assert!(w[0].is_dropped());
        assert!(!w[2].is_dropped() && !w[3].is_dropped());
    }

    #[test]
    fn small_values() {
        assert_eq!(catalan_f(&[0, 0, 0]).unwrap(), Poly::one());
        for (d1, d2) in [(0, 0), (1, 1), (2, 3), (3, 3)] {
            assert_eq!(catalan_f(&[d1, d2]).unwrap(), qt_bracket(d1 + 1));
        }
        let f = catalan_f(&[1, 1, 1]).unwrap();
        assert_eq!(f, catalan_f3_explicit(1, 1).unwrap());
        assert_eq!(f.to_string(), "q^3 + q^2*t + q*t^2 + t^3 + q*t");
    }

    #[test]
    fn explicit_formula() {
        assert_eq!(catalan_f3_explicit(0, 4).unwrap(), qt_bracket(5));
        assert_eq!(catalan_f3_explicit(3, 3).unwrap().eval_ones(), crate::poly::int(22));
    }

    #[test]
    fn two_point_series() {
        use crate::poly::inv_product;
        for d1 in 0..3 {
            let h = hilbert_h(&[d1, d1 + 1]).unwrap();
            let a = RExpr::qt(d1 as i32, 0).mul(&inv_product(&[(1, 0), (1, 0), (0, 1), (-1, 1)]));
            let b = RExpr::qt(0, d1 as i32).mul(&inv_product(&[(1, 0), (0, 1), (0, 1), (1, -1)]));
            assert!(h.eq_value(&a.add(&b)), "d1 = {d1}");
        }
        let whole = inv_product(&[(1, 0), (1, 0), (1, 0), (0, 1), (0, 1), (0, 1)]);
        assert!(hilbert_h(&[0, 0, 0]).unwrap().eq_value(&whole));
    }

    #[test]
    fn rejects_bad_vectors() {
        assert!(matches!(catalan_f(&[2, 1]), Err(CatalanError::NotAscending(_))));
        assert!(matches!(catalan_f(&[0; 6]), Err(CatalanError::Guard { .. })));
    }
}
