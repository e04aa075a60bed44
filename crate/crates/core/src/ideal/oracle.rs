//! Bidegree slices of the ideals as kernels of integer matrices.
//!
//! Within a slice the membership conditions are linear in the unknown
//! coefficients: the monomial part restricts the support, and each power
//! `(l1, l2)^k` forbids the coefficients of `u^i v^j` with `i + j < k` after
//! the coordinate change. Stacking those conditions and computing the kernel
//! by exact elimination gives the slice.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::linalg::Echelon;
use crate::poly::{Coeff, Mono, Poly, Var};

use super::{GeneralIdealSpec, IdealSpec};

/// A basis of one bidegree slice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedPiece {
    pub bidegree: (u32, u32),
    pub basis: Vec<Poly>,
}

impl GradedPiece {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// All monomials in `a, b, c, d` of bidegree `(x, y)`, descending.
pub fn slice_monomials(x: u32, y: u32) -> Vec<Mono> {
    let mut out: Vec<Mono> = (0..=x)
        .flat_map(|al| (0..=y).map(move |be| (al, be)))
        .map(|(al, be)| {
            Mono::from_pairs([
                (Var::A, al as i32),
                (Var::B, be as i32),
                (Var::C, (x - al) as i32),
                (Var::D, (y - be) as i32),
            ])
        })
        .collect();
    out.sort_by(|p, q| q.cmp(p));
    out
}

fn binom(n: i32, k: i32) -> BigInt {
    if k < 0 || k > n {
        BigInt::zero()
    } else {
        BigInt::from(binomial(n as u64, k as u64))
    }
}

/// Support monomials allowed by the monomial part, with the constraint rows
/// from `(a - c, b - d)^d1`.
fn slice_system(spec: IdealSpec, x: u32, y: u32) -> (Vec<Mono>, Vec<Vec<BigInt>>) {
    let (d1, d2) = (spec.d1 as i32, spec.d2 as i32);
    let cols: Vec<Mono> = slice_monomials(x, y)
        .into_iter()
        .filter(|m| m.exp(Var::A) + m.exp(Var::B) >= d1 && m.exp(Var::C) + m.exp(Var::D) >= d2)
        .collect();
    // a -> u + c, b -> v + d sends a^al c^ga b^be d^de to
    // sum C(al,i) C(be,j) u^i c^{x-i} v^j d^{y-j}.
    let mut rows = Vec::new();
    for i in 0..d1.min(x as i32 + 1) {
        for j in 0..(d1 - i).min(y as i32 + 1) {
            rows.push(
                cols.iter()
                    .map(|m| binom(m.exp(Var::A), i) * binom(m.exp(Var::B), j))
                    .collect(),
            );
        }
    }
    (cols, rows)
}

/// `dim J(d1, d2)_{(x, y)}`.
pub fn graded_dim_oracle(spec: IdealSpec, bidegree: (u32, u32)) -> usize {
    let (cols, rows) = slice_system(spec, bidegree.0, bidegree.1);
    cols.len() - Echelon::new(cols.len(), rows).rank()
}

/// A basis of `J(d1, d2)_{(x, y)}`, one element per free column.
pub fn graded_piece_oracle(spec: IdealSpec, bidegree: (u32, u32)) -> GradedPiece {
    let (cols, rows) = slice_system(spec, bidegree.0, bidegree.1);
    let kernel = Echelon::new(cols.len(), rows).kernel();
    let basis = kernel
        .into_iter()
        .map(|v| {
            Poly::from_terms(
                cols.iter()
                    .zip(v)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(m, c)| (m.clone(), Coeff::from_integer(c))),
            )
        })
        .collect();
    GradedPiece { bidegree, basis }
}

/// Rank of a family of polynomials, read as coefficient vectors.
pub fn span_rank(polys: &[Poly]) -> usize {
    let mut index: BTreeMap<Mono, usize> = BTreeMap::new();
    for p in polys {
        for (m, _) in p.terms().rev() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    let ncols = index.len();
    let rows: Vec<Vec<BigInt>> = polys
        .iter()
        .map(|p| {
            let mut row = vec![BigInt::zero(); ncols];
            for (m, c) in p.primitive_integer_terms() {
                row[index[&m]] = c;
            }
            row
        })
        .collect();
    Echelon::new(ncols, rows).rank()
}

/// Exponent vectors of length `n` summing to `total`, in reverse lex order.
fn compositions(n: usize, total: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(n - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `dim J'(d)_{(x, y)}` in the `2n` variables `t_i` (q-degree) and `x_i`
/// (t-degree).
pub fn graded_dim_oracle_general(gspec: &GeneralIdealSpec, bidegree: (u32, u32)) -> usize {
    let n = gspec.n();
    let ts = compositions(n, bidegree.0);
    let xs = compositions(n, bidegree.1);
    let cols: Vec<(&Vec<u32>, &Vec<u32>)> = ts.iter().flat_map(|t| xs.iter().map(move |x| (t, x))).collect();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (i, j, k) in gspec.pairs() {
        let k = k as i32;
        if k == 0 {
            continue;
        }
        // t_i -> u + t_j, x_i -> v + x_j; keep u^r v^s with r + s < k.
        let mut keyed: BTreeMap<Vec<i32>, usize> = BTreeMap::new();
        let mut entries: Vec<(usize, usize, BigInt)> = Vec::new();
        for (col, (t, x)) in cols.iter().enumerate() {
            let (ti, xi) = (t[i] as i32, x[i] as i32);
            for r in 0..k.min(ti + 1) {
                for s in 0..(k - r).min(xi + 1) {
                    let mut key: Vec<i32> = Vec::with_capacity(2 * n + 2);
                    key.push(r);
                    key.push(s);
                    for l in 0..n {
                        let te = match l {
                            _ if l == i => 0,
                            _ if l == j => t[j] as i32 + ti - r,
                            _ => t[l] as i32,
                        };
                        let xe = match l {
                            _ if l == i => 0,
                            _ if l == j => x[j] as i32 + xi - s,
                            _ => x[l] as i32,
                        };
                        key.push(te);
                        key.push(xe);
                    }
                    let next = keyed.len();
                    let row = *keyed.entry(key).or_insert(next);
                    entries.push((row, col, binom(ti, r) * binom(xi, s)));
                }
            }
        }
        let mut block = vec![vec![BigInt::zero(); cols.len()]; keyed.len()];
        for (r, c, v) in entries {
            block[r][c] += v;
        }
        rows.extend(block);
    }
    cols.len() - Echelon::new(cols.len(), rows).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{generators::det, member_j};

    #[test]
    fn small_slices() {
        let s = IdealSpec::new(1, 1).unwrap();
        let p = graded_piece_oracle(s, (1, 1));
        assert_eq!(p.dim(), 1);
        assert_eq!(p.basis[0].scale(&crate::poly::int(p.basis[0].leading_coefficient_sign() as i64)), det());
        let p = graded_piece_oracle(s, (3, 0));
        assert_eq!(p.dim(), 1);
        assert_eq!(span_rank(&[p.basis[0].clone(), crate::ideal::generator(crate::ideal::Family::A, 1, 0, s).unwrap().value]), 1);
        assert_eq!(graded_dim_oracle(IdealSpec::new(0, 0).unwrap(), (2, 1)), 6);
    }

    #[test]
    fn oracle_basis_is_in_the_ideal() {
        let s = IdealSpec::new(1, 2).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                let piece = graded_piece_oracle(s, (x, y));
                assert_eq!(span_rank(&piece.basis), piece.dim());
                for b in &piece.basis {
                    assert!(member_j(b, s).unwrap());
                }
            }
        }
    }

    #[test]
    fn general_oracle_whole_ring() {
        let g = GeneralIdealSpec::new(vec![0, 0, 0]).unwrap();
        // 6 q-monomials of degree 2 in three variables times 3 of degree 1
        assert_eq!(graded_dim_oracle_general(&g, (2, 1)), 18);
    }

    #[test]
    fn general_oracle_two_points() {
        // n = 2: J' = (t1 - t2, x1 - x2)^d tensor C[t1 + t2, x1 + x2]
        let g = GeneralIdealSpec::new(vec![1, 1]).unwrap();
        assert_eq!(graded_dim_oracle_general(&g, (0, 0)), 0);
        assert_eq!(graded_dim_oracle_general(&g, (1, 0)), 1);
        assert_eq!(graded_dim_oracle_general(&g, (1, 1)), 3);
    }
}
