//! Fraction-free Gauss-Jordan elimination over the integers.
//!
//! Rows are reduced by cross-multiplication and then divided by their
//! content, so entries stay integral and small. Pivots are taken in column
//! order, which callers arrange to follow the monomial order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix in reduced (fraction-free) echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

fn normalize_row(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return;
    }
    let lead_negative = row.iter().find(|x| !x.is_zero()).map(|x| x.is_negative()).unwrap_or(false);
    let g = if lead_negative { -g } else { g };
    if !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

impl Echelon {
    pub fn new(ncols: usize, mut rows: Vec<Vec<BigInt>>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), ncols, "ragged matrix");
        }
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..ncols {
            let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            normalize_row(&mut rows[rank]);
            let pivot_row = rows[rank].clone();
            let pv = pivot_row[col].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == rank || row[col].is_zero() {
                    continue;
                }
                let e = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x * &pv - &e * y;
                }
                normalize_row(row);
            }
            pivots.push(col);
            rank += 1;
        }
        rows.truncate(rank);
        Self { ncols, rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Integer basis of the right kernel, one primitive vector per free column.
    pub fn kernel(&self) -> Vec<Vec<BigInt>> {
        let lcm = self
            .rows
            .iter()
            .zip(&self.pivots)
            .fold(BigInt::one(), |acc, (r, &c)| acc.lcm(&r[c]));
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.ncols];
            for &c in &self.pivots {
                v[c] = true;
            }
            v
        };
        let mut out = Vec::new();
        for free in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![BigInt::zero(); self.ncols];
            v[free] = lcm.clone();
            for (r, &c) in self.rows.iter().zip(&self.pivots) {
                v[c] = -(&lcm * &r[free]) / &r[c];
            }
            normalize_row(&mut v);
            out.push(v);
        }
        out
    }
}

pub fn rank(ncols: usize, rows: Vec<Vec<BigInt>>) -> usize {
    Echelon::new(ncols, rows).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let rows = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let e = Echelon::new(3, rows.clone());
        assert_eq!(e.rank(), 2);
        let k = e.kernel();
        assert_eq!(k.len(), 1);
        for r in &rows {
            let dot: BigInt = r.iter().zip(&k[0]).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn empty_matrix_has_full_kernel() {
        let e = Echelon::new(3, vec![]);
        assert_eq!(e.rank(), 0);
        assert_eq!(e.kernel().len(), 3);
    }
}
