use crate::poly::{inv_product, Coeff, Poly, RExpr, TruncSeries, Window};

use super::oracle::graded_dim_oracle;
use super::IdealSpec;

fn bump(s: &mut TruncSeries, x: i32, y: i32, by: i64) {
    if s.window().contains(x, y) {
        let c = s.coeff(x, y) + Coeff::from_integer(by.into());
        s.set(x, y, c);
    }
}

/// Hilbert coefficients counted from the explicit monomial basis.
///
/// The basis consists of `m(a,c) A_{i,j}`, `m(a,b,d) B_{i,j}`,
/// `m(a,c,d) C_{i,j}` and `m(a,d) D_j` for `j < d1`, plus
/// `a^α b^β c^γ d^δ (ad - bc)^d1` with `γ + δ >= d2 - d1`. The `B`/`D` and
/// `C`/`D` parts are counted as two lattice families each containing the
/// `m(a,d) D_j`, which are then subtracted once.
pub fn hilbert_from_basis(spec: IdealSpec, window: Window) -> TruncSeries {
    let (d1, d2) = (spec.d1 as i32, spec.d2 as i32);
    let (qx, tx) = (window.qmax, window.tmax);
    let mut s = TruncSeries::new(window);
    for j in 0..d1 {
        // m(a,c) A_{i,j}: the a,c-monomials of degree k number k + 1
        for i in 1..=d1 - j {
            let (qa, ta) = (d1 + d2 - j + i, d1 - i);
            for k in 0..=(qx - qa).max(-1) {
                bump(&mut s, qa + k, ta, (k + 1) as i64);
            }
        }
        // a^α b^β d^γ (b-d)^{d1-j} (ad-bc)^j, α+β >= d1-j, γ >= d2-j
        for al in 0..=(qx - j).max(-1) {
            for be in 0..=(tx - d1).max(-1) {
                if al + be < d1 - j {
                    continue;
                }
                for ga in (d2 - j)..=(tx - d1 - be).max(d2 - j - 1) {
                    bump(&mut s, al + j, be + ga + d1, 1);
                }
            }
        }
        // a^α c^β d^γ (b-d)^{d1-j} (ad-bc)^j, α >= d1-j, β+γ >= d2-j
        for al in (d1 - j)..=(qx - j).max(d1 - j - 1) {
            for be in 0..=(qx - j - al).max(-1) {
                for ga in 0..=(tx - d1).max(-1) {
                    if be + ga >= d2 - j {
                        bump(&mut s, al + be + j, ga + d1, 1);
                    }
                }
            }
        }
        // overcount: m(a,d) D_j
        for al in 0..=(qx - d1).max(-1) {
            for ga in 0..=(tx - d1 - d2 + j).max(-1) {
                bump(&mut s, al + d1, ga + d1 + d2 - j, -1);
            }
        }
    }
    // a^α b^β c^γ d^δ (ad-bc)^d1 with γ + δ >= d2 - d1
    for al in 0..=(qx - d1).max(-1) {
        for ga in 0..=(qx - d1 - al).max(-1) {
            for be in 0..=(tx - d1).max(-1) {
                for de in 0..=(tx - d1 - be).max(-1) {
                    if ga + de >= d2 - d1 {
                        bump(&mut s, al + ga + d1, be + de + d1, 1);
                    }
                }
            }
        }
    }
    s
}

/// Hilbert coefficients from the linear-algebra oracle.
pub fn hilbert_oracle(spec: IdealSpec, window: Window) -> TruncSeries {
    use rayon::prelude::*;
    let points: Vec<(i32, i32)> = window.points().filter(|&(_, y)| y >= 0).collect();
    let dims: Vec<usize> = points
        .par_iter()
        .map(|&(x, y)| graded_dim_oracle(spec, (x as u32, y as u32)))
        .collect();
    let mut s = TruncSeries::new(window);
    for ((x, y), d) in points.into_iter().zip(dims) {
        s.set(x, y, Coeff::from_integer((d as i64).into()));
    }
    s
}

/// The closed-form bigraded Hilbert series of `J(d1, d2)`:
///
/// ```text
/// q^{2d1+d2} / ((1-q)^2 (1-t/q) (1-t/q^2))
///   + t^{2d1+d2} / ((1-t)^2 (1-q/t) (1-q/t^2))
///   + q^{d1} t^{d2} (1+t) / ((1-q) (1-t) (1-q/t) (1-t^2/q))
///   + q^{d2} t^{d1} (1+q) / ((1-t) (1-q) (1-t/q) (1-q^2/t))
/// ```
pub fn hilbert_closed(spec: IdealSpec) -> RExpr {
    let (d1, d2) = (spec.d1 as i32, spec.d2 as i32);
    let one_plus = |a: i32, b: i32| RExpr::from_poly(&Poly::one() + &Poly::qt(a, b));
    let terms = [
        RExpr::qt(2 * d1 + d2, 0).mul(&inv_product(&[(1, 0), (1, 0), (-1, 1), (-2, 1)])),
        RExpr::qt(0, 2 * d1 + d2).mul(&inv_product(&[(0, 1), (0, 1), (1, -1), (1, -2)])),
        RExpr::qt(d1, d2)
            .mul(&one_plus(0, 1))
            .mul(&inv_product(&[(1, 0), (0, 1), (1, -1), (-1, 2)])),
        RExpr::qt(d2, d1)
            .mul(&one_plus(1, 0))
            .mul(&inv_product(&[(0, 1), (1, 0), (-1, 1), (2, -1)])),
    ];
    RExpr::sum(&terms).reduced()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_count_small() {
        let s = IdealSpec::new(1, 1).unwrap();
        let h = hilbert_from_basis(s, Window::square(4, 4));
        assert_eq!(h.coeff(1, 1), crate::poly::int(1));
        assert_eq!(h.coeff(3, 0), crate::poly::int(1));
        assert_eq!(h.coeff(0, 0), crate::poly::int(0));
    }

    #[test]
    fn whole_ring() {
        let s = IdealSpec::new(0, 0).unwrap();
        let w = Window::square(5, 5);
        let h = hilbert_from_basis(s, w);
        for (x, y) in w.points() {
            assert_eq!(h.coeff(x, y), crate::poly::int(((x + 1) * (y + 1)) as i64));
        }
        let whole = inv_product(&[(1, 0), (1, 0), (0, 1), (0, 1)]);
        assert!(hilbert_closed(s).eq_value(&whole));
    }

    #[test]
    fn three_routes_agree() {
        for (d1, d2) in [(0, 1), (1, 1), (1, 2), (2, 3)] {
            let s = IdealSpec::new(d1, d2).unwrap();
            let n = (2 * d1 + d2 + 3) as i32;
            let w = Window::square(n, n);
            let basis = hilbert_from_basis(s, w);
            let oracle = hilbert_oracle(s, w);
            let closed = hilbert_closed(s).expand(w).unwrap();
            assert_eq!(basis.disagreements(&oracle), vec![], "basis vs oracle at {s:?}");
            assert_eq!(closed.disagreements(&oracle), vec![], "closed vs oracle at {s:?}");
        }
    }
}
