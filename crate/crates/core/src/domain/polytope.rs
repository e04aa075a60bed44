use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::linalg::Echelon;

use super::DomainError;

/// Largest `n` for vertex enumeration.
pub const MAX_VERTEX_N: usize = 6;
/// Largest `n` for the zonotope comparison.
pub const MAX_ZONOTOPE_N: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint(pub Vec<i64>);

impl LatticePoint {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A permutation of `0..n`, stored by images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// All of `S_n` in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Perm> {
        fn go(rest: &mut Vec<usize>, acc: &mut Vec<usize>, out: &mut Vec<Perm>) {
            if rest.is_empty() {
                out.push(Perm(acc.clone()));
                return;
            }
            for k in 0..rest.len() {
                let x = rest.remove(k);
                acc.push(x);
                go(rest, acc, out);
                acc.pop();
                rest.insert(k, x);
            }
        }
        let mut out = Vec::new();
        go(&mut (0..n).collect(), &mut Vec::new(), &mut out);
        out
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &s) in self.0.iter().enumerate() {
            inv[s] = i;
        }
        Perm(inv)
    }

    /// `w0 ∘ self`, with `w0(i) = n - 1 - i`.
    pub fn reversed(&self) -> Perm {
        let n = self.0.len();
        Perm(self.0.iter().map(|&s| n - 1 - s).collect())
    }
}

impl fmt::Display for Perm {
    /// Cycle notation with one-based labels, `e` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cyc = vec![start + 1];
            seen[start] = true;
            let mut i = self.0[start];
            while i != start {
                seen[i] = true;
                cyc.push(i + 1);
                i = self.0[i];
            }
            let s: Vec<String> = cyc.iter().map(|x| x.to_string()).collect();
            cycles.push(format!("({})", s.join(" ")));
        }
        if cycles.is_empty() {
            f.write_str("e")
        } else {
            f.write_str(&cycles.concat())
        }
    }
}

/// An ascending degree vector with `d_ij = min(d_i, d_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolytopeSpec {
    d: Vec<u32>,
}

impl PolytopeSpec {
    pub fn new(d: Vec<u32>) -> Result<Self, DomainError> {
        if d.is_empty() || d.windows(2).any(|w| w[0] > w[1]) {
            return Err(DomainError::NotAscending(d));
        }
        Ok(Self { d })
    }

    /// `(d1, d2, d2)`, the vector attached to `J(d1, d2)`.
    pub fn three(d1: u32, d2: u32) -> Result<Self, DomainError> {
        Self::new(vec![d1, d2, d2])
    }

    pub fn n(&self) -> usize {
        self.d.len()
    }

    pub fn dij(&self, i: usize, j: usize) -> i64 {
        self.d[i].min(self.d[j]) as i64
    }

    /// `sum_{i<j} d_ij`.
    pub fn hyperplane_level(&self) -> i64 {
        let n = self.n();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| self.dij(i, j)).sum()
    }
}

/// `p_σ = σ(b_{1,σ}, ..., b_{n,σ})` with
/// `b_{i,σ} = sum_{j<i} d_{σ^{-1}(i), σ^{-1}(j)}` and
/// `σ(x_1, ..., x_n) = (x_{σ(1)}, ..., x_{σ(n)})`.
pub fn vertex(spec: &PolytopeSpec, sigma: &Perm) -> LatticePoint {
    let n = spec.n();
    let inv = sigma.inverse();
    let b: Vec<i64> = (0..n)
        .map(|i| (0..i).map(|j| spec.dij(inv.apply(i), inv.apply(j))).sum())
        .collect();
    LatticePoint((0..n).map(|k| b[sigma.apply(k)]).collect())
}

pub fn polytope_vertices(spec: &PolytopeSpec) -> Result<Vec<(Perm, LatticePoint)>, DomainError> {
    if spec.n() > MAX_VERTEX_N {
        return Err(DomainError::Guard {
            n: spec.n(),
            max: MAX_VERTEX_N,
        });
    }
    Ok(Perm::all(spec.n())
        .into_iter()
        .map(|s| {
            let p = vertex(spec, &s);
            (s, p)
        })
        .collect())
}

/// Convex hull of finitely many integer points, as an affine hull plus
/// facet inequalities in a coordinate projection that is injective on it.
#[derive(Clone, Debug)]
pub struct Hull {
    origin: Vec<i64>,
    span: Vec<Vec<i64>>,
    axes: Vec<usize>,
    facets: Vec<(Vec<i64>, i64)>,
}

fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl Hull {
    /// Hulls of affine dimension at most three.
    pub fn new(points: &[LatticePoint]) -> Hull {
        let origin = points[0].0.clone();
        let n = origin.len();
        let diffs: Vec<Vec<i64>> = points.iter().map(|p| sub(&p.0, &origin)).collect();
        let ech = Echelon::new(n, diffs.iter().map(|d| to_big(d)).collect());
        let axes = ech.pivots().to_vec();
        let m = axes.len();
        assert!(m <= 3, "hull of dimension {m} not supported");
        let proj: Vec<Vec<i64>> = diffs.iter().map(|d| axes.iter().map(|&a| d[a]).collect()).collect();
        let mut facets: BTreeSet<(Vec<i64>, i64)> = BTreeSet::new();
        let mut consider = |normal: Vec<i64>| {
            if normal.iter().all(|&x| x == 0) {
                return;
            }
            let vals: Vec<i64> = proj.iter().map(|y| dot(&normal, y)).collect();
            let (lo, hi) = (*vals.iter().min().unwrap(), *vals.iter().max().unwrap());
            facets.insert((normal.clone(), hi));
            facets.insert((normal.iter().map(|x| -x).collect(), -lo));
        };
        match m {
            0 => {}
            1 => consider(vec![1]),
            2 => {
                for p in &proj {
                    for q in &proj {
                        let d = sub(q, p);
                        consider(vec![-d[1], d[0]]);
                    }
                }
            }
            _ => {
                for (i, p) in proj.iter().enumerate() {
                    for (j, q) in proj.iter().enumerate().skip(i + 1) {
                        for r in proj.iter().skip(j + 1) {
                            let (u, v) = (sub(q, p), sub(r, p));
                            consider(vec![
                                u[1] * v[2] - u[2] * v[1],
                                u[2] * v[0] - u[0] * v[2],
                                u[0] * v[1] - u[1] * v[0],
                            ]);
                        }
                    }
                }
            }
        }
        // Only supporting planes through at least one point are kept by
        // construction; redundant non-facet planes are harmless.
        Hull {
            origin,
            span: diffs,
            axes,
            facets: facets.into_iter().collect(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.axes.len()
    }

    pub fn contains(&self, x: &LatticePoint) -> bool {
        let d = sub(&x.0, &self.origin);
        let n = d.len();
        let mut rows: Vec<Vec<BigInt>> = self.span.iter().map(|r| to_big(r)).collect();
        rows.push(to_big(&d));
        if Echelon::new(n, rows).rank() != self.dimension() {
            return false;
        }
        let y: Vec<i64> = self.axes.iter().map(|&a| d[a]).collect();
        self.facets.iter().all(|(normal, c)| dot(normal, &y) <= *c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZonotopeReport {
    pub n: usize,
    pub distinct_vertices: usize,
    pub segments: Vec<(LatticePoint, LatticePoint)>,
    pub hyperplane: bool,
    /// `p_σ = sum_{i<j} d_ij e_k`, `k` the index of `i, j` with larger `σ`-value.
    pub decomposition: bool,
    /// The rule "take `e_i` iff `σ(i) < σ(j)`" produces `p_{w0 σ}`.
    pub reversed_rule: bool,
    /// Every endpoint sum, hence every zonotope vertex, lies in the hull.
    pub endpoint_sums_in_hull: bool,
    /// Every `p_σ` is an endpoint sum.
    pub vertices_are_endpoint_sums: bool,
}

impl ZonotopeReport {
    pub fn passed(&self) -> bool {
        self.hyperplane
            && self.decomposition
            && self.reversed_rule
            && self.endpoint_sums_in_hull
            && self.vertices_are_endpoint_sums
    }
}

/// Compare the hull of the `p_σ` with the Minkowski sum of the segments
/// `[d_ij e_i, d_ij e_j]`.
pub fn zonotope_check(spec: &PolytopeSpec) -> Result<ZonotopeReport, DomainError> {
    let n = spec.n();
    if n > MAX_ZONOTOPE_N {
        return Err(DomainError::Guard {
            n,
            max: MAX_ZONOTOPE_N,
        });
    }
    let verts = polytope_vertices(spec)?;
    let unit = |k: usize, s: i64| {
        let mut v = vec![0; n];
        v[k] = s;
        v
    };
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let segments = pairs
        .iter()
        .map(|&(i, j)| {
            let d = spec.dij(i, j);
            (LatticePoint(unit(i, d)), LatticePoint(unit(j, d)))
        })
        .collect();
    let rule = |s: &Perm, larger: bool| {
        let mut v = vec![0i64; n];
        for &(i, j) in &pairs {
            let i_first = s.apply(i) < s.apply(j);
            let k = if i_first == larger { j } else { i };
            v[k] += spec.dij(i, j);
        }
        LatticePoint(v)
    };
    let level = spec.hyperplane_level();
    let hyperplane = verts.iter().all(|(_, p)| p.sum() == level);
    let decomposition = verts.iter().all(|(s, p)| rule(s, true) == *p);
    let reversed_rule = verts
        .iter()
        .all(|(s, _)| rule(s, false) == vertex(spec, &s.reversed()));
    let mut sums = BTreeSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        let mut v = vec![0i64; n];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            let k = if mask >> b & 1 == 0 { i } else { j };
            v[k] += spec.dij(i, j);
        }
        sums.insert(LatticePoint(v));
    }
    let points: Vec<LatticePoint> = verts.iter().map(|(_, p)| p.clone()).collect();
    let hull = Hull::new(&points);
    let endpoint_sums_in_hull = sums.iter().all(|s| hull.contains(s));
    let vertices_are_endpoint_sums = points.iter().all(|p| sums.contains(p));
    let distinct: BTreeSet<&LatticePoint> = points.iter().collect();
    Ok(ZonotopeReport {
        n,
        distinct_vertices: distinct.len(),
        segments,
        hyperplane,
        decomposition,
        reversed_rule,
        endpoint_sums_in_hull,
        vertices_are_endpoint_sums,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(v: &[i64]) -> LatticePoint {
        LatticePoint(v.to_vec())
    }

    #[test]
    fn vertex_table_three_five() {
        let spec = PolytopeSpec::three(3, 5).unwrap();
        let got: Vec<(String, LatticePoint)> = polytope_vertices(&spec)
            .unwrap()
            .into_iter()
            .map(|(s, p)| (s.to_string(), p))
            .collect();
        let want = [
            ("e", [0, 3, 8]),
            ("(2 3)", [0, 8, 3]),
            ("(1 2)", [3, 0, 8]),
            ("(1 2 3)", [3, 8, 0]),
            ("(1 3 2)", [6, 0, 5]),
            ("(1 3)", [6, 5, 0]),
        ];
        for (name, p) in want {
            assert!(got.contains(&(name.to_string(), lp(&p))), "{name} -> {p:?} missing from {got:?}");
        }
    }

    #[test]
    fn dilated_permutahedron() {
        let spec = PolytopeSpec::new(vec![2, 2, 2, 2]).unwrap();
        for (s, p) in polytope_vertices(&spec).unwrap() {
            let want: Vec<i64> = (0..4).map(|i| 2 * s.apply(i) as i64).collect();
            assert_eq!(p.0, want);
        }
    }

    #[test]
    fn zonotope_small() {
        let r = zonotope_check(&PolytopeSpec::three(1, 1).unwrap()).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.distinct_vertices, 6);
        let r = zonotope_check(&PolytopeSpec::new(vec![0, 0, 0]).unwrap()).unwrap();
        assert!(r.passed());
        assert_eq!(r.distinct_vertices, 1);
        let r = zonotope_check(&PolytopeSpec::new(vec![1, 2, 3, 3]).unwrap()).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn hull_rejects_outside_points() {
        let spec = PolytopeSpec::three(1, 2).unwrap();
        let pts: Vec<LatticePoint> = polytope_vertices(&spec).unwrap().into_iter().map(|(_, p)| p).collect();
        let hull = Hull::new(&pts);
        assert_eq!(hull.dimension(), 2);
        assert!(hull.contains(&lp(&[1, 1, 2])));
        assert!(!hull.contains(&lp(&[4, 0, 0])));
        assert!(!hull.contains(&lp(&[1, 1, 1])));
    }
}
