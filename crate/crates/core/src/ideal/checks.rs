use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::poly::{Poly, Var, WeightTable};

use super::generators::{a_minus_c, b_minus_d, det};
use super::oracle::{graded_piece_oracle, slice_monomials, span_rank};
use super::{generator_list, Family, GeneratorDescriptor, IdealSpec};

/// A bidegree where a candidate generating set and the oracle disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceFailure {
    pub bidegree: (u32, u32),
    pub span_dim: usize,
    pub oracle_dim: usize,
    pub contained: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationReport {
    pub spec: IdealSpec,
    pub cutoff: u32,
    pub generators: usize,
    pub slices_checked: usize,
    pub failures: Vec<SliceFailure>,
}

impl GenerationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compare the ideal generated by `gens` with the oracle slice by slice.
fn compare_spans(spec: IdealSpec, gens: &[Poly], cutoff: u32) -> GenerationReport {
    let weights = WeightTable::standard();
    let graded: Vec<((u32, u32), &Poly)> = gens
        .iter()
        .map(|g| {
            let (x, y) = g.bihomogeneous_degree(&weights).expect("generators are bihomogeneous");
            ((x as u32, y as u32), g)
        })
        .collect();
    let slices: Vec<(u32, u32)> = (0..=cutoff)
        .flat_map(|x| (0..=cutoff - x).map(move |y| (x, y)))
        .collect();
    let failures: Vec<Option<SliceFailure>> = slices
        .par_iter()
        .map(|&(x, y)| {
            let mut products = Vec::new();
            for &((gx, gy), g) in &graded {
                if gx <= x && gy <= y {
                    for m in slice_monomials(x - gx, y - gy) {
                        products.push(g.mul_mono(&m));
                    }
                }
            }
            let oracle = graded_piece_oracle(spec, (x, y));
            let span_dim = span_rank(&products);
            let mut joint = products;
            joint.extend(oracle.basis.iter().cloned());
            let contained = span_rank(&joint) == oracle.dim();
            (span_dim != oracle.dim() || !contained).then_some(SliceFailure {
                bidegree: (x, y),
                span_dim,
                oracle_dim: oracle.dim(),
                contained,
            })
        })
        .collect();
    GenerationReport {
        spec,
        cutoff,
        generators: gens.len(),
        slices_checked: slices.len(),
        failures: failures.into_iter().flatten().collect(),
    }
}

/// Check that the listed generators span every slice of total degree at
/// most `cutoff`.
pub fn check_generation(spec: IdealSpec, cutoff: u32) -> GenerationReport {
    let gens: Vec<Poly> = generator_list(spec).into_iter().map(|g| g.value).collect();
    compare_spans(spec, &gens, cutoff)
}

fn pw(p: Poly, e: u32) -> Poly {
    p.pow(e)
}

fn v(x: Var) -> Poly {
    Poly::var(x)
}

/// A generator of `J(d1, d2)` written as a product of generators of
/// `J(1,1)` (namely `ac(a-c)`, `bd(b-d)`, `ac(b-d)`, `ad(b-d)`, `ad-bc`)
/// and of `J(0,1) = (c, d)`.
pub fn j111_factorization(g: &GeneratorDescriptor, spec: IdealSpec) -> Poly {
    let IdealSpec { d1, d2 } = spec;
    let (a, b, c, d) = (v(Var::A), v(Var::B), v(Var::C), v(Var::D));
    let ac = &a * &c;
    let a_gen = &ac * &a_minus_c();
    let b_gen = &(&b * &d) * &b_minus_d();
    let c_gen = &ac * &b_minus_d();
    let d_gen = &(&a * &d) * &b_minus_d();
    let (i, j) = (g.i, g.j);
    let dj = det().pow(j);
    match g.family {
        Family::A => pw(a_gen, i) * pw(c_gen, d1 - j - i) * dj * pw(c, d2 - d1),
        Family::B => pw(d_gen, d1 - j - i) * pw(b_gen, i) * dj * pw(d, d2 - d1),
        Family::C => {
            let x = (i + d1).saturating_sub(d2);
            pw(c_gen, x) * pw(d_gen, d1 - j - x) * dj * pw(c, i - x) * pw(d, d2 + x - d1 - i)
        }
        Family::D => pw(d_gen, d1 - j) * dj * pw(d, d2 - d1),
    }
}

fn multisets(pool: &[Poly], k: u32) -> Vec<Poly> {
    fn go(pool: &[Poly], start: usize, k: u32, acc: &Poly, out: &mut Vec<Poly>) {
        if k == 0 {
            out.push(acc.clone());
            return;
        }
        for idx in start..pool.len() {
            go(pool, idx, k - 1, &(acc * &pool[idx]), out);
        }
    }
    let mut out = Vec::new();
    go(pool, 0, k, &Poly::one(), &mut out);
    out
}

/// Generators of `J(1,1)^d1 · J(0,1)^{d2-d1}`.
pub fn product_generators(spec: IdealSpec) -> Vec<Poly> {
    let j11: Vec<Poly> = generator_list(IdealSpec { d1: 1, d2: 1 })
        .into_iter()
        .map(|g| g.value)
        .collect();
    let j01 = [v(Var::C), v(Var::D)];
    let left = multisets(&j11, spec.d1);
    let right = multisets(&j01, spec.d2 - spec.d1);
    let mut out: Vec<Poly> = left.iter().flat_map(|l| right.iter().map(move |r| l * r)).collect();
    out.sort_by_key(|p| p.to_string());
    out.dedup();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct J111Report {
    pub spec: IdealSpec,
    pub factorizations_checked: usize,
    /// Labels of generators whose factorization is not an identity.
    pub factorization_failures: Vec<String>,
    pub span: GenerationReport,
}

impl J111Report {
    pub fn passed(&self) -> bool {
        self.factorization_failures.is_empty() && self.span.passed()
    }
}

/// Check `J(d1, d2) = J(1,1)^d1 · J(0,1)^{d2-d1}`: each generator's
/// factorization as an exact identity, and slice dimensions of the product
/// ideal against the oracle up to `cutoff`.
pub fn check_j111(spec: IdealSpec, cutoff: u32) -> J111Report {
    let gens = generator_list(spec);
    let factorization_failures = gens
        .iter()
        .filter(|g| j111_factorization(g, spec) != g.value)
        .map(|g| g.label())
        .collect();
    let span = compare_spans(spec, &product_generators(spec), cutoff);
    J111Report {
        spec,
        factorizations_checked: gens.len(),
        factorization_failures,
        span,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::generator;

    #[test]
    fn generation_small() {
        for (d1, d2, cutoff) in [(1, 1, 6), (0, 2, 5), (1, 2, 6)] {
            let r = check_generation(IdealSpec::new(d1, d2).unwrap(), cutoff);
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn a_case_factorization() {
        let s = IdealSpec::new(1, 2).unwrap();
        let g = generator(Family::A, 1, 0, s).unwrap();
        let (a, c) = (v(Var::A), v(Var::C));
        let expect = &(&(&a * &c) * &a_minus_c()) * &c;
        assert_eq!(g.value, expect);
        assert_eq!(j111_factorization(&g, s), expect);
    }

    #[test]
    fn d_case_factorization() {
        let s = IdealSpec::new(2, 2).unwrap();
        let g = generator(Family::D, 0, 1, s).unwrap();
        let expect = &(&(&v(Var::A) * &v(Var::D)) * &b_minus_d()) * &det();
        assert_eq!(j111_factorization(&g, s), expect);
        assert_eq!(g.value, expect);
    }

    #[test]
    fn j111_small() {
        let r = check_j111(IdealSpec::new(1, 2).unwrap(), 6);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn detects_missing_generator() {
        let s = IdealSpec::new(1, 1).unwrap();
        let mut gens: Vec<Poly> = generator_list(s).into_iter().map(|g| g.value).collect();
        gens.pop();
        assert!(!compare_spans(s, &gens, 3).passed());
    }
}
