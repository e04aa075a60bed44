use proptest::prelude::*;

use haiman::catalan::{catalan_f, hilbert_h};
use haiman::domain::{area, dinv, phi, polytope_vertices, PolytopeSpec, TwoRowDiagram};
use haiman::ideal::{
    expected_generator_count, generator_list, graded_dim_oracle, graded_dim_oracle_general, member_j,
    GeneralIdealSpec, IdealSpec,
};
use haiman::link::{a_term, alpha_recursion_holds, hhh_closed, hhh_step, SignConvention};
use haiman::poly::{int, inv_product, Mono, Poly, RExpr, Var, Window};

const ABCD: [Var; 4] = [Var::A, Var::B, Var::C, Var::D];

fn poly_abcd(max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::array::uniform4(0i32..3), -4i64..=4), 0..=max_terms).prop_map(|terms| {
        Poly::from_terms(
            terms
                .into_iter()
                .map(|(e, c)| (Mono::from_pairs(ABCD.iter().copied().zip(e)), int(c))),
        )
    })
}

fn poly_qt() -> impl Strategy<Value = Poly> {
    prop::collection::vec((0i32..3, 0i32..3, -3i64..=3), 1..=4)
        .prop_map(|terms| Poly::from_terms(terms.into_iter().map(|(a, b, c)| (Mono::qt(a, b), int(c)))))
}

const POOL: [(i32, i32); 5] = [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)];

fn rexpr() -> impl Strategy<Value = RExpr> {
    (poly_qt(), prop::collection::vec(0usize..POOL.len(), 0..=3)).prop_map(|(num, idx)| {
        let pairs: Vec<(i32, i32)> = idx.iter().map(|&i| POOL[i]).collect();
        RExpr::from_poly(num).mul(&inv_product(&pairs))
    })
}

fn ordered_pair(max1: u32, max2: u32) -> impl Strategy<Value = (u32, u32)> {
    (0..=max2).prop_flat_map(move |d2| (0..=d2.min(max1), Just(d2)))
}

fn ascending(len: std::ops::RangeInclusive<usize>, max: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max, len).prop_map(|mut v| {
        v.sort();
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(p in poly_abcd(5), q in poly_abcd(5), r in poly_abcd(5)) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) - &q, p);
    }

    #[test]
    fn exact_division(p in poly_abcd(8), d in poly_abcd(8)) {
        prop_assume!(!d.is_zero());
        prop_assert_eq!((&p * &d).exact_div(&d), Some(p));
    }

    #[test]
    fn rexpr_equality_is_an_equivalence(x in rexpr(), w in rexpr(), f in 0usize..POOL.len()) {
        let (a, b) = POOL[f];
        let y = x.mul(&RExpr::one_minus(a, b)).mul(&inv_product(&[(a, b)]));
        let z = x.add(&w).sub(&w);
        prop_assert!(x.eq_value(&x));
        prop_assert!(x.eq_value(&y) && y.eq_value(&x));
        prop_assert!(y.eq_value(&z) && x.eq_value(&z));
        prop_assert_eq!(x.eq_value(&w), w.eq_value(&x));
    }

    #[test]
    fn expansion_is_additive(xs in prop::collection::vec(rexpr(), 1..=3)) {
        let w = Window::square(6, 6);
        let total = RExpr::sum(&xs).expand(w).unwrap();
        let mut acc = xs[0].expand(w).unwrap();
        for x in &xs[1..] {
            acc = acc.add(&x.expand(w).unwrap());
        }
        prop_assert!(total.agrees_with(&acc));
    }

    #[test]
    fn membership_is_monotone((d1, d2) in ordered_pair(2, 3), m in prop::array::uniform4(0i32..3), junk in poly_abcd(3), pick in 0usize..64) {
        let s = IdealSpec::new(d1, d2).unwrap();
        let gens = generator_list(s);
        let g = &gens[pick % gens.len()];
        let mono = Mono::from_pairs(ABCD.iter().copied().zip(m));
        for p in [g.value.mul_mono(&mono), &g.value + &junk] {
            if member_j(&p, s).unwrap() {
                for e2 in 0..=d2 {
                    for e1 in 0..=d1.min(e2) {
                        prop_assert!(member_j(&p, IdealSpec::new(e1, e2).unwrap()).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn products_land_in_sum((d1, d2) in ordered_pair(2, 2), (e1, e2) in ordered_pair(2, 2), i in 0usize..64, j in 0usize..64) {
        let s = IdealSpec::new(d1, d2).unwrap();
        let t = IdealSpec::new(e1, e2).unwrap();
        let (gs, gt) = (generator_list(s), generator_list(t));
        let p = &gs[i % gs.len()].value * &gt[j % gt.len()].value;
        prop_assert!(member_j(&p, IdealSpec::new(d1 + e1, d2 + e2).unwrap()).unwrap());
    }

    #[test]
    fn catalan_symmetry_and_positivity(d in ascending(2..=4, 2)) {
        let f = catalan_f(&d).unwrap();
        prop_assert_eq!(f.swap_qt(), f.clone());
        prop_assert!(f.terms().all(|(_, c)| c > &int(0)));
        let h = hilbert_h(&d).unwrap();
        prop_assert!(h.swap_qt().eq_value(&h));
    }

    #[test]
    fn phi_equals_statistics((d1, d2) in ordered_pair(5, 8), a in 0u32..=5, b in 0u32..=13) {
        prop_assume!(a <= d1 && a + b <= d1 + d2);
        let mu = TwoRowDiagram::new(a, b, d1, d2).unwrap();
        let want = vec![area(&mu, d1, d2) as i64, dinv(&mu, d2) as i64];
        prop_assert_eq!(phi(&mu, d1, d2).0, want);
    }

    #[test]
    fn vertices_lie_on_hyperplane(d in ascending(1..=5, 6)) {
        let s = PolytopeSpec::new(d).unwrap();
        let level = s.hyperplane_level();
        for (_, p) in polytope_vertices(&s).unwrap() {
            prop_assert_eq!(p.sum(), level);
        }
    }
}

#[test]
fn tail_sums_match_lattice_count() {
    let w = Window::square(8, 8);
    for s in 0..=6i32 {
        let rhs = RExpr::qt(s, 0)
            .mul(&inv_product(&[(1, 0), (-1, 1)]))
            .add(&RExpr::qt(0, s).mul(&inv_product(&[(0, 1), (1, -1)])));
        let series = rhs.expand(w).unwrap();
        for (x, y) in w.points() {
            let want = if x + y >= s { 1 } else { 0 };
            assert_eq!(series.coeff(x, y), int(want), "s={s} at ({x},{y})");
        }
    }
}

#[test]
fn catalan_at_one_counts_generators() {
    for d2 in 0..=5 {
        for d1 in 0..=d2 {
            let f = catalan_f(&[d1, d2, d2]).unwrap();
            let n = expected_generator_count(IdealSpec::new(d1, d2).unwrap());
            assert_eq!(f.eval_ones(), int(n as i64));
        }
    }
}

#[test]
fn general_ideal_at_three_is_free_over_two_coordinates() {
    // J' for (d1, d2, d2) is J(d1, d2) tensored with one q- and one t-weighted
    // free coordinate, so its slice dimension is the sum of J's below it.
    for (d1, d2) in [(0, 1), (1, 1), (1, 2)] {
        let g = GeneralIdealSpec::new(vec![d1, d2, d2]).unwrap();
        let s = IdealSpec::new(d1, d2).unwrap();
        for x in 0..=4u32 {
            for y in 0..=4 - x {
                let want: usize = (0..=x).flat_map(|i| (0..=y).map(move |j| (i, j))).map(|b| graded_dim_oracle(s, b)).sum();
                assert_eq!(graded_dim_oracle_general(&g, (x, y)), want, "({d1},{d2}) at ({x},{y})");
            }
        }
    }
}

#[test]
fn closed_twists_equal_iterated_steps() {
    let bases = [
        RExpr::qt(0, 1),
        RExpr::qt(1, 2).mul(&inv_product(&[(1, 0)])),
        RExpr::from_poly(&Poly::qt(3, 0) - &Poly::qt(0, 2)).mul(&inv_product(&[(1, 1), (0, 1)])),
    ];
    for conv in [SignConvention::RecursionConsistent, SignConvention::AsPrinted] {
        for base in &bases {
            for d1 in 0..=4 {
                let mut s = base.clone();
                for k in 0..=6 {
                    if k > 0 {
                        s = hhh_step(d1, &s, conv);
                    }
                    assert!(hhh_closed(d1, k, base, conv).eq_value(&s), "{conv} d1={d1} k={k}");
                }
            }
        }
    }
}

#[test]
fn alpha_recursion_and_sign_conventions() {
    for d1 in 1..=6 {
        assert!(alpha_recursion_holds(d1, SignConvention::RecursionConsistent), "d1={d1}");
    }
    assert!(!alpha_recursion_holds(1, SignConvention::AsPrinted));
}

#[test]
fn a_term_telescopes() {
    // A(d) - A(d-1) = r^{d-1} (1 + (r - 1)/(1 - q)), r = q t^{-2}.
    let conv = SignConvention::RecursionConsistent;
    let r_minus_one = RExpr::qt(1, -2).sub(&RExpr::one());
    let bracket = RExpr::one().add(&r_minus_one.mul(&inv_product(&[(1, 0)])));
    for d in 1..=5i32 {
        let diff = a_term(d as u32, conv).sub(&a_term(d as u32 - 1, conv));
        let want = bracket.mul_mono(&Mono::qt(d - 1, -2 * (d - 1)));
        assert!(diff.eq_value(&want), "d={d}");
    }
}

#[test]
fn literal_h_reading_fails_off_the_diagonal() {
    // H ignores the last entry, so H(d1, d1, d2) cannot see d2.
    let closed = |d1, d2| haiman::ideal::hilbert_closed(IdealSpec::new(d1, d2).unwrap()).mul(&inv_product(&[(1, 0), (0, 1)]));
    for d2 in 0..=4 {
        for d1 in 0..=d2 {
            let literal = hilbert_h(&[d1, d1, d2]).unwrap().eq_value(&closed(d1, d2));
            assert_eq!(literal, d1 == d2, "({d1},{d2})");
            assert!(hilbert_h(&[d1, d2, d2]).unwrap().eq_value(&closed(d1, d2)));
        }
    }
}
