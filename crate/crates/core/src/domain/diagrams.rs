use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::catalan::{catalan_f, catalan_f3_explicit, Partition};
use crate::ideal::{generator_list, IdealSpec};
use crate::poly::{Mono, Poly};

use super::polytope::{polytope_vertices, Hull, LatticePoint, PolytopeSpec};
use super::DomainError;

fn check_pair(d1: u32, d2: u32) -> Result<(), DomainError> {
    if d1 > d2 {
        return Err(DomainError::InvalidPair(d1, d2));
    }
    Ok(())
}

/// The two-row diagram `μ = (a + b, a)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwoRowDiagram {
    pub a: u32,
    pub b: u32,
}

impl TwoRowDiagram {
    /// Checked against containment in `λ_{d1,d2}`.
    pub fn new(a: u32, b: u32, d1: u32, d2: u32) -> Result<Self, DomainError> {
        if a > d1 || a + b > d1 + d2 {
            return Err(DomainError::NotContained(a, b));
        }
        Ok(Self { a, b })
    }

    pub fn rows(&self) -> (u32, u32) {
        (self.a + self.b, self.a)
    }

    pub fn size(&self) -> u32 {
        2 * self.a + self.b
    }

    /// Boxes `(x, y)` with `x, y >= 1`, row `y = 1` at the bottom.
    pub fn boxes(&self) -> Vec<(u32, u32)> {
        let (r1, r2) = self.rows();
        (1..=r1).map(|x| (x, 1)).chain((1..=r2).map(|x| (x, 2))).collect()
    }

    pub fn arm(&self, (x, y): (u32, u32)) -> u32 {
        let (r1, r2) = self.rows();
        let len = if y == 1 { r1 } else { r2 };
        len - x
    }

    pub fn leg(&self, (x, y): (u32, u32)) -> u32 {
        let (_, r2) = self.rows();
        let height = if x <= r2 { 2 } else { 1 };
        height - y
    }
}

/// `λ = (d1 + d2, d1)` and the strict line `x + d2 y < d1 + 2 d2 + ε`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineCheck {
    pub lambda: Partition,
    /// The line is `x + slope * y = rhs + ε`.
    pub slope: u32,
    pub rhs: u32,
    /// Boxes found by scanning integer points below the line.
    pub boxes_below: Vec<(u32, u32)>,
    /// The scanned boxes are exactly the boxes of `λ`.
    pub matches: bool,
}

pub fn lambda_and_line(d1: u32, d2: u32) -> Result<LineCheck, DomainError> {
    check_pair(d1, d2)?;
    let rhs = d1 + 2 * d2;
    let lambda = Partition::new(vec![d1 + d2, d1]).expect("d1 <= d1 + d2");
    let mut boxes_below = Vec::new();
    // `y <= rhs` bounds the scan since `x >= 1`, and `d2 = 0` forces `d1 = 0`.
    for y in 1..=rhs.max(1) {
        for x in 1..=rhs {
            if x + d2 * y <= rhs {
                boxes_below.push((x, y));
            }
        }
    }
    let lam_boxes: Vec<(u32, u32)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (1..=len).map(move |x| (x, r as u32 + 1)))
        .collect();
    let mut sorted = boxes_below.clone();
    sorted.sort();
    let mut want = lam_boxes;
    want.sort();
    // With `d2 = 0` every row lies below the line, which is then vertical;
    // only `λ = ∅` is meaningful there.
    let matches = if d2 == 0 { lambda.size() == 0 } else { sorted == want };
    Ok(LineCheck {
        lambda,
        slope: d2,
        rhs,
        boxes_below,
        matches,
    })
}

/// `(a, b)` with `0 <= a <= d1`, `0 <= b <= d1 + d2 - a`.
pub fn half_hexagon_points(d1: u32, d2: u32) -> Result<Vec<(u32, u32)>, DomainError> {
    check_pair(d1, d2)?;
    Ok((0..=d1)
        .flat_map(|a| (0..=d1 + d2 - a).map(move |b| (a, b)))
        .collect())
}

/// The point `(d1, 0, d1 + d2) + a(1, 0, -1) + b(0, 1, -1)`.
fn hexagon_point(d1: u32, d2: u32, (a, b): (u32, u32)) -> LatticePoint {
    let (d1, d2, a, b) = (d1 as i64, d2 as i64, a as i64, b as i64);
    LatticePoint(vec![d1 + a, b, d1 + d2 - a - b])
}

/// All `μ ⊆ λ_{d1,d2}`, enumerated by row lengths.
pub fn subdiagrams(d1: u32, d2: u32) -> Result<Vec<TwoRowDiagram>, DomainError> {
    check_pair(d1, d2)?;
    let mut out = Vec::new();
    for r2 in 0..=d1 {
        for r1 in r2..=d1 + d2 {
            out.push(TwoRowDiagram { a: r2, b: r1 - r2 });
        }
    }
    Ok(out)
}

pub fn area(mu: &TwoRowDiagram, d1: u32, d2: u32) -> u32 {
    2 * d1 + d2 - mu.size()
}

/// Boxes with `arm / (leg + 1) <= d2 < (arm + 1) / leg`; the right bound is
/// infinite when `leg = 0`.
pub fn dinv(mu: &TwoRowDiagram, d2: u32) -> u32 {
    mu.boxes()
        .into_iter()
        .filter(|&bx| {
            let (arm, leg) = (mu.arm(bx), mu.leg(bx));
            arm <= d2 * (leg + 1) && (leg == 0 || d2 * leg < arm + 1)
        })
        .count() as u32
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PhiCase {
    /// `a + b <= d2`.
    A,
    /// `a + b > d2`, `b <= d2`.
    B,
    /// `b > d2`.
    C,
}

pub fn phi_case(mu: &TwoRowDiagram, d2: u32) -> PhiCase {
    if mu.a + mu.b <= d2 {
        PhiCase::A
    } else if mu.b <= d2 {
        PhiCase::B
    } else {
        PhiCase::C
    }
}

/// `φ(μ)` by the case formulas.
pub fn phi(mu: &TwoRowDiagram, d1: u32, d2: u32) -> LatticePoint {
    let (a, b) = (mu.a as i64, mu.b as i64);
    let (d1, d2) = (d1 as i64, d2 as i64);
    let x = 2 * d1 + d2 - 2 * a - b;
    let y = match phi_case(mu, d2 as u32) {
        PhiCase::A => a + b,
        PhiCase::B => 2 * a + 2 * b - d2,
        PhiCase::C => 2 * a + d2 + 1,
    };
    LatticePoint(vec![x, y])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trapezoid {
    pub points: Vec<LatticePoint>,
    /// `sum q^x t^y` over the points.
    pub polynomial: Poly,
}

/// Integer points of `d1 + d2 <= x + y <= 2 d1 + d2`, `x + 2y >= 2 d1 + d2`,
/// `2x + y >= 2 d1 + d2`.
pub fn trapezoid_points(d1: u32, d2: u32) -> Result<Trapezoid, DomainError> {
    check_pair(d1, d2)?;
    let s = (2 * d1 + d2) as i64;
    let lo = (d1 + d2) as i64;
    let mut points = Vec::new();
    for x in 0..=s {
        for y in 0..=s {
            if (lo..=s).contains(&(x + y)) && x + 2 * y >= s && 2 * x + y >= s {
                points.push(LatticePoint(vec![x, y]));
            }
        }
    }
    let polynomial = points
        .iter()
        .map(|p| Poly::mono(Mono::qt(p.0[0] as i32, p.0[1] as i32)))
        .sum();
    Ok(Trapezoid { points, polynomial })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionReport {
    pub d1: u32,
    pub d2: u32,
    pub half_hexagon: usize,
    pub subdiagrams: usize,
    pub trapezoid: usize,
    pub generators: usize,
    /// Every half-hexagon point lies in the hexagon for `(d1, d2, d2)`.
    pub in_hexagon: bool,
    /// `(a, b) -> (a + b, a)` is a bijection onto the subdiagrams.
    pub half_hexagon_to_diagrams: bool,
    /// `φ` equals `(area, dinv)` on every subdiagram.
    pub phi_is_statistics: bool,
    /// `φ` is a bijection onto the trapezoid.
    pub phi_bijective: bool,
    /// Each trapezoid point is the bidegree of exactly one generator and
    /// every generator is hit.
    pub generators_match: bool,
    /// `sum q^area t^dinv` equals the explicit formula for `F`.
    pub qtcat_explicit: bool,
    /// ... and the tableaux sum for `(d1, d2, d2)`.
    pub qtcat_tableaux: bool,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.in_hexagon
            && self.half_hexagon_to_diagrams
            && self.phi_is_statistics
            && self.phi_bijective
            && self.generators_match
            && self.qtcat_explicit
            && self.qtcat_tableaux
    }
}

pub fn full_bijection_check(d1: u32, d2: u32) -> Result<BijectionReport, DomainError> {
    let half = half_hexagon_points(d1, d2)?;
    let diagrams = subdiagrams(d1, d2)?;
    let trap = trapezoid_points(d1, d2)?;
    let spec = IdealSpec::new(d1, d2).map_err(|_| DomainError::InvalidPair(d1, d2))?;
    let gens = generator_list(spec);

    let pspec = PolytopeSpec::three(d1, d2)?;
    let verts: Vec<LatticePoint> = polytope_vertices(&pspec)?.into_iter().map(|(_, p)| p).collect();
    let hull = Hull::new(&verts);
    let in_hexagon = half.iter().all(|&ab| hull.contains(&hexagon_point(d1, d2, ab)));

    let diagram_set: BTreeSet<TwoRowDiagram> = diagrams.iter().copied().collect();
    let images: BTreeSet<TwoRowDiagram> = half.iter().map(|&(a, b)| TwoRowDiagram { a, b }).collect();
    let half_hexagon_to_diagrams = images.len() == half.len() && images == diagram_set;

    let phi_is_statistics = diagrams.iter().all(|mu| {
        phi(mu, d1, d2) == LatticePoint(vec![area(mu, d1, d2) as i64, dinv(mu, d2) as i64])
    });
    let phi_image: BTreeSet<LatticePoint> = diagrams.iter().map(|mu| phi(mu, d1, d2)).collect();
    let trap_set: BTreeSet<LatticePoint> = trap.points.iter().cloned().collect();
    let phi_bijective = phi_image.len() == diagrams.len() && phi_image == trap_set;

    let mut by_degree: BTreeMap<LatticePoint, usize> = BTreeMap::new();
    for g in &gens {
        let p = LatticePoint(vec![g.bidegree.0 as i64, g.bidegree.1 as i64]);
        *by_degree.entry(p).or_default() += 1;
    }
    let generators_match = by_degree.values().all(|&k| k == 1)
        && by_degree.keys().cloned().collect::<BTreeSet<_>>() == trap_set;

    let stat_poly: Poly = diagrams
        .iter()
        .map(|mu| Poly::mono(Mono::qt(area(mu, d1, d2) as i32, dinv(mu, d2) as i32)))
        .sum();
    let qtcat_explicit = catalan_f3_explicit(d1, d2).map(|f| f == stat_poly).unwrap_or(false);
    let qtcat_tableaux = catalan_f(&[d1, d2, d2]).map(|f| f == stat_poly).unwrap_or(false);

    Ok(BijectionReport {
        d1,
        d2,
        half_hexagon: half.len(),
        subdiagrams: diagrams.len(),
        trapezoid: trap.points.len(),
        generators: gens.len(),
        in_hexagon,
        half_hexagon_to_diagrams,
        phi_is_statistics,
        phi_bijective,
        generators_match,
        qtcat_explicit,
        qtcat_tableaux,
    })
}
