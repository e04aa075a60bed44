use std::fmt;

use serde::{Deserialize, Serialize};

use crate::poly::{Poly, Var};

use super::{IdealError, IdealSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(s)
    }
}

/// One generator of `J(d1, d2)`. For family `D` the index `i` is unused
/// and stored as zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorDescriptor {
    pub family: Family,
    pub i: u32,
    pub j: u32,
    pub bidegree: (i32, i32),
    pub value: Poly,
}

impl GeneratorDescriptor {
    /// Short label such as `A_{1,0}` or `D_1`.
    pub fn label(&self) -> String {
        match self.family {
            Family::D => format!("D_{}", self.j),
            f => format!("{f}_{{{},{}}}", self.i, self.j),
        }
    }
}

fn p(v: Var, e: u32) -> Poly {
    Poly::var(v).pow(e)
}

pub(super) fn det() -> Poly {
    &(&Poly::var(Var::A) * &Poly::var(Var::D)) - &(&Poly::var(Var::B) * &Poly::var(Var::C))
}

pub(super) fn a_minus_c() -> Poly {
    &Poly::var(Var::A) - &Poly::var(Var::C)
}

pub(super) fn b_minus_d() -> Poly {
    &Poly::var(Var::B) - &Poly::var(Var::D)
}

fn in_range(family: Family, i: u32, j: u32, spec: IdealSpec) -> bool {
    let IdealSpec { d1, d2 } = spec;
    match family {
        Family::A | Family::B => d1 >= 1 && j < d1 && 1 <= i && i <= d1 - j,
        Family::C => j <= d1 && j < d2 && 1 <= i && i <= d2 - j,
        Family::D => j <= d1,
    }
}

/// The generator of the given family and indices, exactly as in the
/// defining formulas (no scalar normalization).
pub fn generator(family: Family, i: u32, j: u32, spec: IdealSpec) -> Result<GeneratorDescriptor, IdealError> {
    let IdealSpec { d1, d2 } = spec;
    let i = if family == Family::D { 0 } else { i };
    if !in_range(family, i, j, spec) {
        return Err(IdealError::IndexOutOfRange { family, i, j, d1, d2 });
    }
    let dj = det().pow(j);
    let (value, bidegree) = match family {
        Family::A => (
            p(Var::A, d1 - j) * p(Var::C, d2 - j) * a_minus_c().pow(i) * b_minus_d().pow(d1 - j - i) * dj,
            (d1 + d2 - j + i, d1 - i),
        ),
        Family::B => (
            p(Var::A, d1 - j - i) * p(Var::B, i) * p(Var::D, d2 - j) * b_minus_d().pow(d1 - j) * dj,
            (d1 - i, d1 + d2 - j + i),
        ),
        Family::C => (
            p(Var::A, d1 - j) * p(Var::C, i) * p(Var::D, d2 - j - i) * b_minus_d().pow(d1 - j) * dj,
            (d1 + i, d1 + d2 - j - i),
        ),
        Family::D => (
            p(Var::A, d1 - j) * p(Var::D, d2 - j) * b_minus_d().pow(d1 - j) * dj,
            (d1, d1 + d2 - j),
        ),
    };
    Ok(GeneratorDescriptor {
        family,
        i,
        j,
        bidegree: (bidegree.0 as i32, bidegree.1 as i32),
        value,
    })
}

/// All generators, ordered by family, then `j`, then `i`.
pub fn generator_list(spec: IdealSpec) -> Vec<GeneratorDescriptor> {
    let IdealSpec { d1, d2 } = spec;
    let mut out = Vec::new();
    for family in [Family::A, Family::B, Family::C, Family::D] {
        for j in 0..=d1 {
            let imax = match family {
                Family::A | Family::B => d1.saturating_sub(j),
                Family::C => d2.saturating_sub(j),
                Family::D => 1,
            };
            let irange = if family == Family::D { 0..=0 } else { 1..=imax };
            for i in irange {
                if in_range(family, i, j, spec) {
                    out.push(generator(family, i, j, spec).expect("index in range"));
                }
            }
        }
    }
    out
}

/// `sum_{j=0}^{d1} (2 d1 + d2 + 1 - 3j)`.
pub fn expected_generator_count(spec: IdealSpec) -> usize {
    (0..=spec.d1)
        .map(|j| (2 * spec.d1 + spec.d2 + 1 - 3 * j) as usize)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::member_j;
    use std::collections::BTreeSet;

    #[test]
    fn example_one_one() {
        let s = IdealSpec::new(1, 1).unwrap();
        let gens = generator_list(s);
        let shown: Vec<String> = gens.iter().map(|g| format!("{} = {}", g.label(), g.value)).collect();
        assert_eq!(
            shown,
            [
                "A_{1,0} = a^2*c - a*c^2",
                "B_{1,0} = b^2*d - b*d^2",
                "C_{1,0} = a*b*c - a*c*d",
                "D_0 = a*b*d - a*d^2",
                "D_1 = a*d - b*c",
            ]
        );
        assert_eq!(gens[0].bidegree, (3, 0));
        assert_eq!(gens[4].bidegree, (1, 1));
    }

    #[test]
    fn example_two_three() {
        let s = IdealSpec::new(2, 3).unwrap();
        let g = generator(Family::A, 1, 0, s).unwrap();
        let expect = p(Var::A, 2) * p(Var::C, 3) * a_minus_c() * b_minus_d();
        assert_eq!(g.value, expect);
        assert_eq!(g.bidegree, (6, 1));
    }

    #[test]
    fn degenerate_d1_zero() {
        let s = IdealSpec::new(0, 3).unwrap();
        let gens = generator_list(s);
        assert_eq!(gens.len(), 4);
        assert_eq!(gens.last().unwrap().value, p(Var::D, 3));
        assert!(generator(Family::A, 1, 0, s).is_err());
    }

    #[test]
    fn out_of_range() {
        let s = IdealSpec::new(1, 1).unwrap();
        assert!(generator(Family::A, 1, 1, s).is_err());
        assert!(generator(Family::C, 2, 0, s).is_err());
        assert!(generator(Family::D, 0, 2, s).is_err());
    }

    #[test]
    fn counts_members_and_distinct_bidegrees() {
        for d2 in 0..=3 {
            for d1 in 0..=d2 {
                let s = IdealSpec::new(d1, d2).unwrap();
                let gens = generator_list(s);
                assert_eq!(gens.len(), expected_generator_count(s));
                let degs: BTreeSet<_> = gens.iter().map(|g| g.bidegree).collect();
                assert_eq!(degs.len(), gens.len());
                for g in &gens {
                    assert_eq!(g.value.bihomogeneous_degree(&crate::poly::WeightTable::standard()), Some(g.bidegree));
                    assert!(member_j(&g.value, s).unwrap(), "{} at {:?}", g.label(), s);
                }
            }
        }
    }
}
