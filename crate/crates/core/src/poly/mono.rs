use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::var::{Var, WeightTable};

/// A (possibly Laurent) monomial, stored sparsely as `(var, exponent)`
/// pairs sorted by variable with no zero exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Mono {
    exps: Vec<(Var, i32)>,
}

impl Mono {
    pub fn one() -> Self {
        Self { exps: Vec::new() }
    }

    pub fn var(v: Var) -> Self {
        Self { exps: vec![(v, 1)] }
    }

    pub fn from_pairs<I: IntoIterator<Item = (Var, i32)>>(pairs: I) -> Self {
        let mut acc: BTreeMap<Var, i32> = BTreeMap::new();
        for (v, e) in pairs {
            *acc.entry(v).or_insert(0) += e;
        }
        Self {
            exps: acc.into_iter().filter(|(_, e)| *e != 0).collect(),
        }
    }

    /// `q^a t^b`.
    pub fn qt(a: i32, b: i32) -> Self {
        Self::from_pairs([(Var::Q, a), (Var::T, b)])
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.exps
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, i32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn degree(&self) -> i32 {
        self.exps.iter().map(|(_, e)| e).sum()
    }

    pub fn bidegree(&self, weights: &WeightTable) -> (i32, i32) {
        self.exps.iter().fold((0, 0), |(x, y), &(v, e)| {
            let (wq, wt) = weights.weight(v);
            (x + wq * e, y + wt * e)
        })
    }

    /// No negative exponents.
    pub fn is_polynomial(&self) -> bool {
        self.exps.iter().all(|(_, e)| *e >= 0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (v, e) = self.exps[i];
            let (w, f) = other.exps[j];
            match v.cmp(&w) {
                Ordering::Less => {
                    out.push((v, e));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((w, f));
                    j += 1;
                }
                Ordering::Equal => {
                    if e + f != 0 {
                        out.push((v, e + f));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Mono { exps: out }
    }

    pub fn inv(&self) -> Mono {
        Mono {
            exps: self.exps.iter().map(|&(v, e)| (v, -e)).collect(),
        }
    }

    pub fn div(&self, other: &Mono) -> Mono {
        self.mul(&other.inv())
    }

    pub fn pow(&self, k: i32) -> Mono {
        if k == 0 {
            return Mono::one();
        }
        Mono {
            exps: self.exps.iter().map(|&(v, e)| (v, e * k)).collect(),
        }
    }

    /// Whether `self` divides `other` in the polynomial ring.
    pub fn divides(&self, other: &Mono) -> bool {
        self.exps.iter().all(|&(v, e)| other.exp(v) >= e)
    }

    /// Componentwise minimum (the gcd for polynomial monomials).
    pub fn meet(&self, other: &Mono) -> Mono {
        let mut vars: Vec<Var> = self.exps.iter().chain(&other.exps).map(|(v, _)| *v).collect();
        vars.sort();
        vars.dedup();
        Mono::from_pairs(vars.into_iter().map(|v| (v, self.exp(v).min(other.exp(v)))))
    }

    /// Replace each variable by its image; variables missing from `map` are kept.
    pub fn rename(&self, map: &BTreeMap<Var, Var>) -> Mono {
        Mono::from_pairs(self.exps.iter().map(|&(v, e)| (*map.get(&v).unwrap_or(&v), e)))
    }

    /// Monomial substitution `v -> image(v)`.
    pub fn substitute_monomial(&self, map: &BTreeMap<Var, Mono>) -> Mono {
        self.exps.iter().fold(Mono::one(), |acc, &(v, e)| match map.get(&v) {
            Some(m) => acc.mul(&m.pow(e)),
            None => acc.mul(&Mono::from_pairs([(v, e)])),
        })
    }

    /// Graded lexicographic comparison with earlier variables larger.
    pub fn cmp_grlex(&self, other: &Mono) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.cmp_lex(other))
    }

    fn cmp_lex(&self, other: &Mono) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            let a = self.exps.get(i);
            let b = other.exps.get(j);
            match (a, b) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, e)), None) => return e.cmp(&0),
                (None, Some(&(_, f))) => return 0.cmp(&f),
                (Some(&(v, e)), Some(&(w, f))) => match v.cmp(&w) {
                    Ordering::Less => return e.cmp(&0),
                    Ordering::Greater => return 0.cmp(&f),
                    Ordering::Equal => {
                        if e != f {
                            return e.cmp(&f);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_grlex(other)
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|&(v, e)| if e == 1 { v.name() } else { format!("{v}^{e}") })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

impl Serialize for Mono {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let map: BTreeMap<String, i32> = self.exps.iter().map(|(v, e)| (v.name(), *e)).collect();
        map.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Mono {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let map = BTreeMap::<String, i32>::deserialize(deserializer)?;
        let mut pairs = Vec::with_capacity(map.len());
        for (name, e) in map {
            let v: Var = name.parse().map_err(serde::de::Error::custom)?;
            pairs.push((v, e));
        }
        Ok(Mono::from_pairs(pairs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_drops_zero_exponents() {
        let m = Mono::from_pairs([(Var::A, 2), (Var::C, 1), (Var::A, -2)]);
        assert_eq!(m, Mono::var(Var::C));
        assert!(Mono::qt(1, -1).mul(&Mono::qt(-1, 1)).is_one());
    }

    #[test]
    fn grlex_order() {
        let a = Mono::var(Var::A);
        let b = Mono::var(Var::B);
        let c2 = Mono::var(Var::C).pow(2);
        assert!(a > b);
        assert!(c2 > a);
        let q = Mono::var(Var::Q);
        let t = Mono::var(Var::T);
        assert!(q > t);
        assert!(Mono::qt(2, 0) > Mono::qt(1, 1));
        assert!(Mono::qt(1, 1) > Mono::qt(0, 2));
    }

    #[test]
    fn bidegree_uses_weights() {
        let m = Mono::from_pairs([(Var::A, 2), (Var::B, 1), (Var::C, 3), (Var::D, 4)]);
        assert_eq!(m.bidegree(&WeightTable::standard()), (5, 5));
    }
}
