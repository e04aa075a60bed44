use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::mono::Mono;
use super::var::{Var, WeightTable};

pub type Coeff = BigRational;

pub fn int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// Sparse multivariate (Laurent) polynomial with exact rational coefficients.
///
/// Terms are kept in a map ordered by graded lex, so the last entry is the
/// leading term. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, Coeff>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        Self::term(Mono::one(), c)
    }

    pub fn var(v: Var) -> Self {
        Self::term(Mono::var(v), Coeff::one())
    }

    pub fn mono(m: Mono) -> Self {
        Self::term(m, Coeff::one())
    }

    pub fn term(m: Mono, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, Coeff)>>(iter: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    /// `q^a t^b`.
    pub fn qt(a: i32, b: i32) -> Self {
        Self::mono(Mono::qt(a, b))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn leading_term(&self) -> Option<(&Mono, &Coeff)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Mono, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().all(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Mono::is_polynomial)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Mono::is_one)
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.iter().map(|(v, _)| v)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Sum of coefficients (evaluation at all variables equal to one).
    pub fn eval_ones(&self) -> Coeff {
        self.terms.values().fold(Coeff::zero(), |acc, c| acc + c)
    }

    /// Set of bidegrees of the terms.
    pub fn bidegrees(&self, weights: &WeightTable) -> Vec<(i32, i32)> {
        let mut out: Vec<(i32, i32)> = self.terms.keys().map(|m| m.bidegree(weights)).collect();
        out.sort();
        out.dedup();
        out
    }

    /// The common bidegree of all terms, if there is one.
    pub fn bihomogeneous_degree(&self, weights: &WeightTable) -> Option<(i32, i32)> {
        match self.bidegrees(weights).as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    /// Componentwise minimum exponent over all terms (a monomial).
    pub fn monomial_content(&self) -> Mono {
        let mut iter = self.terms.keys();
        match iter.next() {
            None => Mono::one(),
            Some(first) => iter.fold(first.clone(), |acc, m| acc.meet(m)),
        }
    }

    /// Replace variables by polynomials; variables absent from `map` stay.
    pub fn substitute(&self, map: &BTreeMap<Var, Poly>) -> Poly {
        let mut cache: BTreeMap<(Var, i32), Poly> = BTreeMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut kept = Mono::one();
            let mut acc = Poly::constant(c.clone());
            for (v, e) in m.iter() {
                match map.get(&v) {
                    Some(image) => {
                        assert!(e >= 0, "cannot substitute into a negative power of {v}");
                        let p = cache
                            .entry((v, e))
                            .or_insert_with(|| image.pow(e as u32));
                        acc = &acc * &*p;
                    }
                    None => kept = kept.mul(&Mono::from_pairs([(v, e)])),
                }
            }
            for (n, d) in acc.mul_mono(&kept).terms {
                out.add_term(n, d);
            }
        }
        out
    }

    pub fn rename(&self, map: &BTreeMap<Var, Var>) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.rename(map), c.clone())))
    }

    pub fn substitute_monomial(&self, map: &BTreeMap<Var, Mono>) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.substitute_monomial(map), c.clone())))
    }

    /// Exchange `q` and `t`.
    pub fn swap_qt(&self) -> Poly {
        self.rename(&BTreeMap::from([(Var::Q, Var::T), (Var::T, Var::Q)]))
    }

    /// Multiply by the least common denominator so that every coefficient is
    /// an integer with overall gcd one; returns the integer coefficients in
    /// term order together with the monomials.
    pub fn primitive_integer_terms(&self) -> Vec<(Mono, BigInt)> {
        use num_integer::Integer;
        let lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<(Mono, BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), (c * BigRational::from_integer(lcm.clone())).to_integer()))
            .collect();
        let g = ints
            .iter()
            .fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
        if g.is_zero() || g.is_one() {
            return ints;
        }
        ints.into_iter().map(|(m, c)| (m, c / &g)).collect()
    }

    /// Exact division in the polynomial ring.
    ///
    /// Runs multivariate division by a single divisor in graded lex order;
    /// `d` divides `p` exactly iff every step finds the leading term
    /// divisible and the remainder vanishes. Returns `None` when either
    /// input has negative exponents or `d` does not divide `p`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if !self.is_polynomial() || !d.is_polynomial() {
            return None;
        }
        let (lm, lc) = d.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            if !lm.divides(&rm) {
                return None;
            }
            let qm = rm.div(&lm);
            let qc = rc / &lc;
            for (m, c) in &d.terms {
                rem.add_term(m.mul(&qm), -(c * &qc));
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    pub fn leading_coefficient_sign(&self) -> i32 {
        match self.leading_term() {
            Some((_, c)) if c.is_negative() => -1,
            Some(_) => 1,
            None => 0,
        }
    }
}

impl fmt::Display for Poly {
    /// Terms in descending graded lex order, e.g. `a^2*c - a*c^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    mono: Mono,
    coeff: String,
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let recs: Vec<TermRecord> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| TermRecord { mono: m.clone(), coeff: c.to_string() })
            .collect();
        recs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let recs = Vec::<TermRecord>::deserialize(deserializer)?;
        let mut p = Poly::zero();
        for r in recs {
            let c: BigRational = r.coeff.parse().map_err(serde::de::Error::custom)?;
            p.add_term(r.mono, c);
        }
        Ok(p)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::one()
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |acc, p| acc * p)
    }
}

/// `[n]_{q,t} = q^{n-1} + q^{n-2} t + ... + t^{n-1}`, with `[0] = 0`.
pub fn qt_bracket(n: u32) -> Poly {
    let n = n as i32;
    Poly::from_terms((0..n).map(|i| (Mono::qt(n - 1 - i, i), Coeff::one())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Poly {
        Poly::var(Var::Q)
    }
    fn t() -> Poly {
        Poly::var(Var::T)
    }

    #[test]
    fn difference_of_squares_divides() {
        let p = &q().pow(2) - &t().pow(2);
        let d = &q() - &t();
        assert_eq!(p.exact_div(&d), Some(&q() + &t()));
    }

    #[test]
    fn sum_of_squares_does_not_divide() {
        let p = &q().pow(2) + &t().pow(2);
        assert_eq!(p.exact_div(&(&q() - &t())), None);
    }

    #[test]
    fn laurent_inputs_are_not_divided() {
        let p = Poly::qt(-1, 0);
        assert_eq!(p.exact_div(&q()), None);
    }

    #[test]
    fn brackets() {
        assert_eq!(qt_bracket(0), Poly::zero());
        assert_eq!(qt_bracket(1), Poly::one());
        let four = qt_bracket(4);
        assert_eq!(four.to_string(), "q^3 + q^2*t + q*t^2 + t^3");
    }

    #[test]
    fn display_uses_descending_order() {
        let a = Poly::var(Var::A);
        let c = Poly::var(Var::C);
        let p = &(&a * &c) * &(&a - &c);
        assert_eq!(p.to_string(), "a^2*c - a*c^2");
        let half = Poly::constant(BigRational::new(1.into(), 2.into()));
        assert_eq!((&half - &a).to_string(), "-a + 1/2");
    }

    #[test]
    fn substitution_expands() {
        let a = Poly::var(Var::A);
        let c = Poly::var(Var::C);
        let u = Poly::var(Var::U);
        let map = BTreeMap::from([(Var::A, &u + &c)]);
        let p = a.pow(2).substitute(&map);
        assert_eq!(p, &(&u.pow(2) + &(&u * &c).scale(&int(2))) + &c.pow(2));
    }

    #[test]
    fn serde_round_trip() {
        let p = &qt_bracket(3) - &Poly::qt(-1, 2).scale(&BigRational::new(3.into(), 7.into()));
        let s = serde_json::to_string(&p).unwrap();
        let back: Poly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
