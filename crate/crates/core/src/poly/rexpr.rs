use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::mono::Mono;
use super::polynomial::{Coeff, Poly};
use super::series::{TruncSeries, Window};
use super::var::Var;
use super::PolyError;

/// The factor `1 - q^a t^b` with `(a, b)` lexicographically positive
/// (`a > 0`, or `a == 0` and `b > 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BinomialFactor {
    a: i32,
    b: i32,
}

impl BinomialFactor {
    /// Only lex-positive exponent pairs are accepted.
    pub fn new(a: i32, b: i32) -> Option<Self> {
        (a > 0 || (a == 0 && b > 0)).then_some(Self { a, b })
    }

    /// Normalize `1 - q^a t^b`.
    ///
    /// Returns `None` for the `(1 - 1)` factor. Otherwise returns the
    /// normalized factor and whether it was flipped, in which case
    /// `1 - m = -m (1 - m^{-1})`.
    pub fn normalize(a: i32, b: i32) -> Option<(Self, bool)> {
        if let Some(f) = Self::new(a, b) {
            Some((f, false))
        } else if (a, b) == (0, 0) {
            None
        } else {
            Some((Self { a: -a, b: -b }, true))
        }
    }

    pub fn exponents(&self) -> (i32, i32) {
        (self.a, self.b)
    }

    /// `1 - q^a t^b` as a Laurent polynomial.
    pub fn poly(&self) -> Poly {
        &Poly::one() - &Poly::qt(self.a, self.b)
    }

    /// `(t^s (1 - q^a t^b), s)` with the smallest `s >= 0` that makes the
    /// first component an ordinary polynomial.
    pub fn shifted_poly(&self) -> (Poly, i32) {
        let s = (-self.b).max(0);
        (self.poly().mul_mono(&Mono::qt(0, s)), s)
    }
}

impl fmt::Display for BinomialFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(1 - {})", Mono::qt(self.a, self.b))
    }
}

/// Rational expression `sign * prefactor * numerator / prod(1 - q^a t^b)`.
///
/// Canonical form: the numerator is a polynomial in `q, t` without monomial
/// content and with positive leading coefficient; zero is represented with
/// an empty denominator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RExpr {
    sign: i8,
    prefactor: Mono,
    numerator: Poly,
    denominator: BTreeMap<BinomialFactor, u32>,
}

impl RExpr {
    pub fn zero() -> Self {
        Self {
            sign: 1,
            prefactor: Mono::one(),
            numerator: Poly::zero(),
            denominator: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::from_laurent(p, BTreeMap::new())
    }

    pub fn from_mono(m: Mono) -> Self {
        Self::from_poly(Poly::mono(m))
    }

    /// `q^a t^b`.
    pub fn qt(a: i32, b: i32) -> Self {
        Self::from_mono(Mono::qt(a, b))
    }

    /// `numerator / prod(factors)`; the numerator may be Laurent.
    pub fn new<I: IntoIterator<Item = BinomialFactor>>(numerator: Poly, factors: I) -> Self {
        let mut den = BTreeMap::new();
        for f in factors {
            *den.entry(f).or_insert(0) += 1;
        }
        Self::from_laurent(numerator, den)
    }

    /// The polynomial `1 - q^a t^b` (zero when `a = b = 0`).
    pub fn one_minus(a: i32, b: i32) -> Self {
        Self::from_poly(&Poly::one() - &Poly::qt(a, b))
    }

    /// `1 / (1 - q^a t^b)`, normalized; `None` for the `(1 - 1)` factor.
    pub fn inv_one_minus(a: i32, b: i32) -> Option<Self> {
        let (f, flipped) = BinomialFactor::normalize(a, b)?;
        let num = if flipped {
            -Poly::qt(-a, -b)
        } else {
            Poly::one()
        };
        Some(Self::new(num, [f]))
    }

    fn from_laurent(num: Poly, denominator: BTreeMap<BinomialFactor, u32>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let content = num.monomial_content();
        let mut numerator = num.mul_mono(&content.inv());
        let mut sign = 1;
        if numerator.leading_coefficient_sign() < 0 {
            numerator = -numerator;
            sign = -1;
        }
        Self {
            sign,
            prefactor: content,
            numerator,
            denominator: denominator.into_iter().filter(|(_, k)| *k > 0).collect(),
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn prefactor(&self) -> &Mono {
        &self.prefactor
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn denominator(&self) -> impl Iterator<Item = (BinomialFactor, u32)> + '_ {
        self.denominator.iter().map(|(f, k)| (*f, *k))
    }

    pub fn denominator_degree(&self) -> u32 {
        self.denominator.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// `sign * prefactor * numerator` as one Laurent polynomial.
    pub fn full_numerator(&self) -> Poly {
        let p = self.numerator.mul_mono(&self.prefactor);
        if self.sign < 0 {
            -p
        } else {
            p
        }
    }

    /// Numerator over a larger denominator multiset `den`.
    fn numerator_over(&self, den: &BTreeMap<BinomialFactor, u32>) -> Poly {
        let mut acc = self.full_numerator();
        for (f, k) in den {
            let have = self.denominator.get(f).copied().unwrap_or(0);
            debug_assert!(*k >= have);
            if *k > have {
                acc = &acc * &f.poly().pow(k - have);
            }
        }
        acc
    }

    fn union_max<'a, I: IntoIterator<Item = &'a RExpr>>(terms: I) -> BTreeMap<BinomialFactor, u32> {
        let mut den: BTreeMap<BinomialFactor, u32> = BTreeMap::new();
        for t in terms {
            for (f, k) in &t.denominator {
                let e = den.entry(*f).or_insert(0);
                *e = (*e).max(*k);
            }
        }
        den
    }

    /// Common-denominator sum; the denominator is the multiset maximum.
    pub fn sum<'a, I>(terms: I) -> RExpr
    where
        I: IntoIterator<Item = &'a RExpr>,
        I::IntoIter: Clone,
    {
        let iter = terms.into_iter();
        let den = Self::union_max(iter.clone().filter(|t| !t.is_zero()));
        let mut num = Poly::zero();
        for t in iter.filter(|t| !t.is_zero()) {
            num += &t.numerator_over(&den);
        }
        Self::from_laurent(num, den)
    }

    pub fn add(&self, other: &RExpr) -> RExpr {
        Self::sum([self, other])
    }

    pub fn sub(&self, other: &RExpr) -> RExpr {
        Self::sum([self, &other.neg()])
    }

    pub fn neg(&self) -> RExpr {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = self.clone();
        out.sign = -out.sign;
        out
    }

    pub fn mul(&self, other: &RExpr) -> RExpr {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut den = self.denominator.clone();
        for (f, k) in &other.denominator {
            *den.entry(*f).or_insert(0) += k;
        }
        let num = (&self.numerator * &other.numerator).mul_mono(&self.prefactor.mul(&other.prefactor));
        let out = Self::from_laurent(num, den);
        if self.sign * other.sign < 0 {
            out.neg()
        } else {
            out
        }
    }

    pub fn mul_poly(&self, p: &Poly) -> RExpr {
        self.mul(&RExpr::from_poly(p.clone()))
    }

    pub fn mul_mono(&self, m: &Mono) -> RExpr {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        out.prefactor = out.prefactor.mul(m);
        out
    }

    pub fn scale(&self, c: &Coeff) -> RExpr {
        self.mul_poly(&Poly::constant(c.clone()))
    }

    pub fn pow(&self, k: u32) -> RExpr {
        (0..k).fold(RExpr::one(), |acc, _| acc.mul(self))
    }

    /// Divide by `1 - q^a t^b`; `None` for the `(1 - 1)` factor.
    pub fn div_one_minus(&self, a: i32, b: i32) -> Option<RExpr> {
        Some(self.mul(&RExpr::inv_one_minus(a, b)?))
    }

    /// Cancel denominator factors that divide the numerator exactly.
    pub fn reduced(&self) -> RExpr {
        let mut num = self.numerator.clone();
        let mut pre = self.prefactor.clone();
        let mut den = self.denominator.clone();
        loop {
            let mut changed = false;
            let factors: Vec<BinomialFactor> = den.keys().copied().collect();
            for f in factors {
                let (p, s) = f.shifted_poly();
                while den.get(&f).copied().unwrap_or(0) > 0 {
                    match num.exact_div(&p) {
                        Some(qt) => {
                            num = qt;
                            pre = pre.mul(&Mono::qt(0, s));
                            *den.get_mut(&f).unwrap() -= 1;
                            changed = true;
                        }
                        None => break,
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let numerator = num.mul_mono(&pre);
        let out = Self::from_laurent(numerator, den);
        if self.sign < 0 {
            out.neg()
        } else {
            out
        }
    }

    /// Exact equality of rational functions via a common denominator.
    pub fn eq_value(&self, other: &RExpr) -> bool {
        self.sub(other).is_zero()
    }

    /// The value as a Laurent polynomial, when the reduced denominator is empty.
    pub fn to_laurent(&self) -> Option<Poly> {
        let r = self.reduced();
        r.denominator.is_empty().then(|| r.full_numerator())
    }

    /// The value as an ordinary polynomial in `q, t`.
    pub fn to_polynomial(&self) -> Option<Poly> {
        self.to_laurent().filter(Poly::is_polynomial)
    }

    pub fn swap_qt(&self) -> RExpr {
        self.substitute_qt(Mono::qt(0, 1), Mono::qt(1, 0))
            .expect("swapping q and t never produces a (1 - 1) factor")
    }

    /// Monomial substitution `q -> q_image`, `t -> t_image`.
    ///
    /// Returns `None` if some denominator factor becomes `(1 - 1)`.
    pub fn substitute_qt(&self, q_image: Mono, t_image: Mono) -> Option<RExpr> {
        let map = BTreeMap::from([(Var::Q, q_image), (Var::T, t_image)]);
        let mut out = RExpr::from_poly(self.full_numerator().substitute_monomial(&map));
        for (f, k) in &self.denominator {
            let (a, b) = f.exponents();
            let m = Mono::qt(a, b).substitute_monomial(&map);
            let (na, nb) = (m.exp(Var::Q), m.exp(Var::T));
            let inv = RExpr::inv_one_minus(na, nb)?;
            out = out.mul(&inv.pow(*k));
        }
        Some(out)
    }

    /// Geometric expansion on a window.
    ///
    /// Every denominator factor is normalized, so `1/(1 - q^a t^b)` expands
    /// as `sum_k q^{ak} t^{bk}`: q-degree never decreases and the q-truncation
    /// is exact. Factors with `a > 0` are applied first without t-truncation
    /// (finitely many terms below `qmax`), then pure-t factors with truncation
    /// at `tmax`, which is exact because they only raise the t-degree.
    pub fn expand(&self, window: Window) -> Result<TruncSeries, PolyError> {
        window.validate()?;
        let num = self.full_numerator();
        if let Some(qlow) = num.terms().map(|(m, _)| m.exp(Var::Q)).min() {
            if qlow < 0 {
                return Err(PolyError::NotQPowerSeries(qlow));
            }
        }
        let qmax = window.qmax;
        let mut rows: BTreeMap<i32, BTreeMap<i32, Coeff>> = BTreeMap::new();
        for (m, c) in num.terms() {
            let (x, y) = (m.exp(Var::Q), m.exp(Var::T));
            if x <= qmax {
                rows.entry(x).or_default().insert(y, c.clone());
            }
        }
        for (f, k) in &self.denominator {
            let (a, b) = f.exponents();
            if a == 0 {
                continue;
            }
            for _ in 0..*k {
                rows = geometric_in_q(&rows, a, b, qmax);
            }
        }
        for (f, k) in &self.denominator {
            let (a, b) = f.exponents();
            if a != 0 {
                continue;
            }
            for _ in 0..*k {
                for row in rows.values_mut() {
                    *row = geometric_in_t(row, b, window.tmax);
                }
            }
        }
        let mut series = TruncSeries::new(window);
        for (x, row) in rows {
            for (y, c) in row {
                if y >= window.tmin && y <= window.tmax {
                    series.set(x, y, c);
                }
            }
        }
        Ok(series)
    }
}

/// `rows / (1 - q^a t^b)` with `a > 0`, exact for q-degree up to `qmax`.
fn geometric_in_q(
    rows: &BTreeMap<i32, BTreeMap<i32, Coeff>>,
    a: i32,
    b: i32,
    qmax: i32,
) -> BTreeMap<i32, BTreeMap<i32, Coeff>> {
    let mut out: BTreeMap<i32, BTreeMap<i32, Coeff>> = BTreeMap::new();
    let Some(&start) = rows.keys().next() else {
        return out;
    };
    for x in start..=qmax {
        let mut row = rows.get(&x).cloned().unwrap_or_default();
        if let Some(prev) = out.get(&(x - a)) {
            for (y, c) in prev {
                let e = row.entry(y + b).or_insert_with(Coeff::zero);
                *e += c;
            }
        }
        row.retain(|_, c| !c.is_zero());
        if !row.is_empty() {
            out.insert(x, row);
        }
    }
    out
}

/// `row / (1 - t^b)` with `b > 0`, truncated above `tmax`.
fn geometric_in_t(row: &BTreeMap<i32, Coeff>, b: i32, tmax: i32) -> BTreeMap<i32, Coeff> {
    let Some(&start) = row.keys().next() else {
        return BTreeMap::new();
    };
    if start > tmax {
        return BTreeMap::new();
    }
    let len = (tmax - start + 1) as usize;
    let mut dense: Vec<Coeff> = vec![Coeff::zero(); len];
    for (y, c) in row.range(..=tmax) {
        dense[(y - start) as usize] = c.clone();
    }
    let step = b as usize;
    for i in step..len {
        let prev = dense[i - step].clone();
        dense[i] += prev;
    }
    dense
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (start + i as i32, c))
        .collect()
}

impl fmt::Display for RExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        if self.sign < 0 {
            f.write_str("-")?;
        }
        let simple_num = self.numerator.is_monomial();
        match (self.prefactor.is_one(), simple_num) {
            (true, _) if simple_num => write!(f, "{}", self.numerator)?,
            (true, _) => write!(f, "({})", self.numerator)?,
            (false, true) if self.numerator == Poly::one() => write!(f, "{}", self.prefactor)?,
            (false, true) => write!(f, "{}*{}", self.prefactor, self.numerator)?,
            (false, false) => write!(f, "{}*({})", self.prefactor, self.numerator)?,
        }
        if !self.denominator.is_empty() {
            let parts: Vec<String> = self
                .denominator
                .iter()
                .map(|(fac, k)| if *k == 1 { fac.to_string() } else { format!("{fac}^{k}") })
                .collect();
            if parts.len() == 1 && parts[0].ends_with(')') {
                write!(f, "/{}", parts[0])?;
            } else {
                write!(f, "/({})", parts.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Default for RExpr {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Poly> for RExpr {
    fn from(p: Poly) -> Self {
        RExpr::from_poly(p)
    }
}

/// Convenience for `1 / prod (1 - q^a t^b)` over lex-positive pairs.
pub fn inv_product(pairs: &[(i32, i32)]) -> RExpr {
    pairs.iter().fold(RExpr::one(), |acc, &(a, b)| {
        acc.div_one_minus(a, b).expect("(1 - 1) in an explicit product")
    })
}

impl RExpr {
    pub fn is_one(&self) -> bool {
        self.sign == 1 && self.prefactor.is_one() && self.numerator.is_one() && self.denominator.is_empty()
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn inv(a: i32, b: i32) -> RExpr {
        RExpr::inv_one_minus(a, b).unwrap()
    }

    #[test]
    fn factor_normalization() {
        assert_eq!(BinomialFactor::normalize(0, 0), None);
        assert_eq!(BinomialFactor::normalize(-1, 1), Some((BinomialFactor { a: 1, b: -1 }, true)));
        assert_eq!(BinomialFactor::normalize(0, 2), Some((BinomialFactor { a: 0, b: 2 }, false)));
        assert_eq!(BinomialFactor::normalize(0, -2), Some((BinomialFactor { a: 0, b: 2 }, true)));
    }

    #[test]
    fn partial_fraction_identity() {
        // 1/((1-q)(1-t)) - 1/((1-q)(1-t/q)) = 1/((1-t)(1-q/t))
        let lhs = inv(1, 0).mul(&inv(0, 1)).sub(&inv(1, 0).mul(&inv(-1, 1)));
        let rhs = inv(0, 1).mul(&inv(1, -1));
        assert!(lhs.eq_value(&rhs));
    }

    #[test]
    fn sign_normalization() {
        let q = Poly::var(Var::Q);
        let t = Poly::var(Var::T);
        let x = RExpr::from_poly(&q - &t).mul(&inv(1, 0));
        let y = RExpr::from_poly(&t - &q).mul(&inv(1, 0)).neg();
        assert!(x.eq_value(&y));
        assert_eq!(x, y);
        // 1/(q - 1) = -1/(1 - q)
        let one_over_q_minus_one = RExpr::new(Poly::one(), []).mul(&inv(1, 0)).neg();
        let check = one_over_q_minus_one.mul_poly(&(&q - &Poly::one()));
        assert!(check.eq_value(&RExpr::one()));
    }

    #[test]
    fn additive_identity() {
        let x = inv(1, 0).mul(&RExpr::qt(0, 3));
        assert_eq!(x.add(&RExpr::zero()), x);
    }

    #[test]
    fn reduction_cancels_exact_divisors() {
        let x = RExpr::from_poly(&Poly::one() - &Poly::qt(2, 0)).mul(&inv(1, 0));
        let r = x.reduced();
        assert_eq!(r.denominator_degree(), 0);
        assert_eq!(r.to_polynomial().unwrap(), &Poly::one() + &Poly::qt(1, 0));
        // a flipped factor with negative t exponent
        let y = RExpr::from_poly(&Poly::qt(2, 0) - &Poly::qt(0, 2)).mul(&inv(1, -1));
        assert_eq!(y.to_laurent().unwrap(), -(&Poly::qt(1, 1) + &Poly::qt(0, 2)));
    }

    #[test]
    fn expand_geometric() {
        let s = inv(1, 0).expand(Window::new(3, 0, 0)).unwrap();
        for x in 0..=3 {
            assert_eq!(s.coeff(x, 0), Coeff::one());
        }
        assert_eq!(s.support_len(), 4);
    }

    #[test]
    fn expand_alpha_closure() {
        let s = inv(1, 0).mul(&RExpr::qt(0, 1)).expand(Window::new(2, 0, 1)).unwrap();
        assert_eq!(s.support_len(), 3);
        for x in 0..=2 {
            assert_eq!(s.coeff(x, 1), Coeff::one());
        }
    }

    #[test]
    fn expand_mixed_factor() {
        // q/(1 - q/t) on t in [-3, 0], q <= 3: q + q^2/t + q^3/t^2
        let x = RExpr::qt(1, 0).mul(&inv(1, -1));
        let s = x.expand(Window::new(3, -3, 0)).unwrap();
        assert_eq!(s.support_len(), 3);
        assert_eq!(s.coeff(1, 0), Coeff::one());
        assert_eq!(s.coeff(2, -1), Coeff::one());
        assert_eq!(s.coeff(3, -2), Coeff::one());
    }

    #[test]
    fn expand_rejects_negative_q() {
        let x = RExpr::qt(-1, 0).mul(&inv(1, 0));
        assert!(matches!(x.expand(Window::new(3, 0, 3)), Err(PolyError::NotQPowerSeries(-1))));
        assert!(RExpr::one().expand(Window::new(2, 3, 1)).is_err());
    }

    #[test]
    fn substitution_detects_degenerate_factor() {
        let x = inv(1, 1);
        assert!(x.substitute_qt(Mono::qt(1, 0), Mono::qt(-1, 0)).is_none());
        let swapped = inv(2, 1).swap_qt();
        assert!(swapped.eq_value(&inv(1, 2)));
    }
}
