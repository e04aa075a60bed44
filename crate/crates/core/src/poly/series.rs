use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::polynomial::{Coeff, Poly};
use super::var::Var;
use super::PolyError;

/// Bidegree window `0 <= q <= qmax`, `tmin <= t <= tmax`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    pub qmax: i32,
    pub tmin: i32,
    pub tmax: i32,
}

impl Window {
    pub fn new(qmax: i32, tmin: i32, tmax: i32) -> Self {
        Self { qmax, tmin, tmax }
    }

    /// `0 <= q <= qmax`, `0 <= t <= tmax`.
    pub fn square(qmax: i32, tmax: i32) -> Self {
        Self::new(qmax, 0, tmax)
    }

    pub fn validate(&self) -> Result<(), PolyError> {
        if self.qmax < 0 || self.tmin > self.tmax {
            return Err(PolyError::InvalidWindow(*self));
        }
        Ok(())
    }

    pub fn contains(&self, x: i32, y: i32) -> bool {
        (0..=self.qmax).contains(&x) && (self.tmin..=self.tmax).contains(&y)
    }

    pub fn intersect(&self, other: &Window) -> Window {
        Window::new(
            self.qmax.min(other.qmax),
            self.tmin.max(other.tmin),
            self.tmax.min(other.tmax),
        )
    }

    pub fn points(self) -> impl Iterator<Item = (i32, i32)> {
        let (tmin, tmax) = (self.tmin, self.tmax);
        (0..=self.qmax).flat_map(move |x| (tmin..=tmax).map(move |y| (x, y)))
    }
}

/// A series in `q, t` known exactly on a window. Coefficients outside the
/// stored map but inside the window are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncSeries {
    window: Window,
    coeffs: BTreeMap<(i32, i32), Coeff>,
    /// Windows this series had before a shrinking operation, oldest first.
    shrinks: Vec<Window>,
}

impl TruncSeries {
    pub fn new(window: Window) -> Self {
        Self {
            window,
            coeffs: BTreeMap::new(),
            shrinks: Vec::new(),
        }
    }

    /// Restrict a polynomial in `q, t` to the window.
    pub fn from_poly(p: &Poly, window: Window) -> Self {
        let mut s = Self::new(window);
        for (m, c) in p.terms() {
            let (x, y) = (m.exp(Var::Q), m.exp(Var::T));
            if window.contains(x, y) {
                s.set(x, y, c.clone());
            }
        }
        s
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn shrinks(&self) -> &[Window] {
        &self.shrinks
    }

    pub fn coeff(&self, x: i32, y: i32) -> Coeff {
        self.coeffs.get(&(x, y)).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn set(&mut self, x: i32, y: i32, c: Coeff) {
        assert!(self.window.contains(x, y), "({x}, {y}) outside {:?}", self.window);
        if c.is_zero() {
            self.coeffs.remove(&(x, y));
        } else {
            self.coeffs.insert((x, y), c);
        }
    }

    /// Number of nonzero coefficients.
    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((i32, i32), &Coeff)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn restrict(&self, window: Window) -> TruncSeries {
        let w = self.window.intersect(&window);
        let mut out = TruncSeries::new(w);
        for (&(x, y), c) in &self.coeffs {
            if w.contains(x, y) {
                out.coeffs.insert((x, y), c.clone());
            }
        }
        if w != self.window {
            out.shrinks = self.shrinks.clone();
            out.shrinks.push(self.window);
        }
        out
    }

    fn combine(&self, other: &TruncSeries, sign: i32) -> TruncSeries {
        let mut out = self.restrict(other.window);
        for (&(x, y), c) in &other.coeffs {
            if out.window.contains(x, y) {
                let cur = out.coeff(x, y);
                let next = if sign > 0 { cur + c } else { cur - c };
                out.set(x, y, next);
            }
        }
        out
    }

    /// Sum on the common window.
    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        self.combine(other, -1)
    }

    pub fn scale(&self, c: &Coeff) -> TruncSeries {
        let mut out = self.clone();
        out.coeffs = self
            .coeffs
            .iter()
            .map(|(k, d)| (*k, d * c))
            .filter(|(_, d)| !d.is_zero())
            .collect();
        out
    }

    /// Multiply by `q^i t^j`.
    ///
    /// The result stays exact only on the shifted window intersected with
    /// the original one; the lost part is recorded in `shrinks`. A negative
    /// `i` is rejected when the shifted series would have negative q-degree.
    pub fn mul_mono(&self, i: i32, j: i32) -> Result<TruncSeries, PolyError> {
        let w = self.window;
        if i < 0 && self.coeffs.keys().any(|&(x, _)| x + i < 0) {
            return Err(PolyError::NotQPowerSeries(i));
        }
        let shifted = Window::new(w.qmax + i.min(0), w.tmin + j, w.tmax + j);
        let target = w.intersect(&shifted);
        target.validate()?;
        let mut out = TruncSeries::new(target);
        for (&(x, y), c) in &self.coeffs {
            if target.contains(x + i, y + j) {
                out.coeffs.insert((x + i, y + j), c.clone());
            }
        }
        if target != w {
            out.shrinks = self.shrinks.clone();
            out.shrinks.push(w);
        }
        Ok(out)
    }

    /// Coefficientwise equality on the common window.
    pub fn agrees_with(&self, other: &TruncSeries) -> bool {
        let w = self.window.intersect(&other.window);
        w.points().all(|(x, y)| self.coeff(x, y) == other.coeff(x, y))
    }

    /// Points of the common window where the two series differ.
    pub fn disagreements(&self, other: &TruncSeries) -> Vec<(i32, i32)> {
        let w = self.window.intersect(&other.window);
        w.points().filter(|&(x, y)| self.coeff(x, y) != other.coeff(x, y)).collect()
    }
}
