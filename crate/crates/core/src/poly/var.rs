use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::PolyError;

/// A polynomial variable.
///
/// The declaration order fixes the lexicographic tie-break of the monomial
/// order: earlier variables are larger, so `q > t` and `a > b > c > d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    T,
    A,
    B,
    C,
    D,
    U,
    V,
    /// `t_i`, one-based.
    Tn(u8),
    /// `x_i`, one-based.
    Xn(u8),
}

impl Var {
    pub fn name(&self) -> String {
        match self {
            Var::Q => "q".into(),
            Var::T => "t".into(),
            Var::A => "a".into(),
            Var::B => "b".into(),
            Var::C => "c".into(),
            Var::D => "d".into(),
            Var::U => "u".into(),
            Var::V => "v".into(),
            Var::Tn(i) => format!("t{i}"),
            Var::Xn(i) => format!("x{i}"),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Var {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let simple = match s {
            "q" => Some(Var::Q),
            "t" => Some(Var::T),
            "a" => Some(Var::A),
            "b" => Some(Var::B),
            "c" => Some(Var::C),
            "d" => Some(Var::D),
            "u" => Some(Var::U),
            "v" => Some(Var::V),
            _ => None,
        };
        if let Some(v) = simple {
            return Ok(v);
        }
        let indexed = |rest: &str| rest.parse::<u8>().ok().filter(|i| *i >= 1);
        if let Some(i) = s.strip_prefix('t').and_then(indexed) {
            return Ok(Var::Tn(i));
        }
        if let Some(i) = s.strip_prefix('x').and_then(indexed) {
            return Ok(Var::Xn(i));
        }
        Err(PolyError::UnknownVariable(s.to_string()))
    }
}

impl Serialize for Var {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.name())
    }
}

impl<'de> Deserialize<'de> for Var {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Assignment of a `(q, t)` weight to every variable.
///
/// The standard table puts `q, a, c, u, t_i` in q-degree one and
/// `t, b, d, v, x_i` in t-degree one. Entries can be overridden.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightTable {
    overrides: BTreeMap<Var, (i32, i32)>,
}

impl WeightTable {
    pub fn standard() -> Self {
        Self::default()
    }

    pub fn with(mut self, var: Var, weight: (i32, i32)) -> Self {
        self.overrides.insert(var, weight);
        self
    }

    pub fn weight(&self, var: Var) -> (i32, i32) {
        if let Some(w) = self.overrides.get(&var) {
            return *w;
        }
        match var {
            Var::Q | Var::A | Var::C | Var::U | Var::Tn(_) => (1, 0),
            Var::T | Var::B | Var::D | Var::V | Var::Xn(_) => (0, 1),
        }
    }
}
