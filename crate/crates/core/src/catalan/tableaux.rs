use std::fmt;

use serde::{Deserialize, Serialize};

use crate::poly::Mono;

use super::CatalanError;

/// Largest `n` accepted by [`standard_tableaux`].
pub const MAX_BOXES: usize = 8;

/// A weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Zero parts are dropped; returns `None` if the parts increase.
    pub fn new(parts: Vec<u32>) -> Option<Self> {
        let parts: Vec<u32> = parts.into_iter().filter(|p| *p > 0).collect();
        parts.windows(2).all(|w| w[0] >= w[1]).then_some(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn go(n: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: acc.clone() });
                return;
            }
            for k in (1..=n.min(max)).rev() {
                acc.push(k);
                go(n - k, k, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Number of standard fillings by the hook length formula.
    pub fn hook_length_count(&self) -> u128 {
        let conj = self.conjugate();
        let n = self.size() as u128;
        let mut num: u128 = (1..=n).product();
        let mut den: u128 = 1;
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                let arm = len - c - 1;
                let leg = conj.parts[c as usize] - r as u32 - 1;
                den *= (arm + leg + 1) as u128;
            }
        }
        let g = gcd(num, den);
        num /= g;
        den /= g;
        debug_assert_eq!(den, 1);
        num
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A standard Young tableau, stored as the (row, column) position of each
/// label, both one-based. Row 1 is the longest row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Syt {
    shape: Partition,
    positions: Vec<(u32, u32)>,
}

impl Syt {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// `positions()[i - 1]` is the box holding label `i`.
    pub fn positions(&self) -> &[(u32, u32)] {
        &self.positions
    }

    /// The content monomial `q^{c-1} t^{r-1}` of each label.
    pub fn contents(&self) -> Vec<Mono> {
        self.positions
            .iter()
            .map(|&(r, c)| Mono::qt(c as i32 - 1, r as i32 - 1))
            .collect()
    }

    /// The tableau of the conjugate shape.
    pub fn transpose(&self) -> Syt {
        Syt {
            shape: self.shape.conjugate(),
            positions: self.positions.iter().map(|&(r, c)| (c, r)).collect(),
        }
    }

    /// Rows and columns increase.
    pub fn is_standard(&self) -> bool {
        let n = self.positions.len();
        let label = |r: u32, c: u32| self.positions.iter().position(|&p| p == (r, c));
        let mut seen = 0;
        for (r, &len) in self.shape.parts.iter().enumerate() {
            let r = r as u32 + 1;
            for c in 1..=len {
                let Some(here) = label(r, c) else { return false };
                seen += 1;
                if c > 1 && label(r, c - 1).is_none_or(|l| l > here) {
                    return false;
                }
                if r > 1 && label(r - 1, c).is_none_or(|l| l > here) {
                    return false;
                }
            }
        }
        seen == n
    }
}

fn fillings(shape: &Partition, out: &mut Vec<Syt>) {
    let n = shape.size();
    let rows = shape.parts.len();
    let mut filled = vec![0u32; rows];
    let mut pos = Vec::with_capacity(n as usize);
    fn go(shape: &Partition, filled: &mut [u32], pos: &mut Vec<(u32, u32)>, out: &mut Vec<Syt>) {
        if pos.len() == shape.size() as usize {
            out.push(Syt {
                shape: shape.clone(),
                positions: pos.clone(),
            });
            return;
        }
        for r in 0..filled.len() {
            let c = filled[r];
            if c < shape.parts[r] && (r == 0 || filled[r - 1] > c) {
                filled[r] += 1;
                pos.push((r as u32 + 1, c + 1));
                go(shape, filled, pos, out);
                pos.pop();
                filled[r] -= 1;
            }
        }
    }
    go(shape, &mut filled, &mut pos, out);
}

/// All standard tableaux with `n` boxes: shapes in decreasing lex order,
/// fillings in the order produced by placing labels in the lowest
/// available row first.
pub fn standard_tableaux(n: usize) -> Result<Vec<Syt>, CatalanError> {
    if n == 0 || n > MAX_BOXES {
        return Err(CatalanError::Guard { n, max: MAX_BOXES });
    }
    let mut out = Vec::new();
    for shape in Partition::all(n as u32) {
        fillings(&shape, &mut out);
    }
    Ok(out)
}
