//! Permutations of `{1..n}` in one-line notation.
//!
//! The public API is 1-based to match the way matrices are indexed in the
//! constructions; storage is 0-based.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 1-based one-line notation: `images[j - 1] = p(j)`.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n {
                return Err(Error::InvalidPermutation(format!(
                    "image {x} is outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
            out.push(x - 1);
        }
        Ok(Permutation { images: out })
    }

    /// The cycle `(c1 c2 ... cm)` on `{1..n}`, mapping `c1 -> c2 -> ... -> cm -> c1`.
    pub fn cycle(n: usize, points: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for &x in points {
            if x == 0 || x > n {
                return Err(Error::InvalidPermutation(format!(
                    "cycle point {x} is outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::InvalidPermutation(format!("cycle point {x} repeated")));
            }
        }
        for (idx, &x) in points.iter().enumerate() {
            let next = points[(idx + 1) % points.len()];
            images[x - 1] = next - 1;
        }
        Ok(Permutation { images })
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidPermutation(format!(
                "transposition needs two distinct points, got ({a} {b})"
            )));
        }
        Self::cycle(n, &[a, b])
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `p(j)` for 1-based `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1] + 1
    }

    #[inline]
    pub(crate) fn image0(&self, j: usize) -> usize {
        self.images[j]
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first, then `self`. Its matrix is the
    /// product of the two permutation matrices in the same order.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// Multiplicative order (lcm of cycle lengths).
    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.len()];
        let mut order = 1;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            order = num_integer::lcm(order, len);
        }
        order
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::from_one_line(&v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.one_line()
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses one-line notation separated by commas and/or whitespace, e.g.
    /// `"3,1,2"` or `"3 1 2"`.
    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad permutation entry {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_one_line(&images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

/// All permutations of `{1..n}` in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(Permutation {
                images: prefix.clone(),
            });
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                rec(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}
