//! Dense square integer matrices with checked arithmetic.
//!
//! Entries are `i64`; every arithmetic operation is checked and reports
//! [`Error::Overflow`] instead of wrapping. Accessors use 0-based `(row, col)`
//! indexing.

use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// An `n x n` matrix of exact integers stored row-major.
///
/// The `0 x 0` matrix is allowed; it is the reduced form of every identity
/// matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from row-major data of length `n * n`.
    pub fn from_vec(n: usize, data: Vec<i64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::Parse(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                data.len()
            )));
        }
        Ok(IntMatrix { n, data })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: i + 1,
                    found: row.len(),
                    expected: n,
                });
            }
            data.extend_from_slice(row);
        }
        Ok(IntMatrix { n, data })
    }

    /// Builds a matrix from a function of the 0-based position.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        IntMatrix { n, data }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    /// Row-major entries; this is also the canonical encoding used for
    /// seen-sets and ordering.
    #[inline]
    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        // chunks_exact panics on a zero chunk size
        (0..self.n).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn max_abs(&self) -> u64 {
        self.data.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0)
    }

    /// Returns a copy with entry `(i, j)` replaced.
    pub fn with_entry(&self, i: usize, j: usize, value: i64) -> Self {
        let mut out = self.clone();
        out.data[i * self.n + j] = value;
        out
    }

    fn check_same_size(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Exact matrix product `self * other`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same_size(other)?;
        let n = self.n;
        let mut data = vec![0i64; n * n];
        for i in 0..n {
            let out_row = &mut data[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                let b_row = &other.data[k * n..(k + 1) * n];
                for (o, &b) in out_row.iter_mut().zip(b_row) {
                    let t = a.checked_mul(b).ok_or(Error::Overflow)?;
                    *o = o.checked_add(t).ok_or(Error::Overflow)?;
                }
            }
        }
        Ok(IntMatrix { n, data })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, i64::checked_add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, i64::checked_sub)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(i64, i64) -> Option<i64>) -> Result<Self> {
        self.check_same_size(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f(a, b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntMatrix { n: self.n, data })
    }

    /// `self^k` by repeated multiplication, `k >= 1`.
    pub fn power(&self, k: usize) -> Result<Self> {
        assert!(k >= 1, "power requires k >= 1");
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// Kronecker product: block `(i, j)` equals `self[i][j] * other`.
    pub fn kronecker(&self, other: &Self) -> Result<Self> {
        let (m, p) = (self.n, other.n);
        let size = m * p;
        let mut data = vec![0i64; size * size];
        for i in 0..m {
            for j in 0..m {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for r in 0..p {
                    for c in 0..p {
                        data[(i * p + r) * size + j * p + c] =
                            a.checked_mul(other.get(r, c)).ok_or(Error::Overflow)?;
                    }
                }
            }
        }
        Ok(IntMatrix { n: size, data })
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        crate::linalg::rank(&self.to_rows(), self.n)
    }

    pub fn nullity(&self) -> usize {
        self.n - self.rank()
    }

    pub fn is_singular(&self) -> bool {
        self.rank() < self.n
    }

    /// Deletes row `i` and column `i` (0-based).
    pub fn delete_row_col(&self, i: usize) -> Self {
        let n = self.n;
        let keep: Vec<usize> = (0..n).filter(|&x| x != i).collect();
        Self::from_fn(n - 1, |r, c| self.get(keep[r], keep[c]))
    }
}

/// The 0/1 matrix `P` with `P e_j = e_{p(j)}`, so `P * M` moves row `j` of
/// `M` to row `p(j)`.
pub fn permutation_matrix(p: &Permutation) -> IntMatrix {
    let n = p.len();
    let mut m = IntMatrix::zeros(n);
    for j in 0..n {
        let i = p.image0(j);
        m.data[i * n + j] = 1;
    }
    m
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.n + j]
    }
}

impl fmt::Display for IntMatrix {
    /// Text format: one row per line, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix({}x{})", self.n, self.n)?;
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
            writeln!(f, "  [{}]", line.join(" "))?;
        }
        Ok(())
    }
}

/// Structured form: `{"n": .., "entries": [[..], ..]}`.
#[derive(Serialize, Deserialize)]
struct MatrixRecord {
    n: usize,
    entries: Vec<Vec<i64>>,
}

impl Serialize for IntMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRecord {
            n: self.n,
            entries: self.to_rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = MatrixRecord::deserialize(d)?;
        let m = IntMatrix::from_rows(&rec.entries).map_err(serde::de::Error::custom)?;
        if m.n != rec.n {
            return Err(serde::de::Error::custom(format!(
                "field n = {} disagrees with {} rows",
                rec.n, m.n
            )));
        }
        Ok(m)
    }
}
