//! Alternating sign matrices: validation, reduced form and diagonal extension.
//!
//! A square matrix is an ASM when, in every row and every column, each prefix
//! sum is 0 or 1 and the full sum is 1. This is the same as requiring the
//! nonzero entries to alternate in sign starting and ending with +1.
//!
//! Positions in [`ReducedForm::deleted_indices`] and the insertion positions
//! of [`diagonal_extension`] are 1-based.

use std::fmt;
use std::ops::Deref;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// The first violated ASM condition found by [`check_asm`]. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum AsmViolation {
    EntryOutOfRange { row: usize, col: usize, value: i64 },
    RowPrefix { row: usize, col: usize, sum: i64 },
    RowTotal { row: usize, sum: i64 },
    ColumnPrefix { col: usize, row: usize, sum: i64 },
    ColumnTotal { col: usize, sum: i64 },
}

impl fmt::Display for AsmViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AsmViolation::EntryOutOfRange { row, col, value } => {
                write!(f, "entry ({row}, {col}) = {value} is not in {{-1, 0, 1}}")
            }
            AsmViolation::RowPrefix { row, col, sum } => write!(
                f,
                "row {row}: prefix sum through column {col} is {sum}, expected 0 or 1"
            ),
            AsmViolation::RowTotal { row, sum } => {
                write!(f, "row {row}: total is {sum}, expected 1")
            }
            AsmViolation::ColumnPrefix { col, row, sum } => write!(
                f,
                "column {col}: prefix sum through row {row} is {sum}, expected 0 or 1"
            ),
            AsmViolation::ColumnTotal { col, sum } => {
                write!(f, "column {col}: total is {sum}, expected 1")
            }
        }
    }
}

/// Returns the first violated condition, scanning entries, then rows, then columns.
pub fn check_asm(m: &IntMatrix) -> std::result::Result<(), AsmViolation> {
    let n = m.n();
    for i in 0..n {
        for j in 0..n {
            let v = m.get(i, j);
            if !(-1..=1).contains(&v) {
                return Err(AsmViolation::EntryOutOfRange {
                    row: i + 1,
                    col: j + 1,
                    value: v,
                });
            }
        }
    }
    for i in 0..n {
        let mut s = 0;
        for j in 0..n {
            s += m.get(i, j);
            if !(0..=1).contains(&s) {
                return Err(AsmViolation::RowPrefix {
                    row: i + 1,
                    col: j + 1,
                    sum: s,
                });
            }
        }
        if s != 1 {
            return Err(AsmViolation::RowTotal { row: i + 1, sum: s });
        }
    }
    for j in 0..n {
        let mut s = 0;
        for i in 0..n {
            s += m.get(i, j);
            if !(0..=1).contains(&s) {
                return Err(AsmViolation::ColumnPrefix {
                    col: j + 1,
                    row: i + 1,
                    sum: s,
                });
            }
        }
        if s != 1 {
            return Err(AsmViolation::ColumnTotal { col: j + 1, sum: s });
        }
    }
    Ok(())
}

pub fn is_asm(m: &IntMatrix) -> bool {
    check_asm(m).is_ok()
}

/// An [`IntMatrix`] known to satisfy the alternating sign conditions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Asm(IntMatrix);

impl Asm {
    pub fn new(m: IntMatrix) -> Result<Self> {
        check_asm(&m).map_err(Error::NotAsm)?;
        Ok(Asm(m))
    }

    /// Caller guarantees `m` is an ASM (checked in debug builds).
    pub(crate) fn new_unchecked(m: IntMatrix) -> Self {
        debug_assert!(is_asm(&m), "not an ASM: {m:?}");
        Asm(m)
    }

    pub fn identity(n: usize) -> Self {
        Asm(IntMatrix::identity(n))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.0
    }

    pub fn transpose(&self) -> Self {
        Asm(self.0.transpose())
    }

    pub fn negative_entry_count(&self) -> usize {
        negative_entry_count(self)
    }

    pub fn is_reduced_form(&self) -> bool {
        is_reduced_form(self)
    }

    pub fn reduced_form(&self) -> ReducedForm {
        reduced_form(self)
    }

    /// A permutation matrix is an ASM without negative entries.
    pub fn is_permutation_matrix(&self) -> bool {
        self.negative_entry_count() == 0
    }
}

impl Deref for Asm {
    type Target = IntMatrix;

    fn deref(&self) -> &IntMatrix {
        &self.0
    }
}

impl TryFrom<IntMatrix> for Asm {
    type Error = Error;

    fn try_from(m: IntMatrix) -> Result<Self> {
        Asm::new(m)
    }
}

impl From<Asm> for IntMatrix {
    fn from(a: Asm) -> IntMatrix {
        a.0
    }
}

impl fmt::Debug for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Asm::{:?}", self.0)
    }
}

impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn negative_entry_count(a: &Asm) -> usize {
    a.entries().iter().filter(|&&x| x < 0).count()
}

/// 0-based indices `i` whose row and column contain only the diagonal 1.
fn trivial_indices(a: &IntMatrix) -> Vec<usize> {
    let n = a.n();
    (0..n)
        .filter(|&i| {
            a.get(i, i) == 1 && (0..n).all(|k| k == i || (a.get(i, k) == 0 && a.get(k, i) == 0))
        })
        .collect()
}

/// True iff every diagonal 1 has a −1 in its row or its column.
pub fn is_reduced_form(a: &Asm) -> bool {
    let n = a.n();
    (0..n).all(|i| {
        a.get(i, i) != 1 || (0..n).any(|k| a.get(i, k) == -1 || a.get(k, i) == -1)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducedForm {
    pub reduced: Asm,
    /// 1-based positions in the original matrix, ascending.
    pub deleted_indices: Vec<usize>,
}

/// Deletes every trivial diagonal row/column pair.
///
/// Deleting one trivial index never changes whether another index is trivial
/// (the deleted column is zero off the diagonal), so a single pass finds them
/// all and the result does not depend on deletion order.
pub fn reduced_form(a: &Asm) -> ReducedForm {
    let trivial = trivial_indices(a);
    let keep: Vec<usize> = (0..a.n()).filter(|i| !trivial.contains(i)).collect();
    let reduced = IntMatrix::from_fn(keep.len(), |r, c| a.get(keep[r], keep[c]));
    ReducedForm {
        reduced: Asm::new_unchecked(reduced),
        deleted_indices: trivial.iter().map(|i| i + 1).collect(),
    }
}

/// Inserts a trivial diagonal 1 (with zero row and column) at each 1-based
/// position of the extended matrix.
pub fn diagonal_extension(a: &Asm, insert_positions: &[usize]) -> Result<Asm> {
    let size = a.n() + insert_positions.len();
    for w in insert_positions.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::InvalidPositions(format!(
                "positions must be strictly increasing, got {} then {}",
                w[0], w[1]
            )));
        }
    }
    if let Some(&bad) = insert_positions.iter().find(|&&p| p == 0 || p > size) {
        return Err(Error::InvalidPositions(format!(
            "position {bad} is outside 1..={size}"
        )));
    }
    // source index in `a` for each extended position, or None for an inserted one
    let mut source = Vec::with_capacity(size);
    let mut next = 0;
    for p in 1..=size {
        if insert_positions.binary_search(&p).is_ok() {
            source.push(None);
        } else {
            source.push(Some(next));
            next += 1;
        }
    }
    let m = IntMatrix::from_fn(size, |r, c| match (source[r], source[c]) {
        (Some(i), Some(j)) => a.get(i, j),
        (None, None) if r == c => 1,
        _ => 0,
    });
    Ok(Asm::new_unchecked(m))
}
