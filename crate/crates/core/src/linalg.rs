//! Exact rank and row-space computations over the rationals.
//!
//! Both routines run fraction-free on `i128` and are re-run on `BigInt` if an
//! intermediate value would overflow, so the results are always exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};

trait Exact: Clone + Integer + Signed + CheckedMul + CheckedSub + From<i64> {}
impl Exact for i128 {}
impl Exact for BigInt {}

/// Rank of a `rows.len() x cols` integer matrix (Bareiss elimination).
pub fn rank(rows: &[Vec<i64>], cols: usize) -> usize {
    bareiss_rank::<i128>(rows, cols)
        .or_else(|| bareiss_rank::<BigInt>(rows, cols))
        .expect("BigInt elimination cannot overflow")
}

fn lift<T: Exact>(rows: &[Vec<i64>]) -> Vec<Vec<T>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| T::from(x)).collect())
        .collect()
}

fn bareiss_rank<T: Exact>(rows: &[Vec<i64>], cols: usize) -> Option<usize> {
    let mut a: Vec<Vec<T>> = lift(rows);
    let m = a.len();
    let mut prev = T::one();
    let mut r = 0;
    for col in 0..cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][col].clone();
        for i in r + 1..m {
            let factor = a[i][col].clone();
            for j in col + 1..cols {
                let lhs = pivot.checked_mul(&a[i][j])?;
                let rhs = factor.checked_mul(&a[r][j])?;
                let num = lhs.checked_sub(&rhs)?;
                debug_assert!((num.clone() % prev.clone()).is_zero());
                a[i][j] = num / prev.clone();
            }
            a[i][col] = T::zero();
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

/// Canonical basis of the row space: the reduced row echelon form with each
/// row scaled to a primitive integer vector with positive pivot. Two matrices
/// have the same row space iff their canonical bases are equal.
pub fn rowspace_basis(rows: &[Vec<i64>], cols: usize) -> Vec<Vec<BigInt>> {
    if let Some(b) = rref_primitive::<i128>(rows, cols) {
        return b
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
    }
    rref_primitive::<BigInt>(rows, cols).expect("BigInt elimination cannot overflow")
}

fn make_primitive<T: Exact>(row: &mut [T]) {
    let g = row.iter().fold(T::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        *x = x.clone() / g.clone();
    }
}

fn rref_primitive<T: Exact>(rows: &[Vec<i64>], cols: usize) -> Option<Vec<Vec<T>>> {
    let mut a: Vec<Vec<T>> = lift(rows);
    let m = a.len();
    let mut r = 0;
    for col in 0..cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        make_primitive(&mut a[r]);
        if a[r][col].is_negative() {
            for x in a[r].iter_mut() {
                *x = -x.clone();
            }
        }
        let pivot_row = a[r].clone();
        let pivot = pivot_row[col].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for j in 0..cols {
                let lhs = pivot.checked_mul(&row[j])?;
                let rhs = factor.checked_mul(&pivot_row[j])?;
                row[j] = lhs.checked_sub(&rhs)?;
            }
            make_primitive(row);
        }
        r += 1;
    }
    a.truncate(r);
    for row in a.iter_mut() {
        make_primitive(row);
        let lead = row.iter().find(|x| !x.is_zero()).cloned();
        if lead.is_some_and(|l| l.is_negative()) {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
    }
    Some(a)
}
