//! Multiplicative order of (possibly singular) integer matrices.
//!
//! A matrix `A` has finite order `k` when `k >= 1` is minimal with
//! `A^(k+1) = A`. Then `A^k` is idempotent and acts as the identity of the
//! cyclic group `{A, A^2, ..., A^k}`.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::IntMatrix;

pub const DEFAULT_ORDER_CAP: usize = 64;
pub const DEFAULT_MAGNITUDE_BOUND: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrderBounds {
    /// Largest order that will be searched for.
    pub cap: usize,
    /// Any power with an entry larger than this in absolute value ends the search.
    pub magnitude_bound: u64,
}

impl Default for OrderBounds {
    fn default() -> Self {
        OrderBounds {
            cap: DEFAULT_ORDER_CAP,
            magnitude_bound: DEFAULT_MAGNITUDE_BOUND,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteOrderInfo {
    pub order: usize,
    /// `A^order`, the idempotent identity of the cyclic group.
    pub identity: IntMatrix,
    pub rank: usize,
    pub nullity: usize,
    /// `[A, A^2, ..., A^order]`.
    pub powers: Vec<IntMatrix>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NoOrderReason {
    /// Some power repeated before the sequence returned to `A`: the powers are
    /// eventually periodic with `A` outside the cycle, so no finite order exists.
    RepeatNotAtA,
    /// An entry exceeded the magnitude bound (or overflowed `i64`).
    MagnitudeExceeded,
    /// No return to `A` within `cap` steps.
    CapExceeded,
}

impl NoOrderReason {
    /// Whether the verdict is a proof rather than relative to the bounds.
    pub fn is_exact(self) -> bool {
        matches!(self, NoOrderReason::RepeatNotAtA)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum OrderVerdict {
    Finite(FiniteOrderInfo),
    NoFiniteOrder { reason: NoOrderReason },
}

impl OrderVerdict {
    pub fn order(&self) -> Option<usize> {
        match self {
            OrderVerdict::Finite(info) => Some(info.order),
            OrderVerdict::NoFiniteOrder { .. } => None,
        }
    }

    pub fn finite(&self) -> Option<&FiniteOrderInfo> {
        match self {
            OrderVerdict::Finite(info) => Some(info),
            OrderVerdict::NoFiniteOrder { .. } => None,
        }
    }

    pub fn into_finite(self) -> Option<FiniteOrderInfo> {
        match self {
            OrderVerdict::Finite(info) => Some(info),
            OrderVerdict::NoFiniteOrder { .. } => None,
        }
    }
}

/// Iterates `A, A^2, ...` with a seen-set keyed by the row-major entries.
pub fn detect_order(a: &IntMatrix, bounds: OrderBounds) -> OrderVerdict {
    assert!(bounds.cap >= 1, "order cap must be at least 1");
    let no = |reason| OrderVerdict::NoFiniteOrder { reason };
    if a.max_abs() > bounds.magnitude_bound {
        return no(NoOrderReason::MagnitudeExceeded);
    }
    let mut seen: HashSet<IntMatrix> = HashSet::new();
    let mut current = a.clone();
    seen.insert(current.clone());
    for k in 1..=bounds.cap {
        // current = A^k; next = A^(k+1)
        let next = match current.multiply(a) {
            Ok(m) => m,
            Err(_) => return no(NoOrderReason::MagnitudeExceeded),
        };
        if &next == a {
            // rebuild the cycle; these products were all computed above
            let mut powers = Vec::with_capacity(k);
            powers.push(a.clone());
            for _ in 1..k {
                let p = powers.last().unwrap().multiply(a).expect("power already computed");
                powers.push(p);
            }
            let identity = current;
            let rank = identity.rank();
            return OrderVerdict::Finite(FiniteOrderInfo {
                order: k,
                nullity: identity.n() - rank,
                rank,
                identity,
                powers,
            });
        }
        if next.max_abs() > bounds.magnitude_bound {
            return no(NoOrderReason::MagnitudeExceeded);
        }
        if !seen.insert(next.clone()) {
            return no(NoOrderReason::RepeatNotAtA);
        }
        current = next;
    }
    no(NoOrderReason::CapExceeded)
}

pub fn is_idempotent(a: &IntMatrix) -> bool {
    a.multiply(a).is_ok_and(|sq| &sq == a)
}

pub fn nullity(a: &IntMatrix) -> usize {
    a.nullity()
}

/// Exact comparison of rational row spaces via canonical echelon bases.
pub fn same_rowspace(a: &IntMatrix, b: &IntMatrix) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(linalg::rowspace_basis(&a.to_rows(), a.n()) == linalg::rowspace_basis(&b.to_rows(), b.n()))
}

pub fn same_columnspace(a: &IntMatrix, b: &IntMatrix) -> Result<bool> {
    same_rowspace(&a.transpose(), &b.transpose())
}
