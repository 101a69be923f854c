//! Order classification of every singular ASM of a given size.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::search::shards;
use crate::asm::{is_asm, Asm};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::order::{detect_order, NoOrderReason, OrderBounds, OrderVerdict};

/// Largest `n` accepted by [`classify`].
pub const CLASSIFY_MAX_N: usize = 8;
/// Largest `n` for which the idempotent list is kept in the report.
pub const IDEMPOTENT_LIST_MAX_N: usize = 7;

/// A singular ASM of finite order whose powers are all ASMs, so that it
/// generates a cyclic group inside the singular ASMs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteOrderAsm {
    pub matrix: IntMatrix,
    pub order: usize,
    pub identity: IntMatrix,
    pub negatives: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub total_asm_count: u64,
    pub singular_count: u64,
    /// Order to number of singular ASMs of that order.
    pub per_order: BTreeMap<usize, u64>,
    pub idempotent_count: u64,
    /// Present for `n <= 7`.
    pub idempotents: Option<Vec<IntMatrix>>,
    /// Order to (number of `-1` entries to count).
    pub negatives_per_order: BTreeMap<usize, BTreeMap<usize, u64>>,
    /// Singular ASMs of finite order with some power that is not an ASM, by
    /// order. These are not counted in `per_order`.
    pub powers_leave_asms: BTreeMap<usize, u64>,
    /// Singular ASMs without finite order, by reason.
    pub no_finite_order: BTreeMap<NoOrderReason, u64>,
    /// Verdicts that only hold relative to the bounds.
    pub warnings: Vec<String>,
    pub bounds: OrderBounds,
    /// Every finite-order singular ASM, in enumeration order.
    #[serde(skip)]
    pub finite_order: Vec<FiniteOrderAsm>,
}

impl ClassificationReport {
    fn empty(n: usize, bounds: OrderBounds) -> Self {
        ClassificationReport {
            n,
            total_asm_count: 0,
            singular_count: 0,
            per_order: BTreeMap::new(),
            idempotent_count: 0,
            idempotents: None,
            negatives_per_order: BTreeMap::new(),
            powers_leave_asms: BTreeMap::new(),
            no_finite_order: BTreeMap::new(),
            warnings: Vec::new(),
            bounds,
            finite_order: Vec::new(),
        }
    }

    fn record(&mut self, a: Asm) {
        self.total_asm_count += 1;
        if !a.is_singular() {
            return;
        }
        self.singular_count += 1;
        match detect_order(a.matrix(), self.bounds) {
            OrderVerdict::Finite(info) if !info.powers.iter().all(is_asm) => {
                *self.powers_leave_asms.entry(info.order).or_insert(0) += 1;
            }
            OrderVerdict::Finite(info) => {
                let negatives = a.negative_entry_count();
                *self.per_order.entry(info.order).or_insert(0) += 1;
                *self
                    .negatives_per_order
                    .entry(info.order)
                    .or_default()
                    .entry(negatives)
                    .or_insert(0) += 1;
                self.finite_order.push(FiniteOrderAsm {
                    matrix: a.into_matrix(),
                    order: info.order,
                    identity: info.identity,
                    negatives,
                });
            }
            OrderVerdict::NoFiniteOrder { reason } => {
                *self.no_finite_order.entry(reason).or_insert(0) += 1;
            }
        }
    }

    fn merge(&mut self, other: ClassificationReport) {
        self.total_asm_count += other.total_asm_count;
        self.singular_count += other.singular_count;
        for (k, v) in other.per_order {
            *self.per_order.entry(k).or_insert(0) += v;
        }
        for (k, hist) in other.negatives_per_order {
            let mine = self.negatives_per_order.entry(k).or_default();
            for (neg, v) in hist {
                *mine.entry(neg).or_insert(0) += v;
            }
        }
        for (k, v) in other.powers_leave_asms {
            *self.powers_leave_asms.entry(k).or_insert(0) += v;
        }
        for (k, v) in other.no_finite_order {
            *self.no_finite_order.entry(k).or_insert(0) += v;
        }
        self.finite_order.extend(other.finite_order);
    }

    fn finish(&mut self) {
        self.idempotent_count = self.per_order.get(&1).copied().unwrap_or(0);
        if self.n <= IDEMPOTENT_LIST_MAX_N {
            self.idempotents = Some(
                self.finite_order
                    .iter()
                    .filter(|f| f.order == 1)
                    .map(|f| f.matrix.clone())
                    .collect(),
            );
        }
        for (reason, count) in &self.no_finite_order {
            if !reason.is_exact() {
                self.warnings.push(format!(
                    "{count} singular ASMs given a {} verdict (cap {}, magnitude bound {})",
                    match reason {
                        NoOrderReason::MagnitudeExceeded => "magnitude-exceeded",
                        _ => "cap-exceeded",
                    },
                    self.bounds.cap,
                    self.bounds.magnitude_bound
                ));
            }
        }
    }

    /// Finite-order matrices of the given order.
    pub fn of_order(&self, order: usize) -> impl Iterator<Item = &FiniteOrderAsm> {
        self.finite_order.iter().filter(move |f| f.order == order)
    }
}

/// Enumerates every `n x n` ASM and tallies the singular ones by order.
///
/// A matrix is tallied when it has finite order and all of its powers are
/// ASMs. Finite-order matrices with a non-ASM power are counted separately
/// in `powers_leave_asms`.
///
/// `jobs` worker threads process the shards; results are merged in shard
/// order so the report does not depend on `jobs`.
pub fn classify(n: usize, bounds: OrderBounds, jobs: usize) -> Result<ClassificationReport> {
    if n > CLASSIFY_MAX_N {
        return Err(Error::ResourceGuard { n, max: CLASSIFY_MAX_N });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Parse(format!("cannot start worker pool: {e}")))?;
    let parts: Vec<ClassificationReport> = pool.install(|| {
        shards(n)
            .into_par_iter()
            .map(|shard| {
                let mut part = ClassificationReport::empty(n, bounds);
                for a in shard {
                    part.record(a);
                }
                part
            })
            .collect()
    });
    let mut report = ClassificationReport::empty(n, bounds);
    for part in parts {
        report.merge(part);
    }
    report.finish();
    Ok(report)
}
