//! Idempotents and their square roots among the singular ASMs of one size.

use std::collections::BTreeMap;

use serde::Serialize;

use super::classify::{classify, ClassificationReport};
use crate::asm::Asm;
use crate::constructions::build_e_k;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::order::OrderBounds;

pub const CENSUS_MAX_N: usize = 8;
pub const SQUARE_ROOT_MAX_N: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReducedKind {
    E1,
    E1Transpose,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdempotentRecord {
    pub matrix: IntMatrix,
    pub nullity: usize,
    pub reduced: IntMatrix,
    /// 1-based positions removed to reach the reduced form.
    pub deleted_indices: Vec<usize>,
    pub reduced_kind: ReducedKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdempotentCensus {
    pub n: usize,
    pub records: Vec<IdempotentRecord>,
    pub min_nullity: Option<usize>,
    pub all_nullity_two: bool,
    pub all_reduce_to_e1: bool,
}

/// Idempotents of a finished classification, each with its reduced form.
pub fn idempotent_census_from(report: &ClassificationReport) -> IdempotentCensus {
    let e1 = build_e_k(1).expect("k = 1").into_matrix();
    let e1t = e1.transpose();
    let records: Vec<IdempotentRecord> = report
        .of_order(1)
        .map(|f| {
            let rf = Asm::new(f.matrix.clone()).expect("classified matrices are ASMs").reduced_form();
            let reduced = rf.reduced.into_matrix();
            let reduced_kind = if reduced == e1 {
                ReducedKind::E1
            } else if reduced == e1t {
                ReducedKind::E1Transpose
            } else {
                ReducedKind::Other
            };
            IdempotentRecord {
                nullity: f.matrix.nullity(),
                matrix: f.matrix.clone(),
                reduced,
                deleted_indices: rf.deleted_indices,
                reduced_kind,
            }
        })
        .collect();
    IdempotentCensus {
        n: report.n,
        min_nullity: records.iter().map(|r| r.nullity).min(),
        all_nullity_two: records.iter().all(|r| r.nullity == 2),
        all_reduce_to_e1: records.iter().all(|r| r.reduced_kind != ReducedKind::Other),
        records,
    }
}

pub fn idempotent_census(n: usize, bounds: OrderBounds, jobs: usize) -> Result<IdempotentCensus> {
    if n > CENSUS_MAX_N {
        return Err(Error::ResourceGuard { n, max: CENSUS_MAX_N });
    }
    Ok(idempotent_census_from(&classify(n, bounds, jobs)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareRootEntry {
    pub idempotent: IntMatrix,
    /// Order-2 singular ASMs squaring to `idempotent`.
    pub roots: Vec<IntMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareRootCensus {
    pub n: usize,
    pub entries: Vec<SquareRootEntry>,
    pub total_roots: usize,
    /// Number of roots to number of idempotents with that many.
    pub multiplicities: BTreeMap<usize, usize>,
}

pub fn square_root_census_from(report: &ClassificationReport) -> SquareRootCensus {
    let mut by_identity: BTreeMap<IntMatrix, Vec<IntMatrix>> =
        report.of_order(1).map(|f| (f.matrix.clone(), Vec::new())).collect();
    for f in report.of_order(2) {
        by_identity
            .get_mut(&f.identity)
            .expect("the square of an order-2 ASM is a classified idempotent")
            .push(f.matrix.clone());
    }
    let entries: Vec<SquareRootEntry> = by_identity
        .into_iter()
        .map(|(idempotent, roots)| SquareRootEntry { idempotent, roots })
        .collect();
    let mut multiplicities = BTreeMap::new();
    for e in &entries {
        *multiplicities.entry(e.roots.len()).or_insert(0) += 1;
    }
    SquareRootCensus {
        n: report.n,
        total_roots: entries.iter().map(|e| e.roots.len()).sum(),
        entries,
        multiplicities,
    }
}

pub fn square_root_census(n: usize, bounds: OrderBounds, jobs: usize) -> Result<SquareRootCensus> {
    if n > SQUARE_ROOT_MAX_N {
        return Err(Error::ResourceGuard { n, max: SQUARE_ROOT_MAX_N });
    }
    Ok(square_root_census_from(&classify(n, bounds, jobs)?))
}
