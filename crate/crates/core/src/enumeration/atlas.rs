//! Maximal groups of singular ASMs of one size.
//!
//! Every group of finite-order ASMs lies inside one identity class: the
//! finite-order ASMs sharing an idempotent identity. Within a class, a
//! subset is a group exactly when it is closed under products, since each
//! element's inverse is one of its own powers.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use super::classify::{classify, ClassificationReport, FiniteOrderAsm};
use crate::error::{Error, Result};
use crate::group::{closure, GroupFingerprint, SingularGroup};
use crate::matrix::IntMatrix;
use crate::order::OrderBounds;

pub const ATLAS_MAX_N: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtlasGroup {
    pub elements: Vec<IntMatrix>,
    pub fingerprint: GroupFingerprint,
}

impl AtlasGroup {
    pub fn to_group(&self) -> Result<SingularGroup> {
        closure(&self.elements, self.elements.len())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityClass {
    pub identity: IntMatrix,
    pub class_size: usize,
    /// Orders of all groups in the class, maximal or not.
    pub subgroup_orders: BTreeSet<usize>,
    pub maximal_groups: Vec<AtlasGroup>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupAtlas {
    pub n: usize,
    pub classes: Vec<IdentityClass>,
    pub max_group_order: usize,
    pub group_orders: BTreeSet<usize>,
    pub non_abelian_orders: BTreeSet<usize>,
}

impl GroupAtlas {
    pub fn maximal_groups(&self) -> impl Iterator<Item = &AtlasGroup> {
        self.classes.iter().flat_map(|c| c.maximal_groups.iter())
    }
}

/// Product table of one identity class; `None` when the product leaves it.
struct ClassTable {
    members: Vec<IntMatrix>,
    product: Vec<Vec<Option<usize>>>,
}

impl ClassTable {
    fn new(members: Vec<IntMatrix>) -> Result<Self> {
        let index: HashMap<&IntMatrix, usize> =
            members.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut product = vec![vec![None; members.len()]; members.len()];
        for (i, a) in members.iter().enumerate() {
            for (j, b) in members.iter().enumerate() {
                product[i][j] = index.get(&a.multiply(b)?).copied();
            }
        }
        Ok(ClassTable { members, product })
    }

    /// Product closure of `seed` inside the class, or `None` if some product
    /// leaves the class or the closure grows past `max`.
    fn close(&self, seed: &BTreeSet<usize>, max: usize) -> Option<BTreeSet<usize>> {
        let mut set = seed.clone();
        let mut frontier: Vec<usize> = set.iter().copied().collect();
        while let Some(x) = frontier.pop() {
            let current: Vec<usize> = set.iter().copied().collect();
            for y in current {
                for p in [self.product[x][y]?, self.product[y][x]?] {
                    if set.insert(p) {
                        if set.len() > max {
                            return None;
                        }
                        frontier.push(p);
                    }
                }
            }
        }
        Some(set)
    }
}

fn analyse_class(identity: IntMatrix, members: Vec<IntMatrix>, max: usize) -> Result<IdentityClass> {
    let table = ClassTable::new(members)?;
    let n = table.members.len();
    let mut found: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut queue: Vec<BTreeSet<usize>> = Vec::new();
    for x in 0..n {
        if let Some(g) = table.close(&BTreeSet::from([x]), max) {
            if found.insert(g.clone()) {
                queue.push(g);
            }
        }
    }
    // every group is reached by adding one generator at a time
    while let Some(h) = queue.pop() {
        for x in 0..n {
            if h.contains(&x) {
                continue;
            }
            let mut seed = h.clone();
            seed.insert(x);
            if let Some(g) = table.close(&seed, max) {
                if found.insert(g.clone()) {
                    queue.push(g);
                }
            }
        }
    }
    let subgroup_orders = found.iter().map(BTreeSet::len).collect();
    let mut maximal_groups = Vec::new();
    for g in &found {
        if found.iter().any(|h| h.len() > g.len() && g.is_subset(h)) {
            continue;
        }
        let elements: Vec<IntMatrix> = g.iter().map(|&i| table.members[i].clone()).collect();
        let group = closure(&elements, elements.len())?;
        maximal_groups.push(AtlasGroup {
            fingerprint: group.fingerprint(),
            elements: group.elements().to_vec(),
        });
    }
    maximal_groups.sort_by(|a, b| {
        (b.elements.len(), &a.elements).cmp(&(a.elements.len(), &b.elements))
    });
    Ok(IdentityClass {
        identity,
        class_size: n,
        subgroup_orders,
        maximal_groups,
    })
}

/// Maximal groups of a finished classification, grouped by identity.
pub fn group_atlas_from(report: &ClassificationReport, max_group_size: usize) -> Result<GroupAtlas> {
    let mut classes: BTreeMap<IntMatrix, Vec<IntMatrix>> = BTreeMap::new();
    for f in &report.finite_order {
        classes.entry(f.identity.clone()).or_default().push(f.matrix.clone());
    }
    let mut out = Vec::new();
    for (identity, mut members) in classes {
        members.sort();
        out.push(analyse_class(identity, members, max_group_size)?);
    }
    let group_orders: BTreeSet<usize> =
        out.iter().flat_map(|c| c.subgroup_orders.iter().copied()).collect();
    let mut non_abelian_orders = BTreeSet::new();
    for g in out.iter().flat_map(|c| &c.maximal_groups) {
        if !g.fingerprint.abelian {
            non_abelian_orders.insert(g.fingerprint.order);
        }
    }
    Ok(GroupAtlas {
        n: report.n,
        max_group_order: group_orders.iter().copied().max().unwrap_or(0),
        group_orders,
        non_abelian_orders,
        classes: out,
    })
}

pub fn group_atlas(
    n: usize,
    max_group_size: usize,
    bounds: OrderBounds,
    jobs: usize,
) -> Result<GroupAtlas> {
    if n > ATLAS_MAX_N {
        return Err(Error::ResourceGuard { n, max: ATLAS_MAX_N });
    }
    group_atlas_from(&classify(n, bounds, jobs)?, max_group_size)
}

/// Which finite-order ASMs [`product_partners`] tries as the second factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartnerScope {
    /// Only those with the same identity as `a`.
    SameIdentity,
    /// Every classified finite-order ASM.
    All,
}

/// Finite-order ASMs `b` outside `<a>` for which `ab` or `ba` is a
/// classified finite-order ASM outside `<a>`.
pub fn product_partners(
    report: &ClassificationReport,
    a: &FiniteOrderAsm,
    scope: PartnerScope,
) -> Result<Vec<IntMatrix>> {
    let all: BTreeSet<&IntMatrix> = report.finite_order.iter().map(|f| &f.matrix).collect();
    let mut own = vec![a.matrix.clone()];
    for _ in 1..a.order {
        let next = own.last().unwrap().multiply(&a.matrix)?;
        own.push(next);
    }
    let fresh = |m: &IntMatrix| all.contains(m) && !own.contains(m);
    let mut partners = Vec::new();
    for f in &report.finite_order {
        if own.contains(&f.matrix) || (scope == PartnerScope::SameIdentity && f.identity != a.identity) {
            continue;
        }
        if fresh(&a.matrix.multiply(&f.matrix)?) || fresh(&f.matrix.multiply(&a.matrix)?) {
            partners.push(f.matrix.clone());
        }
    }
    Ok(partners)
}
