//! Finite multiplicative groups of matrices.
//!
//! A group of singular matrices has an idempotent identity `E` rather than the
//! identity matrix. All of its elements share rank, row space and column space,
//! and `T = I - E` annihilates every element from both sides.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;

use crate::asm::is_asm;
use crate::error::{Error, Result};
use crate::matrix::{permutation_matrix, IntMatrix};
use crate::order::{same_columnspace, same_rowspace};
use crate::permutation::Permutation;

pub const DEFAULT_CLOSURE_MAX: usize = 256;

/// A finite group of `n x n` matrices under matrix multiplication, with its
/// Cayley table. Elements are sorted by their row-major entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularGroup {
    elements: Vec<IntMatrix>,
    identity: usize,
    cayley: Vec<Vec<usize>>,
    generator_indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupFingerprint {
    pub order: usize,
    pub abelian: bool,
    pub element_order_histogram: BTreeMap<usize, usize>,
    pub center_size: usize,
}

/// Breadth-first product closure of `generators`.
///
/// Succeeds when the closure has at most `max_size` elements, a two-sided
/// identity, and an inverse for every element. The elements need not be ASMs.
pub fn closure(generators: &[IntMatrix], max_size: usize) -> Result<SingularGroup> {
    let first = generators.first().ok_or(Error::NoGenerators)?;
    for g in generators {
        if g.n() != first.n() {
            return Err(Error::DimensionMismatch {
                left: first.n(),
                right: g.n(),
            });
        }
    }

    let mut found: Vec<IntMatrix> = Vec::new();
    let mut index: HashMap<IntMatrix, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for g in generators {
        if !index.contains_key(g) {
            index.insert(g.clone(), found.len());
            queue.push_back(found.len());
            found.push(g.clone());
        }
    }
    if found.len() > max_size {
        return Err(Error::ClosureTooLarge { max: max_size });
    }
    while let Some(i) = queue.pop_front() {
        for g in generators {
            let y = found[i].multiply(g)?;
            if !index.contains_key(&y) {
                if found.len() == max_size {
                    return Err(Error::ClosureTooLarge { max: max_size });
                }
                index.insert(y.clone(), found.len());
                queue.push_back(found.len());
                found.push(y);
            }
        }
    }

    let mut group = SingularGroup::from_closed_set(found)?;
    let mut gens: Vec<usize> = generators
        .iter()
        .map(|g| group.index_of(g).expect("generator is in its closure"))
        .collect();
    gens.dedup();
    group.generator_indices = gens;
    Ok(group)
}

impl SingularGroup {
    /// Builds the group on a set already closed under multiplication.
    fn from_closed_set(mut elements: Vec<IntMatrix>) -> Result<Self> {
        elements.sort();
        elements.dedup();
        let index: HashMap<&IntMatrix, usize> =
            elements.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let order = elements.len();
        let mut cayley = vec![vec![0; order]; order];
        for i in 0..order {
            for j in 0..order {
                let p = elements[i].multiply(&elements[j])?;
                cayley[i][j] = *index.get(&p).ok_or(Error::NotAGroup { index: i })?;
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|j| cayley[e][j] == j && cayley[j][e] == j))
            .ok_or(Error::NoIdentity)?;
        for i in 0..order {
            let has_inverse =
                (0..order).any(|j| cayley[i][j] == identity && cayley[j][i] == identity);
            if !has_inverse {
                return Err(Error::NotAGroup { index: i });
            }
        }
        Ok(SingularGroup {
            elements,
            identity,
            cayley,
            generator_indices: Vec::new(),
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Side length of the matrices.
    pub fn n(&self) -> usize {
        self.elements[0].n()
    }

    pub fn elements(&self) -> &[IntMatrix] {
        &self.elements
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn identity(&self) -> &IntMatrix {
        &self.elements[self.identity]
    }

    pub fn cayley(&self) -> &[Vec<usize>] {
        &self.cayley
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn index_of(&self, m: &IntMatrix) -> Option<usize> {
        self.elements.binary_search(m).ok()
    }

    pub fn contains(&self, m: &IntMatrix) -> bool {
        self.index_of(m).is_some()
    }

    pub fn all_asm(&self) -> bool {
        self.elements.iter().all(is_asm)
    }

    pub fn all_singular(&self) -> bool {
        self.elements.iter().all(IntMatrix::is_singular)
    }

    /// Order of element `i`, read off the Cayley table.
    pub fn element_order(&self, i: usize) -> usize {
        let mut x = i;
        let mut k = 1;
        while x != self.identity {
            x = self.cayley[x][i];
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (i + 1..n).all(|j| self.cayley[i][j] == self.cayley[j][i]))
    }

    pub fn center_size(&self) -> usize {
        let n = self.order();
        (0..n)
            .filter(|&i| (0..n).all(|j| self.cayley[i][j] == self.cayley[j][i]))
            .count()
    }

    pub fn fingerprint(&self) -> GroupFingerprint {
        let mut histogram = BTreeMap::new();
        for i in 0..self.order() {
            *histogram.entry(self.element_order(i)).or_insert(0) += 1;
        }
        GroupFingerprint {
            order: self.order(),
            abelian: self.is_abelian(),
            element_order_histogram: histogram,
            center_size: self.center_size(),
        }
    }

    /// Checks identity and inverses exhaustively, and associativity on all
    /// triples when the order is at most `assoc_limit`.
    pub fn verify_axioms(&self, assoc_limit: usize) -> bool {
        let n = self.order();
        let e = self.identity;
        let t = &self.cayley;
        let identity_ok = (0..n).all(|j| t[e][j] == j && t[j][e] == j);
        let inverses_ok = (0..n).all(|i| (0..n).any(|j| t[i][j] == e && t[j][i] == e));
        let assoc_ok = n > assoc_limit
            || (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])));
        identity_ok && inverses_ok && assoc_ok
    }

    /// Whether every element has the identity's rank, row space and column space.
    pub fn shares_spaces(&self) -> bool {
        let e = self.identity();
        let r = e.rank();
        self.elements.iter().all(|x| {
            x.rank() == r
                && same_rowspace(e, x).unwrap_or(false)
                && same_columnspace(e, x).unwrap_or(false)
        })
    }

    /// `T = I - E`.
    pub fn complement(&self) -> IntMatrix {
        IntMatrix::identity(self.n())
            .sub(self.identity())
            .expect("entries of an idempotent ASM-sized identity are small")
    }
}

/// The nonsingular group `{X + T : X in g}` with `T = I - E`, listed in the
/// same order as `g.elements()`.
pub fn lift_to_linear_group(g: &SingularGroup) -> Result<Vec<IntMatrix>> {
    let t = g.complement();
    g.elements().iter().map(|x| x.add(&t)).collect()
}

/// True iff `lifted[i] * lifted[j] == lifted[g.cayley[i][j]]` for all pairs,
/// i.e. the lift carries the Cayley table of `g` unchanged.
pub fn lift_preserves_table(g: &SingularGroup, lifted: &[IntMatrix]) -> Result<bool> {
    let n = g.order();
    for i in 0..n {
        for j in 0..n {
            if lifted[i].multiply(&lifted[j])? != lifted[g.cayley()[i][j]] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Subgroup of the symmetric group generated by `gens`, sorted.
pub fn permutation_closure(gens: &[Permutation]) -> Result<Vec<Permutation>> {
    let first = gens.first().ok_or(Error::NoGenerators)?;
    let mut seen: std::collections::BTreeSet<Permutation> = std::collections::BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(Permutation::identity(first.len()));
    queue.push_back(Permutation::identity(first.len()));
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = p.compose(g)?;
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Which side the permutations multiply the idempotent from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    /// `E * H`: permutes the columns of `E`.
    Right,
    /// `H * E`: permutes the rows of `E`.
    Left,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitEntry {
    pub matrix: IntMatrix,
    pub is_asm: bool,
    pub same_rowspace_as_e: bool,
    pub same_columnspace_as_e: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdempotentOrbit {
    pub side: Side,
    /// Order of the permutation group generated by the inputs.
    pub permutation_group_order: usize,
    /// Distinct products, in the order of the sorted permutation group.
    pub entries: Vec<OrbitEntry>,
}

impl IdempotentOrbit {
    /// All products are ASMs sharing the row and column space of `E`.
    pub fn all_flags(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.is_asm && e.same_rowspace_as_e && e.same_columnspace_as_e)
    }

    pub fn to_group(&self, max_size: usize) -> Result<SingularGroup> {
        let ms: Vec<IntMatrix> = self.entries.iter().map(|e| e.matrix.clone()).collect();
        closure(&ms, max_size)
    }
}

/// Products of the idempotent `e` with every element of the permutation group
/// generated by `phi`.
pub fn idempotent_orbit(e: &IntMatrix, phi: &[Permutation], side: Side) -> Result<IdempotentOrbit> {
    for p in phi {
        if p.len() != e.n() {
            return Err(Error::DimensionMismatch {
                left: e.n(),
                right: p.len(),
            });
        }
    }
    let perms = if phi.is_empty() {
        vec![Permutation::identity(e.n())]
    } else {
        permutation_closure(phi)?
    };
    let mut seen = std::collections::HashSet::new();
    let mut entries = Vec::new();
    for h in &perms {
        let hm = permutation_matrix(h);
        let m = match side {
            Side::Right => e.multiply(&hm)?,
            Side::Left => hm.multiply(e)?,
        };
        if seen.insert(m.clone()) {
            entries.push(OrbitEntry {
                is_asm: is_asm(&m),
                same_rowspace_as_e: same_rowspace(e, &m)?,
                same_columnspace_as_e: same_columnspace(e, &m)?,
                matrix: m,
            });
        }
    }
    Ok(IdempotentOrbit {
        side,
        permutation_group_order: perms.len(),
        entries,
    })
}

/// Checks that `perm_gens[i] -> group.elements()[images[i]]` extends to an
/// isomorphism from the permutation group generated by `perm_gens` onto
/// `group`.
///
/// The pairs generated by `(perm_gens[i], images[i])` form the graph of that
/// map exactly when both projections are injective, and it is onto when the
/// graph has `group.order()` elements.
pub fn is_isomorphic_image(
    perm_gens: &[Permutation],
    group: &SingularGroup,
    images: &[usize],
) -> Result<bool> {
    if perm_gens.len() != images.len() || perm_gens.is_empty() {
        return Ok(false);
    }
    let n = perm_gens[0].len();
    let mut perm_to_elem: HashMap<Permutation, usize> = HashMap::new();
    let mut elem_to_perm: HashMap<usize, Permutation> = HashMap::new();
    let mut queue = VecDeque::new();
    let start = (Permutation::identity(n), group.identity_index());
    perm_to_elem.insert(start.0.clone(), start.1);
    elem_to_perm.insert(start.1, start.0.clone());
    queue.push_back(start);
    while let Some((p, x)) = queue.pop_front() {
        for (g, &gi) in perm_gens.iter().zip(images) {
            let q = p.compose(g)?;
            let y = group.cayley()[x][gi];
            match (perm_to_elem.get(&q), elem_to_perm.get(&y)) {
                (Some(&y0), _) if y0 != y => return Ok(false),
                (_, Some(q0)) if *q0 != q => return Ok(false),
                (Some(_), Some(_)) => {}
                _ => {
                    perm_to_elem.insert(q.clone(), y);
                    elem_to_perm.insert(y, q.clone());
                    queue.push_back((q, y));
                }
            }
        }
    }
    Ok(perm_to_elem.len() == group.order())
}
