//! Explicit families of singular ASMs of finite order.
//!
//! All indices in this module are 1-based, matching the block layouts the
//! constructions are stated in.

use serde::Serialize;

use crate::asm::Asm;
use crate::error::{Error, Result};
use crate::group::{closure, SingularGroup};
use crate::matrix::{permutation_matrix, IntMatrix};
use crate::permutation::Permutation;

/// Corner pattern of a frame. `A` puts its corner 1s on the diagonal of the
/// two 2x2 corner pairs, `B` on the anti-diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FrameVariant {
    A,
    B,
}

impl FrameVariant {
    /// Corner pattern of a product of two frames that share an identity.
    pub fn product(self, other: FrameVariant) -> FrameVariant {
        if self == other {
            FrameVariant::A
        } else {
            FrameVariant::B
        }
    }
}

impl std::str::FromStr for FrameVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(FrameVariant::A),
            "B" | "b" => Ok(FrameVariant::B),
            other => Err(Error::Parse(format!("unknown frame variant {other:?}"))),
        }
    }
}

/// Where a permutation block sits inside a larger ASM.
///
/// Rows and columns `block_start..block_start + q` hold the permutation
/// matrix of `central_block`. Block rows are zero outside the block, and rows
/// outside the block meet the block columns only in column `x_column` of the
/// block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrameMeta {
    pub outer_size: usize,
    pub block_start: usize,
    pub central_block: Permutation,
    pub x_column: usize,
    /// Set for the `(q+4) x (q+4)` two-row frames built by [`build_frame_at`].
    pub variant: Option<FrameVariant>,
}

impl FrameMeta {
    /// 1-based inclusive range of block rows and columns.
    pub fn block_range(&self) -> std::ops::RangeInclusive<usize> {
        self.block_start..=self.block_start + self.central_block.len() - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FramedAsm {
    pub asm: Asm,
    pub frame_meta: Option<FrameMeta>,
}

impl FramedAsm {
    pub fn plain(asm: Asm) -> Self {
        FramedAsm {
            asm,
            frame_meta: None,
        }
    }

    /// Attaches `meta` after checking that it describes `asm`.
    pub fn from_parts(asm: Asm, meta: FrameMeta) -> Result<Self> {
        check_meta(asm.matrix(), &meta)?;
        Ok(FramedAsm {
            asm,
            frame_meta: Some(meta),
        })
    }

    pub fn matrix(&self) -> &IntMatrix {
        self.asm.matrix()
    }

    fn meta(&self) -> Result<&FrameMeta> {
        self.frame_meta
            .as_ref()
            .ok_or_else(|| Error::Frame("matrix carries no frame metadata".into()))
    }
}

fn check_meta(m: &IntMatrix, meta: &FrameMeta) -> Result<()> {
    let q = meta.central_block.len();
    if meta.outer_size != m.n()
        || q == 0
        || meta.block_start == 0
        || meta.block_start + q - 1 > m.n()
        || meta.x_column == 0
        || meta.x_column > q
    {
        return Err(Error::Frame("frame metadata does not fit the matrix".into()));
    }
    let block = meta.block_range();
    let x = meta.block_start + meta.x_column - 1;
    let p = permutation_matrix(&meta.central_block);
    for r in 1..=m.n() {
        for c in 1..=m.n() {
            let v = m.get(r - 1, c - 1);
            let ok = match (block.contains(&r), block.contains(&c)) {
                (true, true) => v == p.get(r - meta.block_start, c - meta.block_start),
                (true, false) => v == 0,
                (false, true) => c == x || v == 0,
                (false, false) => true,
            };
            if !ok {
                return Err(Error::Frame(format!(
                    "entry ({r},{c}) does not match the frame metadata"
                )));
            }
        }
    }
    Ok(())
}

/// Frame with the `X` column at column `x_column` of the central block.
pub fn build_frame_at(p: &Permutation, variant: FrameVariant, x_column: usize) -> Result<FramedAsm> {
    let n = p.len();
    if n == 0 {
        return Err(Error::Frame("central permutation must be nonempty".into()));
    }
    if x_column == 0 || x_column > n {
        return Err(Error::Frame(format!("x column {x_column} is outside 1..={n}")));
    }
    let size = n + 4;
    let x = 2 + x_column;
    let mut e = vec![0i64; size * size];
    let mut set = |r: usize, c: usize, v: i64| e[(r - 1) * size + (c - 1)] = v;
    set(1, x, 1);
    set(2, x, -1);
    set(n + 3, x, -1);
    set(n + 4, x, 1);
    match variant {
        FrameVariant::A => {
            set(2, 2, 1);
            set(2, n + 4, 1);
            set(n + 3, 1, 1);
            set(n + 3, n + 3, 1);
        }
        FrameVariant::B => {
            set(2, 1, 1);
            set(2, n + 3, 1);
            set(n + 3, 2, 1);
            set(n + 3, n + 4, 1);
        }
    }
    for j in 1..=n {
        set(2 + p.apply(j), 2 + j, 1);
    }
    let asm = Asm::new(IntMatrix::from_vec(size, e)?)?;
    FramedAsm::from_parts(
        asm,
        FrameMeta {
            outer_size: size,
            block_start: 3,
            central_block: p.clone(),
            x_column,
            variant: Some(variant),
        },
    )
}

/// The `(n+4) x (n+4)` frame around `p` with the `X` column at the block's
/// last column. Variant A has the order of `p`; variant B has twice that
/// order when it is odd.
pub fn build_frame(p: &Permutation, variant: FrameVariant) -> Result<FramedAsm> {
    build_frame_at(p, variant, p.len())
}

/// Whether two same-size frames generate cyclic groups with the same
/// identity: true iff `p(i) == q(j)` for their `X` columns `i` and `j`.
pub fn shares_identity(a: &FramedAsm, b: &FramedAsm) -> Result<bool> {
    let (ma, mb) = (a.meta()?, b.meta()?);
    if ma.variant.is_none() || mb.variant.is_none() {
        return Err(Error::Frame("identity criterion needs two-row frames".into()));
    }
    if ma.outer_size != mb.outer_size {
        return Err(Error::Frame(format!(
            "frame sizes differ: {} and {}",
            ma.outer_size, mb.outer_size
        )));
    }
    Ok(ma.central_block.apply(ma.x_column) == mb.central_block.apply(mb.x_column))
}

/// Generators of a copy of `S_n` in `SA_{n+4}`: variant A frames on the
/// `n`-cycle `(1 2 ... n)` and on the transposition `(1 n)`.
pub fn build_symmetric_group_generators(n: usize) -> Result<(FramedAsm, FramedAsm)> {
    if n == 0 {
        return Err(Error::Frame("n must be at least 1".into()));
    }
    let (cycle, swap) = if n == 1 {
        (Permutation::identity(1), Permutation::identity(1))
    } else {
        let points: Vec<usize> = (1..=n).collect();
        (Permutation::cycle(n, &points)?, Permutation::transposition(n, 1, n)?)
    };
    Ok((
        build_frame(&cycle, FrameVariant::A)?,
        build_frame(&swap, FrameVariant::A)?,
    ))
}

/// The `(4k+1) x (4k+1)` idempotent `E_k`, rank `2k+1`, in reduced form.
pub fn build_e_k(k: usize) -> Result<Asm> {
    if k == 0 {
        return Err(Error::Frame("k must be at least 1".into()));
    }
    let n = 4 * k + 1;
    let mut m = IntMatrix::identity(n);
    for t in t_block_decomposition(k)? {
        m = m.sub(&t.to_matrix(n))?;
    }
    Asm::new(m)
}

/// A matrix with `sign` at `(i1,j1)` and `(i2,j2)` and `-sign` at `(i1,j2)`
/// and `(i2,j1)`, with `i1 < i2` and `j1 < j2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TBlock {
    pub i1: usize,
    pub j1: usize,
    pub i2: usize,
    pub j2: usize,
    pub sign: i64,
}

impl TBlock {
    pub fn to_matrix(&self, n: usize) -> IntMatrix {
        let s = self.sign;
        IntMatrix::zeros(n)
            .with_entry(self.i1 - 1, self.j1 - 1, s)
            .with_entry(self.i2 - 1, self.j2 - 1, s)
            .with_entry(self.i1 - 1, self.j2 - 1, -s)
            .with_entry(self.i2 - 1, self.j1 - 1, -s)
    }
}

/// The `2k` T-blocks with `E_k = I - sum`. With `m = 2k+1`, odd `i` gives
/// `T[i,i; m+i,m]` and even `i` gives `T[i,m; m+i,m+i]`.
pub fn t_block_decomposition(k: usize) -> Result<Vec<TBlock>> {
    if k == 0 {
        return Err(Error::Frame("k must be at least 1".into()));
    }
    let m = 2 * k + 1;
    Ok((1..=2 * k)
        .map(|i| {
            if i % 2 == 1 {
                TBlock { i1: i, j1: i, i2: m + i, j2: m, sign: 1 }
            } else {
                TBlock { i1: i, j1: m, i2: m + i, j2: m + i, sign: 1 }
            }
        })
        .collect())
}

/// Extends a permutation of `{1..2k}` to `{1..4k+1}` acting on the even
/// indices: `2i -> 2 sigma(i)`, odd indices fixed.
pub fn theta_permutation(sigma: &Permutation) -> Permutation {
    let k2 = sigma.len();
    let n = 2 * k2 + 1;
    let images: Vec<usize> = (1..=n)
        .map(|j| if j % 2 == 0 { 2 * sigma.apply(j / 2) } else { j })
        .collect();
    Permutation::from_one_line(&images).expect("even-index extension is a bijection")
}

/// `P E_k` for a permutation `p` of `{1..4k+1}` fixing every odd index.
pub fn theta_embed(p: &Permutation, k: usize) -> Result<Asm> {
    let n = 4 * k + 1;
    if p.len() != n {
        return Err(Error::DimensionMismatch { left: n, right: p.len() });
    }
    if let Some(i) = (1..=n).step_by(2).find(|&i| p.apply(i) != i) {
        return Err(Error::MovesOddIndex { index: i });
    }
    let e = build_e_k(k)?;
    Asm::new(permutation_matrix(p).multiply(e.matrix())?)
}

/// [`theta_embed`] viewed as a frame around its central `1 x 1` block.
pub fn theta_embed_framed(p: &Permutation, k: usize) -> Result<FramedAsm> {
    let asm = theta_embed(p, k)?;
    let meta = FrameMeta {
        outer_size: 4 * k + 1,
        block_start: 2 * k + 1,
        central_block: Permutation::identity(1),
        x_column: 1,
        variant: None,
    };
    FramedAsm::from_parts(asm, meta)
}

/// Generators of a copy of `S_n` in `SA_{4k+1}`, `k = ceil(n/2)`, of rank
/// `2k+1`: the cycle on the first `n` even indices and the swap of the
/// first two.
pub fn build_symmetric_group_low_rank(n: usize) -> Result<(Asm, Asm)> {
    if n == 0 {
        return Err(Error::Frame("n must be at least 1".into()));
    }
    let k = n.div_ceil(2);
    let size = 4 * k + 1;
    let evens: Vec<usize> = (1..=n).map(|i| 2 * i).collect();
    let cycle = Permutation::cycle(size, &evens)?;
    let swap = if n == 1 {
        Permutation::identity(size)
    } else {
        Permutation::transposition(size, 2, 4)?
    };
    Ok((theta_embed(&cycle, k)?, theta_embed(&swap, k)?))
}

/// Replaces the central block of `a` by `p`. The `X` column moves to the
/// last column of the new block.
pub fn expand_center(a: &FramedAsm, p: &Permutation) -> Result<FramedAsm> {
    let meta = a.meta()?;
    let old = a.matrix();
    let q = meta.central_block.len();
    let q2 = p.len();
    if q2 == 0 {
        return Err(Error::Frame("central permutation must be nonempty".into()));
    }
    let start = meta.block_start;
    let end = start + q - 1;
    let size = old.n() - q + q2;
    let old_x = start + meta.x_column - 1;
    let new_x = start + q2 - 1;
    // 1-based new index of an old index outside the block
    let shift = |i: usize| if i < start { i } else { i - q + q2 };
    let mut e = vec![0i64; size * size];
    for r in (1..=old.n()).filter(|r| !(start..=end).contains(r)) {
        for c in 1..=old.n() {
            let v = old.get(r - 1, c - 1);
            if v == 0 {
                continue;
            }
            let c2 = if (start..=end).contains(&c) {
                debug_assert_eq!(c, old_x);
                new_x
            } else {
                shift(c)
            };
            e[(shift(r) - 1) * size + (c2 - 1)] = v;
        }
    }
    for j in 1..=q2 {
        e[(start + p.apply(j) - 2) * size + (start + j - 2)] = 1;
    }
    let asm = Asm::new(IntMatrix::from_vec(size, e)?)?;
    let new_meta = FrameMeta {
        outer_size: size,
        block_start: start,
        central_block: p.clone(),
        x_column: q2,
        variant: meta.variant,
    };
    FramedAsm::from_parts(asm, new_meta)
}

/// Recovers the frame metadata of a matrix produced by [`build_frame_at`] or
/// [`theta_embed_framed`]. Other matrices give `None`.
pub fn recognize_frame(m: &IntMatrix) -> Option<FramedAsm> {
    recognize_two_row_frame(m).or_else(|| recognize_theta(m))
}

fn recognize_two_row_frame(m: &IntMatrix) -> Option<FramedAsm> {
    let size = m.n();
    if size < 5 {
        return None;
    }
    let q = size - 4;
    let mut images = vec![0; q];
    for j in 1..=q {
        let rows: Vec<usize> = (1..=q).filter(|&i| m.get(i + 1, j + 1) != 0).collect();
        match rows.as_slice() {
            [i] if m.get(i + 1, j + 1) == 1 => images[j - 1] = *i,
            _ => return None,
        }
    }
    let p = Permutation::from_one_line(&images).ok()?;
    let x = (1..=q).find(|&j| m.get(0, j + 1) == 1)?;
    let variant = if m.get(1, 1) == 1 { FrameVariant::A } else { FrameVariant::B };
    let f = build_frame_at(&p, variant, x).ok()?;
    (f.matrix() == m).then_some(f)
}

fn recognize_theta(m: &IntMatrix) -> Option<FramedAsm> {
    let size = m.n();
    if size < 5 || !(size - 1).is_multiple_of(4) {
        return None;
    }
    let k = (size - 1) / 4;
    let e = build_e_k(k).ok()?;
    // row p(j) of P E_k is row j of E_k
    let mut images: Vec<usize> = (1..=size).collect();
    for i in (2..=size).step_by(2) {
        let j = (2..=size).step_by(2).find(|&j| e.row(j - 1) == m.row(i - 1))?;
        images[j - 1] = i;
    }
    let p = Permutation::from_one_line(&images).ok()?;
    let f = theta_embed_framed(&p, k).ok()?;
    (f.matrix() == m).then_some(f)
}

/// The group `{x (x) y}` of Kronecker products, isomorphic to `g x h`.
pub fn kronecker_group(g: &SingularGroup, h: &SingularGroup) -> Result<SingularGroup> {
    let gens_of = |grp: &SingularGroup| -> Vec<usize> {
        if grp.generator_indices().is_empty() {
            (0..grp.order()).collect()
        } else {
            grp.generator_indices().to_vec()
        }
    };
    let mut gens = Vec::new();
    for i in gens_of(g) {
        gens.push(g.elements()[i].kronecker(h.identity())?);
    }
    for j in gens_of(h) {
        gens.push(g.identity().kronecker(&h.elements()[j])?);
    }
    let max = g.order() * h.order();
    let out = closure(&gens, max)?;
    if out.order() != max {
        return Err(Error::NotAGroup { index: 0 });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::group::is_isomorphic_image;
    use crate::order::{detect_order, is_idempotent, OrderBounds};
    use crate::permutation::all_permutations;

    fn order_of(m: &IntMatrix) -> usize {
        detect_order(m, OrderBounds::default()).order().unwrap()
    }

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v).unwrap()
    }

    #[test]
    fn frames_match_seven_by_seven_displays() {
        let c3 = Permutation::cycle(3, &[1, 2, 3]).unwrap();
        let a = build_frame(&c3, FrameVariant::A).unwrap();
        let b = build_frame(&c3, FrameVariant::B).unwrap();
        assert_eq!(a.matrix(), &frame7::a());
        assert_eq!(b.matrix(), &frame7::b());
        assert_eq!(order_of(a.matrix()), 3);
        assert_eq!(order_of(b.matrix()), 6);
        assert!(a.matrix().is_singular());
    }

    #[test]
    fn frames_on_one_point() {
        let id1 = Permutation::identity(1);
        assert_eq!(build_frame(&id1, FrameVariant::A).unwrap().matrix(), &e1());
        assert_eq!(build_frame(&id1, FrameVariant::B).unwrap().matrix(), &sa5_a());
    }

    #[test]
    fn frame_errors() {
        let p = perm(&[2, 1]);
        assert!(build_frame_at(&p, FrameVariant::A, 0).is_err());
        assert!(build_frame_at(&p, FrameVariant::A, 3).is_err());
        assert!(build_frame(&Permutation::identity(0), FrameVariant::A).is_err());
        let plain = FramedAsm::plain(Asm::identity(5));
        assert!(shares_identity(&plain, &plain).is_err());
        assert!(expand_center(&plain, &p).is_err());
        let small = build_frame(&p, FrameVariant::A).unwrap();
        let big = build_frame(&perm(&[1, 2, 3]), FrameVariant::A).unwrap();
        assert!(shares_identity(&small, &big).is_err());
    }

    #[test]
    fn from_parts_rejects_wrong_metadata() {
        let f = build_frame(&perm(&[2, 3, 1]), FrameVariant::A).unwrap();
        let mut meta = f.frame_meta.clone().unwrap();
        meta.central_block = perm(&[3, 1, 2]);
        assert!(FramedAsm::from_parts(f.asm.clone(), meta).is_err());
    }

    #[test]
    fn shares_identity_agrees_with_identities_for_size_three() {
        let perms = all_permutations(3);
        let mut frames = Vec::new();
        for p in &perms {
            for x in 1..=3 {
                for v in [FrameVariant::A, FrameVariant::B] {
                    frames.push(build_frame_at(p, v, x).unwrap());
                }
            }
        }
        let ids: Vec<IntMatrix> = frames
            .iter()
            .map(|f| detect_order(f.matrix(), OrderBounds::default()).into_finite().unwrap().identity)
            .collect();
        for (a, ia) in frames.iter().zip(&ids) {
            for (b, ib) in frames.iter().zip(&ids) {
                assert_eq!(shares_identity(a, b).unwrap(), ia == ib);
            }
        }
    }

    #[test]
    fn product_of_frames_sharing_identity() {
        let p = perm(&[2, 3, 1]);
        let q = perm(&[3, 2, 1]);
        for va in [FrameVariant::A, FrameVariant::B] {
            for vb in [FrameVariant::A, FrameVariant::B] {
                let a = build_frame(&p, va).unwrap();
                let b = build_frame_at(&q, vb, 3).unwrap();
                if !shares_identity(&a, &b).unwrap() {
                    continue;
                }
                let prod = a.matrix().multiply(b.matrix()).unwrap();
                let pq = p.compose(&q).unwrap();
                // the new X column is where column k of PQ hits p(i)
                let k = (1..=3).find(|&k| pq.apply(k) == p.apply(3)).unwrap();
                let expected = build_frame_at(&pq, va.product(vb), k).unwrap();
                assert_eq!(&prod, expected.matrix());
            }
        }
    }

    #[test]
    fn symmetric_group_in_sa8_matches_display() {
        let (s, t) = build_symmetric_group_generators(4).unwrap();
        assert_eq!(s.matrix(), &s4_8::a());
        assert_eq!(t.matrix(), &s4_8::b());
        assert!(shares_identity(&s, &t).unwrap());
        let g = closure(&[s.matrix().clone(), t.matrix().clone()], 256).unwrap();
        assert_eq!(g.order(), 24);
        assert!(g.all_asm() && g.all_singular());
        let images = [g.index_of(s.matrix()).unwrap(), g.index_of(t.matrix()).unwrap()];
        let gens = [perm(&[2, 3, 4, 1]), perm(&[4, 2, 3, 1])];
        assert!(is_isomorphic_image(&gens, &g, &images).unwrap());
    }

    #[test]
    fn symmetric_group_degenerates_at_one() {
        let (s, t) = build_symmetric_group_generators(1).unwrap();
        assert_eq!(s, t);
        assert_eq!(closure(&[s.matrix().clone()], 4).unwrap().order(), 1);
    }

    #[test]
    fn e_k_properties() {
        assert_eq!(build_e_k(1).unwrap().matrix(), &e1());
        for k in 1..=4 {
            let e = build_e_k(k).unwrap();
            let n = 4 * k + 1;
            assert!(is_idempotent(e.matrix()));
            assert_eq!(e.rank(), 2 * k + 1);
            assert!(e.is_reduced_form());
            let centre = e.row(2 * k).to_vec();
            for r in (0..n).step_by(2) {
                assert_eq!(e.row(r), centre.as_slice());
            }
        }
        assert!(build_e_k(0).is_err());
    }

    #[test]
    fn t_blocks_are_orthogonal_idempotents() {
        let blocks = t_block_decomposition(3).unwrap();
        assert_eq!(blocks.len(), 6);
        let ms: Vec<_> = blocks.iter().map(|b| b.to_matrix(13)).collect();
        for (i, a) in ms.iter().enumerate() {
            assert!(is_idempotent(a));
            for (j, b) in ms.iter().enumerate() {
                if i != j {
                    assert!(a.multiply(b).unwrap().is_zero());
                }
            }
        }
        let sum = ms.iter().fold(IntMatrix::zeros(13), |acc, m| acc.add(m).unwrap());
        assert_eq!(IntMatrix::identity(13).sub(&sum).unwrap(), *build_e_k(3).unwrap().matrix());
    }

    #[test]
    fn theta_embeddings_match_nine_by_nine_displays() {
        let c = Permutation::cycle(9, &[2, 4, 6]).unwrap();
        assert_eq!(theta_embed(&c, 2).unwrap().matrix(), &theta9::order3());
        let c4 = Permutation::cycle(9, &[2, 4, 6, 8]).unwrap();
        assert_eq!(theta_embed(&c4, 2).unwrap().matrix(), &theta9::order4());
        assert_eq!(order_of(&theta9::order3()), 3);
        assert_eq!(order_of(&theta9::order4()), 4);
        assert_eq!(
            theta_embed(&Permutation::identity(9), 2).unwrap(),
            build_e_k(2).unwrap()
        );
        let bad = Permutation::transposition(9, 1, 2).unwrap();
        assert_eq!(theta_embed(&bad, 2), Err(Error::MovesOddIndex { index: 1 }));
        assert!(theta_embed(&Permutation::identity(5), 2).is_err());
    }

    #[test]
    fn theta_permutation_from_small_alphabet() {
        let sigma = Permutation::cycle(4, &[1, 2, 3, 4]).unwrap();
        assert_eq!(theta_permutation(&sigma), Permutation::cycle(9, &[2, 4, 6, 8]).unwrap());
    }

    #[test]
    fn low_rank_symmetric_groups() {
        let (s, t) = build_symmetric_group_low_rank(3).unwrap();
        assert_eq!(s.matrix(), &theta9::order3());
        assert_eq!(t.matrix(), &theta9::s3_t());
        let g = closure(&[s.into_matrix(), t.into_matrix()], 64).unwrap();
        assert_eq!(g.order(), 6);
        let (s, t) = build_symmetric_group_low_rank(4).unwrap();
        let g = closure(&[s.into_matrix(), t.into_matrix()], 64).unwrap();
        assert_eq!(g.order(), 24);
        assert!(g.elements().iter().all(|x| x.rank() == 5));
        let (s, t) = build_symmetric_group_low_rank(1).unwrap();
        let g = closure(&[s.into_matrix(), t.into_matrix()], 64).unwrap();
        assert_eq!(g.elements(), &[build_e_k(1).unwrap().into_matrix()]);
    }

    #[test]
    fn expand_center_reproduces_thirteen_by_thirteen() {
        let c4 = Permutation::cycle(9, &[2, 4, 6, 8]).unwrap();
        let a = theta_embed_framed(&c4, 2).unwrap();
        let five = Permutation::cycle(5, &[1, 2, 3, 4, 5]).unwrap();
        assert_eq!(permutation_matrix(&five), five_cycle_p());
        let b = expand_center(&a, &five).unwrap();
        assert_eq!(b.matrix(), &expanded13());
        assert_eq!(order_of(b.matrix()), 20);
        assert_eq!(expand_center(&a, &Permutation::identity(1)).unwrap(), a);
    }

    #[test]
    fn expand_center_on_frames() {
        let c3 = perm(&[2, 3, 1]);
        let a = build_frame(&c3, FrameVariant::A).unwrap();
        assert_eq!(expand_center(&a, &c3).unwrap(), a);
        let b = expand_center(&a, &perm(&[2, 1])).unwrap();
        assert_eq!(b, build_frame(&perm(&[2, 1]), FrameVariant::A).unwrap());
        assert_eq!(order_of(b.matrix()), 2);
    }

    #[test]
    fn recognition_round_trips() {
        for p in all_permutations(3) {
            for x in 1..=3 {
                for v in [FrameVariant::A, FrameVariant::B] {
                    let f = build_frame_at(&p, v, x).unwrap();
                    assert_eq!(recognize_frame(f.matrix()), Some(f));
                }
            }
        }
        let c4 = Permutation::cycle(9, &[2, 4, 6, 8]).unwrap();
        let t = theta_embed_framed(&c4, 2).unwrap();
        assert_eq!(recognize_frame(t.matrix()), Some(t));
        // the Klein-four example's A is itself a variant B frame on I_2
        let a = recognize_frame(&klein6::a()).unwrap();
        assert_eq!(a.frame_meta.unwrap().variant, Some(FrameVariant::B));
        assert_eq!(recognize_frame(&klein6::d()), None);
        assert_eq!(recognize_frame(&IntMatrix::identity(5)), None);
    }

    #[test]
    fn kronecker_groups() {
        let e = closure(&[e1()], 4).unwrap();
        let ee = kronecker_group(&e, &e).unwrap();
        assert_eq!(ee.order(), 1);
        assert_eq!(ee.identity().n(), 25);
        assert_eq!(ee.identity().rank(), 9);

        let klein = closure(&[klein6::a(), klein6::b()], 16).unwrap();
        let c2 = closure(&[sa5_a()], 4).unwrap();
        let g = kronecker_group(&klein, &c2).unwrap();
        let fp = g.fingerprint();
        assert_eq!(fp.order, 8);
        assert!(fp.abelian);
        assert_eq!(fp.element_order_histogram.get(&2), Some(&7));
        assert!(g.all_asm());
    }
}
