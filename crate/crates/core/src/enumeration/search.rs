//! Row-by-row depth-first generation of all `n x n` ASMs.
//!
//! A partial matrix is summarised by the set of columns whose prefix sum is
//! currently 1. A row fits when its `+1`s land in columns at 0 and its `-1`s
//! in columns at 1.

use std::sync::Arc;

use crate::asm::Asm;
use crate::matrix::IntMatrix;

/// Largest side length the bitmask encoding supports.
pub const MAX_N: usize = 16;

/// One admissible row: bit `j` of `plus`/`minus` marks a `+1`/`-1` in column `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowPattern {
    pub plus: u32,
    pub minus: u32,
}

impl RowPattern {
    #[inline]
    pub fn fits(&self, state: u32) -> bool {
        self.plus & state == 0 && self.minus & !state == 0
    }

    #[inline]
    pub fn apply(&self, state: u32) -> u32 {
        state ^ self.plus ^ self.minus
    }

    pub fn entries(&self, n: usize) -> Vec<i64> {
        (0..n)
            .map(|j| {
                if self.plus >> j & 1 == 1 {
                    1
                } else if self.minus >> j & 1 == 1 {
                    -1
                } else {
                    0
                }
            })
            .collect()
    }
}

/// All rows whose prefix sums lie in `{0,1}` and total 1, in lexicographic
/// order of their entries (`-1 < 0 < 1`).
pub fn row_patterns(n: usize) -> Vec<RowPattern> {
    fn go(n: usize, j: usize, sum: i64, plus: u32, minus: u32, out: &mut Vec<RowPattern>) {
        if j == n {
            if sum == 1 {
                out.push(RowPattern { plus, minus });
            }
            return;
        }
        if sum == 1 {
            go(n, j + 1, 0, plus, minus | 1 << j, out);
        }
        go(n, j + 1, sum, plus, minus, out);
        if sum == 0 {
            go(n, j + 1, 1, plus | 1 << j, minus, out);
        }
    }
    assert!(n <= MAX_N, "side length {n} exceeds {MAX_N}");
    let mut out = Vec::new();
    go(n, 0, 0, 0, 0, &mut out);
    out
}

/// Lexicographic stream of ASMs whose first rows are a fixed prefix.
///
/// Every row adds exactly one column to the state, so after `n` rows the
/// state is full and every column sums to 1.
#[derive(Debug, Clone)]
pub struct AsmEnumerator {
    n: usize,
    patterns: Arc<Vec<RowPattern>>,
    rows: Arc<Vec<Vec<i64>>>,
    /// Chosen pattern index per row.
    chosen: Vec<usize>,
    /// Column state before each row.
    states: Vec<u32>,
    /// Next pattern index to try at the current depth.
    cursor: usize,
    prefix_len: usize,
    done: bool,
}

impl AsmEnumerator {
    pub fn new(n: usize) -> Self {
        Self::with_prefix(n, &[])
    }

    /// Only matrices whose first rows are the given pattern indices.
    pub fn with_prefix(n: usize, prefix: &[usize]) -> Self {
        let patterns = row_patterns(n);
        let rows = patterns.iter().map(|p| p.entries(n)).collect();
        Self::from_parts(n, Arc::new(patterns), Arc::new(rows), prefix)
    }

    fn from_parts(
        n: usize,
        patterns: Arc<Vec<RowPattern>>,
        rows: Arc<Vec<Vec<i64>>>,
        prefix: &[usize],
    ) -> Self {
        let mut states = vec![0u32];
        let mut done = false;
        for &i in prefix {
            let s = *states.last().unwrap();
            match patterns.get(i) {
                Some(p) if p.fits(s) => states.push(p.apply(s)),
                _ => done = true,
            }
        }
        AsmEnumerator {
            n,
            patterns,
            rows,
            chosen: prefix.to_vec(),
            states,
            cursor: 0,
            prefix_len: prefix.len(),
            done: done || prefix.len() > n,
        }
    }

    fn current(&self) -> Asm {
        let mut data = Vec::with_capacity(self.n * self.n);
        for &i in &self.chosen {
            data.extend_from_slice(&self.rows[i]);
        }
        Asm::new_unchecked(IntMatrix::from_vec(self.n, data).expect("n*n entries"))
    }

    /// Moves back one level; false once the prefix is exhausted.
    fn backtrack(&mut self) -> bool {
        if self.chosen.len() == self.prefix_len {
            return false;
        }
        let last = self.chosen.pop().unwrap();
        self.states.pop();
        self.cursor = last + 1;
        true
    }
}

impl Iterator for AsmEnumerator {
    type Item = Asm;

    fn next(&mut self) -> Option<Asm> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            self.done = true;
            return Some(Asm::new_unchecked(IntMatrix::zeros(0)));
        }
        if self.chosen.len() == self.n {
            // a full prefix is its own single result
            if self.prefix_len == self.n {
                self.done = true;
                return Some(self.current());
            }
            if !self.backtrack() {
                self.done = true;
                return None;
            }
        }
        loop {
            let state = *self.states.last().unwrap();
            let found = (self.cursor..self.patterns.len()).find(|&i| self.patterns[i].fits(state));
            match found {
                Some(i) => {
                    self.chosen.push(i);
                    self.states.push(self.patterns[i].apply(state));
                    self.cursor = 0;
                    if self.chosen.len() == self.n {
                        return Some(self.current());
                    }
                }
                None => {
                    if !self.backtrack() {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}

/// Every `n x n` ASM exactly once, in lexicographic order of rows.
pub fn enumerate_asms(n: usize) -> AsmEnumerator {
    AsmEnumerator::new(n)
}

/// Independent pieces of the search tree: all admissible choices of the
/// first `min(2, n)` rows, in lexicographic order. Concatenating the shard
/// streams reproduces [`enumerate_asms`].
pub fn shards(n: usize) -> Vec<AsmEnumerator> {
    let patterns = Arc::new(row_patterns(n));
    let rows: Arc<Vec<Vec<i64>>> = Arc::new(patterns.iter().map(|p| p.entries(n)).collect());
    let depth = n.min(2);
    let mut prefixes: Vec<Vec<usize>> = vec![Vec::new()];
    let mut states = vec![0u32];
    for _ in 0..depth {
        let mut next = Vec::new();
        let mut next_states = Vec::new();
        for (prefix, &s) in prefixes.iter().zip(&states) {
            for (i, p) in patterns.iter().enumerate() {
                if p.fits(s) {
                    let mut q = prefix.clone();
                    q.push(i);
                    next.push(q);
                    next_states.push(p.apply(s));
                }
            }
        }
        prefixes = next;
        states = next_states;
    }
    prefixes
        .iter()
        .map(|p| AsmEnumerator::from_parts(n, patterns.clone(), rows.clone(), p))
        .collect()
}
