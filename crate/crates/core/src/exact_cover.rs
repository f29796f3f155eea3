//! Exact cover search.
//!
//! Algorithm X over dense bitsets: the live rows are a bitset, each column
//! keeps the bitset of rows covering it, and each row the bitset of rows it
//! conflicts with. Choosing a row is a handful of word-wise ANDs.
//!
//! The branching column is the uncovered column with the fewest live rows,
//! ties broken by lowest index; rows are tried in index order. Enumeration
//! order is therefore deterministic.

use rayon::prelude::*;

use crate::bits::ones;
use crate::error::{Result, StsError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactCoverInstance {
    universe: usize,
    rows: Vec<Vec<usize>>,
}

impl ExactCoverInstance {
    /// Rows are sorted and deduplicated internally; each must be nonempty and inside the universe.
    pub fn new(universe: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let mut rows = rows;
        for (i, row) in rows.iter_mut().enumerate() {
            row.sort_unstable();
            row.dedup();
            let bad = StsError::InvalidArgument;
            if row.is_empty() {
                return Err(bad(format!("exact cover row {i} is empty")));
            }
            if let Some(&c) = row.iter().find(|&&c| c >= universe) {
                return Err(bad(format!("exact cover row {i} names column {c} >= {universe}")));
            }
        }
        Ok(Self { universe, rows })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Whether `sel` is a set of pairwise disjoint rows covering the whole universe.
    pub fn is_cover(&self, sel: &[usize]) -> bool {
        let mut hit = vec![false; self.universe];
        for &r in sel {
            for &c in &self.rows[r] {
                if std::mem::replace(&mut hit[c], true) {
                    return false;
                }
            }
        }
        hit.into_iter().all(|h| h)
    }
}

/// A selection of rows forming an exact cover, sorted by row index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoverSolution {
    pub rows: Vec<usize>,
}

type Bits = Vec<u64>;

fn words(n: usize) -> usize {
    n.div_ceil(64)
}

fn set(bits: &mut [u64], i: usize) {
    bits[i >> 6] |= 1 << (i & 63);
}

fn and_count(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum()
}

fn iter_bits(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter()
        .enumerate()
        .flat_map(|(w, &word)| ones(word).map(move |b| (w << 6) | b))
}

struct Matrix {
    universe: usize,
    col_rows: Vec<Bits>,
    row_cols: Vec<Bits>,
    conflicts: Vec<Bits>,
}

impl Matrix {
    fn new(inst: &ExactCoverInstance) -> Self {
        let nr = inst.rows.len();
        let (rw, cw) = (words(nr), words(inst.universe));
        let mut col_rows = vec![vec![0; rw]; inst.universe];
        let mut row_cols = vec![vec![0; cw]; nr];
        for (r, row) in inst.rows.iter().enumerate() {
            for &c in row {
                set(&mut col_rows[c], r);
                set(&mut row_cols[r], c);
            }
        }
        let conflicts = inst
            .rows
            .iter()
            .map(|row| {
                let mut bits = vec![0; rw];
                for &c in row {
                    for (b, w) in bits.iter_mut().zip(&col_rows[c]) {
                        *b |= w;
                    }
                }
                bits
            })
            .collect();
        Self {
            universe: inst.universe,
            col_rows,
            row_cols,
            conflicts,
        }
    }

    fn root(&self) -> State {
        let nr = self.row_cols.len();
        let mut live = vec![0; words(nr)];
        for r in 0..nr {
            set(&mut live, r);
        }
        let mut open = vec![0; words(self.universe)];
        for c in 0..self.universe {
            set(&mut open, c);
        }
        State { live, open }
    }

    /// `None` when every column is covered; `Some(None)` at a dead end.
    fn choose_column(&self, st: &State) -> Option<Option<usize>> {
        let mut best: Option<(u32, usize)> = None;
        for c in iter_bits(&st.open) {
            let n = and_count(&st.live, &self.col_rows[c]);
            if n == 0 {
                return Some(None);
            }
            if best.is_none_or(|(m, _)| n < m) {
                best = Some((n, c));
            }
        }
        best.map(|(_, c)| Some(c))
    }

    fn candidates(&self, st: &State, c: usize) -> Vec<usize> {
        let cand: Bits = st.live.iter().zip(&self.col_rows[c]).map(|(a, b)| a & b).collect();
        iter_bits(&cand).collect()
    }

    fn select(&self, st: &State, r: usize) -> State {
        State {
            live: st.live.iter().zip(&self.conflicts[r]).map(|(a, b)| a & !b).collect(),
            open: st.open.iter().zip(&self.row_cols[r]).map(|(a, b)| a & !b).collect(),
        }
    }
}

#[derive(Clone)]
struct State {
    live: Bits,
    open: Bits,
}

struct Enumerator<'a, F> {
    m: &'a Matrix,
    stack: Vec<usize>,
    visitor: F,
    found: usize,
    limit: Option<usize>,
}

impl<F: FnMut(&CoverSolution)> Enumerator<'_, F> {
    fn done(&self) -> bool {
        self.limit.is_some_and(|l| self.found >= l)
    }

    fn search(&mut self, st: &State) {
        match self.m.choose_column(st) {
            None => {
                let mut rows = self.stack.clone();
                rows.sort_unstable();
                self.found += 1;
                (self.visitor)(&CoverSolution { rows });
            }
            Some(None) => {}
            Some(Some(c)) => {
                for r in self.m.candidates(st, c) {
                    if self.done() {
                        return;
                    }
                    self.stack.push(r);
                    let next = self.m.select(st, r);
                    self.search(&next);
                    self.stack.pop();
                }
            }
        }
    }
}

fn count_from(m: &Matrix, st: &State) -> u64 {
    match m.choose_column(st) {
        None => 1,
        Some(None) => 0,
        Some(Some(c)) => m
            .candidates(st, c)
            .into_iter()
            .map(|r| count_from(m, &m.select(st, r)))
            .sum(),
    }
}

/// Visit every exact cover once, in search order, stopping after `limit` covers.
/// Returns the number of covers visited.
pub fn enumerate_covers<F>(inst: &ExactCoverInstance, limit: Option<usize>, visitor: F) -> usize
where
    F: FnMut(&CoverSolution),
{
    let m = Matrix::new(inst);
    let mut e = Enumerator {
        m: &m,
        stack: Vec::new(),
        visitor,
        found: 0,
        limit,
    };
    if limit != Some(0) {
        e.search(&m.root());
    }
    e.found
}

/// All covers, in search order.
pub fn all_covers(inst: &ExactCoverInstance, limit: Option<usize>) -> Vec<CoverSolution> {
    let mut out = Vec::new();
    enumerate_covers(inst, limit, |s| out.push(s.clone()));
    out
}

/// Number of exact covers. The top-level branches are counted in parallel.
pub fn count_covers(inst: &ExactCoverInstance) -> u64 {
    let m = Matrix::new(inst);
    let root = m.root();
    match m.choose_column(&root) {
        None => 1,
        Some(None) => 0,
        Some(Some(c)) => m
            .candidates(&root, c)
            .into_par_iter()
            .map(|r| count_from(&m, &m.select(&root, r)))
            .sum(),
    }
}
