//! Pair cycle structure, independent sets and the block intersection graph.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::bits::{ones, BlockSet, PointSet};
use crate::system::{Point, TripleSystem};

/// Sorted cycle lengths of the pair graph `G_{x,y}`.
///
/// For a pair `{x, y}` with third point `z`, the graph on the remaining
/// `v - 3` points joins `u` and `w` whenever `{x,u,w}` or `{y,u,w}` is a
/// block. Every vertex has one edge of each kind, so the graph is a disjoint
/// union of even cycles of length at least 4.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CycleList(pub Vec<usize>);

impl CycleList {
    pub fn lengths(&self) -> &[usize] {
        &self.0
    }

    /// Number of cycles of the given length.
    pub fn count(&self, len: usize) -> usize {
        self.0.iter().filter(|&&l| l == len).count()
    }
}

impl fmt::Display for CycleList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

pub fn cycle_list(sys: &TripleSystem, x: Point, y: Point) -> CycleList {
    assert_ne!(x, y, "cycle lists are defined for distinct points");
    let z = sys.third(x, y);
    let mut unseen: PointSet = sys.all_points() & !(1 << x | 1 << y | 1 << z);
    let mut lens = Vec::new();
    while unseen != 0 {
        let start = unseen.trailing_zeros() as Point;
        let mut len = 0;
        let mut u = start;
        loop {
            // Alternate an x-edge and a y-edge.
            let w = sys.third(x, u);
            let next = sys.third(y, w);
            unseen &= !(1 << u | 1 << w);
            len += 2;
            u = next;
            if u == start {
                break;
            }
        }
        lens.push(len);
    }
    lens.sort_unstable();
    debug_assert!(lens.iter().all(|&l| l >= 4 && l % 2 == 0));
    CycleList(lens)
}

/// Cycle lists of all pairs, with the number of pairs having each list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleCensus {
    pub lists: BTreeMap<CycleList, usize>,
    pub uniform: bool,
    pub perfect: bool,
}

impl CycleCensus {
    pub fn distinct(&self) -> usize {
        self.lists.len()
    }

    pub fn total_pairs(&self) -> usize {
        self.lists.values().sum()
    }

    /// Sum over all pairs of the number of cycles of length `len`.
    pub fn cycles_of_length(&self, len: usize) -> usize {
        self.lists.iter().map(|(l, n)| l.count(len) * n).sum()
    }
}

/// Cycle list of each pair `x < y`, in lexicographic pair order.
pub fn pair_cycle_lists(sys: &TripleSystem) -> Vec<((Point, Point), CycleList)> {
    let v = sys.order() as Point;
    let mut out = Vec::with_capacity(sys.order() * (sys.order() - 1) / 2);
    for x in 0..v {
        for y in x + 1..v {
            out.push(((x, y), cycle_list(sys, x, y)));
        }
    }
    out
}

pub fn cycle_census(sys: &TripleSystem) -> CycleCensus {
    let mut lists = BTreeMap::new();
    for (_, l) in pair_cycle_lists(sys) {
        *lists.entry(l).or_insert(0) += 1;
    }
    let uniform = lists.len() == 1;
    let perfect = uniform && sys.order() > 3 && lists.keys().all(|l| l.0 == [sys.order() - 3]);
    CycleCensus {
        lists,
        uniform,
        perfect,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependentSet {
    pub size: usize,
    pub points: Vec<usize>,
}

struct MisSearch<'a> {
    sys: &'a TripleSystem,
    best: PointSet,
}

impl MisSearch<'_> {
    /// Upper bound on how many candidates can still join: any block lying
    /// inside the candidate set contributes at most two points, so subtract one
    /// per block in a greedy packing of such blocks.
    fn bound(&self, cand: PointSet) -> u32 {
        let mut used: PointSet = 0;
        let mut packed = 0;
        for t in self.sys.blocks() {
            let m = t.mask();
            if m & cand == m && m & used == 0 {
                used |= m;
                packed += 1;
            }
        }
        cand.count_ones() - packed
    }

    fn search(&mut self, chosen: PointSet, cand: PointSet) {
        if chosen.count_ones() > self.best.count_ones() {
            self.best = chosen;
        }
        if cand == 0 || chosen.count_ones() + self.bound(cand) <= self.best.count_ones() {
            return;
        }
        let p = cand.trailing_zeros() as Point;
        let rest = cand & !(1 << p);
        let mut blocked: PointSet = 0;
        for q in ones(chosen) {
            blocked |= 1 << self.sys.third(p, q as Point);
        }
        self.search(chosen | 1 << p, rest & !blocked);
        self.search(chosen, rest);
    }
}

/// A maximum independent set (no block inside it), found by branch and bound.
pub fn max_independent_set(sys: &TripleSystem) -> IndependentSet {
    let mut s = MisSearch { sys, best: 0 };
    s.search(0, sys.all_points());
    debug_assert!(sys.is_independent(s.best));
    IndependentSet {
        size: s.best.count_ones() as usize,
        points: ones(s.best).collect(),
    }
}

/// One vertex per block, adjacent when the blocks share a point.
#[derive(Clone, Debug)]
pub struct IntersectionGraph {
    adjacency: Vec<BlockSet>,
}

impl IntersectionGraph {
    pub fn from_adjacency(adjacency: Vec<BlockSet>) -> Self {
        Self { adjacency }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbours(&self, u: usize) -> &BlockSet {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }

    pub fn is_adjacent(&self, u: usize, w: usize) -> bool {
        self.adjacency[u].contains(w)
    }
}

pub fn block_intersection_graph(sys: &TripleSystem) -> IntersectionGraph {
    let adjacency: Vec<BlockSet> = (0..sys.num_blocks())
        .map(|b| {
            let mut nb: BlockSet = sys
                .block(b)
                .points()
                .iter()
                .flat_map(|&p| sys.blocks_through(p).iter().copied())
                .collect();
            nb.remove(b);
            nb
        })
        .collect();
    let expected = 3 * (sys.replication().saturating_sub(1));
    debug_assert!(adjacency.iter().all(|n| n.len() == expected));
    IntersectionGraph { adjacency }
}

/// Outcome of an existential-closure scan; on failure, the first `(S, T)` in
/// lexicographic order of `S` that has no witness vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub closed: bool,
    pub failure: Option<(Vec<usize>, Vec<usize>)>,
}

/// Whether for every `n`-set `S` and every `T` within it some vertex outside `S`
/// is adjacent to all of `T` and to none of `S \ T`.
pub fn existential_closure(g: &IntersectionGraph, n: usize) -> ClosureReport {
    let nv = g.vertex_count();
    let all: BlockSet = (0..nv).collect();
    let mut subset: Vec<usize> = (0..n).collect();
    if n > nv {
        return ClosureReport { closed: true, failure: None };
    }
    loop {
        let s_set: BlockSet = subset.iter().copied().collect();
        for t_mask in 0u32..1 << n {
            let mut cand = all.difference(&s_set);
            for (i, &u) in subset.iter().enumerate() {
                cand = if t_mask >> i & 1 == 1 {
                    cand.intersection(g.neighbours(u))
                } else {
                    cand.difference(g.neighbours(u))
                };
            }
            if cand.is_empty() {
                let t = (0..n).filter(|&i| t_mask >> i & 1 == 1).map(|i| subset[i]).collect();
                return ClosureReport {
                    closed: false,
                    failure: Some((subset, t)),
                };
            }
        }
        // Next n-subset in lexicographic order.
        let Some(i) = (0..n).rev().find(|&i| subset[i] < nv - n + i) else {
            return ClosureReport { closed: true, failure: None };
        };
        subset[i] += 1;
        for j in i + 1..n {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

pub fn is_n_existentially_closed(g: &IntersectionGraph, n: usize) -> bool {
    existential_closure(g, n).closed
}
