//! Small configurations: Pasch, mitre, hexagon, crown, grid and prism.
//!
//! Each kind is found by a structural search anchored on the configuration's
//! distinguished points or blocks rather than by scanning block subsets.
//! Anchors may reach the same instance several times (once per internal
//! symmetry), so instances are collected as sorted block-index tuples in a
//! set; the visitor then sees each unordered block set exactly once, in
//! lexicographic order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bits::{ones, PointSet};
use crate::error::{Result, StsError};
use crate::system::{Point, TripleSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConfigKind {
    Pasch,
    Mitre,
    Hexagon,
    Crown,
    Grid,
    Prism,
}

impl ConfigKind {
    pub const ALL: [ConfigKind; 6] = [
        ConfigKind::Pasch,
        ConfigKind::Mitre,
        ConfigKind::Hexagon,
        ConfigKind::Crown,
        ConfigKind::Grid,
        ConfigKind::Prism,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConfigKind::Pasch => "pasch",
            ConfigKind::Mitre => "mitre",
            ConfigKind::Hexagon => "hexagon",
            ConfigKind::Crown => "crown",
            ConfigKind::Grid => "grid",
            ConfigKind::Prism => "prism",
        }
    }

    /// `(points, blocks)` of the shape.
    pub fn shape(self) -> (usize, usize) {
        match self {
            ConfigKind::Pasch => (6, 4),
            ConfigKind::Mitre => (7, 5),
            ConfigKind::Hexagon | ConfigKind::Crown => (8, 6),
            ConfigKind::Grid | ConfigKind::Prism => (9, 6),
        }
    }
}

impl fmt::Display for ConfigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConfigKind {
    type Err = StsError;

    fn from_str(s: &str) -> Result<Self> {
        ConfigKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| StsError::InvalidArgument(format!("unknown configuration {s:?}")))
    }
}

/// A configuration occurring in a host system, as sorted block indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConfigInstance {
    pub kind: ConfigKind,
    pub blocks: Vec<usize>,
}

impl ConfigInstance {
    pub fn points(&self, sys: &TripleSystem) -> PointSet {
        self.blocks.iter().fold(0, |m, &b| m | sys.block(b).mask())
    }
}

/// Number of distinct instances of each kind.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ConfigCensus(BTreeMap<ConfigKind, u64>);

impl ConfigCensus {
    pub fn get(&self, kind: ConfigKind) -> u64 {
        self.0.get(&kind).copied().unwrap_or(0)
    }

    pub fn insert(&mut self, kind: ConfigKind, count: u64) {
        self.0.insert(kind, count);
    }

    pub fn iter(&self) -> impl Iterator<Item = (ConfigKind, u64)> + '_ {
        self.0.iter().map(|(&k, &c)| (k, c))
    }
}

fn sorted<const N: usize>(mut blocks: [usize; N]) -> Vec<usize> {
    blocks.sort_unstable();
    blocks.to_vec()
}

fn pasch_sets(sys: &TripleSystem) -> BTreeSet<Vec<usize>> {
    // Two blocks {x,y,z}, {x,b,c} through x close to a Pasch when the blocks
    // through {y,b} and {z,c} (or {y,c} and {z,b}) share their third point.
    let mut out = BTreeSet::new();
    for x in 0..sys.order() as Point {
        let through = sys.blocks_through(x);
        for (i, &b1) in through.iter().enumerate() {
            let [y, z] = others(sys, b1, x);
            for &b2 in &through[i + 1..] {
                let [b, c] = others(sys, b2, x);
                for (p, q) in [(b, c), (c, b)] {
                    if sys.third(y, p) == sys.third(z, q) {
                        out.insert(sorted([b1, b2, sys.block_of(y, p), sys.block_of(z, q)]));
                    }
                }
            }
        }
    }
    out
}

/// The two points of block `b` other than `p`.
fn others(sys: &TripleSystem, b: usize, p: Point) -> [Point; 2] {
    let pts = sys.block(b).points();
    let mut out = [0; 2];
    let mut k = 0;
    for q in pts {
        if q != p {
            out[k] = q;
            k += 1;
        }
    }
    out
}

fn mitre_sets(sys: &TripleSystem) -> BTreeSet<Vec<usize>> {
    // The centre x lies on three blocks {x,a,d}, {x,b,e}, {x,c,f}; the other
    // two blocks are a transversal {a,b',c'} and its complement.
    let mut out = BTreeSet::new();
    for x in 0..sys.order() as Point {
        let through = sys.blocks_through(x);
        for (i, &b1) in through.iter().enumerate() {
            let [a, d] = others(sys, b1, x);
            for (j, &b2) in through.iter().enumerate().skip(i + 1) {
                let p2 = others(sys, b2, x);
                for &b3 in &through[j + 1..] {
                    let p3 = others(sys, b3, x);
                    for s2 in 0..2 {
                        for s3 in 0..2 {
                            let (u, u2) = (p2[s2], p2[1 - s2]);
                            let (w, w2) = (p3[s3], p3[1 - s3]);
                            if sys.third(a, u) == w && sys.third(d, u2) == w2 {
                                out.insert(sorted([b1, b2, b3, sys.block_of(a, u), sys.block_of(d, u2)]));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn hexagon_sets(sys: &TripleSystem) -> BTreeSet<Vec<usize>> {
    // Centre x with three blocks; a second centre y must meet the six
    // remaining points in a perfect matching that avoids the x-pairs.
    let mut out = BTreeSet::new();
    let v = sys.order() as Point;
    for x in 0..v {
        let through = sys.blocks_through(x);
        for (i, &b1) in through.iter().enumerate() {
            for (j, &b2) in through.iter().enumerate().skip(i + 1) {
                for &b3 in &through[j + 1..] {
                    let pairs = [others(sys, b1, x), others(sys, b2, x), others(sys, b3, x)];
                    let six: PointSet = pairs.iter().flatten().fold(0, |m, &p| m | 1 << p);
                    let group = |p: Point| pairs.iter().position(|pr| pr.contains(&p));
                    let a = pairs[0][0];
                    for &u in pairs[1].iter().chain(&pairs[2]) {
                        let y = sys.third(a, u);
                        if six >> y & 1 == 1 {
                            continue;
                        }
                        let matched = ones(six).all(|p| {
                            let q = sys.third(y, p as Point);
                            six >> q & 1 == 1 && group(q) != group(p as Point)
                        });
                        if matched {
                            let ys: Vec<usize> = ones(six).map(|p| sys.block_of(y, p as Point)).collect();
                            let mut blocks = vec![b1, b2, b3];
                            blocks.extend(ys);
                            blocks.sort_unstable();
                            blocks.dedup();
                            debug_assert_eq!(blocks.len(), 6);
                            out.insert(blocks);
                        }
                    }
                }
            }
        }
    }
    out
}

fn crown_sets(sys: &TripleSystem) -> BTreeSet<Vec<usize>> {
    // {x,y,z}, {x,a,b}, {y,c,d}, {z,a,c}, {w,x,d}, {w,y,b}: the two centres x, y
    // share the block {x,y,z}.
    let mut out = BTreeSet::new();
    for (b0, t) in sys.blocks().iter().enumerate() {
        let pts = t.points();
        for zi in 0..3 {
            let z = pts[zi];
            let [p, q] = others(sys, b0, z);
            for (x, y) in [(p, q), (q, p)] {
                for &bx in sys.blocks_through(x).iter().filter(|&&b| b != b0) {
                    let [a0, b0x] = others(sys, bx, x);
                    for (a, b) in [(a0, b0x), (b0x, a0)] {
                        for &by in sys.blocks_through(y).iter().filter(|&&b| b != b0) {
                            let [c0, d0] = others(sys, by, y);
                            for (c, d) in [(c0, d0), (d0, c0)] {
                                if sys.third(z, a) != c {
                                    continue;
                                }
                                let w = sys.third(x, d);
                                let used: PointSet = [x, y, z, a, b, c, d].iter().fold(0, |m, &p| m | 1 << p);
                                if used >> w & 1 == 1 || sys.third(w, y) != b {
                                    continue;
                                }
                                out.insert(sorted([
                                    b0,
                                    bx,
                                    by,
                                    sys.block_of(z, a),
                                    sys.block_of(x, d),
                                    sys.block_of(w, y),
                                ]));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

const BIJECTIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn grid_sets(sys: &TripleSystem) -> BTreeSet<Vec<usize>> {
    // Two disjoint rows and a bijection between them determine the columns;
    // the third points of the columns must form the third row.
    let mut out = BTreeSet::new();
    let blocks = sys.blocks();
    for (r1, t1) in blocks.iter().enumerate() {
        for (r2, t2) in blocks.iter().enumerate().skip(r1 + 1) {
            if t1.mask() & t2.mask() != 0 {
                continue;
            }
            let (p1, p2) = (t1.points(), t2.points());
            for pi in BIJECTIONS {
                let xs = [0, 1, 2].map(|i| sys.third(p1[i], p2[pi[i]]));
                if xs[0] == xs[1] || sys.third(xs[0], xs[1]) != xs[2] {
                    continue;
                }
                let cols = [0, 1, 2].map(|i| sys.block_of(p1[i], p2[pi[i]]));
                out.insert(sorted([r1, r2, sys.block_of(xs[0], xs[1]), cols[0], cols[1], cols[2]]));
            }
        }
    }
    out
}

fn prism_sets(sys: &TripleSystem) -> BTreeSet<Vec<usize>> {
    // Triangle {a,b,n}, {a,c,m}, {b,c,l} and a second triangle
    // {l,y,z}, {m,x,z}, {n,x,y} through the same outer points l, m, n.
    let mut out = BTreeSet::new();
    let v = sys.order() as Point;
    for a in 0..v {
        for b in a + 1..v {
            let n = sys.third(a, b);
            for c in b + 1..v {
                if c == n {
                    continue;
                }
                let m = sys.third(a, c);
                let l = sys.third(b, c);
                let outer: PointSet = [a, b, c, l, m, n].iter().fold(0, |s, &p| s | 1 << p);
                for y in 0..v {
                    if outer >> y & 1 == 1 {
                        continue;
                    }
                    let z = sys.third(l, y);
                    if outer >> z & 1 == 1 {
                        continue;
                    }
                    let x = sys.third(m, z);
                    if outer >> x & 1 == 1 || x == y || sys.third(x, y) != n {
                        continue;
                    }
                    out.insert(sorted([
                        sys.block_of(a, b),
                        sys.block_of(a, c),
                        sys.block_of(b, c),
                        sys.block_of(l, y),
                        sys.block_of(m, x),
                        sys.block_of(n, x),
                    ]));
                }
            }
        }
    }
    out
}

fn instance_sets(sys: &TripleSystem, kind: ConfigKind) -> BTreeSet<Vec<usize>> {
    match kind {
        ConfigKind::Pasch => pasch_sets(sys),
        ConfigKind::Mitre => mitre_sets(sys),
        ConfigKind::Hexagon => hexagon_sets(sys),
        ConfigKind::Crown => crown_sets(sys),
        ConfigKind::Grid => grid_sets(sys),
        ConfigKind::Prism => prism_sets(sys),
    }
}

/// Visit each instance of `kind` once, in lexicographic order of block indices.
pub fn enumerate_configs<F>(sys: &TripleSystem, kind: ConfigKind, mut visitor: F) -> usize
where
    F: FnMut(&ConfigInstance),
{
    let sets = instance_sets(sys, kind);
    let n = sets.len();
    for blocks in sets {
        let inst = ConfigInstance { kind, blocks };
        debug_assert!(is_instance(sys, &inst), "{inst:?}");
        visitor(&inst);
    }
    n
}

pub fn instances(sys: &TripleSystem, kind: ConfigKind) -> Vec<ConfigInstance> {
    instance_sets(sys, kind)
        .into_iter()
        .map(|blocks| ConfigInstance { kind, blocks })
        .collect()
}

pub fn count(sys: &TripleSystem, kind: ConfigKind) -> u64 {
    instance_sets(sys, kind).len() as u64
}

pub fn census(sys: &TripleSystem) -> ConfigCensus {
    let mut c = ConfigCensus::default();
    for kind in ConfigKind::ALL {
        c.insert(kind, count(sys, kind));
    }
    c
}

/// For each point, the number of instances of `kind` containing it.
pub fn per_point_counts(sys: &TripleSystem, kind: ConfigKind) -> Vec<usize> {
    let mut counts = vec![0; sys.order()];
    for blocks in instance_sets(sys, kind) {
        let pts = blocks.iter().fold(0u64, |m, &b| m | sys.block(b).mask());
        for p in ones(pts) {
            counts[p] += 1;
        }
    }
    counts
}

/// No `(l+2, l)`-configuration for `4 <= l <= n`, for `n` in 4..=6.
///
/// The non-full (8,6)-configurations each contain a Pasch or a mitre, so
/// 6-sparseness reduces to 5-sparseness plus the absence of hexagons and crowns.
pub fn is_n_sparse(sys: &TripleSystem, n: usize) -> Result<bool> {
    let kinds: &[ConfigKind] = match n {
        4 => &[ConfigKind::Pasch],
        5 => &[ConfigKind::Pasch, ConfigKind::Mitre],
        6 => &[ConfigKind::Pasch, ConfigKind::Mitre, ConfigKind::Hexagon, ConfigKind::Crown],
        _ => return Err(StsError::InvalidArgument(format!("sparseness level {n} not in 4..=6"))),
    };
    Ok(kinds.iter().all(|&k| count(sys, k) == 0))
}

/// Check that the blocks of `inst` really form a configuration of its kind.
pub fn is_instance(sys: &TripleSystem, inst: &ConfigInstance) -> bool {
    let (np, nb) = inst.kind.shape();
    let mut blocks = inst.blocks.clone();
    blocks.sort_unstable();
    blocks.dedup();
    if blocks.len() != nb || blocks.iter().any(|&b| b >= sys.num_blocks()) {
        return false;
    }
    let masks: Vec<PointSet> = blocks.iter().map(|&b| sys.block(b).mask()).collect();
    let pts = masks.iter().fold(0, |m, &b| m | b);
    if pts.count_ones() as usize != np {
        return false;
    }
    let degree = |p: usize| masks.iter().filter(|&&m| m >> p & 1 == 1).count();
    let degrees: Vec<(usize, usize)> = ones(pts).map(|p| (p, degree(p))).collect();
    let full = degrees.iter().all(|&(_, d)| d >= 2);
    let centres: Vec<usize> = degrees.iter().filter(|&&(_, d)| d == 3).map(|&(p, _)| p).collect();
    let centres_collinear = || {
        centres.len() == 2 && masks.iter().any(|&m| m >> centres[0] & 1 == 1 && m >> centres[1] & 1 == 1)
    };
    match inst.kind {
        // (6,4) and full (7,5) configurations are unique.
        ConfigKind::Pasch => true,
        ConfigKind::Mitre => full,
        ConfigKind::Hexagon => full && centres.len() == 2 && !centres_collinear(),
        ConfigKind::Crown => full && centres.len() == 2 && centres_collinear(),
        ConfigKind::Grid | ConfigKind::Prism => {
            if !degrees.iter().all(|&(_, d)| d == 2) {
                return false;
            }
            // The prism contains two triangles of pairwise meeting blocks; the grid none.
            let meets = |i: usize, j: usize| masks[i] & masks[j] != 0;
            let triangle = (0..6).any(|i| {
                (i + 1..6).any(|j| meets(i, j) && (j + 1..6).any(|k| meets(i, k) && meets(j, k)))
            });
            triangle == (inst.kind == ConfigKind::Prism)
        }
    }
}
