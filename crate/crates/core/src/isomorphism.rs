//! Automorphisms and isomorphisms of triple systems.
//!
//! Both are found by the same backtracking search over point maps. Mapping
//! two points fixes the image of the third point of their block, so each
//! choice is propagated through all pairs of mapped points before the next
//! branch; a handful of free choices determines the whole map. Point and
//! pair invariants (Pasch and mitre counts through a point, cycle lists of
//! pairs) prune candidate images.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::configurations::{per_point_counts, ConfigKind};
use crate::error::{BudgetExceeded, Result, StsError};
use crate::structure::{cycle_list, CycleList};
use crate::system::{Point, TripleSystem};

/// Default cap on the number of group elements materialised.
pub const DEFAULT_MAX_ORDER: u64 = 1 << 20;

/// A bijection of `0..v`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<Point>);

impl Permutation {
    pub fn identity(v: usize) -> Self {
        Self((0..v as Point).collect())
    }

    pub fn from_images(images: Vec<Point>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &p in &images {
            match seen.get_mut(p as usize) {
                Some(s) if !*s => *s = true,
                _ => {
                    return Err(StsError::InvalidArgument(format!(
                        "{images:?} is not a permutation"
                    )))
                }
            }
        }
        Ok(Self(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[Point] {
        &self.0
    }

    pub fn image(&self, p: Point) -> Point {
        self.0[p as usize]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p as usize] = i as Point;
        }
        Self(inv)
    }

    /// `self` after `first`: `p -> self(first(p))`.
    pub fn after(&self, first: &Self) -> Self {
        Self(first.0.iter().map(|&p| self.0[p as usize]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    /// Cycle lengths, fixed points included, in non-decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for s in 0..self.0.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut p = s;
            while !seen[p] {
                seen[p] = true;
                p = self.0[p] as usize;
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.0)
    }
}

/// Relabel a system's points by `p`.
pub fn apply(sys: &TripleSystem, p: &Permutation) -> TripleSystem {
    sys.relabel(p.images())
}

/// Per-point invariant used to prune the search.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointSignature {
    pub pasch: usize,
    pub mitre: usize,
    pub cycle_lists: Vec<(CycleList, usize)>,
}

struct Invariants {
    points: Vec<PointSignature>,
    /// Cycle list of each ordered pair, `v * v`, diagonal unused.
    pairs: Vec<CycleList>,
}

impl Invariants {
    fn new(sys: &TripleSystem) -> Self {
        let v = sys.order();
        let mut pairs = vec![CycleList(Vec::new()); v * v];
        for x in 0..v {
            for y in x + 1..v {
                let l = cycle_list(sys, x as Point, y as Point);
                pairs[y * v + x] = l.clone();
                pairs[x * v + y] = l;
            }
        }
        let pasch = per_point_counts(sys, ConfigKind::Pasch);
        let mitre = per_point_counts(sys, ConfigKind::Mitre);
        let points = (0..v)
            .map(|x| {
                let mut lists: BTreeMap<CycleList, usize> = BTreeMap::new();
                for y in (0..v).filter(|&y| y != x) {
                    *lists.entry(pairs[x * v + y].clone()).or_default() += 1;
                }
                PointSignature {
                    pasch: pasch[x],
                    mitre: mitre[x],
                    cycle_lists: lists.into_iter().collect(),
                }
            })
            .collect();
        Self { points, pairs }
    }

    fn sorted_points(&self) -> Vec<PointSignature> {
        let mut s = self.points.clone();
        s.sort();
        s
    }
}

/// Signatures of every point, in point order.
pub fn point_signatures(sys: &TripleSystem) -> Vec<PointSignature> {
    Invariants::new(sys).points
}

const UNMAPPED: Point = Point::MAX;

/// Backtracking search for structure-preserving maps from `a` onto `b`.
struct Search<'a> {
    a: &'a TripleSystem,
    b: &'a TripleSystem,
    v: usize,
    point_class_a: Vec<u32>,
    point_class_b: Vec<u32>,
    pair_class_a: Vec<u32>,
    pair_class_b: Vec<u32>,
    /// Branching order of source points.
    order: Vec<Point>,
    map: Vec<Point>,
    inv: Vec<Point>,
    trail: Vec<Point>,
}

fn class_ids<T: Ord + Clone>(a: &[T], b: &[T]) -> (Vec<u32>, Vec<u32>) {
    let mut ids: BTreeMap<T, u32> = BTreeMap::new();
    for x in a.iter().chain(b) {
        let n = ids.len() as u32;
        ids.entry(x.clone()).or_insert(n);
    }
    (a.iter().map(|x| ids[x]).collect(), b.iter().map(|x| ids[x]).collect())
}

impl<'a> Search<'a> {
    fn new(a: &'a TripleSystem, ia: &Invariants, b: &'a TripleSystem, ib: &Invariants) -> Self {
        let v = a.order();
        let (point_class_a, point_class_b) = class_ids(&ia.points, &ib.points);
        let (pair_class_a, pair_class_b) = class_ids(&ia.pairs, &ib.pairs);
        let mut class_size = BTreeMap::<u32, usize>::new();
        for &c in &point_class_a {
            *class_size.entry(c).or_default() += 1;
        }
        let mut order: Vec<Point> = (0..v as Point).collect();
        order.sort_by_key(|&p| (class_size[&point_class_a[p as usize]], p));
        Self {
            a,
            b,
            v,
            point_class_a,
            point_class_b,
            pair_class_a,
            pair_class_b,
            order,
            map: vec![UNMAPPED; v],
            inv: vec![UNMAPPED; v],
            trail: Vec::with_capacity(v),
        }
    }

    fn set(&mut self, x: Point, y: Point) -> bool {
        if self.inv[y as usize] != UNMAPPED || self.point_class_a[x as usize] != self.point_class_b[y as usize] {
            return false;
        }
        self.map[x as usize] = y;
        self.inv[y as usize] = x;
        self.trail.push(x);
        true
    }

    /// Map `x -> y` and everything it forces. On failure the caller undoes to its trail mark.
    fn assign(&mut self, x: Point, y: Point) -> bool {
        let start = self.trail.len();
        if !self.set(x, y) {
            return false;
        }
        let mut i = start;
        while i < self.trail.len() {
            let p = self.trail[i];
            let fp = self.map[p as usize];
            for j in 0..i {
                let q = self.trail[j];
                let fq = self.map[q as usize];
                if self.pair_class_a[p as usize * self.v + q as usize]
                    != self.pair_class_b[fp as usize * self.v + fq as usize]
                {
                    return false;
                }
                let c = self.a.third(p, q);
                let d = self.b.third(fp, fq);
                let fc = self.map[c as usize];
                if fc == UNMAPPED {
                    if !self.set(c, d) {
                        return false;
                    }
                } else if fc != d {
                    return false;
                }
            }
            i += 1;
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            let y = self.map[x as usize];
            self.map[x as usize] = UNMAPPED;
            self.inv[y as usize] = UNMAPPED;
        }
    }

    /// Calls `found` on each complete map; stops when it returns `false`.
    /// Returns `false` if stopped early.
    fn run(&mut self, found: &mut dyn FnMut(&[Point]) -> bool) -> bool {
        let Some(&x) = self.order.iter().find(|&&p| self.map[p as usize] == UNMAPPED) else {
            return found(&self.map);
        };
        let class = self.point_class_a[x as usize];
        for y in 0..self.v as Point {
            if self.inv[y as usize] != UNMAPPED || self.point_class_b[y as usize] != class {
                continue;
            }
            let mark = self.trail.len();
            let ok = self.assign(x, y);
            let keep_going = !ok || self.run(found);
            self.undo(mark);
            if !keep_going {
                return false;
            }
        }
        true
    }
}

/// The full automorphism group of a system.
#[derive(Clone, Debug)]
pub struct AutGroup {
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
    orbits: Vec<Vec<usize>>,
}

impl AutGroup {
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    /// Every group element, identity first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Point orbits, each sorted, ordered by least element.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }

    pub fn contains_cycle_type(&self, cycle_type: &[usize]) -> bool {
        let mut want = cycle_type.to_vec();
        want.sort_unstable();
        self.elements.iter().any(|g| g.cycle_type() == want)
    }
}

/// Closure of a set of permutations under composition.
pub fn closure(v: usize, gens: &[Permutation]) -> HashSet<Permutation> {
    let id = Permutation::identity(v);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(g) = queue.pop() {
        for s in gens {
            let h = s.after(&g);
            if seen.insert(h.clone()) {
                queue.push(h);
            }
        }
    }
    seen
}

fn greedy_generators(v: usize, elements: &[Permutation]) -> Vec<Permutation> {
    let mut gens = Vec::new();
    let mut span = closure(v, &gens);
    for g in elements {
        if !span.contains(g) {
            gens.push(g.clone());
            span = closure(v, &gens);
        }
        if span.len() == elements.len() {
            break;
        }
    }
    gens
}

fn orbits_of(v: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..v).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        for p in 0..v {
            let (a, b) = (find(&mut parent, p), find(&mut parent, g.image(p as Point) as usize));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for p in 0..v {
        let r = find(&mut parent, p);
        by_root.entry(r).or_default().push(p);
    }
    by_root.into_values().collect()
}

/// Enumerate the automorphism group, failing if it has more than `max_order` elements.
pub fn automorphism_group_bounded(sys: &TripleSystem, max_order: u64) -> Result<AutGroup> {
    let inv = Invariants::new(sys);
    let mut search = Search::new(sys, &inv, sys, &inv);
    let mut elements = Vec::new();
    let mut over = false;
    search.run(&mut |m| {
        if elements.len() as u64 >= max_order {
            over = true;
            return false;
        }
        elements.push(Permutation(m.to_vec()));
        true
    });
    if over {
        return Err(BudgetExceeded {
            what: "automorphism group enumeration",
            limit: max_order,
        }
        .into());
    }
    elements.sort();
    // Identity first, the rest in lexicographic order of images.
    if let Some(i) = elements.iter().position(Permutation::is_identity) {
        let id = elements.remove(i);
        elements.insert(0, id);
    }
    let v = sys.order();
    let generators = greedy_generators(v, &elements[1..]);
    let orbits = orbits_of(v, &generators);
    Ok(AutGroup {
        elements,
        generators,
        orbits,
    })
}

pub fn automorphism_group(sys: &TripleSystem) -> AutGroup {
    automorphism_group_bounded(sys, u64::MAX).expect("unbounded enumeration")
}

/// An isomorphism carrying `a` onto `b`, if one exists.
pub fn are_isomorphic(a: &TripleSystem, b: &TripleSystem) -> Option<Permutation> {
    if a.order() != b.order() {
        return None;
    }
    let (ia, ib) = (Invariants::new(a), Invariants::new(b));
    if ia.sorted_points() != ib.sorted_points() {
        return None;
    }
    let mut search = Search::new(a, &ia, b, &ib);
    let mut witness = None;
    search.run(&mut |m| {
        witness = Some(Permutation(m.to_vec()));
        false
    });
    debug_assert!(witness.as_ref().is_none_or(|w| apply(a, w) == *b));
    witness
}

/// Whether some automorphism has the given cycle type (lengths including fixed points).
pub fn has_automorphism_of_cycle_type(sys: &TripleSystem, cycle_type: &[usize]) -> Result<bool> {
    if cycle_type.iter().sum::<usize>() != sys.order() {
        return Err(StsError::InvalidArgument(format!(
            "cycle type {cycle_type:?} does not partition {} points",
            sys.order()
        )));
    }
    Ok(automorphism_group_bounded(sys, DEFAULT_MAX_ORDER)?.contains_cycle_type(cycle_type))
}

/// Expand `[(length, multiplicity)]` into a flat cycle type.
pub fn cycle_type(parts: &[(usize, usize)]) -> Vec<usize> {
    let mut out: Vec<usize> = parts
        .iter()
        .flat_map(|&(len, k)| std::iter::repeat_n(len, k))
        .collect();
    out.sort_unstable();
    out
}
