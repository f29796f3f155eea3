//! The triple system data model.

use std::fmt;

use serde::Serialize;

use crate::bits::PointSet;
use crate::error::{Result, StsError};
use crate::MAX_ORDER;

pub type Point = u8;

const NO_BLOCK: u16 = u16::MAX;

/// A block: three distinct points stored in increasing order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Triple([Point; 3]);

impl Triple {
    pub fn new(a: usize, b: usize, c: usize) -> Result<Self> {
        let mut p = [a, b, c];
        p.sort_unstable();
        if p[0] == p[1] || p[1] == p[2] {
            return Err(StsError::DegenerateTriple(p[1]));
        }
        if p[2] > Point::MAX as usize {
            return Err(StsError::PointOutOfRange { point: p[2], v: MAX_ORDER });
        }
        Ok(Self([p[0] as Point, p[1] as Point, p[2] as Point]))
    }

    pub fn points(&self) -> [Point; 3] {
        self.0
    }

    pub fn smallest(&self) -> Point {
        self.0[0]
    }

    pub fn largest(&self) -> Point {
        self.0[2]
    }

    pub fn contains(&self, p: Point) -> bool {
        self.0.contains(&p)
    }

    pub fn mask(&self) -> PointSet {
        self.0.iter().fold(0, |m, &p| m | 1 << p)
    }

    /// The three unordered pairs of the block.
    pub fn pairs(&self) -> [(Point, Point); 3] {
        let [a, b, c] = self.0;
        [(a, b), (a, c), (b, c)]
    }

    /// The point of the block other than `p` and `q`. Both must lie in the block.
    pub fn third(&self, p: Point, q: Point) -> Point {
        let [a, b, c] = self.0;
        a ^ b ^ c ^ p ^ q
    }

    pub fn map(&self, perm: &[Point]) -> Self {
        let mut p = self.0.map(|x| perm[x as usize]);
        p.sort_unstable();
        Self(p)
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "{{{a},{b},{c}}}")
    }
}

/// Whether a Steiner triple system of order `v` exists and fits the bitset layout.
pub fn is_admissible(v: usize) -> bool {
    v <= MAX_ORDER && (v % 6 == 1 || v % 6 == 3)
}

pub fn block_count(v: usize) -> usize {
    v * v.saturating_sub(1) / 6
}

/// A Steiner triple system with its blocks in lexicographic order.
///
/// Construction always validates that every pair of points lies in exactly one
/// block, so a value of this type is a genuine STS. Block indices used anywhere
/// else in the crate refer to positions in [`TripleSystem::blocks`].
#[derive(Clone)]
pub struct TripleSystem {
    v: usize,
    blocks: Vec<Triple>,
    pair_block: Vec<u16>,
    point_blocks: Vec<Vec<usize>>,
}

impl TripleSystem {
    /// Validate a family of triples and index it.
    pub fn from_triples(v: usize, triples: impl IntoIterator<Item = Triple>) -> Result<Self> {
        if !is_admissible(v) {
            return Err(StsError::InvalidOrder(v));
        }
        let mut blocks: Vec<Triple> = triples.into_iter().collect();
        if let Some(t) = blocks.iter().find(|t| t.largest() as usize >= v) {
            return Err(StsError::PointOutOfRange { point: t.largest() as usize, v });
        }
        blocks.sort_unstable();

        let mut pair_block = vec![NO_BLOCK; v * v];
        for (i, t) in blocks.iter().enumerate() {
            for (x, y) in t.pairs() {
                let (x, y) = (x as usize, y as usize);
                let slot = pair_block[x * v + y];
                if slot != NO_BLOCK {
                    return Err(StsError::DuplicatePair {
                        x,
                        y,
                        first: blocks[slot as usize],
                        second: *t,
                    });
                }
                pair_block[x * v + y] = i as u16;
                pair_block[y * v + x] = i as u16;
            }
        }
        for x in 0..v {
            for y in x + 1..v {
                if pair_block[x * v + y] == NO_BLOCK {
                    return Err(StsError::MissingPair { x, y });
                }
            }
        }

        let mut point_blocks = vec![Vec::with_capacity((v - 1) / 2); v];
        for (i, t) in blocks.iter().enumerate() {
            for p in t.points() {
                point_blocks[p as usize].push(i);
            }
        }
        Ok(Self {
            v,
            blocks,
            pair_block,
            point_blocks,
        })
    }

    /// Convenience constructor from raw point triples.
    pub fn from_raw(v: usize, triples: &[[usize; 3]]) -> Result<Self> {
        let ts = triples
            .iter()
            .map(|&[a, b, c]| Triple::new(a, b, c))
            .collect::<Result<Vec<_>>>()?;
        Self::from_triples(v, ts)
    }

    pub fn order(&self) -> usize {
        self.v
    }

    pub fn blocks(&self) -> &[Triple] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> Triple {
        self.blocks[i]
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Number of blocks through each point, `(v - 1) / 2`.
    pub fn replication(&self) -> usize {
        (self.v - 1) / 2
    }

    /// Index of the block containing the distinct points `x` and `y`.
    pub fn block_of(&self, x: Point, y: Point) -> usize {
        debug_assert_ne!(x, y);
        self.pair_block[x as usize * self.v + y as usize] as usize
    }

    /// The point completing `{x, y}` to a block.
    pub fn third(&self, x: Point, y: Point) -> Point {
        self.blocks[self.block_of(x, y)].third(x, y)
    }

    /// Indices of the blocks through `p`, in increasing order.
    pub fn blocks_through(&self, p: Point) -> &[usize] {
        &self.point_blocks[p as usize]
    }

    pub fn all_points(&self) -> PointSet {
        if self.v == 64 {
            u64::MAX
        } else {
            (1u64 << self.v) - 1
        }
    }

    /// Find the index of a block, if it belongs to the system.
    pub fn index_of(&self, t: &Triple) -> Option<usize> {
        let [a, b, c] = t.points();
        if c as usize >= self.v {
            return None;
        }
        let i = self.block_of(a, b);
        (self.blocks[i].third(a, b) == c).then_some(i)
    }

    /// Image of the system under a point relabelling `p -> perm[p]`.
    pub fn relabel(&self, perm: &[Point]) -> Self {
        assert_eq!(perm.len(), self.v, "permutation length must equal the order");
        let blocks = self.blocks.iter().map(|t| t.map(perm));
        Self::from_triples(self.v, blocks).expect("a bijective relabelling preserves validity")
    }

    /// The block permutation induced by a point automorphism.
    pub fn block_image(&self, perm: &[Point]) -> Vec<usize> {
        self.blocks
            .iter()
            .map(|t| {
                let [a, b, _] = t.map(perm).points();
                self.block_of(a, b)
            })
            .collect()
    }

    /// Whether the given point set contains no block.
    pub fn is_independent(&self, set: PointSet) -> bool {
        self.blocks.iter().all(|t| t.mask() & !set != 0)
    }
}

impl PartialEq for TripleSystem {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v && self.blocks == other.blocks
    }
}

impl Eq for TripleSystem {}

impl std::hash::Hash for TripleSystem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.v.hash(state);
        self.blocks.hash(state);
    }
}

impl fmt::Debug for TripleSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TripleSystem")
            .field("v", &self.v)
            .field("blocks", &self.blocks)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano_raw() -> Vec<[usize; 3]> {
        (0..7).map(|i| [i, (i + 1) % 7, (i + 3) % 7]).collect()
    }

    fn ag23_raw() -> Vec<[usize; 3]> {
        // Points (x, y) of Z_3^2 as 3x + y; the lines of the affine plane.
        let pt = |x: usize, y: usize| 3 * (x % 3) + (y % 3);
        let mut lines = Vec::new();
        for (dx, dy) in [(0, 1), (1, 0), (1, 1), (1, 2)] {
            let mut seen = std::collections::BTreeSet::new();
            for x in 0..3 {
                for y in 0..3 {
                    let mut l = [pt(x, y), pt(x + dx, y + dy), pt(x + 2 * dx, y + 2 * dy)];
                    l.sort();
                    seen.insert(l);
                }
            }
            lines.extend(seen);
        }
        lines
    }

    #[test]
    fn fano_is_valid() {
        let s = TripleSystem::from_raw(7, &fano_raw()).unwrap();
        assert_eq!(s.num_blocks(), 7);
        assert_eq!(s.block(0).points(), [0, 1, 3]);
        for p in 0..7 {
            assert_eq!(s.blocks_through(p).len(), 3);
        }
        assert_eq!(s.third(0, 1), 3);
    }

    #[test]
    fn affine_plane_is_valid() {
        let lines = ag23_raw();
        assert_eq!(lines.len(), 12);
        let s = TripleSystem::from_raw(9, &lines).unwrap();
        for p in 0..9 {
            assert_eq!(s.blocks_through(p).len(), 4);
        }
    }

    #[test]
    fn repeated_block_is_a_duplicate_pair() {
        let mut raw = fano_raw();
        raw.push(raw[2]);
        match TripleSystem::from_raw(7, &raw) {
            Err(StsError::DuplicatePair { first, second, .. }) => assert_eq!(first, second),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn missing_and_out_of_range() {
        let raw = fano_raw();
        assert!(matches!(
            TripleSystem::from_raw(7, &raw[..6]),
            Err(StsError::MissingPair { .. })
        ));
        let mut bad = raw.clone();
        bad[0] = [0, 1, 7];
        assert!(matches!(
            TripleSystem::from_raw(7, &bad),
            Err(StsError::PointOutOfRange { point: 7, v: 7 })
        ));
        assert!(matches!(TripleSystem::from_raw(8, &raw), Err(StsError::InvalidOrder(8))));
        assert!(matches!(Triple::new(1, 1, 2), Err(StsError::DegenerateTriple(1))));
    }

    #[test]
    fn block_image_and_index() {
        let s = TripleSystem::from_raw(7, &fano_raw()).unwrap();
        let shift: Vec<Point> = (0..7).map(|i| ((i + 1) % 7) as Point).collect();
        assert_eq!(s.relabel(&shift), s);
        let img = s.block_image(&shift);
        let mut sorted = img.clone();
        sorted.sort();
        assert_eq!(sorted, (0..7).collect::<Vec<_>>());
        assert_eq!(s.index_of(&Triple::new(0, 1, 3).unwrap()), Some(0));
        assert_eq!(s.index_of(&Triple::new(0, 1, 2).unwrap()), None);
    }
}
