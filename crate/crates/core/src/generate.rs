//! Constructions: cyclic development of base blocks, direct products, and the
//! small classical systems used as references.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Result, StsError};
use crate::system::{Point, Triple, TripleSystem};

/// Base blocks over `Z_v`, developed under `i -> i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSpec {
    pub modulus: usize,
    pub base_blocks: Vec<[usize; 3]>,
}

impl CyclicSpec {
    pub fn new(modulus: usize, base_blocks: &[[usize; 3]]) -> Self {
        Self {
            modulus,
            base_blocks: base_blocks.to_vec(),
        }
    }

    pub fn generate(&self) -> Result<TripleSystem> {
        generate_cyclic(self)
    }
}

impl fmt::Display for CyclicSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cyclic v={} ", self.modulus)?;
        for (i, [a, b, c]) in self.base_blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{a},{b},{c}")?;
        }
        Ok(())
    }
}

impl FromStr for CyclicSpec {
    type Err = StsError;

    /// Parses `cyclic v=21 0,1,5;0,2,10;0,3,9;0,7,14`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: String| StsError::Parse { line: 1, reason };
        let mut words = s.split_whitespace();
        if words.next() != Some("cyclic") {
            return Err(err("expected `cyclic v=N b;b;...`".into()));
        }
        let modulus = words
            .next()
            .and_then(|w| w.strip_prefix("v="))
            .and_then(|n| n.parse().ok())
            .ok_or_else(|| err("expected `v=N` after `cyclic`".into()))?;
        let body: String = words.collect();
        let mut base_blocks = Vec::new();
        for part in body.split(';').filter(|p| !p.is_empty()) {
            let nums: Vec<usize> = part
                .split(',')
                .map(|n| n.trim().parse().map_err(|_| err(format!("bad number in {part:?}"))))
                .collect::<Result<_>>()?;
            let block: [usize; 3] = nums
                .try_into()
                .map_err(|_| err(format!("base block {part:?} must have three points")))?;
            base_blocks.push(block);
        }
        Ok(Self { modulus, base_blocks })
    }
}

/// Develop base blocks modulo `v`; repeated blocks from short orbits are kept once.
pub fn generate_cyclic(spec: &CyclicSpec) -> Result<TripleSystem> {
    let v = spec.modulus;
    if v == 0 {
        return Err(StsError::InvalidBaseBlocks("modulus must be positive".into()));
    }
    let mut blocks = BTreeSet::new();
    for base in &spec.base_blocks {
        for shift in 0..v {
            let [a, b, c] = base.map(|x| (x + shift) % v);
            let t = Triple::new(a, b, c)
                .map_err(|e| StsError::InvalidBaseBlocks(format!("base block {base:?}: {e}")))?;
            blocks.insert(t);
        }
    }
    TripleSystem::from_triples(v, blocks).map_err(|e| StsError::InvalidBaseBlocks(e.to_string()))
}

/// Direct product of two systems on the point set `A x B`, with `(x, p)` numbered `x * |B| + p`.
///
/// Blocks are the copies of `A` on each fibre `p = q = r`, the copies of `B`
/// on each fibre `x = y = z`, and for every pair of blocks from `A` and `B`
/// all six ways of aligning their points.
pub fn direct_product(a: &TripleSystem, b: &TripleSystem) -> Result<TripleSystem> {
    let (va, vb) = (a.order(), b.order());
    let pt = |x: Point, p: Point| x as usize * vb + p as usize;
    let mut blocks = Vec::new();
    for t in a.blocks() {
        let [x, y, z] = t.points();
        for p in 0..vb as Point {
            blocks.push(Triple::new(pt(x, p), pt(y, p), pt(z, p))?);
        }
    }
    for x in 0..va as Point {
        for t in b.blocks() {
            let [p, q, r] = t.points();
            blocks.push(Triple::new(pt(x, p), pt(x, q), pt(x, r))?);
        }
    }
    const ALIGNMENTS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for ta in a.blocks() {
        let xs = ta.points();
        for tb in b.blocks() {
            let ps = tb.points();
            for s in ALIGNMENTS {
                blocks.push(Triple::new(
                    pt(xs[0], ps[s[0]]),
                    pt(xs[1], ps[s[1]]),
                    pt(xs[2], ps[s[2]]),
                )?);
            }
        }
    }
    TripleSystem::from_triples(va * vb, blocks)
}

/// The unique STS(3): a single block.
pub fn trivial() -> TripleSystem {
    TripleSystem::from_raw(3, &[[0, 1, 2]]).expect("valid")
}

/// The Fano plane, developed from `{0,1,3}` mod 7.
pub fn fano() -> TripleSystem {
    generate_cyclic(&CyclicSpec::new(7, &[[0, 1, 3]])).expect("valid")
}

/// AG(2,3): the lines of the affine plane over `Z_3`, point `(x, y)` numbered `3x + y`.
pub fn affine_plane() -> TripleSystem {
    let pt = |x: usize, y: usize| 3 * (x % 3) + (y % 3);
    let mut lines = BTreeSet::new();
    for (dx, dy) in [(0, 1), (1, 0), (1, 1), (1, 2)] {
        for x in 0..3 {
            for y in 0..3 {
                let t = Triple::new(pt(x, y), pt(x + dx, y + dy), pt(x + 2 * dx, y + 2 * dy));
                lines.insert(t.expect("distinct points"));
            }
        }
    }
    TripleSystem::from_triples(9, lines).expect("valid")
}

/// The cyclic STS(13) developed from `{0,1,4}` and `{0,2,7}`.
pub fn cyclic13() -> TripleSystem {
    generate_cyclic(&CyclicSpec::new(13, &[[0, 1, 4], [0, 2, 7]])).expect("valid")
}

/// PG(3,2): nonzero vectors of `F_2^4`, point `i` standing for the vector `i + 1`.
pub fn projective_space() -> TripleSystem {
    let mut lines = BTreeSet::new();
    for a in 1..16usize {
        for b in a + 1..16 {
            let c = a ^ b;
            lines.insert(Triple::new(a - 1, b - 1, c - 1).expect("distinct points"));
        }
    }
    TripleSystem::from_triples(15, lines).expect("valid")
}
