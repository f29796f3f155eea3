//! Compact notation: one symbol per block, naming its largest point.
//!
//! Blocks are listed in lexicographic order. The two smaller points of each
//! block are implicit: they form the least pair not yet covered by an earlier
//! block. Points 0-9 are written as digits and 10, 11, ... as `a`, `b`, ...

use std::fmt;
use std::str::FromStr;

use crate::error::{Result, StsError};
use crate::system::{block_count, is_admissible, Point, Triple, TripleSystem};

pub fn symbol_value(c: char) -> Option<usize> {
    c.to_digit(36).filter(|_| !c.is_ascii_uppercase()).map(|d| d as usize)
}

pub fn value_symbol(x: usize) -> char {
    std::char::from_digit(x as u32, 36).expect("point fits the compact alphabet")
}

/// The order whose block count equals `len`, if any.
pub fn order_for_length(len: usize) -> Option<usize> {
    (0..=crate::MAX_ORDER).find(|&v| is_admissible(v) && block_count(v) == len)
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CompactCode(String);

impl CompactCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn decode(&self, v: usize) -> Result<TripleSystem> {
        decode_compact(&self.0, v)
    }
}

impl fmt::Display for CompactCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for CompactCode {
    type Err = StsError;

    fn from_str(s: &str) -> Result<Self> {
        if let Some((i, c)) = s.char_indices().find(|&(_, c)| symbol_value(c).is_none()) {
            return Err(StsError::MalformedCode {
                step: i + 1,
                reason: format!("invalid symbol {c:?}"),
            });
        }
        Ok(Self(s.to_owned()))
    }
}

/// Walks unordered pairs in lexicographic order, skipping covered ones.
struct PairCursor {
    v: usize,
    x: usize,
    y: usize,
    covered: Vec<bool>,
}

impl PairCursor {
    fn new(v: usize) -> Self {
        Self {
            v,
            x: 0,
            y: 1,
            covered: vec![false; v * v],
        }
    }

    fn is_covered(&self, a: usize, b: usize) -> bool {
        self.covered[a * self.v + b]
    }

    fn cover(&mut self, a: usize, b: usize) {
        self.covered[a * self.v + b] = true;
        self.covered[b * self.v + a] = true;
    }

    /// Least uncovered pair, or `None` once every pair is covered.
    fn least_uncovered(&mut self) -> Option<(usize, usize)> {
        while self.x + 1 < self.v {
            if self.y >= self.v {
                self.x += 1;
                self.y = self.x + 1;
                continue;
            }
            if !self.is_covered(self.x, self.y) {
                return Some((self.x, self.y));
            }
            self.y += 1;
        }
        None
    }
}

pub fn decode_compact(code: &str, v: usize) -> Result<TripleSystem> {
    if !is_admissible(v) {
        return Err(StsError::InvalidOrder(v));
    }
    let mut cursor = PairCursor::new(v);
    let mut blocks = Vec::with_capacity(block_count(v));
    let mut symbols = 0;
    for (i, c) in code.chars().enumerate() {
        let step = i + 1;
        let malformed = |reason: String| StsError::MalformedCode { step, reason };
        let (x, y) = cursor
            .least_uncovered()
            .ok_or_else(|| malformed("every pair is already covered".into()))?;
        let z = symbol_value(c).ok_or_else(|| malformed(format!("invalid symbol {c:?}")))?;
        if z >= v {
            return Err(malformed(format!("symbol {c:?} names point {z}, order is {v}")));
        }
        if z <= y {
            return Err(malformed(format!(
                "symbol {c:?} must exceed {y} to complete pair {{{x},{y}}}"
            )));
        }
        for w in [x, y] {
            if cursor.is_covered(w, z) {
                return Err(malformed(format!("pair {{{w},{z}}} is already covered")));
            }
        }
        cursor.cover(x, y);
        cursor.cover(x, z);
        cursor.cover(y, z);
        blocks.push(Triple::new(x, y, z)?);
        symbols = step;
    }
    if let Some((x, y)) = cursor.least_uncovered() {
        return Err(StsError::IncompleteSystem {
            symbols,
            step: symbols + 1,
            x,
            y,
        });
    }
    TripleSystem::from_triples(v, blocks)
}

pub fn encode_compact(sys: &TripleSystem) -> CompactCode {
    let v = sys.order();
    let mut cursor = PairCursor::new(v);
    let mut out = String::with_capacity(sys.num_blocks());
    while let Some((x, y)) = cursor.least_uncovered() {
        let t = sys.block(sys.block_of(x as Point, y as Point));
        for (a, b) in t.pairs() {
            cursor.cover(a as usize, b as usize);
        }
        out.push(value_symbol(t.largest() as usize));
    }
    CompactCode(out)
}
