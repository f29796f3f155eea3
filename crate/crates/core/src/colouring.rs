//! Weak colourings: no block is monochromatic.
//!
//! One backtracking engine serves every question here. Colours are introduced
//! in order of first use, so each colouring is visited once up to renaming of
//! colours. Points are chosen by fewest remaining colours, and optional caps
//! on the sorted class sizes restrict the search to a single profile.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bits::{ones, PointSet};
use crate::codec::{symbol_value, value_symbol};
use crate::error::{BudgetExceeded, Result, StsError};
use crate::resolvability::parallel_classes;
use crate::structure::max_independent_set;
use crate::system::{Point, TripleSystem};

const UNCOLOURED: u8 = u8::MAX;

/// Colour of every point, colours numbered from 0 in order of first use.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Colouring {
    colours: Vec<u8>,
    m: usize,
}

impl Colouring {
    pub fn new(colours: Vec<u8>) -> Self {
        let m = colours.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        Self { colours, m }
    }

    pub fn colours(&self) -> &[u8] {
        &self.colours
    }

    pub fn colour(&self, p: Point) -> u8 {
        self.colours[p as usize]
    }

    pub fn num_colours(&self) -> usize {
        self.m
    }

    pub fn class(&self, c: u8) -> PointSet {
        self.colours
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x == c)
            .fold(0, |m, (p, _)| m | 1 << p)
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.m];
        for &c in &self.colours {
            sizes[c as usize] += 1;
        }
        sizes
    }

    pub fn profile(&self) -> ColourProfile {
        ColourProfile::new(self.class_sizes())
    }

    /// No block is monochromatic and every colour is used.
    pub fn is_proper(&self, sys: &TripleSystem) -> bool {
        self.colours.len() == sys.order()
            && self.class_sizes().iter().all(|&n| n > 0)
            && sys.blocks().iter().all(|t| {
                let [a, b, c] = t.points().map(|p| self.colour(p));
                !(a == b && b == c)
            })
    }
}

impl fmt::Display for Colouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.colours.iter().try_for_each(|&c| write!(f, "{}", value_symbol(c as usize)))
    }
}

impl FromStr for Colouring {
    type Err = StsError;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|ch| {
                symbol_value(ch).map(|c| c as u8).ok_or_else(|| StsError::Parse {
                    line: 1,
                    reason: format!("invalid colour {ch:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

/// Colour class sizes, sorted non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ColourProfile(Vec<usize>);

impl ColourProfile {
    pub fn new(mut sizes: Vec<usize>) -> Self {
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Self(sizes)
    }

    /// Sizes as equal as possible: each `v / m` or one more.
    pub fn equitable(v: usize, m: usize) -> Self {
        Self::new((0..m).map(|i| v / m + usize::from(i < v % m)).collect())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_equitable(&self) -> bool {
        match (self.0.first(), self.0.last()) {
            (Some(a), Some(b)) => a - b <= 1,
            _ => true,
        }
    }
}

impl fmt::Display for ColourProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|n| n.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for ColourProfile {
    type Err = StsError;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|p| {
                p.trim().parse::<usize>().map_err(|_| StsError::InvalidArgument(format!("bad profile {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

struct Search<'a, F> {
    sys: &'a TripleSystem,
    m: usize,
    caps: Option<Vec<usize>>,
    colour: Vec<u8>,
    class: Vec<PointSet>,
    forbidden: Vec<PointSet>,
    used: usize,
    rainbow_partners: Vec<PointSet>,
    nodes: u64,
    budget: u64,
    stopped: bool,
    visit: F,
}

impl<'a, F: FnMut(&[u8]) -> bool> Search<'a, F> {
    fn new(sys: &'a TripleSystem, m: usize, profile: Option<&ColourProfile>, visit: F) -> Self {
        Self {
            sys,
            m,
            caps: profile.map(|p| p.0.clone()),
            colour: vec![UNCOLOURED; sys.order()],
            class: vec![0; m],
            forbidden: vec![0; m],
            used: 0,
            rainbow_partners: vec![0; sys.order()],
            nodes: 0,
            budget: u64::MAX,
            stopped: false,
            visit,
        }
    }

    fn require_rainbow(&mut self, blocks: &[usize]) {
        for &b in blocks {
            let mask = self.sys.block(b).mask();
            for p in self.sys.block(b).points() {
                self.rainbow_partners[p as usize] |= mask & !(1 << p);
            }
        }
    }

    fn allowed(&self, p: usize) -> Vec<usize> {
        let bit = 1u64 << p;
        let mut out: Vec<usize> = (0..self.used)
            .filter(|&c| self.forbidden[c] & bit == 0 && self.class[c] & self.rainbow_partners[p] == 0)
            .collect();
        if self.used < self.m {
            out.push(self.used);
        }
        out
    }

    fn fits_caps(&self, c: usize) -> bool {
        let Some(caps) = &self.caps else { return true };
        let mut sizes: Vec<usize> = self.class.iter().map(|s| s.count_ones() as usize).collect();
        sizes[c] += 1;
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes.iter().zip(caps).all(|(s, cap)| s <= cap)
    }

    fn run(&mut self) -> std::result::Result<(), BudgetExceeded> {
        let v = self.sys.order();
        if self.m == 0 || self.m > v || self.caps.as_ref().is_some_and(|c| c.len() != self.m || c.iter().sum::<usize>() != v) {
            return Ok(());
        }
        self.search(v)
    }

    fn search(&mut self, remaining: usize) -> std::result::Result<(), BudgetExceeded> {
        if remaining == 0 {
            debug_assert_eq!(self.used, self.m);
            self.stopped = (self.visit)(&self.colour);
            return Ok(());
        }
        if self.m - self.used > remaining {
            return Ok(());
        }
        let mut best: Option<(usize, Vec<usize>)> = None;
        for p in 0..self.sys.order() {
            if self.colour[p] != UNCOLOURED {
                continue;
            }
            let a = self.allowed(p);
            if a.is_empty() {
                return Ok(());
            }
            if best.as_ref().is_none_or(|(_, b)| a.len() < b.len()) {
                best = Some((p, a));
            }
        }
        let (p, options) = best.expect("an uncoloured point remains");
        for c in options {
            if !self.fits_caps(c) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(BudgetExceeded {
                    what: "colouring search nodes",
                    limit: self.budget,
                });
            }
            let saved = self.forbidden[c];
            for q in ones(self.class[c]) {
                self.forbidden[c] |= 1 << self.sys.third(p as Point, q as Point);
            }
            self.class[c] |= 1 << p;
            self.colour[p] = c as u8;
            let fresh = c == self.used;
            if fresh {
                self.used += 1;
            }
            let r = self.search(remaining - 1);
            if fresh {
                self.used -= 1;
            }
            self.colour[p] = UNCOLOURED;
            self.class[c] &= !(1 << p);
            self.forbidden[c] = saved;
            r?;
            if self.stopped {
                return Ok(());
            }
        }
        Ok(())
    }
}

/// First proper `m`-colouring found, optionally with the given class sizes.
pub fn find_colouring(sys: &TripleSystem, m: usize, profile: Option<&ColourProfile>) -> Option<Colouring> {
    let mut found = None;
    let mut s = Search::new(sys, m, profile, |c: &[u8]| {
        found = Some(Colouring::new(c.to_vec()));
        true
    });
    s.run().expect("unbudgeted search");
    found
}

/// Visit every proper `m`-colouring once up to renaming colours; the visitor
/// returns `true` to stop. Returns the number visited.
pub fn enumerate_colourings<F>(
    sys: &TripleSystem,
    m: usize,
    profile: Option<&ColourProfile>,
    budget: Option<u64>,
    mut visit: F,
) -> std::result::Result<u64, BudgetExceeded>
where
    F: FnMut(&Colouring) -> bool,
{
    let mut n = 0u64;
    let mut s = Search::new(sys, m, profile, |c: &[u8]| {
        n += 1;
        visit(&Colouring::new(c.to_vec()))
    });
    s.budget = budget.unwrap_or(u64::MAX);
    s.run()?;
    drop(s);
    Ok(n)
}

pub fn chromatic_number(sys: &TripleSystem) -> usize {
    if sys.num_blocks() == 0 {
        return sys.order().min(1);
    }
    (2..=sys.order())
        .find(|&m| find_colouring(sys, m, None).is_some())
        .expect("colouring every point differently is proper")
}

/// Partitions of `v` into `m` positive parts, none larger than `max_part`.
fn partitions(v: usize, m: usize, max_part: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, parts: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let lo = rest.div_ceil(parts).max(1);
        for a in (lo..=cap.min(rest)).rev() {
            cur.push(a);
            go(rest - a, parts - 1, a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(v, m, max_part, &mut Vec::new(), &mut out);
    out
}

/// Every class-size profile realised by some proper `m`-colouring.
pub fn achievable_profiles(sys: &TripleSystem, m: usize) -> BTreeSet<ColourProfile> {
    let alpha = max_independent_set(sys).size;
    partitions(sys.order(), m, alpha)
        .into_iter()
        .map(ColourProfile)
        .filter(|p| find_colouring(sys, m, Some(p)).is_some())
        .collect()
}

/// `m`-colourable and every `m`-colouring equitable.
pub fn is_balanced(profiles: &BTreeSet<ColourProfile>) -> bool {
    !profiles.is_empty() && profiles.iter().all(ColourProfile::is_equitable)
}

/// Blocks meeting three different colour classes.
pub fn rainbow_blocks(sys: &TripleSystem, c: &Colouring) -> Vec<usize> {
    (0..sys.num_blocks())
        .filter(|&b| {
            let [x, y, z] = sys.block(b).points().map(|p| c.colour(p));
            x != y && y != z && x != z
        })
        .collect()
}

fn pairwise_disjoint(sys: &TripleSystem, blocks: &[usize]) -> bool {
    let mut seen = 0u64;
    blocks.iter().all(|&b| {
        let m = sys.block(b).mask();
        let ok = seen & m == 0;
        seen |= m;
        ok
    })
}

/// Outcome of the two equitable 3-colouring searches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RainbowAnalysis {
    /// Some equitable colouring has a parallel class as its rainbow set.
    pub parallel: std::result::Result<bool, BudgetExceeded>,
    /// Some equitable colouring has a rainbow set that is not a parallel class.
    pub non_parallel: std::result::Result<bool, BudgetExceeded>,
}

/// Both flags for equitable 3-colourings; each search gets its own node budget.
pub fn rainbow_parallel_analysis(sys: &TripleSystem, budget: u64) -> RainbowAnalysis {
    let v = sys.order();
    if v % 3 != 0 || v == 0 {
        return RainbowAnalysis {
            parallel: Ok(false),
            non_parallel: Ok(false),
        };
    }
    let eq = ColourProfile::equitable(v, 3);

    let parallel = (|| {
        let classes = parallel_classes(sys).unwrap_or_default();
        let mut nodes = 0u64;
        for pc in &classes {
            let mut hit = false;
            let mut s = Search::new(sys, 3, Some(&eq), |_: &[u8]| {
                hit = true;
                true
            });
            s.require_rainbow(&pc.blocks);
            s.budget = budget.saturating_sub(nodes);
            let r = s.run();
            nodes += s.nodes;
            drop(s);
            r.map_err(|_| BudgetExceeded {
                what: "rainbow parallel class search",
                limit: budget,
            })?;
            if hit {
                return Ok(true);
            }
        }
        Ok(false)
    })();

    let mut found = false;
    let non_parallel = enumerate_colourings(sys, 3, Some(&eq), Some(budget), |c| {
        let rb = rainbow_blocks(sys, c);
        debug_assert_eq!(rb.len(), v / 3);
        found = !pairwise_disjoint(sys, &rb);
        found
    })
    .map(|_| found);

    RainbowAnalysis { parallel, non_parallel }
}
