//! Parallel classes, resolutions and Kirkman triple systems.
//!
//! Parallel classes are exact covers of the points by blocks; resolutions
//! are exact covers of the blocks by parallel classes. Both levels run on the
//! same exact cover engine.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::bits::BlockSet;
use crate::error::{BudgetExceeded, Result, StsError};
use crate::exact_cover::{enumerate_covers, ExactCoverInstance};
use crate::isomorphism::{automorphism_group_bounded, AutGroup, DEFAULT_MAX_ORDER};
use crate::system::TripleSystem;

/// Default number of resolution pairs examined by the double-resolvability scans.
pub const DEFAULT_PAIR_BUDGET: u64 = 100_000_000;

/// `v / 3` pairwise disjoint blocks covering every point, as sorted block indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ParallelClass {
    pub blocks: Vec<usize>,
}

impl ParallelClass {
    pub fn block_set(&self) -> BlockSet {
        self.blocks.iter().copied().collect()
    }

    pub fn is_valid(&self, sys: &TripleSystem) -> bool {
        let mut seen = 0u64;
        for &b in &self.blocks {
            let m = sys.block(b).mask();
            if seen & m != 0 {
                return false;
            }
            seen |= m;
        }
        seen == sys.all_points()
    }
}

/// A partition of all blocks into parallel classes, classes sorted by least block.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Resolution {
    pub classes: Vec<ParallelClass>,
}

impl Resolution {
    fn from_classes(mut classes: Vec<ParallelClass>) -> Self {
        classes.sort();
        Self { classes }
    }

    pub fn is_valid(&self, sys: &TripleSystem) -> bool {
        let mut seen = BlockSet::new();
        for c in &self.classes {
            if !c.is_valid(sys) {
                return false;
            }
            let s = c.block_set();
            if seen.intersection_len(&s) != 0 {
                return false;
            }
            seen = seen.union(&s);
        }
        seen.len() == sys.num_blocks()
    }

    fn key(&self) -> Vec<BlockSet> {
        let mut k: Vec<BlockSet> = self.classes.iter().map(ParallelClass::block_set).collect();
        k.sort();
        k
    }

    /// Class index of every block.
    fn class_of_block(&self, num_blocks: usize) -> Vec<u8> {
        let mut out = vec![u8::MAX; num_blocks];
        for (i, c) in self.classes.iter().enumerate() {
            for &b in &c.blocks {
                out[b] = i as u8;
            }
        }
        out
    }
}

/// Semicolon-separated classes of comma-separated block indices.
impl fmt::Display for Resolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.classes.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            let parts: Vec<String> = c.blocks.iter().map(|b| b.to_string()).collect();
            f.write_str(&parts.join(","))?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Resolution {
    type Err = StsError;

    fn from_str(s: &str) -> Result<Self> {
        let classes = s
            .trim()
            .split(';')
            .map(|part| {
                let mut blocks = part
                    .split(',')
                    .map(|b| b.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| StsError::Parse {
                        line: 1,
                        reason: format!("bad class {part:?}"),
                    })?;
                blocks.sort_unstable();
                Ok(ParallelClass { blocks })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_classes(classes))
    }
}

fn require_resolvable_order(sys: &TripleSystem) -> Result<()> {
    if sys.order() % 6 != 3 {
        return Err(StsError::InvalidArgument(format!(
            "parallel classes need v = 3 mod 6, got {}",
            sys.order()
        )));
    }
    Ok(())
}

pub fn parallel_classes(sys: &TripleSystem) -> Result<Vec<ParallelClass>> {
    require_resolvable_order(sys)?;
    let rows = sys
        .blocks()
        .iter()
        .map(|t| t.points().iter().map(|&p| p as usize).collect())
        .collect();
    let inst = ExactCoverInstance::new(sys.order(), rows)?;
    let mut out = Vec::new();
    enumerate_covers(&inst, None, |s| out.push(ParallelClass { blocks: s.rows.clone() }));
    out.sort();
    Ok(out)
}

fn class_cover_instance(sys: &TripleSystem, classes: &[ParallelClass]) -> Result<ExactCoverInstance> {
    ExactCoverInstance::new(sys.num_blocks(), classes.iter().map(|c| c.blocks.clone()).collect())
}

/// Resolutions built from a precomputed list of parallel classes.
pub fn resolutions_from(
    sys: &TripleSystem,
    classes: &[ParallelClass],
    limit: Option<usize>,
) -> Result<Vec<Resolution>> {
    let inst = class_cover_instance(sys, classes)?;
    let mut out = Vec::new();
    enumerate_covers(&inst, limit, |s| {
        out.push(Resolution::from_classes(
            s.rows.iter().map(|&r| classes[r].clone()).collect(),
        ))
    });
    out.sort();
    Ok(out)
}

pub fn resolutions(sys: &TripleSystem, limit: Option<usize>) -> Result<Vec<Resolution>> {
    let classes = parallel_classes(sys)?;
    resolutions_from(sys, &classes, limit)
}

pub fn count_resolutions(sys: &TripleSystem) -> Result<u64> {
    let classes = parallel_classes(sys)?;
    Ok(crate::exact_cover::count_covers(&class_cover_instance(sys, &classes)?))
}

fn map_key(key: &[BlockSet], block_perm: &[usize]) -> Vec<BlockSet> {
    let mut out: Vec<BlockSet> = key
        .iter()
        .map(|c| c.iter().map(|b| block_perm[b]).collect())
        .collect();
    out.sort();
    out
}

/// Orbit representatives of `res` under the group, one per orbit, in input order,
/// with the size of each orbit.
pub fn resolution_orbits(sys: &TripleSystem, res: &[Resolution], group: &AutGroup) -> Vec<(usize, usize)> {
    let block_perms: Vec<Vec<usize>> = group.elements().iter().map(|g| sys.block_image(g.images())).collect();
    let mut seen: HashSet<Vec<BlockSet>> = HashSet::new();
    let mut reps = Vec::new();
    for (i, r) in res.iter().enumerate() {
        let key = r.key();
        if seen.contains(&key) {
            continue;
        }
        let orbit: HashSet<Vec<BlockSet>> = block_perms.iter().map(|bp| map_key(&key, bp)).collect();
        reps.push((i, orbit.len()));
        seen.extend(orbit);
    }
    reps
}

/// Number of non-isomorphic Kirkman systems on this STS: orbits of its
/// resolutions under the automorphism group.
pub fn kts_count(sys: &TripleSystem) -> Result<u64> {
    if sys.order() % 6 != 3 {
        return Ok(0);
    }
    let res = resolutions(sys, None)?;
    if res.is_empty() {
        return Ok(0);
    }
    let group = automorphism_group_bounded(sys, DEFAULT_MAX_ORDER)?;
    Ok(resolution_orbits(sys, &res, &group).len() as u64)
}

/// Every class of `r1` shares at most one block with every class of `r2`.
pub fn is_orthogonal_pair(r1: &Resolution, r2: &Resolution) -> bool {
    let a: Vec<BlockSet> = r1.classes.iter().map(ParallelClass::block_set).collect();
    let b: Vec<BlockSet> = r2.classes.iter().map(ParallelClass::block_set).collect();
    a.iter().all(|x| b.iter().all(|y| x.intersection_len(y) <= 1))
}

/// Orthogonality test on block-to-class tables: each (class, class) cell is hit at most once.
fn orthogonal_tables(a: &[u8], b: &[u8], classes: usize) -> bool {
    let mut hit = vec![false; classes * classes];
    a.iter().zip(b).all(|(&i, &j)| !std::mem::replace(&mut hit[i as usize * classes + j as usize], true))
}

fn scan_pairs(
    sys: &TripleSystem,
    firsts: &[usize],
    res: &[Resolution],
    budget: u64,
    all_later: bool,
) -> Result<bool> {
    let nb = sys.num_blocks();
    let classes = sys.replication();
    let tables: Vec<Vec<u8>> = res.iter().map(|r| r.class_of_block(nb)).collect();
    let mut examined = 0u64;
    for &i in firsts {
        let start = if all_later { i + 1 } else { 0 };
        for j in start..res.len() {
            if j == i {
                continue;
            }
            examined += 1;
            if examined > budget {
                return Err(BudgetExceeded {
                    what: "double resolvability scan",
                    limit: budget,
                }
                .into());
            }
            if orthogonal_tables(&tables[i], &tables[j], classes) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Whether two resolutions are orthogonal, scanning one orbit representative
/// against every resolution.
///
/// Any orthogonal pair can be moved by an automorphism so that its first member
/// is a representative, so this is exact. The budget counts pairs examined.
pub fn is_doubly_resolvable(sys: &TripleSystem, budget: u64) -> Result<bool> {
    if sys.order() % 6 != 3 {
        return Ok(false);
    }
    let res = resolutions(sys, None)?;
    if res.len() < 2 {
        return Ok(false);
    }
    let group = automorphism_group_bounded(sys, DEFAULT_MAX_ORDER)?;
    let reps: Vec<usize> = resolution_orbits(sys, &res, &group).into_iter().map(|(i, _)| i).collect();
    scan_pairs(sys, &reps, &res, budget, false)
}

/// The same question answered by examining every unordered pair of resolutions.
pub fn is_doubly_resolvable_exhaustive(sys: &TripleSystem, budget: u64) -> Result<bool> {
    if sys.order() % 6 != 3 {
        return Ok(false);
    }
    let res = resolutions(sys, None)?;
    let all: Vec<usize> = (0..res.len()).collect();
    scan_pairs(sys, &all, &res, budget, true)
}
