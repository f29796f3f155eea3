//! Pasch and hexagon trades, and the twin classifications built on them.

use std::collections::BTreeSet;

use crate::configurations::{count, instances, is_instance, ConfigInstance, ConfigKind};
use crate::error::{Result, StsError};
use crate::isomorphism::{are_isomorphic, automorphism_group};
use crate::system::{Point, Triple, TripleSystem};

/// A system obtained by replacing one configuration with its trade mate.
#[derive(Clone, Debug)]
pub struct SwitchResult {
    pub system: TripleSystem,
    pub removed: Vec<Triple>,
    pub added: Vec<Triple>,
    /// The added blocks, as an instance of the same kind in the new system.
    pub replacement: ConfigInstance,
}

fn pair_set(blocks: &[Triple]) -> BTreeSet<(Point, Point)> {
    blocks.iter().flat_map(|t| t.pairs()).collect()
}

fn check_kind(sys: &TripleSystem, inst: &ConfigInstance, kind: ConfigKind) -> Result<()> {
    if inst.kind != kind || inst.blocks.iter().any(|&b| b >= sys.num_blocks()) || !is_instance(sys, inst) {
        return Err(StsError::NotAConfiguration {
            kind: kind.name(),
            blocks: inst.blocks.clone(),
        });
    }
    Ok(())
}

fn replace(sys: &TripleSystem, inst: &ConfigInstance, added: Vec<Triple>) -> Result<SwitchResult> {
    let removed: Vec<Triple> = inst.blocks.iter().map(|&b| sys.block(b)).collect();
    let pairs = pair_set(&removed);
    assert_eq!(pairs, pair_set(&added), "a trade must cover the same pairs");
    assert_eq!(pairs.len(), 3 * removed.len());
    let gone: BTreeSet<usize> = inst.blocks.iter().copied().collect();
    let kept = (0..sys.num_blocks()).filter(|b| !gone.contains(b)).map(|b| sys.block(b));
    let system = TripleSystem::from_triples(sys.order(), kept.chain(added.iter().copied()))?;
    let mut blocks: Vec<usize> = added
        .iter()
        .map(|t| system.index_of(t).expect("added block is present"))
        .collect();
    blocks.sort_unstable();
    Ok(SwitchResult {
        system,
        removed,
        added,
        replacement: ConfigInstance { kind: inst.kind, blocks },
    })
}

/// The other four blocks on the same six points covering the same twelve pairs.
///
/// The six points fall into three pairs of points that share no block. Every
/// block picks one point from each pair; the Pasch uses the transversals of
/// one parity and its mate those of the other.
pub fn pasch_mate(blocks: &[Triple; 4]) -> [Triple; 4] {
    let pts: Vec<Point> = blocks
        .iter()
        .flat_map(|t| t.points())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    debug_assert_eq!(pts.len(), 6);
    let collinear = |p: Point, q: Point| blocks.iter().any(|t| t.contains(p) && t.contains(q));
    let mut opposite: Vec<(Point, Point)> = Vec::new();
    for &p in &pts {
        if opposite.iter().any(|&(a, b)| a == p || b == p) {
            continue;
        }
        let q = *pts.iter().find(|&&q| q != p && !collinear(p, q)).expect("each point has an opposite");
        opposite.push((p, q));
    }
    let pick = |bits: usize| -> Triple {
        let [a, b, c] = [0, 1, 2].map(|i| {
            let (p, q) = opposite[i];
            (if bits >> i & 1 == 0 { p } else { q }) as usize
        });
        Triple::new(a, b, c).expect("opposite pairs are disjoint")
    };
    let parity = (0..8).find(|&bits| blocks.contains(&pick(bits))).map(|b: usize| b.count_ones() % 2).expect("a block is a transversal");
    let mut out = (0..8).filter(|b: &usize| b.count_ones() % 2 != parity).map(pick);
    [(); 4].map(|_| out.next().expect("four transversals of each parity"))
}

pub fn switch_pasch(sys: &TripleSystem, inst: &ConfigInstance) -> Result<SwitchResult> {
    check_kind(sys, inst, ConfigKind::Pasch)?;
    let blocks: [Triple; 4] = std::array::from_fn(|i| sys.block(inst.blocks[i]));
    replace(sys, inst, pasch_mate(&blocks).to_vec())
}

/// Swap the two points lying in three blocks of the hexagon.
pub fn switch_hexagon(sys: &TripleSystem, inst: &ConfigInstance) -> Result<SwitchResult> {
    check_kind(sys, inst, ConfigKind::Hexagon)?;
    let blocks: Vec<Triple> = inst.blocks.iter().map(|&b| sys.block(b)).collect();
    let centres: Vec<Point> = (0..sys.order() as Point)
        .filter(|&p| blocks.iter().filter(|t| t.contains(p)).count() == 3)
        .collect();
    let [x, y] = centres[..] else {
        unreachable!("a hexagon has two centres")
    };
    let added = blocks
        .iter()
        .map(|t| {
            let [a, b, c] = t.points().map(|p| {
                if p == x {
                    y as usize
                } else if p == y {
                    x as usize
                } else {
                    p as usize
                }
            });
            Triple::new(a, b, c)
        })
        .collect::<Result<Vec<_>>>()?;
    replace(sys, inst, added)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwinClass {
    /// The system does not have exactly one Pasch.
    NotOnePasch,
    /// Switching the Pasch gives a system without exactly one Pasch.
    NoTwin,
    Twin,
    IdenticalTwin,
}

impl TwinClass {
    pub fn name(self) -> &'static str {
        match self {
            TwinClass::NotOnePasch => "not-one-pasch",
            TwinClass::NoTwin => "no-twin",
            TwinClass::Twin => "twin",
            TwinClass::IdenticalTwin => "identical-twin",
        }
    }
}

#[derive(Clone, Debug)]
pub struct TwinReport {
    pub class: TwinClass,
    pub pasch_count: u64,
    /// The switched system, in canonical block order.
    pub partner: Option<TripleSystem>,
    pub partner_pasch_count: Option<u64>,
    pub partner_group_order: Option<u64>,
}

pub fn classify_twins(sys: &TripleSystem) -> TwinReport {
    let paschs = instances(sys, ConfigKind::Pasch);
    let mut report = TwinReport {
        class: TwinClass::NotOnePasch,
        pasch_count: paschs.len() as u64,
        partner: None,
        partner_pasch_count: None,
        partner_group_order: None,
    };
    if paschs.len() != 1 {
        return report;
    }
    let partner = switch_pasch(sys, &paschs[0]).expect("enumerated instance").system;
    let n = count(&partner, ConfigKind::Pasch);
    report.class = if n != 1 {
        TwinClass::NoTwin
    } else if are_isomorphic(sys, &partner).is_some() {
        TwinClass::IdenticalTwin
    } else {
        TwinClass::Twin
    };
    report.partner_pasch_count = Some(n);
    report.partner_group_order = Some(automorphism_group(&partner).order());
    report.partner = Some(partner);
    report
}

#[derive(Clone, Debug)]
pub struct TwoPaschDetail {
    pub instances: [ConfigInstance; 2],
    pub shared_blocks: usize,
    pub switched_pasch_counts: [u64; 2],
    pub switched_isomorphic: bool,
    /// Some automorphism maps the blocks of one Pasch onto the other.
    pub exchanging_automorphism: bool,
    pub group_order: u64,
}

/// Populated only for systems with exactly two Paschs.
#[derive(Clone, Debug)]
pub struct TwoPaschReport {
    pub pasch_count: u64,
    pub detail: Option<TwoPaschDetail>,
}

pub fn two_pasch_analysis(sys: &TripleSystem) -> TwoPaschReport {
    let paschs = instances(sys, ConfigKind::Pasch);
    let pasch_count = paschs.len() as u64;
    let Ok([p, q]) = <[ConfigInstance; 2]>::try_from(paschs) else {
        return TwoPaschReport { pasch_count, detail: None };
    };
    let shared_blocks = p.blocks.iter().filter(|b| q.blocks.contains(b)).count();
    let sp = switch_pasch(sys, &p).expect("enumerated instance").system;
    let sq = switch_pasch(sys, &q).expect("enumerated instance").system;
    let group = automorphism_group(sys);
    let target: BTreeSet<usize> = q.blocks.iter().copied().collect();
    let exchanging_automorphism = group.elements().iter().any(|g| {
        let img = sys.block_image(g.images());
        p.blocks.iter().map(|&b| img[b]).collect::<BTreeSet<_>>() == target
    });
    TwoPaschReport {
        pasch_count,
        detail: Some(TwoPaschDetail {
            shared_blocks,
            switched_pasch_counts: [count(&sp, ConfigKind::Pasch), count(&sq, ConfigKind::Pasch)],
            switched_isomorphic: are_isomorphic(&sp, &sq).is_some(),
            exchanging_automorphism,
            group_order: group.order(),
            instances: [p, q],
        }),
    }
}
