//! Brute-force oracles shared by the integration suites and the acceptance run.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

use sts_core::colouring::{Colouring, ColourProfile};
use sts_core::configurations::{self, ConfigInstance, ConfigKind};
use sts_core::generate::{affine_plane, cyclic13, fano, projective_space};
use sts_core::structure::CycleList;
use sts_core::trades::{switch_hexagon, switch_pasch};
use sts_core::{Point, TripleSystem};

/// Point-labelled template of each configuration.
pub fn template(kind: ConfigKind) -> Vec<[usize; 3]> {
    match kind {
        ConfigKind::Pasch => vec![[0, 1, 2], [0, 4, 5], [3, 1, 5], [3, 4, 2]],
        ConfigKind::Mitre => vec![[0, 1, 4], [0, 2, 5], [0, 3, 6], [1, 2, 3], [4, 5, 6]],
        ConfigKind::Hexagon => vec![[0, 2, 3], [0, 4, 5], [0, 6, 7], [1, 2, 7], [1, 3, 4], [1, 5, 6]],
        ConfigKind::Crown => vec![[0, 1, 2], [0, 3, 4], [1, 5, 6], [2, 3, 5], [7, 0, 6], [7, 1, 4]],
        ConfigKind::Grid => vec![[0, 1, 2], [3, 4, 5], [6, 7, 8], [0, 3, 6], [1, 4, 7], [2, 5, 8]],
        ConfigKind::Prism => vec![[0, 1, 5], [0, 2, 4], [1, 2, 3], [3, 7, 8], [4, 6, 8], [5, 6, 7]],
    }
}

/// Whether some point map sends the template blocks onto `blocks`.
pub fn matches_template(tpl: &[[usize; 3]], blocks: &[[usize; 3]]) -> bool {
    fn go(tpl: &[[usize; 3]], blocks: &[[usize; 3]], used: &mut Vec<bool>, map: &mut BTreeMap<usize, usize>) -> bool {
        let Some((t, rest)) = tpl.split_first() else { return true };
        for (i, b) in blocks.iter().enumerate() {
            if used[i] {
                continue;
            }
            for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
                let mut added = Vec::new();
                let ok = (0..3).all(|k| {
                    let (s, d) = (t[k], b[perm[k]]);
                    match map.get(&s) {
                        Some(&e) => e == d,
                        None if map.values().any(|&e| e == d) => false,
                        None => {
                            map.insert(s, d);
                            added.push(s);
                            true
                        }
                    }
                });
                if ok {
                    used[i] = true;
                    if go(rest, blocks, used, map) {
                        return true;
                    }
                    used[i] = false;
                }
                for s in added {
                    map.remove(&s);
                }
            }
        }
        false
    }
    tpl.len() == blocks.len() && go(tpl, blocks, &mut vec![false; blocks.len()], &mut BTreeMap::new())
}

fn raw(sys: &TripleSystem, b: usize) -> [usize; 3] {
    sys.block(b).points().map(usize::from)
}

/// Visit every `k`-subset of `0..n` in lexicographic order.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..=n - (k - cur.len()) {
            cur.push(i);
            go(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut f);
    }
}

fn point_count(sys: &TripleSystem, sel: &[usize]) -> usize {
    sel.iter().fold(0u64, |m, &b| m | sys.block(b).mask()).count_ones() as usize
}

/// Instances of `kind` found by scanning every block subset of the right size.
pub fn brute_instances(sys: &TripleSystem, kind: ConfigKind) -> BTreeSet<Vec<usize>> {
    let (k, l) = kind.shape();
    let tpl = template(kind);
    let mut out = BTreeSet::new();
    for_each_subset(sys.num_blocks(), l, |sel| {
        if point_count(sys, sel) != k {
            return;
        }
        let blocks: Vec<[usize; 3]> = sel.iter().map(|&b| raw(sys, b)).collect();
        if matches_template(&tpl, &blocks) {
            out.insert(sel.to_vec());
        }
    });
    out
}

/// Every (8,6) configuration that is neither hexagon nor crown contains a
/// (6,4) or (7,5) configuration. Returns the number of such configurations checked.
pub fn non_full_eight_six_contain_smaller(sys: &TripleSystem) -> Result<usize, Vec<usize>> {
    let mut checked = 0;
    let mut bad = None;
    let hex = template(ConfigKind::Hexagon);
    let crown = template(ConfigKind::Crown);
    for_each_subset(sys.num_blocks(), 6, |sel| {
        if bad.is_some() || point_count(sys, sel) != 8 {
            return;
        }
        let blocks: Vec<[usize; 3]> = sel.iter().map(|&b| raw(sys, b)).collect();
        if matches_template(&hex, &blocks) || matches_template(&crown, &blocks) {
            return;
        }
        checked += 1;
        let mut found = false;
        for (l, k) in [(4, 6), (5, 7)] {
            for_each_subset(6, l, |sub| {
                let chosen: Vec<usize> = sub.iter().map(|&i| sel[i]).collect();
                found |= point_count(sys, &chosen) == k;
            });
        }
        if !found {
            bad = Some(sel.to_vec());
        }
    });
    bad.map_or(Ok(checked), Err)
}

/// Cycle lengths of the pair graph, by explicit breadth-first search.
pub fn brute_cycle_list(sys: &TripleSystem, x: Point, y: Point) -> CycleList {
    let v = sys.order();
    let mut adj = vec![Vec::new(); v];
    for p in 0..v as Point {
        if p == x || p == y {
            continue;
        }
        for c in [x, y] {
            let q = sys.third(c, p);
            if q != x && q != y {
                adj[p as usize].push(q as usize);
            }
        }
    }
    let mut seen = vec![false; v];
    let mut lens = Vec::new();
    for s in 0..v {
        if s == x as usize || s == y as usize || s == sys.third(x, y) as usize || seen[s] {
            continue;
        }
        let mut queue = vec![s];
        seen[s] = true;
        let mut size = 0;
        while let Some(p) = queue.pop() {
            size += 1;
            for &q in &adj[p] {
                if !seen[q] {
                    seen[q] = true;
                    queue.push(q);
                }
            }
        }
        lens.push(size);
    }
    lens.sort_unstable();
    CycleList(lens)
}

pub fn brute_independence_number(sys: &TripleSystem) -> usize {
    (0u64..1 << sys.order())
        .filter(|&s| sys.is_independent(s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn brute_parallel_classes(sys: &TripleSystem) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    if sys.order() % 3 != 0 {
        return out;
    }
    for_each_subset(sys.num_blocks(), sys.order() / 3, |sel| {
        if point_count(sys, sel) == sys.order() {
            out.insert(sel.to_vec());
        }
    });
    out
}

/// Profiles of all proper 3-colourings, by trying all `3^v` assignments.
pub fn brute_profiles(sys: &TripleSystem) -> BTreeSet<ColourProfile> {
    let v = sys.order();
    let masks: Vec<u64> = sys.blocks().iter().map(|t| t.mask()).collect();
    let mut out = BTreeSet::new();
    let mut colours = vec![0u8; v];
    loop {
        let classes = [0u8, 1, 2].map(|c| (0..v).filter(|&p| colours[p] == c).fold(0u64, |m, p| m | 1 << p));
        if classes.iter().all(|&c| c != 0) && masks.iter().all(|&b| classes.iter().all(|&c| b & !c != 0)) {
            out.insert(Colouring::new(colours.clone()).profile());
        }
        let mut i = 0;
        while i < v && colours[i] == 2 {
            colours[i] = 0;
            i += 1;
        }
        if i == v {
            break;
        }
        colours[i] += 1;
    }
    out
}

/// The two STS(13)s: the cyclic one and the result of a Pasch switch in it.
pub fn sts13_pair() -> (TripleSystem, TripleSystem) {
    let a = cyclic13();
    let inst = configurations::instances(&a, ConfigKind::Pasch).remove(0);
    let b = switch_pasch(&a, &inst).unwrap().system;
    (a, b)
}

pub fn small_systems() -> Vec<(&'static str, TripleSystem)> {
    let (a, b) = sts13_pair();
    vec![
        ("STS(7)", fano()),
        ("STS(9)", affine_plane()),
        ("STS(13) cyclic", a),
        ("STS(13) switched", b),
        ("STS(15) PG(3,2)", projective_space()),
    ]
}

pub fn random_perm(v: usize, rng: &mut StdRng) -> Vec<Point> {
    let mut p: Vec<Point> = (0..v as Point).collect();
    p.shuffle(rng);
    p
}

/// Switch a random Pasch or hexagon, check the trade, switch back. Returns
/// `false` when the system has no instance of the chosen kind.
pub fn switch_round_trip(sys: &TripleSystem, rng: &mut StdRng) -> Result<bool, String> {
    let kind = if rng.gen_bool(0.5) { ConfigKind::Pasch } else { ConfigKind::Hexagon };
    let all = configurations::instances(sys, kind);
    let Some(inst) = all.choose(rng) else { return Ok(false) };
    let switch = |s: &TripleSystem, i: &ConfigInstance| match kind {
        ConfigKind::Pasch => switch_pasch(s, i),
        _ => switch_hexagon(s, i),
    };
    let r = switch(sys, inst).map_err(|e| e.to_string())?;
    let pairs = |ts: &[sts_core::Triple]| ts.iter().flat_map(|t| t.pairs()).collect::<BTreeSet<_>>();
    let removed = pairs(&r.removed);
    if removed != pairs(&r.added) || removed.len() != 3 * inst.blocks.len() {
        return Err(format!("{kind} switch changed the pair set"));
    }
    let differing = r.system.blocks().iter().filter(|t| sys.index_of(t).is_none()).count();
    if differing != inst.blocks.len() {
        return Err(format!("{kind} switch changed {differing} blocks"));
    }
    let back = switch(&r.system, &r.replacement).map_err(|e| e.to_string())?;
    if &back.system != sys {
        return Err(format!("{kind} switch is not an involution"));
    }
    Ok(true)
}
