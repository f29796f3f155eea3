use std::collections::BTreeMap;
use std::time::Instant;

use clap::ValueEnum;
use serde::{Serialize, Serializer};
use sts_core::colouring::{achievable_profiles, chromatic_number, is_balanced, rainbow_parallel_analysis};
use sts_core::configurations::{census, ConfigCensus};
use sts_core::isomorphism::{automorphism_group_bounded, DEFAULT_MAX_ORDER};
use sts_core::resolvability::{count_resolutions, is_doubly_resolvable, kts_count, parallel_classes};
use sts_core::structure::{block_intersection_graph, cycle_census, is_n_existentially_closed, max_independent_set};
use sts_core::{encode_compact, BudgetExceeded, TripleSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Op {
    Configs,
    Colouring,
    Resolvability,
    Cycles,
    Independent,
    Ec,
    Aut,
    All,
}

impl Op {
    fn name(self) -> &'static str {
        match self {
            Op::Configs => "configs",
            Op::Colouring => "colouring",
            Op::Resolvability => "resolvability",
            Op::Cycles => "cycles",
            Op::Independent => "independent",
            Op::Ec => "ec",
            Op::Aut => "aut",
            Op::All => "all",
        }
    }
}

/// A report field: a value, or why there is none.
#[derive(Clone, Debug, PartialEq)]
pub enum Field<T> {
    Value(T),
    Skipped,
    BudgetExceeded,
    NotApplicable,
}

impl<T> Default for Field<T> {
    fn default() -> Self {
        Field::Skipped
    }
}

impl<T: Serialize> Serialize for Field<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Field::Value(v) => v.serialize(s),
            Field::Skipped => s.serialize_str("skipped"),
            Field::BudgetExceeded => s.serialize_str("budget exceeded"),
            Field::NotApplicable => s.serialize_str("not applicable"),
        }
    }
}

impl<T> Field<T> {
    fn from_budgeted(r: Result<T, BudgetExceeded>) -> Self {
        r.map_or(Field::BudgetExceeded, Field::Value)
    }

    pub fn is_budget_exceeded(&self) -> bool {
        matches!(self, Field::BudgetExceeded)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CycleEntry {
    pub lengths: Vec<usize>,
    pub pairs: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AnalysisReport {
    pub label: String,
    pub code: String,
    pub v: usize,
    pub aut_order: Field<u64>,
    pub orbit_sizes: Field<Vec<usize>>,
    pub configurations: Field<ConfigCensus>,
    pub parallel_class_count: Field<usize>,
    pub resolution_count: Field<u64>,
    pub kts_count: Field<u64>,
    pub doubly_resolvable: Field<bool>,
    pub chromatic_number: Field<usize>,
    pub profiles: Field<Vec<String>>,
    pub balanced: Field<bool>,
    pub rainbow_parallel: Field<bool>,
    pub rainbow_non_parallel: Field<bool>,
    pub cycle_lists: Field<Vec<CycleEntry>>,
    pub uniform: Field<bool>,
    pub perfect: Field<bool>,
    pub max_independent_set: Field<usize>,
    pub ec2: Field<bool>,
    pub ec3: Field<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<&'static str, f64>>,
}

impl AnalysisReport {
    pub fn budget_exceeded(&self) -> bool {
        self.aut_order.is_budget_exceeded()
            || self.doubly_resolvable.is_budget_exceeded()
            || self.rainbow_parallel.is_budget_exceeded()
            || self.rainbow_non_parallel.is_budget_exceeded()
    }
}

pub struct Settings {
    pub ops: Vec<Op>,
    pub budget: u64,
    pub heavy: bool,
    pub timings: bool,
}

impl Settings {
    fn wants(&self, op: Op) -> bool {
        self.ops.contains(&Op::All) || self.ops.contains(&op)
    }
}

pub fn analyze(label: &str, sys: &TripleSystem, cfg: &Settings) -> AnalysisReport {
    let mut r = AnalysisReport {
        label: label.to_string(),
        code: encode_compact(sys).to_string(),
        v: sys.order(),
        ..Default::default()
    };
    let mut timings = BTreeMap::new();
    let mut timed = |op: Op, f: &mut dyn FnMut(&mut AnalysisReport)| {
        if cfg.wants(op) {
            let start = Instant::now();
            f(&mut r);
            timings.insert(op.name(), start.elapsed().as_secs_f64());
        }
    };

    timed(Op::Aut, &mut |r| match automorphism_group_bounded(sys, DEFAULT_MAX_ORDER.min(cfg.budget)) {
        Ok(g) => {
            r.aut_order = Field::Value(g.order());
            r.orbit_sizes = Field::Value(g.orbit_sizes());
        }
        Err(_) => {
            r.aut_order = Field::BudgetExceeded;
            r.orbit_sizes = Field::BudgetExceeded;
        }
    });

    timed(Op::Configs, &mut |r| r.configurations = Field::Value(census(sys)));

    timed(Op::Resolvability, &mut |r| match parallel_classes(sys) {
        Ok(pcs) => {
            r.parallel_class_count = Field::Value(pcs.len());
            r.resolution_count = Field::Value(count_resolutions(sys).expect("order checked"));
            r.kts_count = kts_count(sys).map_or(Field::BudgetExceeded, Field::Value);
            if cfg.heavy {
                r.doubly_resolvable = is_doubly_resolvable(sys, cfg.budget).map_or(Field::BudgetExceeded, Field::Value);
            }
        }
        Err(_) => {
            r.parallel_class_count = Field::NotApplicable;
            r.resolution_count = Field::NotApplicable;
            r.kts_count = Field::NotApplicable;
            r.doubly_resolvable = Field::NotApplicable;
        }
    });

    timed(Op::Colouring, &mut |r| {
        let chi = chromatic_number(sys);
        r.chromatic_number = Field::Value(chi);
        if chi == 3 {
            let profiles = achievable_profiles(sys, 3);
            r.balanced = Field::Value(is_balanced(&profiles));
            r.profiles = Field::Value(profiles.iter().map(|p| p.to_string()).collect());
            if cfg.heavy {
                let a = rainbow_parallel_analysis(sys, cfg.budget);
                r.rainbow_parallel = Field::from_budgeted(a.parallel);
                r.rainbow_non_parallel = Field::from_budgeted(a.non_parallel);
            }
        } else {
            r.profiles = Field::NotApplicable;
            r.balanced = Field::NotApplicable;
            r.rainbow_parallel = Field::NotApplicable;
            r.rainbow_non_parallel = Field::NotApplicable;
        }
    });

    timed(Op::Cycles, &mut |r| {
        let c = cycle_census(sys);
        r.uniform = Field::Value(c.uniform);
        r.perfect = Field::Value(c.perfect);
        r.cycle_lists = Field::Value(
            c.lists
                .into_iter()
                .map(|(l, pairs)| CycleEntry { lengths: l.0, pairs })
                .collect(),
        );
    });

    timed(Op::Independent, &mut |r| r.max_independent_set = Field::Value(max_independent_set(sys).size));

    timed(Op::Ec, &mut |r| {
        let g = block_intersection_graph(sys);
        r.ec2 = Field::Value(is_n_existentially_closed(&g, 2));
        r.ec3 = Field::Value(is_n_existentially_closed(&g, 3));
    });

    if cfg.timings {
        r.timings = Some(timings);
    }
    r
}
