//! Steiner triple systems: representation, compact notation, constructions,
//! and the per-system properties used to study STS(21): small configurations,
//! parallel classes and resolutions, weak colourings, Pasch and hexagon
//! trades, pair cycle structure, independent sets, existential closure of the
//! block intersection graph, and automorphism groups.

pub mod bits;
pub mod codec;
pub mod colouring;
pub mod configurations;
pub mod error;
pub mod exact_cover;
pub mod fixtures;
pub mod format;
pub mod generate;
pub mod isomorphism;
pub mod resolvability;
pub mod structure;
pub mod system;
pub mod trades;

/// Largest supported order; points must fit the compact alphabet `0-9a-z`.
pub const MAX_ORDER: usize = 36;

pub use codec::{decode_compact, encode_compact, CompactCode};
pub use configurations::{census, ConfigCensus, ConfigInstance, ConfigKind};
pub use error::{BudgetExceeded, Result, StsError};
pub use generate::{direct_product, generate_cyclic, CyclicSpec};
pub use isomorphism::{apply, are_isomorphic, automorphism_group, AutGroup, Permutation};
pub use system::{Point, Triple, TripleSystem};
pub use colouring::{chromatic_number, find_colouring, Colouring, ColourProfile};
pub use resolvability::{parallel_classes, resolutions, ParallelClass, Resolution};
pub use trades::{classify_twins, switch_hexagon, switch_pasch, SwitchResult, TwinReport};
