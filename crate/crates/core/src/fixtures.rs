//! Bundled example tables, shipped as dataset files under `fixtures/` and
//! embedded here for tests and docs. All four live on the universe
//! `{x, y, z}`.

use crate::dataset::{parse_dataset, ChoiceDataset};

/// Fully indifferent first stage with veto order x > y > z. Satisfies β
/// but fails α: y is chosen from the triple yet not from {x,y}.
pub const INDIFFERENCE_VETO: &str =
    include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/indifference_veto.json"));

/// Decisive on every menu and rationalizable; representable by several
/// distinct preference pairs.
pub const RATIONAL_DECISIVE: &str =
    include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/rational_decisive.json"));

/// Removal impact coincides with choice on every menu, yet the table is
/// not rational and has no representation.
pub const IMPACT_COINCIDES: &str =
    include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/impact_coincides.json"));

/// Decisive everywhere, so β holds vacuously, but cond1 fails: x wins
/// {x,y} while y wins the triple.
pub const BETA_ONLY: &str =
    include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/beta_only.json"));

fn parse(text: &str) -> ChoiceDataset {
    parse_dataset(text).expect("bundled fixtures are valid")
}

pub fn indifference_veto() -> ChoiceDataset {
    parse(INDIFFERENCE_VETO)
}

pub fn rational_decisive() -> ChoiceDataset {
    parse(RATIONAL_DECISIVE)
}

pub fn impact_coincides() -> ChoiceDataset {
    parse(IMPACT_COINCIDES)
}

pub fn beta_only() -> ChoiceDataset {
    parse(BETA_ONLY)
}
