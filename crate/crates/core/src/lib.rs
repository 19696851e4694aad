//! Two-stage choice with a minimal compromise between two preferences.
//!
//! A decision maker carries a weak order `R` (ties allowed) and a linear
//! order `L` (no ties) over a finite set of alternatives. Facing a menu,
//! she shortlists every `R`-maximal alternative. A unique shortlisted
//! alternative is chosen outright; otherwise `L` vetoes its least
//! preferred member of the shortlist and the rest form the choice set. The
//! veto costs at most one alternative, so the behaviour compromises
//! minimally between the two preferences — enough, though, to violate
//! classical contraction consistency (α) while keeping β, γ, and
//! no-binary-cycles intact.
//!
//! The crate provides, layer by layer:
//!
//! - [`model`] — universes, menus as bitmasks, binary relations, weak and
//!   linear orders, and total choice correspondences;
//! - [`engine`] — the choice rule, full-table generation, plain
//!   maximisation, and the removal-impact operator `r^c`;
//! - [`axioms`] — executable checks for α, β, γ, NBC, WARP and the five
//!   conditions (`cond1`–`cond5`) that exactly characterize representable
//!   behaviour, each with replayable counterexample witnesses;
//! - [`recovery`] — constructive recovery of a representing pair from a
//!   conditions-passing table, verified by regeneration;
//! - [`oracle`] — brute-force enumeration of orders, preference pairs, and
//!   whole choice-correspondence censuses, plus sharded sweeps asserting
//!   that conditions, search, and recovery agree on every table;
//! - [`dataset`], [`text`], [`report`], [`fixtures`] — the JSON dataset
//!   format, the `x,y > z` order notation, report rendering, and the
//!   bundled example tables.

pub mod axioms;
pub mod dataset;
pub mod engine;
pub mod fixtures;
pub mod model;
pub mod oracle;
pub mod recovery;
pub mod report;
pub mod text;

pub use model::{
    all_menus, Alt, BinaryRelation, ChoiceCorrespondence, LinearOrder, Menu, Universe, WeakOrder,
};
