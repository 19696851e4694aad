//! Dataset files: a JSON encoding of an observed choice correspondence.
//!
//! ```json
//! {
//!   "alternatives": ["x", "y", "z"],
//!   "choices": [
//!     {"menu": ["x", "y"], "choice": ["x"]},
//!     ...
//!   ]
//! }
//! ```
//!
//! Row order is irrelevant on input. Every nonsingleton menu must appear
//! exactly once — the recovery machinery quantifies over the full domain,
//! so a partial table is a hard error, not a degraded mode. Singleton rows
//! are optional since their value is forced; when present they must choose
//! themselves. Canonical output sorts the nonsingleton rows by (size,
//! lexicographic menu) and omits the singletons.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{ChoiceCorrespondence, Menu, Universe, UniverseError};

/// A validated dataset: a universe plus a total choice correspondence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChoiceDataset {
    pub universe: Universe,
    pub correspondence: ChoiceCorrespondence,
}

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Universe(#[from] UniverseError),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("label {0:?} listed twice in one row")]
    DuplicateEntry(String),
    #[error("row {0} has an empty menu")]
    EmptyMenu(usize),
    #[error("empty choice for menu {0}")]
    EmptyChoice(String),
    #[error("choice not within menu: {label:?} is not in {menu}")]
    ChoiceNotInMenu { label: String, menu: String },
    #[error("menu {0} appears more than once")]
    DuplicateMenu(String),
    #[error("singleton menu {0} must choose itself")]
    SingletonMismatch(String),
    #[error("incomplete domain: no row for menu {0}")]
    IncompleteDomain(String),
}

#[derive(Serialize, Deserialize)]
struct FileDataset {
    alternatives: Vec<String>,
    choices: Vec<FileRow>,
}

#[derive(Serialize, Deserialize)]
struct FileRow {
    menu: Vec<String>,
    choice: Vec<String>,
}

fn resolve_set(
    labels: &[String],
    u: &Universe,
    row: usize,
) -> Result<Menu, DatasetError> {
    let mut bits = 0u16;
    for label in labels {
        let a = u
            .index_of(label)
            .ok_or_else(|| DatasetError::UnknownLabel(label.clone()))?;
        if bits & (1 << a) != 0 {
            return Err(DatasetError::DuplicateEntry(label.clone()));
        }
        bits |= 1 << a;
    }
    Menu::try_new(bits).ok_or(DatasetError::EmptyMenu(row))
}

/// Parses and validates the JSON dataset format, canonicalising menus to
/// bitmasks and auto-filling the forced singleton rows.
pub fn parse_dataset(text: &str) -> Result<ChoiceDataset, DatasetError> {
    let file: FileDataset = serde_json::from_str(text)?;
    let universe = Universe::new(file.alternatives)?;
    let n = universe.n();

    let mut table = vec![0u16; 1 << n];
    for (i, row) in file.choices.iter().enumerate() {
        let menu = resolve_set(&row.menu, &universe, i)?;
        let rendered = universe.render_menu(menu);
        if table[menu.bits() as usize] != 0 {
            return Err(DatasetError::DuplicateMenu(rendered));
        }
        if row.choice.is_empty() {
            return Err(DatasetError::EmptyChoice(rendered));
        }
        let choice = resolve_set(&row.choice, &universe, i)?;
        if !choice.is_subset_of(menu) {
            let stray = choice
                .alts()
                .find(|&a| !menu.contains(a))
                .expect("some chosen alternative is outside the menu");
            return Err(DatasetError::ChoiceNotInMenu {
                label: universe.label(stray).to_owned(),
                menu: rendered,
            });
        }
        if menu.is_singleton() && choice != menu {
            return Err(DatasetError::SingletonMismatch(rendered));
        }
        table[menu.bits() as usize] = choice.bits();
    }

    for m in universe.menus() {
        if table[m.bits() as usize] == 0 {
            if m.is_singleton() {
                table[m.bits() as usize] = m.bits();
            } else {
                return Err(DatasetError::IncompleteDomain(universe.render_menu(m)));
            }
        }
    }

    let correspondence = ChoiceCorrespondence::from_table(n, table)
        .expect("validated rows always form a correspondence");
    Ok(ChoiceDataset {
        universe,
        correspondence,
    })
}

/// Canonical serialization: nonsingleton rows only, members in universe
/// order, rows sorted by (menu size, menu labels).
pub fn to_canonical_json(ds: &ChoiceDataset) -> String {
    let names = |m: Menu| -> Vec<String> {
        m.alts().map(|a| ds.universe.label(a).to_owned()).collect()
    };
    let mut rows: Vec<FileRow> = ds
        .correspondence
        .menus()
        .filter(|m| !m.is_singleton())
        .map(|m| FileRow {
            menu: names(m),
            choice: names(ds.correspondence.choice(m)),
        })
        .collect();
    rows.sort_by(|a, b| (a.menu.len(), &a.menu).cmp(&(b.menu.len(), &b.menu)));
    let file = FileDataset {
        alternatives: ds.universe.labels().to_vec(),
        choices: rows,
    };
    serde_json::to_string_pretty(&file).expect("dataset serialization cannot fail")
}
