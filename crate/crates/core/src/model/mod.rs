//! Domain types: alternatives, menus, binary relations, orders, and
//! choice correspondences.

mod correspondence;
mod menu;
mod orders;
mod relation;

pub use correspondence::{ChoiceCorrespondence, InvalidChoice};
pub use menu::{all_menus, subsets, Alts, Menu, Menus, Subsets};
pub use orders::{LinearOrder, OrderError, WeakOrder};
pub use relation::BinaryRelation;

use thiserror::Error;

/// Index of an alternative within a universe, `0..n`.
pub type Alt = u8;

/// A finite set of named alternatives. Everything else in the crate works
/// with indices into this universe; labels only matter at the I/O edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universe {
    labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum UniverseError {
    #[error("a universe needs at least one alternative")]
    Empty,
    #[error("too many alternatives: {0} (the limit is {max})", max = Universe::MAX)]
    TooLarge(usize),
    #[error("duplicate alternative {0:?}")]
    DuplicateLabel(String),
    #[error("alternative labels must be nonempty")]
    EmptyLabel,
}

impl Universe {
    /// Largest supported universe; menus are 16-bit masks.
    pub const MAX: usize = 16;

    pub fn new<I, S>(labels: I) -> Result<Universe, UniverseError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(UniverseError::Empty);
        }
        if labels.len() > Self::MAX {
            return Err(UniverseError::TooLarge(labels.len()));
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(UniverseError::EmptyLabel);
            }
            if labels[..i].contains(l) {
                return Err(UniverseError::DuplicateLabel(l.clone()));
            }
        }
        Ok(Universe { labels })
    }

    /// A universe of `n` alternatives labelled `a`, `b`, `c`, …
    pub fn of_size(n: u8) -> Universe {
        assert!(n >= 1 && n as usize <= Self::MAX);
        let labels = (0..n)
            .map(|i| ((b'a' + i) as char).to_string())
            .collect();
        Universe { labels }
    }

    pub fn n(&self) -> u8 {
        self.labels.len() as u8
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: Alt) -> &str {
        &self.labels[x as usize]
    }

    pub fn index_of(&self, label: &str) -> Option<Alt> {
        self.labels.iter().position(|l| l == label).map(|i| i as Alt)
    }

    pub fn full_menu(&self) -> Menu {
        Menu::full(self.n())
    }

    /// All nonempty menus in canonical order (size, then bit value).
    pub fn menus(&self) -> Menus {
        all_menus(self.n())
    }

    /// Renders a menu as `{x,y}` using this universe's labels.
    pub fn render_menu(&self, m: Menu) -> String {
        let names: Vec<&str> = m.alts().map(|a| self.label(a)).collect();
        format!("{{{}}}", names.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universe_validation() {
        assert_eq!(Universe::new(Vec::<String>::new()), Err(UniverseError::Empty));
        assert_eq!(
            Universe::new(vec!["x", "x"]),
            Err(UniverseError::DuplicateLabel("x".into()))
        );
        assert_eq!(
            Universe::new((0..17).map(|i| i.to_string())),
            Err(UniverseError::TooLarge(17))
        );
        assert_eq!(Universe::new(vec!["x", ""]), Err(UniverseError::EmptyLabel));

        let u = Universe::new(vec!["x", "y", "z"]).unwrap();
        assert_eq!(u.n(), 3);
        assert_eq!(u.index_of("y"), Some(1));
        assert_eq!(u.index_of("w"), None);
        assert_eq!(u.render_menu(Menu::new(0b101)), "{x,z}");
    }

    #[test]
    fn of_size_labels() {
        let u = Universe::of_size(4);
        assert_eq!(u.labels(), ["a", "b", "c", "d"]);
    }
}
