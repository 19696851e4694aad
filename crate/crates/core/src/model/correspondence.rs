use std::fmt;

use thiserror::Error;

use super::{all_menus, Menu, Menus};

/// A total choice correspondence: for every nonempty menu `A` over the
/// universe, a nonempty chosen subset `c(A) ⊆ A`.
///
/// The table is flat, indexed by menu bitmask, so lookups are O(1) and the
/// whole object is a few kilobytes even at the maximum universe size.
#[derive(Clone, PartialEq, Eq)]
pub struct ChoiceCorrespondence {
    n: u8,
    table: Vec<u16>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("invalid choice {got:#b} for menu {menu:?}: must be a nonempty submenu")]
pub struct InvalidChoice {
    pub menu: Menu,
    pub got: u16,
}

impl ChoiceCorrespondence {
    /// Builds the table by evaluating `f` on every menu in canonical order.
    /// Panics if `f` ever steps outside its menu or returns nothing.
    pub fn from_fn(n: u8, mut f: impl FnMut(Menu) -> Menu) -> ChoiceCorrespondence {
        assert!((1..=16).contains(&n));
        let mut table = vec![0u16; 1 << n];
        for m in all_menus(n) {
            let c = f(m);
            assert!(c.is_subset_of(m), "choice must be a submenu");
            table[m.bits() as usize] = c.bits();
        }
        ChoiceCorrespondence { n, table }
    }

    /// Validates a raw table: entry `table[bits]` is the chosen subset of
    /// the menu with that bitmask, for every nonempty `bits < 2^n`.
    pub fn from_table(n: u8, table: Vec<u16>) -> Result<ChoiceCorrespondence, InvalidChoice> {
        assert!((1..=16).contains(&n));
        assert_eq!(table.len(), 1 << n, "table must have one entry per bitmask");
        for m in all_menus(n) {
            let got = table[m.bits() as usize];
            if got == 0 || got & !m.bits() != 0 {
                return Err(InvalidChoice { menu: m, got });
            }
        }
        Ok(ChoiceCorrespondence { n, table })
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn choice(&self, m: Menu) -> Menu {
        Menu::new(self.table[m.bits() as usize])
    }

    /// All menus of the underlying universe in canonical order.
    pub fn menus(&self) -> Menus {
        all_menus(self.n)
    }

    /// The raw table, indexed by menu bitmask (entry 0 is unused).
    pub fn table_bits(&self) -> &[u16] {
        &self.table
    }

    /// First menu where `self` and `other` disagree, in canonical order.
    pub fn first_difference(&self, other: &ChoiceCorrespondence) -> Option<Menu> {
        assert_eq!(self.n, other.n);
        self.menus().find(|&m| self.choice(m) != other.choice(m))
    }
}

impl fmt::Debug for ChoiceCorrespondence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .menus()
            .filter(|m| !m.is_singleton())
            .map(|m| format!("{m:?}→{:?}", self.choice(m)))
            .collect();
        write!(f, "ChoiceCorrespondence[{}]", rows.join(" "))
    }
}
