use std::fmt;

use super::Alt;

/// A nonempty subset of the universe, packed into a bitmask: bit `i` set
/// means alternative `i` is a member.
///
/// The canonical order on menus — used by every exhaustive scan so that
/// witnesses are reproducible — is ascending cardinality, ties broken by
/// ascending bit value.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Menu {
    bits: u16,
}

impl Menu {
    /// Panics if `bits` is zero; menus are nonempty by definition.
    pub fn new(bits: u16) -> Menu {
        assert!(bits != 0, "a menu must contain at least one alternative");
        Menu { bits }
    }

    pub fn try_new(bits: u16) -> Option<Menu> {
        (bits != 0).then_some(Menu { bits })
    }

    pub fn singleton(x: Alt) -> Menu {
        Menu { bits: 1 << x }
    }

    /// The menu `{0, …, n-1}`.
    pub fn full(n: u8) -> Menu {
        assert!((1..=16).contains(&n));
        Menu {
            bits: if n == 16 { u16::MAX } else { (1 << n) - 1 },
        }
    }

    pub fn from_alts<I: IntoIterator<Item = Alt>>(alts: I) -> Option<Menu> {
        let mut bits = 0;
        for a in alts {
            bits |= 1 << a;
        }
        Menu::try_new(bits)
    }

    pub fn bits(self) -> u16 {
        self.bits
    }

    // no is_empty: menus are nonempty by construction
    #[allow(clippy::len_without_is_empty)]
    pub fn len(self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_singleton(self) -> bool {
        self.bits.is_power_of_two()
    }

    pub fn contains(self, x: Alt) -> bool {
        self.bits & (1 << x) != 0
    }

    pub fn is_subset_of(self, other: Menu) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_strict_subset_of(self, other: Menu) -> bool {
        self != other && self.is_subset_of(other)
    }

    pub fn union(self, other: Menu) -> Menu {
        Menu {
            bits: self.bits | other.bits,
        }
    }

    pub fn with(self, x: Alt) -> Menu {
        Menu {
            bits: self.bits | 1 << x,
        }
    }

    /// Drops `x`; `None` when `x` was the only member.
    pub fn without(self, x: Alt) -> Option<Menu> {
        Menu::try_new(self.bits & !(1 << x))
    }

    /// Member alternatives in ascending index order.
    pub fn alts(self) -> Alts {
        Alts { bits: self.bits }
    }

    /// Sort key realising the canonical menu order.
    pub fn canonical_key(self) -> (u32, u16) {
        (self.len(), self.bits)
    }
}

impl fmt::Debug for Menu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.alts().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Copy)]
pub struct Alts {
    bits: u16,
}

impl Iterator for Alts {
    type Item = Alt;

    fn next(&mut self) -> Option<Alt> {
        if self.bits == 0 {
            return None;
        }
        let a = self.bits.trailing_zeros() as Alt;
        self.bits &= self.bits - 1;
        Some(a)
    }
}

/// Next-larger value with the same popcount (Gosper's hack). Works in u32
/// so the top menu of a 16-alternative universe cannot overflow.
fn next_same_weight(v: u32) -> u32 {
    let u = v & v.wrapping_neg();
    let w = v + u;
    w | (((v ^ w) >> 2) / u)
}

/// All `2^n − 1` nonempty menus over `{0, …, n-1}` in canonical order.
pub fn all_menus(n: u8) -> Menus {
    assert!((1..=16).contains(&n));
    Menus {
        full: Menu::full(n).bits() as u32,
        n: n as u32,
        size: 1,
        cur: Some(1),
    }
}

pub struct Menus {
    full: u32,
    n: u32,
    size: u32,
    cur: Option<u32>,
}

impl Iterator for Menus {
    type Item = Menu;

    fn next(&mut self) -> Option<Menu> {
        let out = self.cur?;
        let bumped = next_same_weight(out);
        self.cur = if bumped <= self.full {
            Some(bumped)
        } else if self.size < self.n {
            self.size += 1;
            Some((1 << self.size) - 1)
        } else {
            None
        };
        Some(Menu::new(out as u16))
    }
}

/// All nonempty subsets of `of` (including `of` itself) in canonical order.
pub fn subsets(of: Menu) -> Subsets {
    Subsets {
        of,
        compact: all_menus(of.len() as u8),
    }
}

pub struct Subsets {
    of: Menu,
    compact: Menus,
}

impl Iterator for Subsets {
    type Item = Menu;

    fn next(&mut self) -> Option<Menu> {
        // Enumerate subsets of a small index space, then scatter each onto
        // the members of `of`; canonical order is preserved.
        let compact = self.compact.next()?;
        let mut bits = 0;
        for (j, pos) in self.of.alts().enumerate() {
            if compact.contains(j as Alt) {
                bits |= 1 << pos;
            }
        }
        Some(Menu::new(bits))
    }
}
