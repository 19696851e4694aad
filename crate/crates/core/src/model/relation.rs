use std::fmt;

use super::{Alt, Menu};

/// A binary relation over `{0, …, n-1}`, stored as one bitmask row per
/// alternative: bit `y` of `row(x)` set means "x related to y".
///
/// Nothing is intrinsic to the table; completeness, transitivity, and
/// antisymmetry are queryable, each returning the first violating pair or
/// triple in ascending scan order when the property fails.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryRelation {
    n: u8,
    rows: Vec<u16>,
}

impl BinaryRelation {
    pub fn empty(n: u8) -> BinaryRelation {
        assert!((1..=16).contains(&n));
        BinaryRelation {
            n,
            rows: vec![0; n as usize],
        }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn holds(&self, x: Alt, y: Alt) -> bool {
        self.rows[x as usize] & (1 << y) != 0
    }

    pub fn set(&mut self, x: Alt, y: Alt) {
        self.rows[x as usize] |= 1 << y;
    }

    /// Everything `x` is related to, as a bitmask.
    pub fn row(&self, x: Alt) -> u16 {
        self.rows[x as usize]
    }

    /// The asymmetric part: `x P y ⟺ x R y ∧ ¬(y R x)`.
    pub fn strict_part(&self) -> BinaryRelation {
        let mut out = BinaryRelation::empty(self.n);
        for x in 0..self.n {
            for y in 0..self.n {
                if self.holds(x, y) && !self.holds(y, x) {
                    out.set(x, y);
                }
            }
        }
        out
    }

    /// The symmetric part: `x I y ⟺ x R y ∧ y R x`.
    pub fn symmetric_part(&self) -> BinaryRelation {
        let mut out = BinaryRelation::empty(self.n);
        for x in 0..self.n {
            for y in 0..self.n {
                if self.holds(x, y) && self.holds(y, x) {
                    out.set(x, y);
                }
            }
        }
        out
    }

    /// Complete: for all x, y, either xRy or yRx (so in particular xRx).
    pub fn completeness_violation(&self) -> Option<(Alt, Alt)> {
        for x in 0..self.n {
            for y in x..self.n {
                if !self.holds(x, y) && !self.holds(y, x) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// Transitive: xRy and yRz imply xRz.
    pub fn transitivity_violation(&self) -> Option<(Alt, Alt, Alt)> {
        for x in 0..self.n {
            for y in 0..self.n {
                if !self.holds(x, y) {
                    continue;
                }
                // everything y reaches but x does not
                let missing = self.row(y) & !self.row(x);
                if missing != 0 {
                    let z = missing.trailing_zeros() as Alt;
                    return Some((x, y, z));
                }
            }
        }
        None
    }

    /// Antisymmetric: xRy and yRx imply x = y.
    pub fn antisymmetry_violation(&self) -> Option<(Alt, Alt)> {
        for x in 0..self.n {
            for y in (x + 1)..self.n {
                if self.holds(x, y) && self.holds(y, x) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_weak_order(&self) -> bool {
        self.completeness_violation().is_none() && self.transitivity_violation().is_none()
    }

    pub fn is_linear_order(&self) -> bool {
        self.is_weak_order() && self.antisymmetry_violation().is_none()
    }
}

impl fmt::Debug for BinaryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = (0..self.n)
            .flat_map(|x| {
                Menu::try_new(self.row(x))
                    .into_iter()
                    .flat_map(move |r| r.alts().map(move |y| format!("{x}R{y}")))
            })
            .collect();
        write!(f, "BinaryRelation[{}]", pairs.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn total(n: u8) -> BinaryRelation {
        let mut r = BinaryRelation::empty(n);
        for x in 0..n {
            for y in 0..n {
                r.set(x, y);
            }
        }
        r
    }

    #[test]
    fn parts_of_total_indifference() {
        let r = total(3);
        let strict = r.strict_part();
        let sym = r.symmetric_part();
        for x in 0..3 {
            for y in 0..3 {
                assert!(!strict.holds(x, y));
                assert!(sym.holds(x, y));
            }
        }
    }

    #[test]
    fn parts_of_two_element_chain() {
        // xLy on {x,y}
        let mut r = BinaryRelation::empty(2);
        r.set(0, 0);
        r.set(1, 1);
        r.set(0, 1);
        let strict = r.strict_part();
        assert!(strict.holds(0, 1));
        assert!(!strict.holds(1, 0));
        assert!(!strict.holds(0, 0) && !strict.holds(1, 1));
    }

    #[test]
    fn violations_are_witnessed() {
        let mut r = BinaryRelation::empty(3);
        r.set(0, 0);
        r.set(1, 1);
        r.set(2, 2);
        r.set(0, 1);
        r.set(1, 2);
        // 0R1, 1R2 but not 0R2
        assert_eq!(r.transitivity_violation(), Some((0, 1, 2)));
        r.set(0, 2);
        assert_eq!(r.transitivity_violation(), None);
        assert_eq!(r.completeness_violation(), None);
        assert_eq!(r.antisymmetry_violation(), None);
        assert!(r.is_linear_order());

        let mut incomplete = BinaryRelation::empty(2);
        incomplete.set(0, 0);
        // (0,1) unrelated in both directions is hit before the missing (1,1)
        assert_eq!(incomplete.completeness_violation(), Some((0, 1)));

        let sym = total(2);
        assert_eq!(sym.antisymmetry_violation(), Some((0, 1)));
    }
}
