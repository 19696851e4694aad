//! The two-stage minimal-compromise choice rule and the removal-impact
//! operator.
//!
//! Given a weak order `R` and a linear order `L`, the rule shortlists every
//! `R`-maximal alternative of a menu; a unique shortlisted alternative is
//! chosen outright, and otherwise the `L`-worst member of the shortlist is
//! vetoed and the rest form the choice set.

use crate::model::{Alt, ChoiceCorrespondence, LinearOrder, Menu, WeakOrder};

/// All `R`-maximal alternatives of `menu`: members of the best indifference
/// class present. Never empty.
pub fn max_set(menu: Menu, weak: &WeakOrder) -> Menu {
    let best = menu.alts().map(|a| weak.rank(a)).min().expect("menu nonempty");
    Menu::from_alts(menu.alts().filter(|&a| weak.rank(a) == best)).expect("best class present")
}

/// The unique `L`-worst alternative of `menu`.
pub fn min_of(menu: Menu, linear: &LinearOrder) -> Alt {
    menu.alts()
        .max_by_key(|&a| linear.position(a))
        .expect("menu nonempty")
}

/// One application of the rule. The result is nonempty and has
/// `max(1, |max_set| − 1)` members.
pub fn mc_choice(menu: Menu, weak: &WeakOrder, linear: &LinearOrder) -> Menu {
    let shortlist = max_set(menu, weak);
    if shortlist.is_singleton() {
        return shortlist;
    }
    shortlist
        .without(min_of(shortlist, linear))
        .expect("shortlist has at least two members")
}

/// The full table of the rule over every menu.
pub fn generate(weak: &WeakOrder, linear: &LinearOrder) -> ChoiceCorrespondence {
    assert_eq!(weak.n(), linear.n(), "orders must share a universe");
    ChoiceCorrespondence::from_fn(weak.n(), |m| mc_choice(m, weak, linear))
}

/// Plain maximisation of a single weak order on every menu.
pub fn generate_rational(weak: &WeakOrder) -> ChoiceCorrespondence {
    ChoiceCorrespondence::from_fn(weak.n(), |m| max_set(m, weak))
}

impl ChoiceCorrespondence {
    /// Members of `menu` whose deletion changes the chosen set. Always
    /// contains `choice(menu)`. A singleton menu is its own impact set:
    /// deleting the only member would leave no menu to compare against.
    pub fn removal_impact(&self, menu: Menu) -> Menu {
        if menu.is_singleton() {
            return menu;
        }
        let chosen = self.choice(menu);
        Menu::from_alts(menu.alts().filter(|&x| {
            let rest = menu.without(x).expect("menu not a singleton");
            self.choice(rest) != chosen
        }))
        .expect("removal of a chosen alternative always has impact")
    }

    /// The removal-impact operator applied to every menu; itself a choice
    /// correspondence.
    pub fn removal_impact_table(&self) -> ChoiceCorrespondence {
        ChoiceCorrespondence::from_fn(self.n(), |m| self.removal_impact(m))
    }

    /// Whether exactly one alternative is chosen from `menu`.
    pub fn is_decisive(&self, menu: Menu) -> bool {
        self.choice(menu).is_singleton()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::WeakOrder as W;

    fn menu(bits: u16) -> Menu {
        Menu::new(bits)
    }

    // x = 0, y = 1, z = 2 throughout.

    fn y_above_x_above_z() -> WeakOrder {
        W::new(3, vec![menu(0b010), menu(0b001), menu(0b100)]).unwrap()
    }

    fn x_ties_y_above_z() -> WeakOrder {
        W::new(3, vec![menu(0b011), menu(0b100)]).unwrap()
    }

    fn chain(ranking: &[Alt]) -> LinearOrder {
        LinearOrder::new(ranking.to_vec()).unwrap()
    }

    #[test]
    fn max_set_cases() {
        let all = menu(0b111);
        assert_eq!(max_set(all, &W::total_indifference(3)), all);
        assert_eq!(max_set(all, &y_above_x_above_z()), menu(0b010));
        assert_eq!(max_set(all, &x_ties_y_above_z()), menu(0b011));
    }

    #[test]
    fn min_of_cases() {
        let l = chain(&[0, 1, 2]);
        assert_eq!(min_of(menu(0b001), &l), 0);
        assert_eq!(min_of(menu(0b111), &l), 2);
        assert_eq!(min_of(menu(0b011), &l), 1);
    }

    #[test]
    fn mc_choice_cases() {
        let r = W::total_indifference(3);
        let l = chain(&[0, 1, 2]);
        assert_eq!(mc_choice(menu(0b111), &r, &l), menu(0b011));
        assert_eq!(mc_choice(menu(0b110), &r, &l), menu(0b010));
        assert_eq!(mc_choice(menu(0b001), &r, &l), menu(0b001));
    }

    /// Indifferent first stage with veto order x > y > z: the table is
    /// {x}, {x}, {y} on the doubletons and {x,y} on the triple.
    #[test]
    fn generate_indifference_veto_table() {
        let c = generate(&W::total_indifference(3), &chain(&[0, 1, 2]));
        assert_eq!(c.choice(menu(0b011)), menu(0b001));
        assert_eq!(c.choice(menu(0b101)), menu(0b001));
        assert_eq!(c.choice(menu(0b110)), menu(0b010));
        assert_eq!(c.choice(menu(0b111)), menu(0b011));
    }

    /// A decisive first stage makes the veto order irrelevant, and the same
    /// behaviour also arises from a tied first stage with the right veto.
    #[test]
    fn generate_decisive_and_tied_agree() {
        let expected: Vec<(u16, u16)> =
            vec![(0b011, 0b010), (0b101, 0b001), (0b110, 0b010), (0b111, 0b010)];

        let decisive = y_above_x_above_z();
        for l in [[0, 1, 2], [2, 1, 0], [1, 2, 0]] {
            let c = generate(&decisive, &chain(&l));
            for &(m, want) in &expected {
                assert_eq!(c.choice(menu(m)), menu(want));
            }
        }

        let tied = generate(&x_ties_y_above_z(), &chain(&[2, 1, 0]));
        for &(m, want) in &expected {
            assert_eq!(tied.choice(menu(m)), menu(want));
        }
    }

    #[test]
    fn generate_rational_cases() {
        let everything = generate_rational(&W::total_indifference(3));
        for m in everything.menus() {
            assert_eq!(everything.choice(m), m);
        }

        let decisive = generate_rational(&y_above_x_above_z());
        assert_eq!(decisive.choice(menu(0b011)), menu(0b010));
        assert_eq!(decisive.choice(menu(0b101)), menu(0b001));
        assert_eq!(decisive.choice(menu(0b110)), menu(0b010));
        assert_eq!(decisive.choice(menu(0b111)), menu(0b010));

        let tied = generate_rational(&x_ties_y_above_z());
        assert_eq!(tied.choice(menu(0b111)), menu(0b011));
    }

    #[test]
    fn removal_impact_cases() {
        // table with r^c = c everywhere: {x,y}, {z}, {y}, {x,y}
        let c = ChoiceCorrespondence::from_table(
            3,
            vec![0, 0b001, 0b010, 0b011, 0b100, 0b100, 0b010, 0b011],
        )
        .unwrap();
        for m in c.menus() {
            assert_eq!(c.removal_impact(m), c.choice(m));
        }

        // the veto-under-indifference table: every member of the triple has
        // impact even though only {x,y} is chosen
        let mc = generate(&W::total_indifference(3), &chain(&[0, 1, 2]));
        assert_eq!(mc.removal_impact(menu(0b111)), menu(0b111));
        assert_eq!(mc.removal_impact(menu(0b011)), menu(0b001));

        // singleton convention
        assert_eq!(mc.removal_impact(menu(0b100)), menu(0b100));
    }

    #[test]
    fn rational_tables_have_no_extra_impact() {
        // maximisation: r^c coincides with c on every menu
        for w in crate::oracle::enumerate_weak_orders(3) {
            let c = generate_rational(&w);
            for m in c.menus() {
                assert_eq!(c.removal_impact(m), c.choice(m), "order {w:?} menu {m:?}");
            }
        }
    }

    #[test]
    fn decisiveness() {
        let c = generate(&y_above_x_above_z(), &chain(&[0, 1, 2]));
        for m in c.menus() {
            assert!(c.is_decisive(m));
        }
        let mc = generate(&W::total_indifference(3), &chain(&[0, 1, 2]));
        assert!(!mc.is_decisive(menu(0b111)));
        assert!(mc.is_decisive(menu(0b001)));
    }

    #[test]
    fn shortlist_size_identity() {
        let r = x_ties_y_above_z();
        let l = chain(&[2, 0, 1]);
        for m in crate::model::all_menus(3) {
            let shortlist = max_set(m, &r);
            let chosen = mc_choice(m, &r, &l);
            assert!(chosen.is_subset_of(shortlist));
            let want = if shortlist.is_singleton() {
                1
            } else {
                shortlist.len() - 1
            };
            assert_eq!(chosen.len(), want);
            assert_eq!(chosen == shortlist, shortlist.is_singleton());
        }
    }
}
