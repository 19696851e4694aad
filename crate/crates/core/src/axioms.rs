//! Executable consistency axioms and the five characterizing conditions,
//! each returning a verdict plus a replayable witness on failure.
//!
//! Every checker scans in the canonical order — menus by (size, value),
//! alternatives ascending — and reports the first violation it meets, so
//! witnesses are stable across runs and platforms.

use std::fmt;

use crate::model::{all_menus, subsets, Alt, ChoiceCorrespondence, Menu, Universe};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Alpha,
    Beta,
    Gamma,
    Nbc,
    Warp,
    Cond1,
    Cond2,
    Cond3,
    Cond4,
    Cond5,
}

impl Axiom {
    pub const ALL: [Axiom; 10] = [
        Axiom::Alpha,
        Axiom::Beta,
        Axiom::Gamma,
        Axiom::Nbc,
        Axiom::Warp,
        Axiom::Cond1,
        Axiom::Cond2,
        Axiom::Cond3,
        Axiom::Cond4,
        Axiom::Cond5,
    ];

    pub const CONDITIONS: [Axiom; 5] = [
        Axiom::Cond1,
        Axiom::Cond2,
        Axiom::Cond3,
        Axiom::Cond4,
        Axiom::Cond5,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Axiom::Alpha => "alpha",
            Axiom::Beta => "beta",
            Axiom::Gamma => "gamma",
            Axiom::Nbc => "nbc",
            Axiom::Warp => "warp",
            Axiom::Cond1 => "cond1",
            Axiom::Cond2 => "cond2",
            Axiom::Cond3 => "cond3",
            Axiom::Cond4 => "cond4",
            Axiom::Cond5 => "cond5",
        }
    }

    pub fn from_key(key: &str) -> Option<Axiom> {
        Axiom::ALL.into_iter().find(|a| a.key() == key)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// A concrete violating instance. The menus and alternatives involved are
/// laid out per axiom (see `replays`); feeding the witness back to the
/// correspondence it came from must reproduce the violation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub axiom: Axiom,
    pub menus: Vec<Menu>,
    pub alternatives: Vec<Alt>,
}

impl Witness {
    /// True when this witness demonstrates a genuine violation in `c`.
    pub fn replays(&self, c: &ChoiceCorrespondence) -> bool {
        let m = |i: usize| self.menus[i];
        let a = |i: usize| self.alternatives[i];
        match self.axiom {
            // (x, B, A): x chosen in A, x ∈ B ⊂ A, x not chosen in B
            Axiom::Alpha => {
                self.menus.len() == 2
                    && self.alternatives.len() == 1
                    && m(0).is_strict_subset_of(m(1))
                    && m(0).contains(a(0))
                    && c.choice(m(1)).contains(a(0))
                    && !c.choice(m(0)).contains(a(0))
            }
            // (x, y, A, B): x,y chosen in A ⊂ B, y chosen in B, x not
            Axiom::Beta => {
                self.menus.len() == 2
                    && self.alternatives.len() == 2
                    && m(0).is_strict_subset_of(m(1))
                    && c.choice(m(0)).contains(a(0))
                    && c.choice(m(0)).contains(a(1))
                    && c.choice(m(1)).contains(a(1))
                    && !c.choice(m(1)).contains(a(0))
            }
            // (x, A, B, A∪B): x chosen in both A and B but not in A∪B
            Axiom::Gamma => {
                self.menus.len() == 3
                    && self.alternatives.len() == 1
                    && m(0).union(m(1)) == m(2)
                    && c.choice(m(0)).contains(a(0))
                    && c.choice(m(1)).contains(a(0))
                    && !c.choice(m(2)).contains(a(0))
            }
            // (x, y, z): x beats y, y beats z, but z beats x pairwise
            Axiom::Nbc => {
                self.menus.len() == 3
                    && self.alternatives.len() == 3
                    && m(0) == Menu::singleton(a(0)).with(a(1))
                    && m(1) == Menu::singleton(a(1)).with(a(2))
                    && m(2) == Menu::singleton(a(0)).with(a(2))
                    && c.choice(m(0)).contains(a(0))
                    && c.choice(m(1)).contains(a(1))
                    && !c.choice(m(2)).contains(a(0))
            }
            // (x, y, A, B): x,y ∈ A∩B, x chosen in A, y chosen in B, x not in c(B)
            Axiom::Warp => {
                self.menus.len() == 2
                    && self.alternatives.len() == 2
                    && m(0).contains(a(0))
                    && m(0).contains(a(1))
                    && m(1).contains(a(0))
                    && m(1).contains(a(1))
                    && c.choice(m(0)).contains(a(0))
                    && c.choice(m(1)).contains(a(1))
                    && !c.choice(m(1)).contains(a(0))
            }
            Axiom::Cond1 => replay_expansion(&|m| c.choice(m), self),
            Axiom::Cond2 => replay_expansion(&|m| c.removal_impact(m), self),
            // (A): a nonsingleton menu choosing all of itself
            Axiom::Cond3 => {
                self.menus.len() == 1
                    && self.alternatives.is_empty()
                    && !m(0).is_singleton()
                    && c.choice(m(0)) == m(0)
            }
            // (x, y, A, A∪{y}): x unchosen in A jumps in when y arrives, yet
            // y is chosen too
            Axiom::Cond4 => {
                self.menus.len() == 2
                    && self.alternatives.len() == 2
                    && !m(0).contains(a(1))
                    && m(0).with(a(1)) == m(1)
                    && m(0).contains(a(0))
                    && !c.choice(m(0)).contains(a(0))
                    && c.choice(m(1)).contains(a(0))
                    && c.choice(m(1)).contains(a(1))
            }
            // (A, B): nonsingleton B ⊆ r^c(A) where B minus the choice set
            // is not exactly one alternative
            Axiom::Cond5 => {
                self.menus.len() == 2 && self.alternatives.is_empty() && {
                    let (a_menu, b_menu) = (m(0), m(1));
                    !b_menu.is_singleton()
                        && b_menu.is_subset_of(c.removal_impact(a_menu))
                        && (b_menu.bits() & !c.choice(b_menu).bits()).count_ones() != 1
                }
            }
        }
    }

    /// Human-readable rendering using the universe's labels.
    pub fn describe(&self, u: &Universe) -> String {
        let alts: Vec<&str> = self.alternatives.iter().map(|&a| u.label(a)).collect();
        let menus: Vec<String> = self.menus.iter().map(|&m| u.render_menu(m)).collect();
        match (alts.is_empty(), menus.is_empty()) {
            (true, _) => format!("menus {}", menus.join(", ")),
            (false, true) => format!("alternatives {}", alts.join(", ")),
            (false, false) => format!(
                "alternatives {}; menus {}",
                alts.join(", "),
                menus.join(", ")
            ),
        }
    }
}

// cond1-shaped replay over an arbitrary map; used for cond1 and cond2.
fn replay_expansion(f: &dyn Fn(Menu) -> Menu, w: &Witness) -> bool {
    w.menus.len() == 2 && w.alternatives.len() == 2 && {
        let (a_menu, b_menu) = (w.menus[0], w.menus[1]);
        let (x, y) = (w.alternatives[0], w.alternatives[1]);
        a_menu.is_strict_subset_of(b_menu)
            && a_menu.contains(x)
            && a_menu.contains(y)
            && f(a_menu).contains(x)
            && f(b_menu).contains(y)
            && !f(b_menu).contains(x)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Witness),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }
}

fn fail(axiom: Axiom, menus: Vec<Menu>, alternatives: Vec<Alt>) -> Verdict {
    Verdict::Fail(Witness {
        axiom,
        menus,
        alternatives,
    })
}

/// α: if x is chosen in A and x ∈ B ⊂ A, then x is chosen in B.
pub fn check_alpha(c: &ChoiceCorrespondence) -> Verdict {
    for a in all_menus(c.n()) {
        let chosen = c.choice(a);
        for b in subsets(a) {
            if b == a {
                continue;
            }
            let cb = c.choice(b);
            for x in chosen.alts() {
                if b.contains(x) && !cb.contains(x) {
                    return fail(Axiom::Alpha, vec![b, a], vec![x]);
                }
            }
        }
    }
    Verdict::Pass
}

// Shared scan for the expansion-shaped axioms. With `premise_x_chosen_in_a`
// this is β; without it the premise is only x ∈ c(A), which is cond1.
fn expansion_violation(
    n: u8,
    f: &impl Fn(Menu) -> Menu,
    full_beta_premise: bool,
) -> Option<(Alt, Alt, Menu, Menu)> {
    for b in all_menus(n) {
        let fb = f(b);
        for a in subsets(b) {
            if a == b {
                continue;
            }
            let fa = f(a);
            for x in a.alts() {
                if !fa.contains(x) || fb.contains(x) {
                    continue;
                }
                for y in a.alts() {
                    if y == x || !fb.contains(y) {
                        continue;
                    }
                    if full_beta_premise && !fa.contains(y) {
                        continue;
                    }
                    return Some((x, y, a, b));
                }
            }
        }
    }
    None
}

/// β: if x, y ∈ A ⊂ B are both chosen in A and y is chosen in B, then x is
/// chosen in B.
pub fn check_beta(c: &ChoiceCorrespondence) -> Verdict {
    match expansion_violation(c.n(), &|m| c.choice(m), true) {
        Some((x, y, a, b)) => fail(Axiom::Beta, vec![a, b], vec![x, y]),
        None => Verdict::Pass,
    }
}

/// γ: anything chosen in both A and B is chosen in A ∪ B.
pub fn check_gamma(c: &ChoiceCorrespondence) -> Verdict {
    let menus: Vec<Menu> = all_menus(c.n()).collect();
    for (i, &a) in menus.iter().enumerate() {
        let ca = c.choice(a);
        for &b in &menus[i + 1..] {
            let cb = c.choice(b);
            let both = ca.bits() & cb.bits();
            if both == 0 {
                continue;
            }
            let u = a.union(b);
            let cu = c.choice(u);
            let lost = both & !cu.bits();
            if lost != 0 {
                let x = lost.trailing_zeros() as Alt;
                return fail(Axiom::Gamma, vec![a, b, u], vec![x]);
            }
        }
    }
    Verdict::Pass
}

/// No binary cycles: if x is chosen from {x,y} and y from {y,z}, then x is
/// chosen from {x,z}.
pub fn check_nbc(c: &ChoiceCorrespondence) -> Verdict {
    let n = c.n();
    for x in 0..n {
        for y in 0..n {
            if y == x {
                continue;
            }
            let xy = Menu::singleton(x).with(y);
            if !c.choice(xy).contains(x) {
                continue;
            }
            for z in 0..n {
                if z == x || z == y {
                    continue;
                }
                let yz = Menu::singleton(y).with(z);
                let xz = Menu::singleton(x).with(z);
                if c.choice(yz).contains(y) && !c.choice(xz).contains(x) {
                    return fail(Axiom::Nbc, vec![xy, yz, xz], vec![x, y, z]);
                }
            }
        }
    }
    Verdict::Pass
}

/// WARP: if x, y ∈ A ∩ B, x is chosen in A and y is chosen in B, then x is
/// chosen in B.
pub fn check_warp(c: &ChoiceCorrespondence) -> Verdict {
    let menus: Vec<Menu> = all_menus(c.n()).collect();
    for &a in &menus {
        let ca = c.choice(a);
        for &b in &menus {
            let cb = c.choice(b);
            for x in ca.alts() {
                if !b.contains(x) || cb.contains(x) {
                    continue;
                }
                for y in cb.alts() {
                    if y != x && a.contains(y) {
                        return fail(Axiom::Warp, vec![a, b], vec![x, y]);
                    }
                }
            }
        }
    }
    Verdict::Pass
}

/// cond1: strengthens β by dropping the requirement that y be chosen in the
/// smaller menu — if x, y ∈ A ⊂ B, x ∈ c(A), and y ∈ c(B), then x ∈ c(B).
pub fn check_condition1(c: &ChoiceCorrespondence) -> Verdict {
    match expansion_violation(c.n(), &|m| c.choice(m), false) {
        Some((x, y, a, b)) => fail(Axiom::Cond1, vec![a, b], vec![x, y]),
        None => Verdict::Pass,
    }
}

/// cond2: the removal-impact map satisfies cond1.
pub fn check_condition2(c: &ChoiceCorrespondence) -> Verdict {
    let r = c.removal_impact_table();
    match expansion_violation(c.n(), &|m| r.choice(m), false) {
        Some((x, y, a, b)) => fail(Axiom::Cond2, vec![a, b], vec![x, y]),
        None => Verdict::Pass,
    }
}

/// cond3: no nonsingleton menu chooses all of itself.
pub fn check_condition3(c: &ChoiceCorrespondence) -> Verdict {
    for a in all_menus(c.n()) {
        if !a.is_singleton() && c.choice(a) == a {
            return fail(Axiom::Cond3, vec![a], vec![]);
        }
    }
    Verdict::Pass
}

/// cond4: an alternative unchosen in A that enters the choice set when y is
/// added excludes y from that choice set.
pub fn check_condition4(c: &ChoiceCorrespondence) -> Verdict {
    let n = c.n();
    for a in all_menus(n) {
        let ca = c.choice(a);
        for y in 0..n {
            if a.contains(y) {
                continue;
            }
            let ay = a.with(y);
            let cay = c.choice(ay);
            if !cay.contains(y) {
                continue;
            }
            for x in a.alts() {
                if !ca.contains(x) && cay.contains(x) {
                    return fail(Axiom::Cond4, vec![a, ay], vec![x, y]);
                }
            }
        }
    }
    Verdict::Pass
}

/// cond5: every nonsingleton B inside a removal-impact set chooses all of
/// itself except exactly one alternative.
pub fn check_condition5(c: &ChoiceCorrespondence) -> Verdict {
    for a in all_menus(c.n()) {
        let r = c.removal_impact(a);
        if r.is_singleton() {
            continue;
        }
        for b in subsets(r) {
            if b.is_singleton() {
                continue;
            }
            let dropped = b.bits() & !c.choice(b).bits();
            if dropped.count_ones() != 1 {
                return fail(Axiom::Cond5, vec![a, b], vec![]);
            }
        }
    }
    Verdict::Pass
}

pub fn check(c: &ChoiceCorrespondence, axiom: Axiom) -> Verdict {
    match axiom {
        Axiom::Alpha => check_alpha(c),
        Axiom::Beta => check_beta(c),
        Axiom::Gamma => check_gamma(c),
        Axiom::Nbc => check_nbc(c),
        Axiom::Warp => check_warp(c),
        Axiom::Cond1 => check_condition1(c),
        Axiom::Cond2 => check_condition2(c),
        Axiom::Cond3 => check_condition3(c),
        Axiom::Cond4 => check_condition4(c),
        Axiom::Cond5 => check_condition5(c),
    }
}

/// Verdicts for all ten predicates, in `Axiom::ALL` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    verdicts: Vec<(Axiom, Verdict)>,
}

impl AxiomReport {
    pub fn verdict(&self, axiom: Axiom) -> &Verdict {
        &self
            .verdicts
            .iter()
            .find(|(a, _)| *a == axiom)
            .expect("report covers every axiom")
            .1
    }

    pub fn iter(&self) -> impl Iterator<Item = (Axiom, &Verdict)> {
        self.verdicts.iter().map(|(a, v)| (*a, v))
    }

    /// Whether the five characterizing conditions all pass.
    pub fn conditions_pass(&self) -> bool {
        Axiom::CONDITIONS
            .iter()
            .all(|&a| self.verdict(a).is_pass())
    }
}

pub fn check_all(c: &ChoiceCorrespondence) -> AxiomReport {
    AxiomReport {
        verdicts: Axiom::ALL.into_iter().map(|a| (a, check(c, a))).collect(),
    }
}

/// First failing condition in cond1..cond5 order, if any.
pub fn conditions_witness(c: &ChoiceCorrespondence) -> Option<Witness> {
    Axiom::CONDITIONS.into_iter().find_map(|a| match check(c, a) {
        Verdict::Pass => None,
        Verdict::Fail(w) => Some(w),
    })
}

/// Whether cond1..cond5 all hold. Order-free, so the cheap scans run first;
/// use `conditions_witness` when the canonical first failure matters.
pub fn conditions_hold(c: &ChoiceCorrespondence) -> bool {
    check_condition3(c).is_pass()
        && check_condition4(c).is_pass()
        && check_condition5(c).is_pass()
        && check_condition1(c).is_pass()
        && check_condition2(c).is_pass()
}
