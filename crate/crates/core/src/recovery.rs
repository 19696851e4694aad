//! Constructive recovery of the underlying preference pair from observed
//! choices.
//!
//! When the five characterizing conditions hold, the first-stage weak order
//! is revealed by removal impact — `x R y` iff some menu contains `y` while
//! `x` sits in its impact set — and the veto order is revealed by doubleton
//! decisiveness — `x L y` iff `{x} = c({x,y})`. Regenerating from the
//! revealed pair must reproduce the input table exactly; any failure past
//! the condition checks is therefore promoted to an internal-defect error
//! rather than a data property.

use thiserror::Error;

use crate::axioms::{conditions_witness, Witness};
use crate::engine::generate;
use crate::model::{
    Alt, BinaryRelation, ChoiceCorrespondence, LinearOrder, Menu, WeakOrder,
};

/// Failures past the condition gate contradict the characterization, so
/// they indicate a bug in this crate, never a property of the data.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InternalDefect {
    #[error("revealed preference relation is incomplete at ({0}, {1})")]
    PreferenceIncomplete(Alt, Alt),
    #[error("revealed preference relation is intransitive at ({0}, {1}, {2})")]
    PreferenceIntransitive(Alt, Alt, Alt),
    #[error("revealed veto relation is incomplete at ({0}, {1})")]
    VetoIncomplete(Alt, Alt),
    #[error("revealed veto relation is intransitive at ({0}, {1}, {2})")]
    VetoIntransitive(Alt, Alt, Alt),
    #[error("revealed veto relation ties ({0}, {1})")]
    VetoTied(Alt, Alt),
    #[error("regenerated table disagrees with the input at menu {0:?}")]
    RegenerationMismatch(Menu),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RecoveryError {
    /// A characterizing condition fails; the data admits no representation.
    #[error("condition {axiom} violated", axiom = .0.axiom)]
    Condition(Witness),
    #[error("internal defect: {0}")]
    Internal(InternalDefect),
}

/// The revealed first-stage relation: `x R y` iff some menu contains `y`
/// while `x` belongs to its removal-impact set. Complete and transitive
/// only when the conditions hold; `recover` checks.
pub fn reveal_preference(c: &ChoiceCorrespondence) -> BinaryRelation {
    let mut rel = BinaryRelation::empty(c.n());
    for a in c.menus() {
        let impact = c.removal_impact(a);
        for x in impact.alts() {
            for y in a.alts() {
                rel.set(x, y);
            }
        }
    }
    rel
}

/// The revealed veto relation: reflexive, with `x L y` off the diagonal iff
/// the doubleton `{x,y}` decisively picks `x`. Complete iff the table is
/// decisive on every doubleton.
pub fn reveal_veto(c: &ChoiceCorrespondence) -> BinaryRelation {
    let n = c.n();
    let mut rel = BinaryRelation::empty(n);
    for x in 0..n {
        rel.set(x, x);
        for y in 0..n {
            if y != x && c.choice(Menu::singleton(x).with(y)) == Menu::singleton(x) {
                rel.set(x, y);
            }
        }
    }
    rel
}

// Groups alternatives into indifference classes (equal rows) and orders the
// classes by how much they dominate; assumes `rel` is a weak order.
fn weak_order_from_relation(rel: &BinaryRelation) -> WeakOrder {
    let n = rel.n();
    let mut classes: Vec<(u16, Menu)> = Vec::new();
    for x in 0..n {
        let row = rel.row(x);
        match classes.iter_mut().find(|(r, _)| *r == row) {
            Some((_, class)) => *class = class.with(x),
            None => classes.push((row, Menu::singleton(x))),
        }
    }
    // a higher class weakly dominates strictly more alternatives
    classes.sort_by_key(|(row, _)| std::cmp::Reverse(row.count_ones()));
    WeakOrder::new(n, classes.into_iter().map(|(_, c)| c).collect())
        .expect("rows of a weak order partition the universe")
}

// Ranks alternatives by how many others they dominate; assumes `rel` is a
// linear order, which makes the counts pairwise distinct.
fn linear_order_from_relation(rel: &BinaryRelation) -> LinearOrder {
    let mut ranking: Vec<Alt> = (0..rel.n()).collect();
    ranking.sort_by_key(|&x| std::cmp::Reverse(rel.row(x).count_ones()));
    LinearOrder::new(ranking).expect("a linear order ranks without ties")
}

/// Checks the five conditions, reveals the preference pair, and verifies
/// that the pair regenerates the input table exactly.
pub fn recover(c: &ChoiceCorrespondence) -> Result<(WeakOrder, LinearOrder), RecoveryError> {
    if let Some(w) = conditions_witness(c) {
        return Err(RecoveryError::Condition(w));
    }

    let pref = reveal_preference(c);
    if let Some((x, y)) = pref.completeness_violation() {
        return Err(RecoveryError::Internal(InternalDefect::PreferenceIncomplete(x, y)));
    }
    if let Some((x, y, z)) = pref.transitivity_violation() {
        return Err(RecoveryError::Internal(InternalDefect::PreferenceIntransitive(x, y, z)));
    }
    let weak = weak_order_from_relation(&pref);

    let veto = reveal_veto(c);
    if let Some((x, y)) = veto.completeness_violation() {
        return Err(RecoveryError::Internal(InternalDefect::VetoIncomplete(x, y)));
    }
    if let Some((x, y)) = veto.antisymmetry_violation() {
        return Err(RecoveryError::Internal(InternalDefect::VetoTied(x, y)));
    }
    if let Some((x, y, z)) = veto.transitivity_violation() {
        return Err(RecoveryError::Internal(InternalDefect::VetoIntransitive(x, y, z)));
    }
    let linear = linear_order_from_relation(&veto);

    let regenerated = generate(&weak, &linear);
    if let Some(m) = regenerated.first_difference(c) {
        return Err(RecoveryError::Internal(InternalDefect::RegenerationMismatch(m)));
    }
    Ok((weak, linear))
}
