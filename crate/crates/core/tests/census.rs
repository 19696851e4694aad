//! Exhaustive cross-checks over the full n = 3 census of 189 choice
//! correspondences: the classical WARP decompositions, the relationships
//! between the characterizing conditions and the classical axioms, and the
//! agreement of conditions, constructive recovery, and brute-force search
//! on every single table.

use mc_core::axioms::{self, Axiom};
use mc_core::engine::generate;
use mc_core::model::Menu;
use mc_core::oracle::{brute_force_rationalize, brute_force_representations, enumerate_correspondences};
use mc_core::recovery::{recover, RecoveryError};

#[test]
fn warp_decomposes_into_alpha_beta() {
    for c in enumerate_correspondences(3) {
        let warp = axioms::check_warp(&c).is_pass();
        let alpha = axioms::check_alpha(&c).is_pass();
        let beta = axioms::check_beta(&c).is_pass();
        assert_eq!(warp, alpha && beta, "table {c:?}");
    }
}

#[test]
fn warp_decomposes_into_alpha_gamma_nbc() {
    for c in enumerate_correspondences(3) {
        let warp = axioms::check_warp(&c).is_pass();
        let alpha = axioms::check_alpha(&c).is_pass();
        let gamma = axioms::check_gamma(&c).is_pass();
        let nbc = axioms::check_nbc(&c).is_pass();
        assert_eq!(warp, alpha && gamma && nbc, "table {c:?}");
    }
}

#[test]
fn warp_coincides_with_rationalizability() {
    for c in enumerate_correspondences(3) {
        let warp = axioms::check_warp(&c).is_pass();
        let rationalizable = !brute_force_rationalize(&c).is_empty();
        assert_eq!(warp, rationalizable, "table {c:?}");
    }
}

#[test]
fn conditions_one_and_three_imply_nbc() {
    for c in enumerate_correspondences(3) {
        let c1 = axioms::check_condition1(&c).is_pass();
        let c3 = axioms::check_condition3(&c).is_pass();
        if c1 && c3 {
            assert!(axioms::check_nbc(&c).is_pass(), "table {c:?}");
        }
    }
}

#[test]
fn condition1_strictly_strengthens_beta() {
    let mut beta_without_cond1 = 0usize;
    for c in enumerate_correspondences(3) {
        let c1 = axioms::check_condition1(&c).is_pass();
        let beta = axioms::check_beta(&c).is_pass();
        if c1 {
            assert!(beta, "cond1 must imply beta; table {c:?}");
        }
        if beta && !c1 {
            beta_without_cond1 += 1;
        }
    }
    assert!(beta_without_cond1 > 0, "the strengthening must be strict");
}

#[test]
fn condition3_forces_decisive_doubletons() {
    for c in enumerate_correspondences(3) {
        if axioms::check_condition3(&c).is_pass() {
            for m in c.menus().filter(|m| m.len() == 2) {
                assert!(c.is_decisive(m), "table {c:?} menu {m:?}");
            }
        }
    }
}

#[test]
fn conditions_search_and_recovery_agree_everywhere() {
    let mut scanned = 0usize;
    let mut representable = 0usize;
    for c in enumerate_correspondences(3) {
        scanned += 1;
        let conds = axioms::conditions_hold(&c);
        let pairs = brute_force_representations(&c);
        for (w, l) in &pairs {
            assert_eq!(generate(w, l), c, "search self-check");
        }
        match recover(&c) {
            Ok((w, l)) => {
                assert!(conds, "recovery succeeded on a conditions-failing table {c:?}");
                assert!(!pairs.is_empty(), "recovery succeeded but search found nothing");
                assert_eq!(generate(&w, &l), c, "recovered pair must regenerate");
            }
            Err(RecoveryError::Condition(wit)) => {
                assert!(!conds, "condition witness on a conditions-passing table {c:?}");
                assert!(pairs.is_empty(), "search found a pair despite {wit:?}");
                assert!(wit.replays(&c));
            }
            Err(RecoveryError::Internal(defect)) => {
                panic!("internal defect on table {c:?}: {defect}");
            }
        }
        representable += usize::from(!pairs.is_empty());
    }
    assert_eq!(scanned, 189);
    // six decisive tables (one per strict ranking; first-stage ties only
    // reproduce those) plus six veto-under-total-indifference tables
    assert_eq!(representable, 12);
}

#[test]
fn every_failing_verdict_replays_on_the_census() {
    for c in enumerate_correspondences(3) {
        let report = axioms::check_all(&c);
        for (axiom, verdict) in report.iter() {
            if let Some(w) = verdict.witness() {
                assert_eq!(w.axiom, axiom);
                assert!(w.replays(&c), "{axiom} witness fails to replay on {c:?}");
            }
        }
    }
}

#[test]
fn point_universe_is_trivially_representable() {
    let tables: Vec<_> = enumerate_correspondences(1).collect();
    assert_eq!(tables.len(), 1);
    let (w, l) = recover(&tables[0]).unwrap();
    assert_eq!(w.classes(), &[Menu::new(0b1)]);
    assert_eq!(l.ranking(), &[0]);
    assert!(axioms::check_all(&tables[0]).iter().all(|(_, v)| v.is_pass()));
}

#[test]
fn doubleton_census_agrees() {
    let mut representable = 0;
    for c in enumerate_correspondences(2) {
        let conds = axioms::conditions_hold(&c);
        let found = !brute_force_representations(&c).is_empty();
        assert_eq!(conds, found);
        assert_eq!(conds, recover(&c).is_ok());
        representable += u32::from(found);
    }
    // {x} and {y} are representable; choosing both of {x,y} is not
    assert_eq!(representable, 2);
}

/// cond2 must mirror cond1 exactly whenever the impact table coincides
/// with the choice table.
#[test]
fn cond2_tracks_cond1_through_the_impact_table() {
    let mut coinciding = 0usize;
    for c in enumerate_correspondences(3) {
        if c.removal_impact_table() == c {
            coinciding += 1;
            assert_eq!(
                axioms::check_condition1(&c).is_pass(),
                axioms::check_condition2(&c).is_pass(),
                "table {c:?}"
            );
        }
    }
    assert!(coinciding > 0);
}

#[test]
fn census_has_distinct_verdict_profiles() {
    // sanity: the census exercises both verdicts of every axiom
    let mut pass = [0u32; 10];
    let mut fail = [0u32; 10];
    for c in enumerate_correspondences(3) {
        let report = axioms::check_all(&c);
        for (i, axiom) in Axiom::ALL.into_iter().enumerate() {
            if report.verdict(axiom).is_pass() {
                pass[i] += 1;
            } else {
                fail[i] += 1;
            }
        }
    }
    for (i, axiom) in Axiom::ALL.into_iter().enumerate() {
        assert!(pass[i] > 0, "{axiom} never passes");
        assert!(fail[i] > 0, "{axiom} never fails");
    }
}
