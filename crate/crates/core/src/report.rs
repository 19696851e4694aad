//! Rendering of axiom reports with the dataset's labels, as JSON or plain
//! text.
//!
//! JSON shape:
//!
//! ```json
//! {"axioms": {"alpha": {"pass": false, "witness": {...}}, "beta": {"pass": true, "witness": null}, ...}}
//! ```

use serde_json::{json, Map, Value};

use crate::axioms::{AxiomReport, Witness};
use crate::model::{Menu, Universe};

fn menu_labels(m: Menu, u: &Universe) -> Value {
    Value::Array(
        m.alts()
            .map(|a| Value::String(u.label(a).to_owned()))
            .collect(),
    )
}

pub fn witness_json(w: &Witness, u: &Universe) -> Value {
    json!({
        "kind": w.axiom.key(),
        "alternatives": w.alternatives.iter().map(|&a| u.label(a)).collect::<Vec<_>>(),
        "menus": w.menus.iter().map(|&m| menu_labels(m, u)).collect::<Vec<_>>(),
    })
}

pub fn report_json(report: &AxiomReport, u: &Universe) -> Value {
    let mut axioms = Map::new();
    for (axiom, verdict) in report.iter() {
        let witness = match verdict.witness() {
            Some(w) => witness_json(w, u),
            None => Value::Null,
        };
        axioms.insert(
            axiom.key().to_owned(),
            json!({"pass": verdict.is_pass(), "witness": witness}),
        );
    }
    json!({ "axioms": axioms })
}

/// One line per axiom, mirroring the JSON report.
pub fn report_text(report: &AxiomReport, u: &Universe) -> String {
    let mut out = String::new();
    for (axiom, verdict) in report.iter() {
        match verdict.witness() {
            None => out.push_str(&format!("{axiom}: pass\n")),
            Some(w) => out.push_str(&format!("{axiom}: fail ({})\n", w.describe(u))),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check_all, Axiom};
    use crate::model::ChoiceCorrespondence;

    fn veto_table() -> (Universe, ChoiceCorrespondence) {
        let u = Universe::new(vec!["x", "y", "z"]).unwrap();
        let c = ChoiceCorrespondence::from_table(
            3,
            vec![0, 0b001, 0b010, 0b001, 0b100, 0b001, 0b010, 0b011],
        )
        .unwrap();
        (u, c)
    }

    #[test]
    fn json_shape() {
        let (u, c) = veto_table();
        let report = check_all(&c);
        let v = report_json(&report, &u);
        let axioms = v["axioms"].as_object().unwrap();
        assert_eq!(axioms.len(), 10);
        assert_eq!(axioms["beta"]["pass"], Value::Bool(true));
        assert_eq!(axioms["beta"]["witness"], Value::Null);
        assert_eq!(axioms["alpha"]["pass"], Value::Bool(false));
        assert_eq!(axioms["alpha"]["witness"]["alternatives"][0], "y");
        assert_eq!(
            axioms["alpha"]["witness"]["menus"],
            json!([["x", "y"], ["x", "y", "z"]])
        );
    }

    #[test]
    fn text_mirrors_verdicts() {
        let (u, c) = veto_table();
        let report = check_all(&c);
        let text = report_text(&report, &u);
        assert_eq!(text.lines().count(), 10);
        assert!(text.contains("beta: pass"));
        assert!(text.contains("alpha: fail (alternatives y; menus {x,y}, {x,y,z})"));
        for axiom in Axiom::ALL {
            assert!(text.contains(axiom.key()));
        }
    }
}
