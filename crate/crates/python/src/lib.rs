//! Python bindings for the minimal-compromise choice toolkit.
//!
//! Exposes the core types (`Universe`, `WeakOrder`, `LinearOrder`,
//! `ChoiceCorrespondence`) and the main operations: table generation,
//! axiom checking with witnesses, preference recovery, brute-force search,
//! and census sweeps. Orders use the same text notation as the CLI
//! (`x,y > z`); tables cross the boundary as plain Python data or as the
//! JSON dataset format.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use mc_core::axioms;
use mc_core::dataset;
use mc_core::engine;
use mc_core::model::{Alt, Menu};
use mc_core::oracle;
use mc_core::recovery::{self, RecoveryError};
use mc_core::report;
use mc_core::text;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_to_py(py: Python<'_>, v: &serde_json::Value) -> PyResult<Py<PyAny>> {
    Ok(match v {
        serde_json::Value::Null => py.None(),
        serde_json::Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any().unbind(),
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.into_any().unbind()
            } else {
                n.as_f64()
                    .expect("JSON numbers are i64 or f64 here")
                    .into_pyobject(py)?
                    .into_any()
                    .unbind()
            }
        }
        serde_json::Value::String(s) => s.into_pyobject(py)?.into_any().unbind(),
        serde_json::Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_any().unbind()
        }
        serde_json::Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, item) in map {
                dict.set_item(k, json_to_py(py, item)?)?;
            }
            dict.into_any().unbind()
        }
    })
}

/// A finite set of named alternatives.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Universe {
    inner: mc_core::Universe,
}

#[pymethods]
impl Universe {
    #[new]
    fn new(labels: Vec<String>) -> PyResult<Self> {
        Ok(Universe {
            inner: mc_core::Universe::new(labels).map_err(value_err)?,
        })
    }

    /// Universe of size n labelled a, b, c, …
    #[staticmethod]
    fn of_size(n: u8) -> PyResult<Self> {
        if n == 0 || n as usize > mc_core::Universe::MAX {
            return Err(value_err("universe size must be between 1 and 16"));
        }
        Ok(Universe {
            inner: mc_core::Universe::of_size(n),
        })
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn __len__(&self) -> usize {
        self.inner.n() as usize
    }

    fn __repr__(&self) -> String {
        format!("Universe({:?})", self.inner.labels())
    }
}

impl Universe {
    fn menu_from_labels(&self, labels: &[String]) -> PyResult<Menu> {
        let mut bits = 0u16;
        for label in labels {
            let a = self
                .inner
                .index_of(label)
                .ok_or_else(|| value_err(format!("unknown label {label:?}")))?;
            bits |= 1 << a;
        }
        Menu::try_new(bits).ok_or_else(|| value_err("a menu needs at least one alternative"))
    }

    fn menu_to_labels(&self, m: Menu) -> Vec<String> {
        m.alts().map(|a| self.inner.label(a).to_owned()).collect()
    }
}

/// First-stage preference: an ordered partition into indifference classes.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct WeakOrder {
    universe: mc_core::Universe,
    inner: mc_core::WeakOrder,
}

#[pymethods]
impl WeakOrder {
    /// Parse notation like "x,y > z" (x ties y, both above z).
    #[new]
    fn new(universe: &Universe, notation: &str) -> PyResult<Self> {
        let inner = text::parse_weak_order(notation, &universe.inner).map_err(value_err)?;
        Ok(WeakOrder {
            universe: universe.inner.clone(),
            inner,
        })
    }

    #[staticmethod]
    fn total_indifference(universe: &Universe) -> Self {
        WeakOrder {
            universe: universe.inner.clone(),
            inner: mc_core::WeakOrder::total_indifference(universe.inner.n()),
        }
    }

    /// Indifference classes from best to worst, as lists of labels.
    fn classes(&self) -> Vec<Vec<String>> {
        self.inner
            .classes()
            .iter()
            .map(|c| c.alts().map(|a| self.universe.label(a).to_owned()).collect())
            .collect()
    }

    fn __str__(&self) -> String {
        text::format_weak_order(&self.inner, &self.universe)
    }

    fn __repr__(&self) -> String {
        format!("WeakOrder(\"{}\")", self.__str__())
    }

    fn __eq__(&self, other: &WeakOrder) -> bool {
        self.universe == other.universe && self.inner == other.inner
    }
}

/// Second-stage veto preference: a strict ranking, best first.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct LinearOrder {
    universe: mc_core::Universe,
    inner: mc_core::LinearOrder,
}

#[pymethods]
impl LinearOrder {
    /// Parse notation like "x > y > z".
    #[new]
    fn new(universe: &Universe, notation: &str) -> PyResult<Self> {
        let inner = text::parse_linear_order(notation, &universe.inner).map_err(value_err)?;
        Ok(LinearOrder {
            universe: universe.inner.clone(),
            inner,
        })
    }

    /// Labels from best to worst.
    fn ranking(&self) -> Vec<String> {
        self.inner
            .ranking()
            .iter()
            .map(|&a: &Alt| self.universe.label(a).to_owned())
            .collect()
    }

    fn __str__(&self) -> String {
        text::format_linear_order(&self.inner, &self.universe)
    }

    fn __repr__(&self) -> String {
        format!("LinearOrder(\"{}\")", self.__str__())
    }

    fn __eq__(&self, other: &LinearOrder) -> bool {
        self.universe == other.universe && self.inner == other.inner
    }
}

/// A total choice correspondence over every nonempty menu.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct ChoiceCorrespondence {
    universe: mc_core::Universe,
    inner: mc_core::ChoiceCorrespondence,
}

#[pymethods]
impl ChoiceCorrespondence {
    /// The minimal-compromise table of a preference pair: shortlist the
    /// weak order's maximal alternatives, then veto the linear order's
    /// least preferred shortlisted one when several survive.
    #[staticmethod]
    fn generate(weak: &WeakOrder, linear: &LinearOrder) -> PyResult<Self> {
        if weak.universe != linear.universe {
            return Err(value_err("orders must share a universe"));
        }
        Ok(ChoiceCorrespondence {
            universe: weak.universe.clone(),
            inner: engine::generate(&weak.inner, &linear.inner),
        })
    }

    /// Plain maximisation of a weak order on every menu.
    #[staticmethod]
    fn generate_rational(weak: &WeakOrder) -> Self {
        ChoiceCorrespondence {
            universe: weak.universe.clone(),
            inner: engine::generate_rational(&weak.inner),
        }
    }

    /// Parse the JSON dataset format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let ds = dataset::parse_dataset(text).map_err(value_err)?;
        Ok(ChoiceCorrespondence {
            universe: ds.universe,
            inner: ds.correspondence,
        })
    }

    /// Canonical JSON dataset serialization.
    fn to_json(&self) -> String {
        dataset::to_canonical_json(&dataset::ChoiceDataset {
            universe: self.universe.clone(),
            correspondence: self.inner.clone(),
        })
    }

    #[getter]
    fn universe(&self) -> Universe {
        Universe {
            inner: self.universe.clone(),
        }
    }

    /// Chosen alternatives of a menu given as a list of labels.
    fn choice(&self, menu: Vec<String>) -> PyResult<Vec<String>> {
        let u = Universe {
            inner: self.universe.clone(),
        };
        let m = u.menu_from_labels(&menu)?;
        Ok(u.menu_to_labels(self.inner.choice(m)))
    }

    /// Members of a menu whose removal changes the chosen set.
    fn removal_impact(&self, menu: Vec<String>) -> PyResult<Vec<String>> {
        let u = Universe {
            inner: self.universe.clone(),
        };
        let m = u.menu_from_labels(&menu)?;
        Ok(u.menu_to_labels(self.inner.removal_impact(m)))
    }

    fn is_decisive(&self, menu: Vec<String>) -> PyResult<bool> {
        let u = Universe {
            inner: self.universe.clone(),
        };
        Ok(self.inner.is_decisive(u.menu_from_labels(&menu)?))
    }

    /// Verdict of one axiom: "alpha", "beta", "gamma", "nbc", "warp", or
    /// "cond1" … "cond5".
    fn passes(&self, axiom: &str) -> PyResult<bool> {
        let a = axioms::Axiom::from_key(axiom)
            .ok_or_else(|| value_err(format!("unknown axiom {axiom:?}")))?;
        Ok(axioms::check(&self.inner, a).is_pass())
    }

    /// All ten verdicts with witnesses, as nested dicts mirroring the CLI's
    /// JSON report.
    fn axiom_report(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let report = axioms::check_all(&self.inner);
        json_to_py(py, &report::report_json(&report, &self.universe))
    }

    /// Whether the five characterizing conditions all hold.
    fn conditions_hold(&self) -> bool {
        axioms::conditions_hold(&self.inner)
    }

    /// Recover a representing (WeakOrder, LinearOrder) pair. Raises
    /// ValueError naming the violated condition when none exists.
    fn recover(&self) -> PyResult<(WeakOrder, LinearOrder)> {
        match recovery::recover(&self.inner) {
            Ok((w, l)) => Ok((
                WeakOrder {
                    universe: self.universe.clone(),
                    inner: w,
                },
                LinearOrder {
                    universe: self.universe.clone(),
                    inner: l,
                },
            )),
            Err(RecoveryError::Condition(w)) => Err(value_err(format!(
                "condition {} violated: {}",
                w.axiom,
                w.describe(&self.universe)
            ))),
            Err(RecoveryError::Internal(defect)) => {
                Err(PyRuntimeError::new_err(defect.to_string()))
            }
        }
    }

    /// Every representing pair found by exhaustive search.
    fn representations(&self) -> Vec<(WeakOrder, LinearOrder)> {
        oracle::brute_force_representations(&self.inner)
            .into_iter()
            .map(|(w, l)| {
                (
                    WeakOrder {
                        universe: self.universe.clone(),
                        inner: w,
                    },
                    LinearOrder {
                        universe: self.universe.clone(),
                        inner: l,
                    },
                )
            })
            .collect()
    }

    /// Every weak order whose plain maximisation matches this table.
    fn rationalizations(&self) -> Vec<WeakOrder> {
        oracle::brute_force_rationalize(&self.inner)
            .into_iter()
            .map(|w| WeakOrder {
                universe: self.universe.clone(),
                inner: w,
            })
            .collect()
    }

    fn __eq__(&self, other: &ChoiceCorrespondence) -> bool {
        self.universe == other.universe && self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!(
            "ChoiceCorrespondence(n={}, menus={})",
            self.universe.n(),
            self.inner.menus().count()
        )
    }
}

/// All weak orders on the universe (ordered set partitions).
#[pyfunction]
fn weak_orders(universe: &Universe) -> Vec<WeakOrder> {
    oracle::enumerate_weak_orders(universe.inner.n())
        .into_iter()
        .map(|w| WeakOrder {
            universe: universe.inner.clone(),
            inner: w,
        })
        .collect()
}

/// All linear orders on the universe (permutations).
#[pyfunction]
fn linear_orders(universe: &Universe) -> Vec<LinearOrder> {
    oracle::enumerate_linear_orders(universe.inner.n())
        .into_iter()
        .map(|l| LinearOrder {
            universe: universe.inner.clone(),
            inner: l,
        })
        .collect()
}

/// Number of total choice correspondences on a universe of size n.
#[pyfunction]
fn census_size(n: u8) -> PyResult<u128> {
    if n == 0 || n > 5 {
        return Err(value_err("census size is tracked for 1 ≤ n ≤ 5"));
    }
    Ok(oracle::census_size(n))
}

/// Sweep the census (all tables, or `sample` seeded-random ones) checking
/// that conditions, brute-force search, and recovery agree on every table.
/// Returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (n, sample=None, seed=42, shards=1))]
fn characterization_sweep(
    py: Python<'_>,
    n: u8,
    sample: Option<u64>,
    seed: u64,
    shards: usize,
) -> PyResult<Py<PyAny>> {
    if n == 0 || n > 4 {
        return Err(value_err("sweeps support 1 ≤ n ≤ 4"));
    }
    if shards == 0 {
        return Err(value_err("shards must be at least 1"));
    }
    let mode = match sample {
        Some(count) => oracle::SweepMode::Sample { count, seed },
        None => oracle::SweepMode::Exhaustive,
    };
    let report = py.detach(|| oracle::characterization_sweep(n, mode, shards));

    let dict = PyDict::new(py);
    dict.set_item("n", report.n)?;
    dict.set_item(
        "mode",
        match report.mode {
            oracle::SweepMode::Exhaustive => "exhaustive".to_owned(),
            oracle::SweepMode::Sample { count, seed } => format!("sample({count}, seed={seed})"),
        },
    )?;
    dict.set_item("scanned", report.scanned)?;
    dict.set_item("conditions_pass", report.conditions_pass)?;
    dict.set_item("representable", report.representable)?;
    dict.set_item("recovered", report.recovered)?;
    dict.set_item("discrepancies", report.discrepancy_count)?;
    Ok(dict.into_any().unbind())
}

/// The four bundled example tables as dataset JSON strings, keyed by name.
#[pyfunction]
fn bundled_fixtures(py: Python<'_>) -> PyResult<Py<PyAny>> {
    let dict = PyDict::new(py);
    dict.set_item("indifference_veto", mc_core::fixtures::INDIFFERENCE_VETO)?;
    dict.set_item("rational_decisive", mc_core::fixtures::RATIONAL_DECISIVE)?;
    dict.set_item("impact_coincides", mc_core::fixtures::IMPACT_COINCIDES)?;
    dict.set_item("beta_only", mc_core::fixtures::BETA_ONLY)?;
    Ok(dict.into_any().unbind())
}

#[pymodule]
fn mc_choice(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<Universe>()?;
    m.add_class::<WeakOrder>()?;
    m.add_class::<LinearOrder>()?;
    m.add_class::<ChoiceCorrespondence>()?;
    m.add_function(wrap_pyfunction!(weak_orders, m)?)?;
    m.add_function(wrap_pyfunction!(linear_orders, m)?)?;
    m.add_function(wrap_pyfunction!(census_size, m)?)?;
    m.add_function(wrap_pyfunction!(characterization_sweep, m)?)?;
    m.add_function(wrap_pyfunction!(bundled_fixtures, m)?)?;
    Ok(())
}
