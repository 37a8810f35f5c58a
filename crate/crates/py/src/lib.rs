//! Python bindings: groups from expressions, their power graphs and
//! quotients, and the structure checks.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use powergraph::emit::{labeled_to_dot, to_dot};
use powergraph::expr::{parse_group, BuiltGroup, Evaluator};
use powergraph::power::{
    directed_power_graph, excluded_quotient_power_graph, generator_partition, subgroup_names,
    undirected_power_graph,
};
use powergraph::verify::{self, VerificationReport};
use powergraph::{Error, ExclusionSet, FiniteGroup};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

type Quotient = (Vec<String>, Vec<(usize, usize, u64)>);

fn exclusion(exclude: Vec<u64>) -> PyResult<ExclusionSet> {
    ExclusionSet::new(exclude).map_err(err)
}

fn report_dict<'py>(py: Python<'py>, r: &VerificationReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("claim", r.claim.id())?;
    d.set_item("group", &r.group)?;
    d.set_item("parameters", r.parameters.clone())?;
    d.set_item("hypothesis_holds", r.hypothesis_holds)?;
    d.set_item("conclusion_holds", r.conclusion_holds)?;
    d.set_item("verdict", r.verdict.to_string())?;
    d.set_item("witness", r.witness.as_ref().map(|w| w.to_string()))?;
    d.set_item("note", r.note.clone())?;
    Ok(d)
}

/// A finite group given by its Cayley table.
#[pyclass(frozen, name = "Group")]
struct PyGroup {
    description: String,
    built: BuiltGroup,
}

impl PyGroup {
    fn group(&self) -> &FiniteGroup {
        &self.built.group
    }

    fn element(&self, g: usize) -> PyResult<usize> {
        if g < self.group().order() {
            Ok(g)
        } else {
            Err(PyValueError::new_err(format!("element {g} out of range")))
        }
    }
}

#[pymethods]
impl PyGroup {
    /// Builds a group from an expression such as `"Z3 x Z4"` or
    /// `"sdp(Z7, Z3, mult=2)"`.
    #[new]
    fn new(expr: &str) -> PyResult<Self> {
        let e = parse_group(expr).map_err(err)?;
        let built = Evaluator::new().build(&e).map_err(err)?;
        Ok(Self {
            description: e.to_string(),
            built,
        })
    }

    /// Builds a group from Cayley table text.
    #[staticmethod]
    fn from_table(text: &str) -> PyResult<Self> {
        let group = FiniteGroup::from_cayley_table(text).map_err(err)?;
        Ok(Self {
            description: "table".into(),
            built: BuiltGroup { group, parts: None },
        })
    }

    #[getter]
    fn description(&self) -> &str {
        &self.description
    }

    #[getter]
    fn order(&self) -> usize {
        self.group().order()
    }

    #[getter]
    fn identity(&self) -> usize {
        self.group().identity()
    }

    #[getter]
    fn names(&self) -> Vec<String> {
        self.group().names().to_vec()
    }

    fn name(&self, g: usize) -> PyResult<String> {
        Ok(self.group().name(self.element(g)?).to_string())
    }

    fn find(&self, name: &str) -> Option<usize> {
        self.group().find_by_name(name)
    }

    fn mul(&self, g: usize, h: usize) -> PyResult<usize> {
        Ok(self.group().mul(self.element(g)?, self.element(h)?))
    }

    fn element_order(&self, g: usize) -> PyResult<u64> {
        Ok(self.group().element_order(self.element(g)?))
    }

    fn power(&self, g: usize, k: u64) -> PyResult<usize> {
        Ok(self.group().power(self.element(g)?, k))
    }

    fn is_abelian(&self) -> bool {
        self.group().is_abelian()
    }

    /// Generator sets of the cyclic subgroups.
    fn generator_partition(&self) -> Vec<Vec<usize>> {
        generator_partition(self.group()).cells().to_vec()
    }

    /// Edge list of the power graph with `exclude` removed. Undirected
    /// graphs list both orientations.
    #[pyo3(signature = (exclude = Vec::new(), directed = true))]
    fn power_graph(&self, exclude: Vec<u64>, directed: bool) -> PyResult<Vec<(usize, usize)>> {
        let x = exclusion(exclude)?;
        let g = if directed {
            directed_power_graph(self.group(), &x)
        } else {
            undirected_power_graph(self.group(), &x)
        };
        Ok(g.edges().collect())
    }

    /// `(subgroup names, [(u, v, index)])` for the quotient graph on cyclic
    /// subgroups.
    #[pyo3(signature = (exclude = Vec::new()))]
    fn quotient(&self, exclude: Vec<u64>) -> PyResult<Quotient> {
        let q = excluded_quotient_power_graph(self.group(), &exclusion(exclude)?);
        Ok((subgroup_names(self.group()), q.labeled_edges().collect()))
    }

    #[pyo3(signature = (exclude = Vec::new(), directed = true))]
    fn to_dot(&self, exclude: Vec<u64>, directed: bool) -> PyResult<String> {
        let x = exclusion(exclude)?;
        let g = if directed {
            directed_power_graph(self.group(), &x)
        } else {
            undirected_power_graph(self.group(), &x)
        };
        to_dot(&g, self.group().names(), directed, &self.description).map_err(err)
    }

    #[pyo3(signature = (exclude = Vec::new()))]
    fn quotient_dot(&self, exclude: Vec<u64>) -> PyResult<String> {
        let q = excluded_quotient_power_graph(self.group(), &exclusion(exclude)?);
        labeled_to_dot(&q, &subgroup_names(self.group()), &self.description).map_err(err)
    }

    fn classify_directed<'py>(&self, py: Python<'py>, p: u64) -> PyResult<Bound<'py, PyDict>> {
        report_dict(
            py,
            &verify::classify_directed(self.group(), &self.description, p),
        )
    }

    fn classify_undirected<'py>(&self, py: Python<'py>, p: u64) -> PyResult<Bound<'py, PyDict>> {
        report_dict(
            py,
            &verify::classify_undirected(self.group(), &self.description, p),
        )
    }

    /// Reports for each element `b` of the acting factor, for groups built
    /// as `sdp(Z<q^s>, P, ...)`.
    fn sdp_components<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyDict>>> {
        verify::check_sdp_components(&self.built, &self.description)
            .map_err(err)?
            .iter()
            .map(|r| report_dict(py, r))
            .collect()
    }

    fn __len__(&self) -> usize {
        self.group().order()
    }

    fn __repr__(&self) -> String {
        format!(
            "Group({:?}, order={})",
            self.description,
            self.group().order()
        )
    }
}

/// Canonical rendering of a group expression.
#[pyfunction]
fn canonical(expr: &str) -> PyResult<String> {
    Ok(parse_group(expr).map_err(err)?.to_string())
}

/// Runs every checker over the catalog. Returns the summary counts and the
/// counterexample reports.
#[pyfunction]
#[pyo3(signature = (max_order, primes = vec![2, 3, 5]))]
fn run_catalog<'py>(
    py: Python<'py>,
    max_order: usize,
    primes: Vec<u64>,
) -> PyResult<Bound<'py, PyDict>> {
    let primes = exclusion(primes)?;
    let run = py
        .detach(|| verify::run_catalog(max_order, &primes))
        .map_err(err)?;
    let t = run.summary.totals;
    let d = PyDict::new(py);
    d.set_item("groups", run.summary.groups)?;
    d.set_item("pass", t.pass)?;
    d.set_item("counterexample", t.counterexample)?;
    d.set_item("not_applicable", t.not_applicable)?;
    d.set_item("resource_exhausted", t.resource_exhausted)?;
    let bad = run
        .reports
        .iter()
        .filter(|r| {
            r.verdict != verify::Verdict::Pass && r.verdict != verify::Verdict::NotApplicable
        })
        .map(|r| report_dict(py, r))
        .collect::<PyResult<Vec<_>>>()?;
    d.set_item("failures", bad)?;
    Ok(d)
}

/// Catalog descriptions up to `max_order`.
#[pyfunction]
fn catalog(max_order: usize) -> PyResult<Vec<String>> {
    let c = powergraph::catalog::catalog(max_order).map_err(err)?;
    Ok(c.entries().iter().map(|e| e.description.clone()).collect())
}

#[pymodule]
fn powergraph_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGroup>()?;
    m.add_function(wrap_pyfunction!(canonical, m)?)?;
    m.add_function(wrap_pyfunction!(run_catalog, m)?)?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    Ok(())
}
