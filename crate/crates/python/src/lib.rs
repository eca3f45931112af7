//! Python module `permdeg`: build groups, compute their degrees exactly and
//! evaluate theorem checks. Degrees come back as `fractions.Fraction`.

use pyo3::create_exception;
use pyo3::exceptions::{PyOSError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use permdeg::corpus::open_question_specs;
use permdeg::theorems::{self, check_group, TheoremId, TheoremVerdict};
use permdeg::{parse_spec, DegreeReport, ExactRatio, FiniteGroup, GroupAnalysis, Limits};

create_exception!(permdeg, PermdegError, PyValueError, "Invalid group, spec or parameter.");

fn to_py(e: permdeg::Error) -> PyErr {
    match e {
        permdeg::Error::Io(io) => PyOSError::new_err(io.to_string()),
        other => PermdegError::new_err(other.to_string()),
    }
}

fn fraction<'py>(py: Python<'py>, r: &ExactRatio) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((r.to_string(),))
}

fn limits(max_order: Option<usize>) -> Limits {
    let mut l = Limits::default();
    if let Some(n) = max_order {
        l.max_order = n;
    }
    l
}

/// A finite group stored as its multiplication table; element 0 is the
/// identity.
#[pyclass(name = "Group", module = "permdeg", frozen)]
struct PyGroup {
    spec: String,
    inner: FiniteGroup,
}

#[pymethods]
impl PyGroup {
    /// Builds a group from a spec such as `"D:8"` or `"S:3xC:5"`.
    #[new]
    #[pyo3(signature = (spec, max_order=None))]
    fn new(spec: &str, max_order: Option<usize>) -> PyResult<Self> {
        let parsed = parse_spec(spec).map_err(to_py)?;
        let inner = parsed.build_with(&limits(max_order)).map_err(to_py)?;
        Ok(PyGroup {
            spec: parsed.to_string(),
            inner,
        })
    }

    /// From a Cayley table with 0-based entries.
    #[staticmethod]
    fn from_table(rows: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(PyGroup {
            spec: "table".into(),
            inner: FiniteGroup::from_table(&rows).map_err(to_py)?,
        })
    }

    /// Closure of permutations of `0..degree` in one-line notation.
    #[staticmethod]
    fn from_generators(degree: usize, generators: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(PyGroup {
            spec: "generators".into(),
            inner: FiniteGroup::from_generators(degree, &generators).map_err(to_py)?,
        })
    }

    #[getter]
    fn spec(&self) -> &str {
        &self.spec
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn canonical_hash(&self) -> &str {
        self.inner.canonical_hash()
    }

    fn mul(&self, a: usize, b: usize) -> PyResult<usize> {
        let n = self.inner.order();
        if a >= n || b >= n {
            return Err(PyValueError::new_err(format!("elements must be below {n}")));
        }
        Ok(self.inner.mul(a, b))
    }

    fn table(&self) -> Vec<Vec<usize>> {
        self.inner.rows()
    }

    fn is_abelian(&self) -> bool {
        self.inner.is_abelian()
    }

    fn commutativity_degree<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.commutativity_degree())
    }

    fn direct_product(&self, other: &PyGroup) -> PyResult<PyGroup> {
        Ok(PyGroup {
            spec: format!("{}x{}", self.spec, other.spec),
            inner: self.inner.direct_product(&other.inner).map_err(to_py)?,
        })
    }

    /// Enumerates the subgroup lattice and every derived invariant.
    fn analyse(&self, py: Python<'_>) -> PyResult<PyAnalysis> {
        let (spec, group) = (self.spec.clone(), self.inner.clone());
        let inner = py
            .detach(move || GroupAnalysis::new(spec, group, &Limits::default()))
            .map_err(to_py)?;
        Ok(PyAnalysis { inner })
    }

    fn __repr__(&self) -> String {
        format!("Group({:?}, order={})", self.spec, self.inner.order())
    }
}

/// Degrees, lattice and permutizer data for one group.
#[pyclass(name = "Analysis", module = "permdeg", frozen)]
struct PyAnalysis {
    inner: GroupAnalysis,
}

#[pymethods]
impl PyAnalysis {
    #[getter]
    fn spec(&self) -> &str {
        &self.inner.spec
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn lattice_size(&self) -> usize {
        self.inner.lattice.len()
    }

    #[getter]
    fn d<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.d)
    }

    #[getter]
    fn sd<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.sd)
    }

    #[getter]
    fn pd<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, self.inner.pd())
    }

    #[getter]
    fn is_p_group(&self) -> bool {
        self.inner.is_p_group()
    }

    #[getter]
    fn is_quasihamiltonian(&self) -> bool {
        self.inner.profile.is_quasihamiltonian
    }

    /// Element lists of every subgroup, in lattice order.
    fn subgroups(&self) -> Vec<Vec<usize>> {
        self.inner.lattice.subgroups().iter().map(|s| s.to_vec()).collect()
    }

    /// `permutizers()[i]` is the permutizer of `subgroups()[i]`.
    fn permutizers(&self) -> Vec<Vec<usize>> {
        self.inner.profile.permutizers.iter().map(|s| s.to_vec()).collect()
    }

    /// Elements of `P(G)`, `Z(G)`, `N(G)`, `Q(G)` and `Q_inf(G)` by name.
    fn special_subgroups<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let prof = &self.inner.profile;
        let out = PyDict::new(py);
        for (name, set) in [
            ("P", &prof.p_of_g),
            ("Z", &prof.center),
            ("N", &prof.norm),
            ("Q", &prof.quasicenter),
            ("Q_inf", &prof.hyperquasicenter),
        ] {
            out.set_item(name, set.to_vec())?;
        }
        Ok(out)
    }

    /// The summary record as a dict.
    fn report<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = DegreeReport::new(&self.inner);
        let out = PyDict::new(py);
        out.set_item("spec", &r.spec)?;
        out.set_item("order", r.order)?;
        out.set_item("lattice_size", r.lattice_size)?;
        out.set_item("d", fraction(py, &r.d.exact)?)?;
        out.set_item("sd", fraction(py, &r.sd.exact)?)?;
        out.set_item("pd", fraction(py, &r.pd.exact)?)?;
        out.set_item("center_order", r.center_order)?;
        out.set_item("norm_order", r.norm_order)?;
        out.set_item("quasicenter_order", r.quasicenter_order)?;
        out.set_item("hyperquasicenter_order", r.hyperquasicenter_order)?;
        out.set_item("p_order", r.p_order)?;
        out.set_item("is_p_group", r.is_p_group)?;
        out.set_item("is_quasihamiltonian", r.is_quasihamiltonian)?;
        Ok(out)
    }

    /// Per-group theorem checks; all of them when `theorems` is omitted.
    #[pyo3(signature = (theorems=None))]
    fn verify<'py>(&self, py: Python<'py>, theorems: Option<Vec<String>>) -> PyResult<Bound<'py, PyList>> {
        let selected: Vec<TheoremId> = match theorems {
            None => TheoremId::ALL.into_iter().filter(|t| t.is_per_group()).collect(),
            Some(names) => names
                .iter()
                .map(|n| n.parse::<TheoremId>())
                .collect::<Result<_, _>>()
                .map_err(to_py)?,
        };
        let verdicts = py
            .detach(|| check_group(&self.inner, &selected, &Limits::default()))
            .map_err(to_py)?;
        verdict_list(py, &verdicts)
    }

    fn __repr__(&self) -> String {
        format!(
            "Analysis({:?}, pd={}, sd={}, d={})",
            self.inner.spec,
            self.inner.pd(),
            self.inner.sd,
            self.inner.d
        )
    }
}

fn verdict_dict<'py>(py: Python<'py>, v: &TheoremVerdict) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    out.set_item("theorem_id", v.theorem_id.to_string())?;
    out.set_item("group", &v.group)?;
    out.set_item("hypotheses_hold", v.hypotheses_hold)?;
    out.set_item("lhs", fraction(py, &v.lhs)?)?;
    out.set_item("relation", v.relation.symbol())?;
    out.set_item("rhs", fraction(py, &v.rhs)?)?;
    out.set_item("conclusion_holds", v.conclusion_holds)?;
    out.set_item("passed", v.passed)?;
    out.set_item("witness", v.witness.clone())?;
    Ok(out)
}

fn verdict_list<'py>(py: Python<'py>, verdicts: &[TheoremVerdict]) -> PyResult<Bound<'py, PyList>> {
    let items = verdicts
        .iter()
        .map(|v| verdict_dict(py, v))
        .collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

/// Shorthand for `Group(spec).analyse()`.
#[pyfunction]
fn analyse(py: Python<'_>, spec: &str) -> PyResult<PyAnalysis> {
    PyGroup::new(spec, None)?.analyse(py)
}

/// Dihedral group of order 2p against the closed forms for pd, sd and d.
#[pyfunction]
#[pyo3(signature = (p, cap=theorems::P61_DEFAULT_CAP))]
fn check_p61<'py>(py: Python<'py>, p: u64, cap: u64) -> PyResult<Bound<'py, PyDict>> {
    let v = py.detach(|| theorems::check_p61(p, cap, &Limits::default())).map_err(to_py)?;
    verdict_dict(py, &v)
}

/// Subgroup count of the dihedral group of order 2n against sigma(n) + tau(n).
#[pyfunction]
fn check_lattice_formula<'py>(py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyDict>> {
    let v = py
        .detach(|| theorems::check_lattice_formula(n, &Limits::default()))
        .map_err(to_py)?;
    verdict_dict(py, &v)
}

/// The corrected D_8 values: pd = 1 and every permutizer is the whole group.
#[pyfunction]
fn check_errata_d8<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
    let v = theorems::check_errata_d8(&Limits::default()).map_err(to_py)?;
    verdict_dict(py, &v)
}

/// Specs of the groups in the open-questions table.
#[pyfunction]
fn open_question_groups() -> Vec<String> {
    open_question_specs().iter().map(|s| s.to_string()).collect()
}

#[pymodule]
#[pyo3(name = "permdeg")]
pub fn permdeg_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGroup>()?;
    m.add_class::<PyAnalysis>()?;
    m.add("PermdegError", m.py().get_type::<PermdegError>())?;
    m.add_function(wrap_pyfunction!(analyse, m)?)?;
    m.add_function(wrap_pyfunction!(check_p61, m)?)?;
    m.add_function(wrap_pyfunction!(check_lattice_formula, m)?)?;
    m.add_function(wrap_pyfunction!(check_errata_d8, m)?)?;
    m.add_function(wrap_pyfunction!(open_question_groups, m)?)?;
    Ok(())
}
