//! Python bindings: `import symset_py`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};

use symset::qsym::{self, GradedVector};
use symset::verifier::campaign::{self, CampaignConfig};
use symset::{perm, tableau, verifier, Partition, Subset};

fn err(e: symset::Error) -> PyErr {
    if e.is_internal() {
        PyRuntimeError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

/// Python dict keyed by tuples (lists are unhashable).
fn tuple_dict<'py, V: IntoPyObject<'py>>(
    py: Python<'py>,
    entries: impl IntoIterator<Item = (Vec<usize>, V)>,
) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    for (k, v) in entries {
        d.set_item(PyTuple::new(py, k)?, v)?;
    }
    Ok(d)
}

fn terms<'py>(py: Python<'py>, v: &GradedVector) -> PyResult<Bound<'py, PyDict>> {
    tuple_dict(py, v.terms().map(|(k, c)| (k.to_vec(), c.clone())))
}

fn subset(n: usize, elems: Vec<usize>) -> PyResult<Subset> {
    if let Some(&e) = elems.iter().find(|&&e| e == 0 || e >= n) {
        return Err(PyValueError::new_err(format!("{e} is not in [1, {}]", n.saturating_sub(1))));
    }
    Subset::from_elements(elems).map_err(err)
}

#[pyclass(name = "Permutation", frozen, eq, ord, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct PyPermutation(perm::Permutation);

#[pymethods]
impl PyPermutation {
    /// Accepts a digit string such as `"4132"`, a comma-separated string, or a list of ints.
    #[new]
    fn new(word: &Bound<'_, PyAny>) -> PyResult<Self> {
        let p = if let Ok(s) = word.extract::<String>() {
            s.parse().map_err(err)?
        } else {
            perm::Permutation::new(word.extract::<Vec<usize>>()?).map_err(err)?
        };
        Ok(PyPermutation(p))
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn word(&self) -> Vec<usize> {
        self.0.to_vec()
    }

    fn descent_set(&self) -> Vec<usize> {
        self.0.descent_set().to_vec()
    }

    fn inverse(&self) -> Self {
        PyPermutation(self.0.inverse())
    }

    /// `self · other`.
    fn compose(&self, other: &PyPermutation) -> PyResult<Self> {
        self.0.compose(&other.0).map(PyPermutation).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation('{}')", self.0)
    }
}

#[pyclass(name = "PermMultiset", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPermMultiset(perm::PermMultiset);

#[pymethods]
impl PyPermMultiset {
    /// `perms` may repeat entries; `degree` is needed only when `perms` is empty.
    #[new]
    #[pyo3(signature = (perms, degree = None))]
    fn new(perms: Vec<PyPermutation>, degree: Option<usize>) -> PyResult<Self> {
        let n = perms.first().map(|p| p.0.degree()).or(degree).unwrap_or(0);
        let b = perm::PermMultiset::from_perms(n, perms.into_iter().map(|p| p.0)).map_err(err)?;
        Ok(PyPermMultiset(b))
    }

    /// Parses the text file format (`<permutation> [x <multiplicity>]` per line).
    #[staticmethod]
    #[pyo3(signature = (text, degree = None))]
    fn parse(text: &str, degree: Option<usize>) -> PyResult<Self> {
        symset::io::parse_multiset(text, degree).map(PyPermMultiset).map_err(err)
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn __len__(&self) -> usize {
        self.0.size() as usize
    }

    fn items(&self) -> Vec<(PyPermutation, u64)> {
        self.0.iter().map(|(p, m)| (PyPermutation(p.clone()), m)).collect()
    }

    fn product(&self, other: &PyPermMultiset) -> PyResult<Self> {
        self.0.product(&other.0).map(PyPermMultiset).map_err(err)
    }

    fn equivalent(&self, other: &PyPermMultiset) -> PyResult<bool> {
        self.0.equivalent(&other.0).map_err(err)
    }

    /// Descent set (as a sorted tuple) to count.
    fn descent_statistic<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        tuple_dict(py, self.0.descent_statistic().iter().map(|(j, c)| (j.to_vec(), c)))
    }

    /// `Q(B)` in the fundamental basis, keyed by composition.
    fn q_fundamental<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        terms(py, &qsym::q_of(&self.0))
    }

    /// `Q(B)` in the monomial quasisymmetric basis.
    fn q_monomial<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        terms(py, &qsym::f_to_m(&qsym::q_of(&self.0)).map_err(err)?)
    }

    /// `(label, schur)`; `schur` is `None` when `B` is not symmetric.
    fn classify<'py>(&self, py: Python<'py>) -> PyResult<(String, Option<Bound<'py, PyDict>>)> {
        let c = qsym::classify(&self.0);
        let schur = c.schur().map(|v| terms(py, v)).transpose()?;
        Ok((c.label().to_string(), schur))
    }

    /// The five-condition report as a JSON string.
    fn check_theorem(&self) -> PyResult<String> {
        verifier::check_theorem(&self.0).map(|r| serde_json::to_string(&r).expect("report serializes")).map_err(err)
    }

    /// `Ψ_U` on every element of a symmetric `B`, as indices into `items()` expanded.
    fn psi(&self, blocks: Vec<Vec<usize>>) -> PyResult<Vec<usize>> {
        let u = symset::OrderedSetPartition::new(blocks).map_err(err)?;
        let sp = symset::psi::SymmetricPsi::new(&self.0).map_err(err)?;
        sp.bijection(&u).map(|o| o.image).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("PermMultiset({})", self.0)
    }
}

#[pyclass(name = "StandardTableau", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyTableau(tableau::StandardTableau);

#[pymethods]
impl PyTableau {
    #[new]
    fn new(rows: Vec<Vec<usize>>) -> PyResult<Self> {
        tableau::StandardTableau::new(rows).map(PyTableau).map_err(err)
    }

    fn rows(&self) -> Vec<Vec<usize>> {
        self.0.rows()
    }

    fn shape(&self) -> Vec<usize> {
        self.0.shape().parts().to_vec()
    }

    fn descent_set(&self) -> Vec<usize> {
        self.0.descent_set().to_vec()
    }

    /// Window promotion on `[a, b]`.
    fn promote(&self, a: usize, b: usize) -> PyResult<Self> {
        tableau::promote(&self.0, a, b).map(|(t, _)| PyTableau(t)).map_err(err)
    }

    fn inverse_promote(&self, a: usize, b: usize) -> PyResult<Self> {
        tableau::inverse_promote(&self.0, a, b).map(PyTableau).map_err(err)
    }

    /// Promotion by a set of values.
    fn promote_set(&self, v: Vec<usize>) -> PyResult<Self> {
        tableau::promote_v(&self.0, &v).map(PyTableau).map_err(err)
    }

    fn knuth_class(&self) -> Vec<PyPermutation> {
        tableau::knuth_class(&self.0).iter().cloned().map(PyPermutation).collect()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("StandardTableau({:?})", self.0.rows())
    }
}

/// Insertion and recording tableaux.
#[pyfunction]
fn rs(pi: &PyPermutation) -> (PyTableau, PyTableau) {
    let pair = tableau::rs(&pi.0);
    (PyTableau(pair.p), PyTableau(pair.q))
}

#[pyfunction]
fn conjugacy_class(n: usize, cycle_type: Vec<usize>) -> PyResult<PyPermMultiset> {
    let lambda = Partition::from_unsorted(cycle_type).map_err(err)?;
    let perms = perm::conjugacy_class(n, &lambda).map_err(err)?;
    perm::PermMultiset::from_perms(n, perms).map(PyPermMultiset).map_err(err)
}

#[pyfunction]
fn j_class(n: usize, j: Vec<usize>) -> PyResult<PyPermMultiset> {
    let perms = perm::inverse_j_class(n, subset(n, j)?).map_err(err)?;
    perm::PermMultiset::from_perms(n, perms).map(PyPermMultiset).map_err(err)
}

#[pyfunction]
fn d_class(n: usize, j: Vec<usize>) -> PyResult<PyPermMultiset> {
    let perms = perm::d_class(n, subset(n, j)?).map_err(err)?;
    perm::PermMultiset::from_perms(n, perms).map(PyPermMultiset).map_err(err)
}

/// Runs a campaign from a JSON configuration and returns the JSON report.
#[pyfunction]
fn run_campaign(py: Python<'_>, config: &str) -> PyResult<String> {
    let cfg: CampaignConfig = serde_json::from_str(config).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let report = py.detach(|| campaign::run_campaign(&cfg)).map_err(err)?;
    Ok(serde_json::to_string(&report).expect("report serializes"))
}

#[pymodule]
fn symset_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyPermMultiset>()?;
    m.add_class::<PyTableau>()?;
    m.add_function(wrap_pyfunction!(rs, m)?)?;
    m.add_function(wrap_pyfunction!(conjugacy_class, m)?)?;
    m.add_function(wrap_pyfunction!(j_class, m)?)?;
    m.add_function(wrap_pyfunction!(d_class, m)?)?;
    m.add_function(wrap_pyfunction!(run_campaign, m)?)?;
    Ok(())
}
