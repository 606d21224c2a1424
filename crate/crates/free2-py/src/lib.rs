//! Python bindings for the `free2` crate behind a module named `free2_py`.
//!
//! `Word` and `CyclicWord` wrap their Rust counterparts one to one; the
//! classifier entry points return `Report` objects whose getters mirror the
//! JSON schema. All errors surface as `ValueError` with the library's
//! message text.

use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;

use free2::classify::{self, ClassificationReport};
use free2::family::{FamilyId, ParamTriple};
use free2::word::{CyclicWord, Word, DEFAULT_LENGTH_CAP};
use free2::{aut, conjugacy, family};

fn value_err(e: free2::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Freely reduced word in the generators x, y and their inverses X, Y.
#[pyclass(name = "Word", frozen, eq, hash)]
#[derive(PartialEq, Eq, Hash)]
struct PyWord(Word);

#[pymethods]
impl PyWord {
    /// Parses an expression such as "x^2 (x y)^-3 Y"; "1" is the empty word.
    #[new]
    #[pyo3(signature = (text = "1"))]
    fn new(text: &str) -> PyResult<Self> {
        Word::parse(text).map(PyWord).map_err(value_err)
    }

    #[staticmethod]
    fn identity() -> Self {
        PyWord(Word::identity())
    }

    #[staticmethod]
    fn x() -> Self {
        PyWord(Word::x())
    }

    #[staticmethod]
    fn y() -> Self {
        PyWord(Word::y())
    }

    /// `u v u^-1 v^-1`.
    #[staticmethod]
    fn commutator(u: &PyWord, v: &PyWord) -> Self {
        PyWord(Word::commutator(&u.0, &v.0))
    }

    /// Run-grouped rendering without spaces, e.g. "xy^2".
    fn compact(&self) -> String {
        self.0.compact()
    }

    fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn exponent_sums(&self) -> (i64, i64) {
        let sums = self.0.exponent_sums();
        (sums.x, sums.y)
    }

    fn inverse(&self) -> Self {
        PyWord(self.0.invert())
    }

    fn cyclic_core(&self) -> PyCyclicWord {
        PyCyclicWord(self.0.cyclic_core())
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Word({:?})", self.0.compact())
    }

    fn __mul__(&self, rhs: &PyWord) -> Self {
        PyWord(self.0.multiply(&rhs.0))
    }

    fn __invert__(&self) -> Self {
        self.inverse()
    }

    fn __pow__(&self, k: i64, r#mod: Option<i64>) -> PyResult<Self> {
        if r#mod.is_some() {
            return Err(PyTypeError::new_err("modular powers are not defined for words"));
        }
        self.0.checked_pow(k, DEFAULT_LENGTH_CAP).map(PyWord).map_err(value_err)
    }
}

/// Conjugacy class of a word, stored as the canonical rotation of its
/// cyclic reduction. Equal values mean conjugate words.
#[pyclass(name = "CyclicWord", frozen, eq, hash)]
#[derive(PartialEq, Eq, Hash)]
struct PyCyclicWord(CyclicWord);

#[pymethods]
impl PyCyclicWord {
    /// Cyclic reduction of a parsed expression.
    #[new]
    #[pyo3(signature = (text = "1"))]
    fn new(text: &str) -> PyResult<Self> {
        Word::parse(text).map(|w| PyCyclicWord(w.cyclic_core())).map_err(value_err)
    }

    /// The canonical rotation as an ordinary word.
    fn representative(&self) -> PyWord {
        PyWord(self.0.representative())
    }

    fn compact(&self) -> String {
        self.0.representative().compact()
    }

    fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn inverted(&self) -> Self {
        PyCyclicWord(self.0.inverted())
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("CyclicWord({:?})", self.compact())
    }
}

/// Whether a word is part of some basis of the free group.
#[pyfunction]
fn is_primitive(w: &PyWord) -> bool {
    aut::is_primitive(&w.0)
}

/// Maximal root decomposition of the cyclic core: returns
/// `(exponent, root, root_is_primitive)`. Raises on the empty word.
#[pyfunction]
fn multiplicity(w: &PyWord) -> PyResult<(u64, PyCyclicWord, bool)> {
    let m = aut::multiplicity(&w.0).map_err(value_err)?;
    Ok((m.exponent, PyCyclicWord(m.root), m.root_is_primitive))
}

/// Whitehead minimization of the cyclic core: returns the minimal cyclic
/// word and the elementary-move factorization that reaches it ("" for the
/// identity automorphism).
#[pyfunction]
fn whitehead_minimize(w: &PyWord) -> (PyCyclicWord, String) {
    let (min, phi) = aut::whitehead_minimize(&w.0.cyclic_core());
    (PyCyclicWord(min), phi.factorization_string())
}

/// Conjugacy up to inversion.
#[pyfunction]
fn equiv(a: &PyWord, b: &PyWord) -> bool {
    conjugacy::equiv(&a.0, &b.0)
}

/// Automorphism-orbit equivalence of cyclic cores. Returns the witness
/// factorization ("" for the identity) or None when the orbits differ.
#[pyfunction]
fn orbit_equivalent(a: &PyWord, b: &PyWord) -> Option<String> {
    aut::orbit_equivalent(&a.0.cyclic_core(), &b.0.cyclic_core())
        .map(|phi| phi.factorization_string())
}

/// Whether a word is conjugate to the basis commutator or its inverse.
#[pyfunction]
fn is_commutator_of_basis(w: &PyWord) -> bool {
    conjugacy::is_commutator_of_basis(&w.0)
}

/// Expands one word-family template. Family tags are c0p, c0pp, c1p, c1pp,
/// l0, l1, d2, m0, m1, dp; the last three take no lift index n.
#[pyfunction]
#[pyo3(signature = (family, p, q, n = 0))]
fn kpq(family: &str, p: i64, q: i64, n: i64) -> PyResult<PyWord> {
    let id = FamilyId::from_tag(family)
        .ok_or_else(|| PyValueError::new_err(format!("unknown family tag {family:?}")))?;
    family::generate(id, ParamTriple::new(n, p, q)).map(PyWord).map_err(value_err)
}

/// The boundary slope 4q - 36p.
#[pyfunction]
fn boundary_slope(p: i64, q: i64) -> i64 {
    family::boundary_slope(p, q)
}

/// One classification record; getters mirror the JSON report schema.
#[pyclass(name = "Report", frozen)]
struct PyReport(ClassificationReport);

#[pymethods]
impl PyReport {
    #[getter]
    fn p(&self) -> i64 {
        self.0.p
    }

    #[getter]
    fn q(&self) -> i64 {
        self.0.q
    }

    /// "trivial", "torus", or "general".
    #[getter]
    fn form(&self) -> &'static str {
        self.0.form.tag()
    }

    #[getter]
    fn torus_params(&self) -> Option<(i64, i64)> {
        self.0.torus_params
    }

    #[getter]
    fn slope(&self) -> i64 {
        self.0.slope
    }

    #[getter]
    fn pi1_injective(&self) -> Option<bool> {
        self.0.pi1_injective
    }

    #[getter]
    fn tunnel_witness(&self) -> Option<String> {
        self.0.tunnel_witness.clone()
    }

    #[getter]
    fn atoroidal_window(&self) -> Option<u32> {
        self.0.atoroidal_window
    }

    #[getter]
    fn atoroidal_ok(&self) -> Option<bool> {
        self.0.atoroidal_ok
    }

    #[getter]
    fn one_one_decided(&self) -> bool {
        self.0.one_one.decided
    }

    #[getter]
    fn one_one_window(&self) -> u32 {
        self.0.one_one.window
    }

    /// `(n, c0_tag, c1_tag, condition)` for a positive decision, else None.
    #[getter]
    fn one_one_witness(&self) -> Option<(i64, String, String, String)> {
        self.0.one_one.witness.as_ref().map(|w| {
            (w.n, w.c0.tag().to_string(), w.c1.tag().to_string(), w.condition.to_string())
        })
    }

    /// `(slope, index)` when defined, else None.
    #[getter]
    fn surgery(&self) -> Option<(i64, u64)> {
        self.0.surgery.as_ref().map(|s| (s.slope, s.seifert_index))
    }

    /// The report as one JSON object, byte-identical to the CLI output.
    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("report serialization is infallible")
    }

    fn __repr__(&self) -> String {
        format!("Report(p={}, q={}, form={:?})", self.0.p, self.0.q, self.0.form.tag())
    }
}

/// Classifies one parameter point.
#[pyfunction]
#[pyo3(signature = (p, q, window = 6))]
fn classify_point(p: i64, q: i64, window: u32) -> PyResult<PyReport> {
    classify::classify_point(p, q, window).map(PyReport).map_err(value_err)
}

/// Classifies an inclusive grid; rows are ordered by p, then q.
#[pyfunction]
#[pyo3(signature = (p_range, q_range, window = 6))]
fn survey(p_range: (i64, i64), q_range: (i64, i64), window: u32) -> PyResult<Vec<PyReport>> {
    let rows = classify::survey(p_range, q_range, window).map_err(value_err)?;
    Ok(rows.into_iter().map(PyReport).collect())
}

#[pymodule]
fn free2_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyWord>()?;
    m.add_class::<PyCyclicWord>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(is_primitive, m)?)?;
    m.add_function(wrap_pyfunction!(multiplicity, m)?)?;
    m.add_function(wrap_pyfunction!(whitehead_minimize, m)?)?;
    m.add_function(wrap_pyfunction!(equiv, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_equivalent, m)?)?;
    m.add_function(wrap_pyfunction!(is_commutator_of_basis, m)?)?;
    m.add_function(wrap_pyfunction!(kpq, m)?)?;
    m.add_function(wrap_pyfunction!(boundary_slope, m)?)?;
    m.add_function(wrap_pyfunction!(classify_point, m)?)?;
    m.add_function(wrap_pyfunction!(survey, m)?)?;
    Ok(())
}
