//! Python bindings for `qrm-core`.
//!
//! Field elements cross the boundary as plain integers (canonical indices),
//! vectors as lists of integers. Reports are exposed as JSON strings so the
//! Python side sees exactly what the CLI prints.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use qrm_core::gf::{Elem, FieldSpec};
use qrm_core::lincode::{self, Limits};
use qrm_core::{grm, puncture, qcode, Error};

create_exception!(qrm, QrmError, PyException, "Raised for any library error.");
create_exception!(
    qrm,
    CapExceeded,
    QrmError,
    "The work cap was reached before an exact answer."
);

fn err(e: Error) -> PyErr {
    match e {
        Error::CapExceeded { .. } | Error::LengthCapExceeded { .. } | Error::NotFound { proven: false, .. } => {
            CapExceeded::new_err(e.to_string())
        }
        _ => QrmError::new_err(e.to_string()),
    }
}

fn limits(cap: Option<u64>, strict: bool) -> Limits {
    let l = cap.map_or_else(Limits::default, Limits::with_cap);
    if strict {
        l.strict()
    } else {
        l
    }
}

fn to_elems(rows: Vec<Vec<u32>>) -> PyResult<Vec<Vec<Elem>>> {
    rows.into_iter()
        .map(|r| {
            r.into_iter()
                .map(|x| Elem::try_from(x).map_err(|_| QrmError::new_err("element out of range")))
                .collect()
        })
        .collect()
}

type IntMatrix = Vec<Vec<u32>>;

fn to_ints(v: &[Elem]) -> Vec<u32> {
    v.iter().map(|&x| x as u32).collect()
}

fn json<T: serde::Serialize>(v: &T) -> PyResult<String> {
    serde_json::to_string(v).map_err(|e| QrmError::new_err(e.to_string()))
}

#[pyclass(name = "LinearCode", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyLinearCode(lincode::LinearCode);

#[pymethods]
impl PyLinearCode {
    #[new]
    fn new(q: u32, n: usize, rows: Vec<Vec<u32>>) -> PyResult<Self> {
        let f = FieldSpec::new(q).map_err(err)?;
        lincode::LinearCode::from_generators(&f, n, to_elems(rows)?)
            .map(Self)
            .map_err(err)
    }

    #[getter]
    fn q(&self) -> u32 {
        self.0.q()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k()
    }

    /// Generator rows in reduced row echelon form.
    fn generator(&self) -> Vec<Vec<u32>> {
        self.0.generator().iter().map(|r| to_ints(r)).collect()
    }

    fn dual(&self) -> Self {
        Self(self.0.dual())
    }

    fn hermitian_dual(&self) -> PyResult<Self> {
        lincode::hermitian_dual(&self.0).map(Self).map_err(err)
    }

    fn contains(&self, v: Vec<u32>) -> PyResult<bool> {
        let v = to_elems(vec![v])?.remove(0);
        self.0.contains(&v).map_err(err)
    }

    fn is_subcode_of(&self, other: &PyLinearCode) -> PyResult<bool> {
        self.0.is_subcode_of(&other.0).map_err(err)
    }

    fn puncture(&self, support: Vec<usize>) -> PyResult<Self> {
        if support.iter().any(|&i| i >= self.0.n()) {
            return Err(QrmError::new_err("support index out of range"));
        }
        Ok(Self(self.0.puncture(&support)))
    }

    /// Returns `(weight, exact)`.
    #[pyo3(signature = (cap=None, strict=false))]
    fn min_weight(&self, cap: Option<u64>, strict: bool) -> PyResult<(usize, bool)> {
        let m = lincode::min_weight(&self.0, &limits(cap, strict)).map_err(err)?;
        Ok((m.weight, m.exact))
    }

    /// Counts `A_0, …, A_n`.
    #[pyo3(signature = (cap=None))]
    fn weight_distribution(&self, cap: Option<u64>) -> PyResult<Vec<u64>> {
        let wd = lincode::weight_distribution(&self.0, &limits(cap, true)).map_err(err)?;
        Ok(wd.counts)
    }

    fn __eq__(&self, other: &PyLinearCode) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("LinearCode[{},{}]_{}", self.0.n(), self.0.k(), self.0.q())
    }
}

#[pyclass(name = "GrmCode", frozen)]
struct PyGrmCode(grm::GrmCode);

#[pymethods]
impl PyGrmCode {
    #[getter]
    fn q(&self) -> u32 {
        self.0.q
    }

    #[getter]
    fn m(&self) -> usize {
        self.0.m
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn k(&self) -> u64 {
        self.0.k_formula
    }

    /// Minimum distance from the closed form.
    #[getter]
    fn d(&self) -> u64 {
        self.0.d_formula
    }

    #[getter]
    fn code(&self) -> PyLinearCode {
        PyLinearCode(self.0.code.clone())
    }

    fn label(&self) -> String {
        self.0.label()
    }

    fn __repr__(&self) -> String {
        format!(
            "{} [{},{},{}]_{}",
            self.0.label(),
            self.0.n(),
            self.0.k_formula,
            self.0.d_formula,
            self.0.q
        )
    }
}

#[pyclass(name = "QuantumCode", frozen)]
struct PyQuantumCode(qcode::QuantumCode);

#[pymethods]
impl PyQuantumCode {
    #[getter]
    fn q(&self) -> u32 {
        self.0.record.q
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.record.n
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.record.k.value
    }

    #[getter]
    fn d(&self) -> usize {
        self.0.record.d.value
    }

    /// True when both `k` and `d` are exact rather than lower bounds.
    #[getter]
    fn exact(&self) -> bool {
        self.0.record.k.exact && self.0.record.d.exact
    }

    #[getter]
    fn pure(&self) -> Option<bool> {
        self.0.record.pure
    }

    #[getter]
    fn mds(&self) -> bool {
        self.0.record.mds
    }

    #[getter]
    fn singleton_slack(&self) -> Option<i64> {
        self.0.record.singleton_slack
    }

    fn params(&self) -> String {
        self.0.record.params()
    }

    fn all_checks_pass(&self) -> bool {
        self.0.record.all_checks_pass()
    }

    fn is_symplectic_self_orthogonal(&self) -> PyResult<bool> {
        self.0.stabilizer.is_symplectic_self_orthogonal().map_err(err)
    }

    /// Stabilizer generators as `(x, z)` rows over GF(q).
    fn symplectic_form(&self) -> PyResult<(IntMatrix, IntMatrix)> {
        let (_, x, z) = self.0.stabilizer.symplectic_form().map_err(err)?;
        let conv = |m: Vec<Vec<Elem>>| m.iter().map(|r| to_ints(r)).collect();
        Ok((conv(x), conv(z)))
    }

    fn to_json(&self) -> PyResult<String> {
        json(&self.0.record)
    }

    fn __repr__(&self) -> String {
        self.0.record.params()
    }
}

#[pyclass(name = "PunctureCode", frozen)]
struct PyPunctureCode(puncture::PunctureCodeRecord);

#[pymethods]
impl PyPunctureCode {
    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn code(&self) -> PyLinearCode {
        PyLinearCode(self.0.pcode.clone())
    }

    /// Finds a codeword of weight `r` and returns it.
    #[pyo3(signature = (r, cap=None, strict=false))]
    fn find_witness(&self, r: usize, cap: Option<u64>, strict: bool) -> PyResult<Vec<u32>> {
        let w = puncture::find_weight_witness(&self.0, r, &limits(cap, strict)).map_err(err)?;
        Ok(to_ints(&w.x))
    }

    /// Builds the punctured quantum code from a codeword `x` of this code.
    #[pyo3(signature = (x, cap=None, strict=false))]
    fn puncture(&self, x: Vec<u32>, cap: Option<u64>, strict: bool) -> PyResult<PyQuantumCode> {
        let lim = limits(cap, strict);
        let x = to_elems(vec![x])?.remove(0);
        let w = puncture::PunctureWitness::new(&self.0, x).map_err(err)?;
        let q = match self.0.kind {
            puncture::PunctureKind::Euclidean => puncture::puncture_css(&self.0, &w, &lim),
            puncture::PunctureKind::Hermitian => puncture::puncture_hermitian(&self.0, &w, &lim),
        };
        q.map(PyQuantumCode).map_err(err)
    }

    fn to_json(&self) -> PyResult<String> {
        json(&self.0.summary())
    }

    fn __repr__(&self) -> String {
        format!("PunctureCode[{},{}]_{}", self.0.n(), self.0.pcode.k(), self.0.pcode.q())
    }
}

#[pyfunction]
fn build_grm(q: u32, m: usize, order: usize) -> PyResult<PyGrmCode> {
    grm::build_grm(q, m, order).map(PyGrmCode).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (c1, c2, cap=None, strict=false))]
fn css(c1: &PyLinearCode, c2: &PyLinearCode, cap: Option<u64>, strict: bool) -> PyResult<PyQuantumCode> {
    qcode::css(&c1.0, &c2.0, &limits(cap, strict))
        .map(PyQuantumCode)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (q, m, nu1, nu2, cap=None, strict=false))]
fn css_grm(q: u32, m: usize, nu1: usize, nu2: usize, cap: Option<u64>, strict: bool) -> PyResult<PyQuantumCode> {
    qcode::css_grm(q, m, nu1, nu2, &limits(cap, strict))
        .map(PyQuantumCode)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (code, cap=None, strict=false))]
fn hermitian(code: &PyLinearCode, cap: Option<u64>, strict: bool) -> PyResult<PyQuantumCode> {
    qcode::hermitian(&code.0, &limits(cap, strict))
        .map(PyQuantumCode)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (q, m, nu, cap=None, strict=false))]
fn hermitian_grm(q: u32, m: usize, nu: usize, cap: Option<u64>, strict: bool) -> PyResult<PyQuantumCode> {
    qcode::hermitian_grm(q, m, nu, &limits(cap, strict))
        .map(PyQuantumCode)
        .map_err(err)
}

#[pyfunction]
fn puncture_code_css(q: u32, m: usize, nu1: usize, nu2: usize) -> PyResult<PyPunctureCode> {
    puncture::puncture_code_css_grm(q, m, nu1, nu2)
        .map(PyPunctureCode)
        .map_err(err)
}

#[pyfunction]
fn puncture_code_hermitian(q: u32, m: usize, nu: usize) -> PyResult<PyPunctureCode> {
    puncture::puncture_code_hermitian_grm(q, m, nu)
        .map(PyPunctureCode)
        .map_err(err)
}

/// Quantum MDS code of length `(ν+1)q`, with the puncture witness.
#[pyfunction]
#[pyo3(signature = (q, nu, cap=None, strict=false))]
fn mds_chain(q: u32, nu: usize, cap: Option<u64>, strict: bool) -> PyResult<(PyQuantumCode, Vec<u32>)> {
    let c = puncture::mds_chain(q, nu, &limits(cap, strict)).map_err(err)?;
    Ok((PyQuantumCode(c.quantum), to_ints(&c.witness.x)))
}

#[pyfunction]
fn subfield_puncture_check(q: u32, m: usize, nu: usize) -> PyResult<bool> {
    puncture::subfield_puncture_check(q, m, nu).map_err(err)
}

#[pymodule]
fn qrm(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("QrmError", m.py().get_type::<QrmError>())?;
    m.add("CapExceeded", m.py().get_type::<CapExceeded>())?;
    m.add_class::<PyLinearCode>()?;
    m.add_class::<PyGrmCode>()?;
    m.add_class::<PyQuantumCode>()?;
    m.add_class::<PyPunctureCode>()?;
    m.add_function(wrap_pyfunction!(build_grm, m)?)?;
    m.add_function(wrap_pyfunction!(css, m)?)?;
    m.add_function(wrap_pyfunction!(css_grm, m)?)?;
    m.add_function(wrap_pyfunction!(hermitian, m)?)?;
    m.add_function(wrap_pyfunction!(hermitian_grm, m)?)?;
    m.add_function(wrap_pyfunction!(puncture_code_css, m)?)?;
    m.add_function(wrap_pyfunction!(puncture_code_hermitian, m)?)?;
    m.add_function(wrap_pyfunction!(mds_chain, m)?)?;
    m.add_function(wrap_pyfunction!(subfield_puncture_check, m)?)?;
    Ok(())
}
