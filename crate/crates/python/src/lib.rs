//! Python bindings. The extension module is named `zerosquare`.
//!
//! Integer entries cross the boundary as Python `int`, prime-field entries as
//! their representative in `0..p`, and `nil16` entries as strings such as
//! `"X+XY"`. Inputs may be `int` or `str` in every ring.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList, PyString};
use zerosquare as zs;
use zs::{Elem, Ring};

create_exception!(zerosquare, ZeroSquareError, PyValueError);

fn err(e: zs::Error) -> PyErr {
    ZeroSquareError::new_err(e.to_string())
}

fn parse_ring(ring: &str) -> PyResult<Ring> {
    ring.parse::<Ring>().map_err(err)
}

fn elem_from_py(ring: Ring, item: &Bound<'_, PyAny>) -> PyResult<Elem> {
    let text = if let Ok(s) = item.cast::<PyString>() {
        s.to_str()?.to_owned()
    } else if let Ok(v) = item.extract::<BigInt>() {
        v.to_string()
    } else {
        return Err(PyTypeError::new_err(format!(
            "matrix entries must be int or str, got {}",
            item.get_type().name()?
        )));
    };
    ring.parse_elem(&text).map_err(err)
}

fn elem_to_py(py: Python<'_>, e: &Elem) -> PyResult<Py<PyAny>> {
    Ok(match e {
        Elem::Int(v) => v.into_pyobject(py)?.into_any().unbind(),
        Elem::Fp(v) => v.into_pyobject(py)?.into_any().unbind(),
        Elem::Nil(_) => e.to_string().into_pyobject(py)?.into_any().unbind(),
    })
}

/// `((r1, r2), (c1, c2), value)` with 1-based indices.
type MinorTuple = ((usize, usize), (usize, usize), Py<PyAny>);

#[pyclass(name = "Matrix", module = "zerosquare", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyMatrix {
    inner: zs::Matrix,
}

impl From<zs::Matrix> for PyMatrix {
    fn from(inner: zs::Matrix) -> Self {
        PyMatrix { inner }
    }
}

#[pymethods]
impl PyMatrix {
    #[new]
    #[pyo3(signature = (rows, ring = "int"))]
    fn new(rows: &Bound<'_, PyAny>, ring: &str) -> PyResult<Self> {
        let ring = parse_ring(ring)?;
        let mut grid = Vec::new();
        for row in rows.try_iter()? {
            let row = row?;
            let mut out = Vec::new();
            for item in row.try_iter()? {
                out.push(elem_from_py(ring, &item?)?);
            }
            grid.push(out);
        }
        zs::Matrix::from_rows(ring, grid).map(Into::into).map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (n, ring = "int"))]
    fn zeros(n: usize, ring: &str) -> PyResult<Self> {
        Ok(zs::Matrix::zeros(parse_ring(ring)?, n, n).into())
    }

    #[staticmethod]
    #[pyo3(signature = (n, ring = "int"))]
    fn identity(n: usize, ring: &str) -> PyResult<Self> {
        Ok(zs::Matrix::identity(parse_ring(ring)?, n).into())
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        zs::Matrix::parse_json(text).map(Into::into).map_err(err)
    }

    fn to_json(&self) -> String {
        self.inner.to_json_string()
    }

    #[getter]
    fn ring(&self) -> String {
        self.inner.ring().to_string()
    }

    #[getter]
    fn shape(&self) -> (usize, usize) {
        (self.inner.rows(), self.inner.cols())
    }

    fn rows<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let rows = PyList::empty(py);
        for i in 0..self.inner.rows() {
            let row = PyList::empty(py);
            for e in self.inner.row(i) {
                row.append(elem_to_py(py, e)?)?;
            }
            rows.append(row)?;
        }
        Ok(rows)
    }

    fn __getitem__(&self, py: Python<'_>, idx: (usize, usize)) -> PyResult<Py<PyAny>> {
        let (i, j) = idx;
        if i >= self.inner.rows() || j >= self.inner.cols() {
            return Err(pyo3::exceptions::PyIndexError::new_err(format!("index ({i}, {j}) out of range")));
        }
        elem_to_py(py, self.inner.get(i, j))
    }

    fn __matmul__(&self, other: &PyMatrix) -> PyResult<PyMatrix> {
        self.inner.mul(&other.inner).map(Into::into).map_err(err)
    }

    fn __add__(&self, other: &PyMatrix) -> PyResult<PyMatrix> {
        self.inner.add(&other.inner).map(Into::into).map_err(err)
    }

    fn __sub__(&self, other: &PyMatrix) -> PyResult<PyMatrix> {
        self.inner.sub(&other.inner).map(Into::into).map_err(err)
    }

    fn square(&self) -> PyResult<PyMatrix> {
        self.inner.square().map(Into::into).map_err(err)
    }

    fn transpose(&self) -> PyMatrix {
        self.inner.transpose().into()
    }

    fn trace(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        elem_to_py(py, &self.inner.trace().map_err(err)?)
    }

    fn det(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        elem_to_py(py, &self.inner.det().map_err(err)?)
    }

    fn is_zero_square(&self) -> PyResult<bool> {
        zs::is_zero_square(&self.inner).map_err(err)
    }

    /// First nonzero 2x2 minor in lexicographic order, or `None`.
    fn nonzero_minor(&self, py: Python<'_>) -> PyResult<Option<MinorTuple>> {
        match self.inner.all_minors2_zero() {
            None => Ok(None),
            Some(m) => {
                let v = self.inner.minor2(m).map_err(err)?;
                Ok(Some((m.rows, m.cols, elem_to_py(py, &v)?)))
            }
        }
    }

    /// Like `nonzero_minor`, but only for zero-square matrices over a domain.
    fn obstruction_witness(&self, py: Python<'_>) -> PyResult<Option<MinorTuple>> {
        match zs::obstruction_witness(&self.inner).map_err(err)? {
            None => Ok(None),
            Some(w) => Ok(Some((w.minor.rows, w.minor.cols, elem_to_py(py, &w.value)?))),
        }
    }

    fn __repr__(&self) -> String {
        format!("Matrix({}, ring={:?})", self.inner.to_text().replace('\n', ""), self.inner.ring().to_string())
    }

    fn __str__(&self) -> String {
        self.inner.to_text()
    }
}

#[pyclass(name = "Certificate", module = "zerosquare", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyCertificate {
    inner: zs::SimilarityCertificate,
}

#[pymethods]
impl PyCertificate {
    #[new]
    fn new(n: usize, r: &Bound<'_, PyAny>, u: &PyMatrix, det_unit: &Bound<'_, PyAny>) -> PyResult<Self> {
        let ring = u.inner.ring();
        Ok(PyCertificate {
            inner: zs::SimilarityCertificate {
                n,
                r: elem_from_py(ring, r)?,
                u: u.inner.clone(),
                det_unit: elem_from_py(ring, det_unit)?,
            },
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn r(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        elem_to_py(py, &self.inner.r)
    }

    #[getter(U)]
    fn u(&self) -> PyMatrix {
        self.inner.u.clone().into()
    }

    #[getter]
    fn det_unit(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        elem_to_py(py, &self.inner.det_unit)
    }

    /// `(ok, reason)` where `reason` is `None` or a kebab-case failure tag.
    fn verify(&self, t: &PyMatrix) -> (bool, Option<&'static str>) {
        let v = zs::verify_certificate(&t.inner, &self.inner);
        (v.ok(), v.reason.map(|r| r.as_str()))
    }

    #[pyo3(signature = (verified = true))]
    fn to_json(&self, verified: bool) -> String {
        serde_json::to_string(&self.inner.to_json(verified)).expect("certificate serializes")
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let json: zs::CertificateJson =
            serde_json::from_str(text).map_err(|e| ZeroSquareError::new_err(format!("certificate: {e}")))?;
        zs::SimilarityCertificate::from_json(&json)
            .map(|inner| PyCertificate { inner })
            .map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Certificate(n={}, r={}, det_unit={})", self.inner.n, self.inner.r, self.inner.det_unit)
    }
}

#[pyfunction(name = "normalize")]
fn py_normalize(t: &PyMatrix) -> PyResult<PyCertificate> {
    zs::normalize(&t.inner).map(|inner| PyCertificate { inner }).map_err(err)
}

#[pyfunction(name = "verify")]
fn py_verify(t: &PyMatrix, cert: &PyCertificate) -> (bool, Option<&'static str>) {
    cert.verify(t)
}

#[pyfunction(name = "counterexample")]
#[pyo3(signature = (n, ring = "int"))]
fn py_counterexample(n: usize, ring: &str) -> PyResult<PyMatrix> {
    zs::counterexample(parse_ring(ring)?, n).map(Into::into).map_err(err)
}

/// `(g, s, t)` with `s a + t b = g`.
#[pyfunction(name = "xgcd")]
#[pyo3(signature = (a, b, ring = "int"))]
fn py_xgcd(py: Python<'_>, a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>, ring: &str) -> PyResult<(Py<PyAny>, Py<PyAny>, Py<PyAny>)> {
    let ring = parse_ring(ring)?;
    let (g, s, t) = ring
        .xgcd(&elem_from_py(ring, a)?, &elem_from_py(ring, b)?)
        .map_err(err)?;
    Ok((elem_to_py(py, &g)?, elem_to_py(py, &s)?, elem_to_py(py, &t)?))
}

#[pyfunction(name = "random_zero_square")]
#[pyo3(signature = (n, bound, seed, steps = 0))]
fn py_random_zero_square(n: usize, bound: i64, seed: u64, steps: usize) -> PyResult<PyMatrix> {
    zs::oracle::random_zero_square(zs::oracle::GenConfig::new(n, bound, seed, steps))
        .map(Into::into)
        .map_err(err)
}

#[pyfunction(name = "oracle_summary")]
fn py_oracle_summary<'py>(py: Python<'py>, p: u64, n: usize) -> PyResult<Bound<'py, PyDict>> {
    let s = zs::oracle::compare_with_brute_force(p, n).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("p", s.p)?;
    d.set_item("n", s.n)?;
    d.set_item("zero_square_count", s.zero_square_count)?;
    d.set_item("verified", s.verified)?;
    d.set_item("oracle_witnesses", s.oracle_witnesses)?;
    d.set_item("mismatches", s.mismatches)?;
    Ok(d)
}

#[pymodule(name = "zerosquare")]
fn zerosquare_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("ZeroSquareError", m.py().get_type::<ZeroSquareError>())?;
    m.add_class::<PyMatrix>()?;
    m.add_class::<PyCertificate>()?;
    m.add_function(wrap_pyfunction!(py_normalize, m)?)?;
    m.add_function(wrap_pyfunction!(py_verify, m)?)?;
    m.add_function(wrap_pyfunction!(py_counterexample, m)?)?;
    m.add_function(wrap_pyfunction!(py_xgcd, m)?)?;
    m.add_function(wrap_pyfunction!(py_random_zero_square, m)?)?;
    m.add_function(wrap_pyfunction!(py_oracle_summary, m)?)?;
    Ok(())
}
