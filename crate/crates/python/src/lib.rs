//! Python module `hcmod`.

use std::collections::BTreeMap;

use hcmod_core::ab_diagram::enumerate_ab_diagrams;
use hcmod_core::classify::{self as cls, GenuineFilter, OrbitDatumA, Pair, QuantizationParameterA};
use hcmod_core::exceptional::{self, CoverLevel};
use hcmod_core::finite_group::RootOfUnity;
use hcmod_core::pin::{self, PinElement};
use hcmod_core::roots::{self, CoweightVector, RootSystem};
use hcmod_core::slices::{self, SlicePeriod};
use hcmod_core::{Error, Partition};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

create_exception!(hcmod, HcmodError, PyValueError);

fn err(e: Error) -> PyErr {
    HcmodError::new_err(e.to_string())
}

fn to_py<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let s = serde_json::to_string(value).map_err(|e| HcmodError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (s,))?.unbind())
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(err)
}

#[pyclass(name = "Partition", frozen, skip_from_py_object, module = "hcmod")]
#[derive(Clone)]
struct PyPartition(Partition);

#[pymethods]
impl PyPartition {
    /// Accepts `"3,2,1"` or a non-increasing list of parts.
    #[new]
    fn new(parts: &Bound<'_, PyAny>) -> PyResult<Self> {
        if let Ok(s) = parts.extract::<String>() {
            return Ok(PyPartition(parse(&s)?));
        }
        let v: Vec<i64> = parts.extract()?;
        Ok(PyPartition(Partition::new(&v).map_err(err)?))
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.0.parts().to_vec()
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    #[getter]
    fn largest(&self) -> usize {
        self.0.largest()
    }

    fn transpose(&self) -> Self {
        PyPartition(self.0.transpose())
    }

    fn boundary_codim_at_least_4(&self) -> bool {
        self.0.boundary_codim_at_least_4()
    }

    fn codim2_parts(&self) -> PyResult<Vec<usize>> {
        self.0.codim2_parts().map_err(err)
    }

    fn dominates(&self, other: &PyPartition) -> bool {
        self.0.dominates(&other.0)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition(\"{}\")", self.0)
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        other.extract::<PyRef<'_, PyPartition>>().is_ok_and(|o| o.0 == self.0)
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.0.hash(&mut h);
        h.finish()
    }
}

#[pyclass(name = "PinElement", frozen, skip_from_py_object, module = "hcmod")]
#[derive(Clone, Copy)]
struct PyPinElement(PinElement);

#[pymethods]
impl PyPinElement {
    /// `sign * e_{i_1} ... e_{i_k}` with strictly increasing indices.
    #[new]
    #[pyo3(signature = (sign, indices))]
    fn new(sign: i8, indices: Vec<usize>) -> PyResult<Self> {
        Ok(PyPinElement(PinElement::word(sign, &indices).map_err(err)?))
    }

    /// `E_i` inside `Pin_n`.
    #[staticmethod]
    fn e(i: usize, n: usize) -> PyResult<Self> {
        Ok(PyPinElement(pin::generator_e(i, n).map_err(err)?))
    }

    #[getter]
    fn sign(&self) -> i8 {
        self.0.sign()
    }

    #[getter]
    fn support(&self) -> Vec<usize> {
        self.0.support()
    }

    fn __mul__(&self, other: &PyPinElement) -> Self {
        PyPinElement(pin::pin_mul(&self.0, &other.0))
    }

    fn __neg__(&self) -> Self {
        PyPinElement(self.0.negated())
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        other.extract::<PyRef<'_, PyPinElement>>().is_ok_and(|o| o.0 == self.0)
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.0.hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("PinElement({})", self.0)
    }
}

#[pyclass(name = "ComponentGroup", frozen, skip_from_py_object, module = "hcmod")]
struct PyComponentGroup(pin::ComponentGroup);

#[pymethods]
impl PyComponentGroup {
    #[new]
    fn new(tau: &str) -> PyResult<Self> {
        Ok(PyComponentGroup(pin::component_group(&parse(tau)?).map_err(err)?))
    }

    #[getter]
    fn label(&self) -> String {
        self.0.descriptor()
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn model(&self) -> String {
        self.0.model.to_string()
    }

    #[getter]
    fn elements(&self) -> Vec<String> {
        self.0.group.labels().to_vec()
    }

    /// Odd codimension-2 part to the label of its distinguished element.
    #[getter]
    fn distinguished(&self) -> BTreeMap<usize, String> {
        self.0
            .distinguished
            .iter()
            .map(|(&l, &z)| (l, self.0.group.label(z).to_string()))
            .collect()
    }

    fn character_degrees(&self) -> PyResult<Vec<usize>> {
        Ok(self.0.group.character_table().map_err(err)?.degrees())
    }

    /// Scalar by which the distinguished element at `l` acts in irreducible `row`.
    fn central_scalar(&self, row: usize, l: usize) -> PyResult<String> {
        let z = self.0.distinguished_element(l).map_err(err)?;
        let t = self.0.group.character_table().map_err(err)?;
        Ok(t.central_scalar(row, z).map_err(err)?.to_string())
    }

    fn __repr__(&self) -> String {
        format!("ComponentGroup({}, order {}, {} model)", self.0.descriptor(), self.0.order(), self.0.model)
    }
}

#[pyclass(name = "ClassificationReport", frozen, skip_from_py_object, module = "hcmod")]
struct PyReport(cls::ClassificationReport);

#[pymethods]
impl PyReport {
    #[getter]
    fn verdict(&self) -> &str {
        &self.0.verdict
    }

    /// `(local_systems, hc_modules)`, or `None` when not computed.
    #[getter]
    fn counts(&self) -> Option<(usize, usize)> {
        self.0.counts.map(|c| (c.local_systems, c.hc_modules))
    }

    #[getter]
    fn group(&self) -> Option<String> {
        self.0.component_group.as_ref().map(|g| g.label.clone())
    }

    #[getter]
    fn admitted(&self) -> Vec<usize> {
        self.0.irreducibles.iter().filter(|r| r.admitted).map(|r| r.id).collect()
    }

    #[getter]
    fn notes(&self) -> Vec<String> {
        self.0.notes.clone()
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0).map_err(|e| HcmodError::new_err(e.to_string()))
    }

    fn to_dict(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &self.0)
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        Ok(PyReport(serde_json::from_str(s).map_err(|e| HcmodError::new_err(e.to_string()))?))
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        other.extract::<PyRef<'_, PyReport>>().is_ok_and(|o| o.0 == self.0)
    }

    fn __repr__(&self) -> String {
        format!("ClassificationReport({}, {})", self.0.input.tau, self.0.verdict)
    }
}

/// Classifies irreducible modules with full support on the orbit `tau`.
#[pyfunction]
#[pyo3(signature = (tau, pair = "spin", parameter = None, nonintegral = Vec::new(), genuine = "all"))]
fn classify(
    tau: &str,
    pair: &str,
    parameter: Option<&str>,
    nonintegral: Vec<usize>,
    genuine: &str,
) -> PyResult<PyReport> {
    let tau: Partition = parse(tau)?;
    let pair: Pair = parse(pair)?;
    let genuine: GenuineFilter = parse(genuine)?;
    let lambda = match parameter {
        Some(s) => QuantizationParameterA::parse(s).map_err(err)?,
        None => QuantizationParameterA::zero(tau.largest()),
    }
    .with_nonintegral(nonintegral);
    let datum = OrbitDatumA::new(tau, pair).map_err(err)?;
    Ok(PyReport(cls::classify(&datum, &lambda, genuine).map_err(err)?))
}

/// `(level, reason)` for the `a2` slice with outer involution.
#[pyfunction]
fn a2_outer_verdict(period: &str, scalar: &str) -> PyResult<(String, String)> {
    let p: SlicePeriod = parse(period)?;
    let s: RootOfUnity = parse(scalar)?;
    let v = slices::a2_outer_verdict(&p, s).map_err(err)?;
    Ok((v.level.to_string(), v.reason))
}

#[pyfunction]
fn ab_diagrams(tau: &str, k: usize) -> PyResult<Vec<String>> {
    let d = enumerate_ab_diagrams(&parse(tau)?, k).map_err(err)?;
    Ok(d.iter().map(ToString::to_string).collect())
}

#[pyfunction]
fn exceptional_catalog(py: Python<'_>) -> PyResult<Py<PyAny>> {
    to_py(py, &exceptional::exceptional_catalog())
}

#[pyfunction]
#[pyo3(signature = (form, orbit, level = "ktilde"))]
fn exceptional_verdict(py: Python<'_>, form: &str, orbit: u32, level: &str) -> PyResult<Py<PyAny>> {
    let entry = exceptional::find_entry(form, orbit).map_err(err)?;
    let level: CoverLevel = parse(level)?;
    to_py(py, &exceptional::exceptional_verdict(entry, level).map_err(err)?)
}

/// Fundamental weights of a subalgebra datum at `theta`, given in simple
/// coroot coordinates; returns the values as `p/q` strings and the cover order.
#[pyfunction]
fn evaluate_weights(datum: &str, theta: Vec<String>) -> PyResult<(Vec<String>, i64)> {
    let d = roots::datum(datum).map_err(err)?;
    let rs = RootSystem::new(d.root_type);
    let coords = theta
        .iter()
        .map(|t| t.trim().parse().map_err(|_| HcmodError::new_err(format!("bad rational {t:?}"))))
        .collect::<PyResult<Vec<_>>>()?;
    let theta = CoweightVector::from_coroot_coords(&rs, &coords).map_err(err)?;
    let values = d.evaluate_weights(&theta).map_err(err)?;
    let order = d.cover_order(&theta).map_err(err)?;
    Ok((values.iter().map(ToString::to_string).collect(), order))
}

#[pymodule]
fn hcmod(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("HcmodError", m.py().get_type::<HcmodError>())?;
    m.add_class::<PyPartition>()?;
    m.add_class::<PyPinElement>()?;
    m.add_class::<PyComponentGroup>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(a2_outer_verdict, m)?)?;
    m.add_function(wrap_pyfunction!(ab_diagrams, m)?)?;
    m.add_function(wrap_pyfunction!(exceptional_catalog, m)?)?;
    m.add_function(wrap_pyfunction!(exceptional_verdict, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate_weights, m)?)?;
    Ok(())
}
