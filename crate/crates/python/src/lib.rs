use std::collections::BTreeMap;

use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;

use diagmon::monoid::{enumerate_brauer, enumerate_jones, kauffman_quotient};
use diagmon::rees::{a2, brandt_b21, nfb_submatrix_classify, tsl, AbelianGroup, SandwichMatrix};
use diagmon::render::{render_ascii, render_svg};
use diagmon::structure::{Involution, WireMonoid};
use diagmon::words::{
    evaluate, first_counterexample, isoterm_witnesses, refute_identity, satisfies_identity, zimin,
};
use diagmon::{Error, FiniteSemigroup, Identity, InvWord, Letter};

fn err(e: Error) -> PyErr {
    match e {
        Error::CircleOverflow => PyArithmeticError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn involution(name: Option<&str>) -> PyResult<Option<Involution>> {
    match name {
        None => Ok(None),
        Some("reflection") | Some("star") => Ok(Some(Involution::Reflection)),
        Some("rotation") | Some("rotate") => Ok(Some(Involution::Rotation)),
        Some(other) => Err(PyValueError::new_err(format!(
            "unknown involution '{other}', expected 'reflection' or 'rotation'"
        ))),
    }
}

fn letter(name: &str) -> PyResult<Letter> {
    name.strip_prefix('x')
        .and_then(|d| d.parse().ok())
        .filter(|&i| i >= 1)
        .map(Letter)
        .ok_or_else(|| PyValueError::new_err(format!("'{name}' is not a letter like 'x1'")))
}

/// An element of the wire monoid: a perfect matching of `1..n, 1'..n'`
/// together with a circle count.
#[pyclass(name = "Chip", module = "diagmon_py", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyChip(diagmon::Chip);

#[pymethods]
impl PyChip {
    /// Parses a literal such as `W3:1-2,1'-2',3-3';0`.
    #[new]
    fn new(literal: &str) -> PyResult<Self> {
        literal.parse().map(PyChip).map_err(err)
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        PyChip(diagmon::Chip::identity(n))
    }

    #[staticmethod]
    fn hook(n: usize, i: usize) -> PyResult<Self> {
        diagmon::Chip::hook(n, i).map(PyChip).map_err(err)
    }

    #[staticmethod]
    fn circle(n: usize) -> Self {
        PyChip(diagmon::Chip::circle(n))
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    #[getter]
    fn circles(&self) -> u64 {
        self.0.circles()
    }

    fn __mul__(&self, other: &PyChip) -> PyResult<PyChip> {
        self.0.multiply(&other.0).map(PyChip).map_err(err)
    }

    fn __pow__(&self, k: u64, _modulo: Option<u64>) -> PyResult<PyChip> {
        self.0.pow(k).map(PyChip).map_err(err)
    }

    fn star(&self) -> Self {
        PyChip(self.0.star())
    }

    fn rotate(&self) -> Self {
        PyChip(self.0.rotate())
    }

    fn is_planar(&self) -> bool {
        self.0.is_planar()
    }

    /// The same chip without circles, i.e. its Brauer image.
    fn forget(&self) -> Self {
        PyChip(self.0.with_circles(0))
    }

    #[pyo3(signature = (format = "ascii"))]
    fn render(&self, format: &str) -> PyResult<String> {
        match format {
            "ascii" => Ok(render_ascii(&self.0)),
            "svg" => Ok(render_svg(&self.0)),
            _ => Err(PyValueError::new_err("format must be 'ascii' or 'svg'")),
        }
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Chip(\"{}\")", self.0)
    }
}

/// A finite semigroup given by its Cayley table, possibly with an involution.
#[pyclass(name = "Semigroup", module = "diagmon_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PySemigroup(FiniteSemigroup);

impl PySemigroup {
    fn element(&self, x: &Bound<'_, PyAny>) -> PyResult<usize> {
        if let Ok(i) = x.extract::<usize>() {
            if i < self.0.size() {
                return Ok(i);
            }
        }
        if let Ok(label) = x.extract::<String>() {
            if let Some(i) = self.0.index_of(&label) {
                return Ok(i);
            }
        }
        Err(PyValueError::new_err(format!("{x} is not an element (labels: {})", self.0.labels().join(", "))))
    }
}

#[pymethods]
impl PySemigroup {
    /// Reads the table text format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        FiniteSemigroup::from_text(text).map(PySemigroup).map_err(err)
    }

    /// `b21`, `a2` or `tsl`.
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        match name {
            "b21" => Ok(PySemigroup(brandt_b21())),
            "a2" => Ok(PySemigroup(a2())),
            "tsl" => Ok(PySemigroup(tsl())),
            _ => Err(PyValueError::new_err(format!("unknown semigroup '{name}'"))),
        }
    }

    fn to_text(&self) -> String {
        self.0.to_text()
    }

    fn __len__(&self) -> usize {
        self.0.size()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.0.labels().to_vec()
    }

    #[getter]
    fn identity(&self) -> Option<String> {
        self.0.identity().map(|x| self.0.label(x).to_string())
    }

    #[getter]
    fn zero(&self) -> Option<String> {
        self.0.zero().map(|x| self.0.label(x).to_string())
    }

    /// Product of two elements given by label or index; returns the label.
    fn mul(&self, a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>) -> PyResult<String> {
        let (a, b) = (self.element(a)?, self.element(b)?);
        Ok(self.0.label(self.0.mul(a, b)).to_string())
    }

    fn inv(&self, a: &Bound<'_, PyAny>) -> PyResult<Option<String>> {
        let a = self.element(a)?;
        Ok(self.0.inv(a).map(|x| self.0.label(x).to_string()))
    }

    fn idempotents(&self) -> Vec<String> {
        self.0.idempotents().into_iter().map(|x| self.0.label(x).to_string()).collect()
    }

    fn is_isomorphic(&self, other: &PySemigroup) -> bool {
        diagmon::monoid::is_isomorphic(&self.0, &other.0).is_some()
    }

    /// Evaluates a word under a `{"x1": label, ...}` assignment.
    fn evaluate(&self, word: &str, assignment: BTreeMap<String, Bound<'_, PyAny>>) -> PyResult<String> {
        let w: InvWord = word.parse().map_err(err)?;
        let a = assignment
            .iter()
            .map(|(k, v)| Ok((letter(k)?, self.element(v)?)))
            .collect::<PyResult<BTreeMap<_, _>>>()?;
        let v = evaluate(&self.0, &w, &a).map_err(err)?;
        Ok(self.0.label(v).to_string())
    }

    fn satisfies(&self, identity: &str) -> PyResult<bool> {
        let id: Identity = identity.parse().map_err(err)?;
        satisfies_identity(&self.0, &id).map_err(err)
    }

    /// The first assignment falsifying the identity, as `{"x1": label, ...}`.
    fn counterexample(&self, identity: &str) -> PyResult<Option<BTreeMap<String, String>>> {
        let id: Identity = identity.parse().map_err(err)?;
        let found = first_counterexample(&self.0, &id).map_err(err)?;
        Ok(found.map(|a| {
            a.into_iter()
                .map(|(l, v)| (l.to_string(), self.0.label(v).to_string()))
                .collect()
        }))
    }

    fn isoterm_witnesses(&self, word: &str, max_len: usize) -> PyResult<Vec<String>> {
        let w: InvWord = word.parse().map_err(err)?;
        let found = isoterm_witnesses(&self.0, &w, max_len).map_err(err)?;
        Ok(found.iter().map(ToString::to_string).collect())
    }

    fn __repr__(&self) -> String {
        format!("Semigroup(size={}, labels={:?})", self.0.size(), self.0.labels())
    }
}

#[pyfunction]
fn zimin_word(n: u32) -> PyResult<String> {
    if n == 0 {
        return Err(PyValueError::new_err("Zimin words start at n = 1"));
    }
    Ok(zimin(n).to_string())
}

/// Elements of the Jones monoid `J_n` as circle-free chips.
#[pyfunction]
fn jones(n: usize) -> PyResult<Vec<PyChip>> {
    let all = enumerate_jones(n).map_err(err)?;
    Ok(all.into_iter().map(|m| PyChip(diagmon::Chip::from_matching(m, 0))).collect())
}

/// Elements of the Brauer monoid `B_n` as circle-free chips.
#[pyfunction]
fn brauer(n: usize) -> PyResult<Vec<PyChip>> {
    let all = enumerate_brauer(n).map_err(err)?;
    Ok(all.into_iter().map(|m| PyChip(diagmon::Chip::from_matching(m, 0))).collect())
}

/// `K_n / C` with labels given by hook words, optionally with an involution.
#[pyfunction]
#[pyo3(signature = (n, involution = None))]
fn kauffman_quotient_table(n: usize, involution: Option<&str>) -> PyResult<PySemigroup> {
    let q = kauffman_quotient(n, self::involution(involution)?).map_err(err)?;
    Ok(PySemigroup(q.semigroup))
}

/// Searches `K_n` generator products up to `depth` for a counterexample.
#[pyfunction]
#[pyo3(signature = (identity, n, depth, involution = None))]
fn refute_in_kauffman(
    identity: &str,
    n: usize,
    depth: usize,
    involution: Option<&str>,
) -> PyResult<Option<BTreeMap<String, PyChip>>> {
    let id: Identity = identity.parse().map_err(err)?;
    let k = WireMonoid { degree: n, involution: self::involution(involution)? };
    let found = refute_identity(&k, &k.kauffman_generators(), &id, depth).map_err(err)?;
    Ok(found.map(|a| a.into_iter().map(|(l, c)| (l.to_string(), PyChip(c))).collect()))
}

/// Evaluates a word in the wire monoid of the chips' degree.
#[pyfunction]
#[pyo3(signature = (word, assignment, involution = None))]
fn evaluate_chips(
    word: &str,
    assignment: BTreeMap<String, PyChip>,
    involution: Option<&str>,
) -> PyResult<PyChip> {
    let w: InvWord = word.parse().map_err(err)?;
    let degree = assignment
        .values()
        .next()
        .map(|c| c.0.degree())
        .ok_or_else(|| PyValueError::new_err("empty assignment"))?;
    let k = WireMonoid { degree, involution: self::involution(involution)? };
    let a = assignment
        .into_iter()
        .map(|(l, c)| Ok((letter(&l)?, c.0)))
        .collect::<PyResult<BTreeMap<_, _>>>()?;
    evaluate(&k, &w, &a).map(PyChip).map_err(err)
}

/// The first 2x2 certificate in a sandwich matrix, or `None`.
#[pyfunction]
fn rees_classify(matrix: &str, group: &str) -> PyResult<Option<String>> {
    let g: AbelianGroup = group.parse().map_err(err)?;
    let p = SandwichMatrix::parse(matrix, &g).map_err(err)?;
    Ok(nfb_submatrix_classify(&p, &g).map(|c| c.to_string()))
}

#[pymodule]
fn diagmon_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyChip>()?;
    m.add_class::<PySemigroup>()?;
    m.add_function(wrap_pyfunction!(zimin_word, m)?)?;
    m.add_function(wrap_pyfunction!(jones, m)?)?;
    m.add_function(wrap_pyfunction!(brauer, m)?)?;
    m.add_function(wrap_pyfunction!(kauffman_quotient_table, m)?)?;
    m.add_function(wrap_pyfunction!(refute_in_kauffman, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate_chips, m)?)?;
    m.add_function(wrap_pyfunction!(rees_classify, m)?)?;
    Ok(())
}
