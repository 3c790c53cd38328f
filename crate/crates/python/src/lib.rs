//! Python module `pyspecht`: vectors over tabloid and bracket bases, the
//! relation operators, straightening and the verification reports.

use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use specht::garnir::{self, RelationFamily, Straightener};
use specht::json::{emit_bracket_vector, emit_vector, parse_bracket_vector, parse_str, parse_vector, to_string};
use specht::lanke::{self, BracketStraightener};
use specht::linalg::{format_rational, parse_rational, subspace_equal, Ambient, ModuleVector, Rational};
use specht::partition::{self, Partition};
use specht::tabloid::{self, canonicalize_column, Filling, Permutation};

fn err(e: specht::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn shape(parts: Vec<usize>) -> PyResult<Partition> {
    Partition::new(parts).map_err(err)
}

fn family(name: &str) -> PyResult<RelationFamily> {
    name.parse().map_err(err)
}

fn fraction<'py>(py: Python<'py>, c: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((format_rational(c),))
}

fn rational(value: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if let Ok(k) = value.extract::<i64>() {
        return Ok(Rational::from_integer(k.into()));
    }
    parse_rational(&value.str()?.to_string()).map_err(err)
}

/// A vector over column tabloids, row tabloids or comb brackets.
#[pyclass(module = "pyspecht", name = "Vector", eq, frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyVector {
    inner: ModuleVector,
    /// Written as comb brackets rather than tabloids in JSON.
    brackets: bool,
}

// equality is on the vector; the JSON flavour does not matter
impl PartialEq for PyVector {
    fn eq(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

impl From<ModuleVector> for PyVector {
    fn from(inner: ModuleVector) -> Self {
        Self { inner, brackets: false }
    }
}

impl PyVector {
    fn bracket_vector(inner: ModuleVector) -> Self {
        Self { inner, brackets: true }
    }

    fn like(&self, inner: ModuleVector) -> Self {
        Self { inner, brackets: self.brackets }
    }
}

#[pymethods]
impl PyVector {
    /// The column tabloid with the given columns, sign from sorting them.
    #[staticmethod]
    fn column_tabloid(columns: Vec<Vec<usize>>) -> PyResult<Self> {
        let f = Filling::new(columns).map_err(err)?;
        Ok(canonicalize_column(&f).to_vector().into())
    }

    /// The comb bracket `[[x…], y…]`, sign from sorting both slots.
    #[staticmethod]
    fn bracket(x: Vec<usize>, y: Vec<usize>) -> PyResult<Self> {
        let b = lanke::canonicalize_bracket(&x, &y).map_err(err)?;
        Ok(Self::bracket_vector(lanke::omega(&b)))
    }

    /// Parses the JSON term list; `kind` is `"column"`, `"row"` or `"bracket"`
    /// (for brackets `shape` is `[n]`).
    #[staticmethod]
    #[pyo3(signature = (text, shape, kind = "column"))]
    fn from_json(text: &str, shape: Vec<usize>, kind: &str) -> PyResult<Self> {
        let value = parse_str(text).map_err(err)?;
        match kind {
            "column" => Ok(parse_vector(&value, &Ambient::Column(self::shape(shape)?)).map_err(err)?.into()),
            "row" => Ok(parse_vector(&value, &Ambient::Row(self::shape(shape)?)).map_err(err)?.into()),
            "bracket" => {
                let n = shape.first().copied().unwrap_or(0);
                Ok(Self::bracket_vector(parse_bracket_vector(&value, n).map_err(err)?))
            }
            other => Err(PyValueError::new_err(format!("unknown kind {other:?}"))),
        }
    }

    fn to_json(&self) -> PyResult<String> {
        if self.brackets {
            return Ok(to_string(&emit_bracket_vector(&self.inner).map_err(err)?));
        }
        Ok(to_string(&emit_vector(&self.inner)))
    }

    /// `(basis index, Fraction)` pairs in basis order.
    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Vec<(usize, Bound<'py, PyAny>)>> {
        self.inner.iter().map(|(i, c)| Ok((i, fraction(py, c)?))).collect()
    }

    fn coeff<'py>(&self, py: Python<'py>, index: usize) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.coeff(index))
    }

    #[getter]
    fn ambient(&self) -> String {
        self.inner.ambient().to_string()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.ambient().dim()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn scale(&self, c: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(self.like(self.inner.scaled(&rational(c)?)))
    }

    /// `σ·v`, with `σ` given by its images of `1..=n`.
    fn act(&self, images: Vec<usize>) -> PyResult<Self> {
        let sigma = Permutation::new(images).map_err(err)?;
        Ok(self.like(tabloid::act(&sigma, &self.inner).map_err(err)?))
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.inner.check_same_ambient(&other.inner).map_err(err)?;
        Ok(self.like(&self.inner + &other.inner))
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.inner.check_same_ambient(&other.inner).map_err(err)?;
        Ok(self.like(&self.inner - &other.inner))
    }

    fn __neg__(&self) -> Self {
        self.like(-&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> PyResult<String> {
        Ok(format!("Vector({}, {})", self.inner.ambient(), self.to_json()?))
    }
}

#[pyfunction]
fn syt_count(parts: Vec<usize>) -> PyResult<u128> {
    Ok(partition::syt_count(&shape(parts)?))
}

/// Rows of every standard tableau, in enumeration order.
#[pyfunction]
fn standard_tableaux(parts: Vec<usize>) -> PyResult<Vec<Vec<Vec<usize>>>> {
    Ok(partition::syt_enumerate(&shape(parts)?).into_iter().map(|t| t.rows).collect())
}

#[pyfunction]
fn dims<'py>(py: Python<'py>, parts: Vec<usize>) -> PyResult<Bound<'py, PyDict>> {
    let s = shape(parts)?;
    let d = PyDict::new(py);
    d.set_item("m_tilde", Ambient::Column(s.clone()).dim())?;
    d.set_item("specht", partition::syt_count(&s))?;
    d.set_item("row_module", Ambient::Row(s).dim())?;
    Ok(d)
}

#[pyfunction]
fn polytabloid(columns: Vec<Vec<usize>>) -> PyResult<PyVector> {
    Ok(specht::maps::polytabloid(&Filling::new(columns).map_err(err)?).into())
}

#[pyfunction]
fn alpha(v: &PyVector) -> PyResult<PyVector> {
    Ok(specht::maps::alpha(&v.inner).map_err(err)?.into())
}

#[pyfunction]
fn eta(v: &PyVector) -> PyResult<PyVector> {
    Ok(garnir::eta(&v.inner).map_err(err)?.into())
}

#[pyfunction]
fn h_c(v: &PyVector, c: usize) -> PyResult<PyVector> {
    Ok(garnir::h_c(&v.inner, c).map_err(err)?.into())
}

/// Dimension of the relation subspace of one family (`full`, `g1` or `eta`).
#[pyfunction]
#[pyo3(signature = (parts, family_name = "full"))]
fn relation_dim(parts: Vec<usize>, family_name: &str) -> PyResult<usize> {
    Ok(garnir::relation_space(&shape(parts)?, family(family_name)?).map_err(err)?.dim())
}

/// Whether the three relation families span the same subspace.
#[pyfunction]
fn relations_agree(parts: Vec<usize>) -> PyResult<bool> {
    let s = shape(parts)?;
    let spaces = RelationFamily::ALL
        .iter()
        .map(|&f| garnir::relation_space(&s, f))
        .collect::<specht::Result<Vec<_>>>()
        .map_err(err)?;
    for other in &spaces[1..] {
        if !subspace_equal(&spaces[0], other).map_err(err)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(rows of standard tableau, Fraction)` pairs.
#[pyfunction]
#[pyo3(signature = (v, family_name = "full"))]
fn straighten<'py>(
    py: Python<'py>,
    v: &PyVector,
    family_name: &str,
) -> PyResult<Vec<(Vec<Vec<usize>>, Bound<'py, PyAny>)>> {
    let Ambient::Column(s) = v.inner.ambient() else {
        return Err(PyTypeError::new_err("straighten takes a column-tabloid vector"));
    };
    let st = Straightener::new(s, family(family_name)?).map_err(err)?;
    st.straighten(&v.inner)
        .map_err(err)?
        .into_iter()
        .map(|(t, c)| Ok((t.rows, fraction(py, &c)?)))
        .collect()
}

/// The spectrum report as a dict.
#[pyfunction]
fn eta_spectrum<'py>(py: Python<'py>, n: usize, m: usize) -> PyResult<Bound<'py, PyDict>> {
    let r = specht::spectrum::eta_spectrum(n, m).map_err(err)?;
    let lines = PyList::empty(py);
    for l in &r.lines {
        let d = PyDict::new(py);
        d.set_item("eigenvalue", l.eigenvalue)?;
        d.set_item("multiplicity", l.multiplicity)?;
        d.set_item("shape", l.shape.parts().to_vec())?;
        d.set_item("paper_scalar", l.paper_scalar)?;
        d.set_item("component", l.component)?;
        lines.append(d)?;
    }
    let out = PyDict::new(py);
    out.set_item("n", n)?;
    out.set_item("m", m)?;
    out.set_item("lines", lines)?;
    out.set_item("failures", r.failures())?;
    Ok(out)
}

#[pyfunction]
fn phi(v: &PyVector) -> PyResult<PyVector> {
    Ok(PyVector::bracket_vector(lanke::phi(&v.inner).map_err(err)?))
}

#[pyfunction]
fn standard_brackets(n: usize) -> PyResult<Vec<(Vec<usize>, Vec<usize>)>> {
    Ok(lanke::standard_brackets(n).map_err(err)?.into_iter().map(|b| (b.x, b.y)).collect())
}

/// `((x, y), Fraction)` pairs over standard brackets, modulo im φ.
#[pyfunction]
fn straighten_bracket<'py>(
    py: Python<'py>,
    v: &PyVector,
) -> PyResult<Vec<((Vec<usize>, Vec<usize>), Bound<'py, PyAny>)>> {
    let n = lanke::bracket_arity(v.inner.ambient()).map_err(err)?;
    BracketStraightener::new(n)
        .and_then(|s| s.straighten(&v.inner))
        .map_err(err)?
        .into_iter()
        .map(|(b, c)| Ok(((b.x, b.y), fraction(py, &c)?)))
        .collect()
}

#[pyfunction]
fn lanke_verify<'py>(py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyDict>> {
    let r = lanke::catalanke_verify(n).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("ambient", r.ambient)?;
    d.set_item("quotient", r.quotient)?;
    d.set_item("catalan", r.catalan)?;
    d.set_item("im_eta_eq_im_phi", r.im_eta_eq_im_phi)?;
    d.set_item("standard_basis_ok", r.standard_basis_ok)?;
    Ok(d)
}

#[pyfunction]
fn appendix_check(n: usize) -> PyResult<bool> {
    Ok(lanke::appendix_identity_check(n).map_err(err)? && lanke::psi_phi_vanishes(n).map_err(err)?)
}

#[pymodule]
fn pyspecht(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyVector>()?;
    m.add_function(wrap_pyfunction!(syt_count, m)?)?;
    m.add_function(wrap_pyfunction!(standard_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(dims, m)?)?;
    m.add_function(wrap_pyfunction!(polytabloid, m)?)?;
    m.add_function(wrap_pyfunction!(alpha, m)?)?;
    m.add_function(wrap_pyfunction!(eta, m)?)?;
    m.add_function(wrap_pyfunction!(h_c, m)?)?;
    m.add_function(wrap_pyfunction!(relation_dim, m)?)?;
    m.add_function(wrap_pyfunction!(relations_agree, m)?)?;
    m.add_function(wrap_pyfunction!(straighten, m)?)?;
    m.add_function(wrap_pyfunction!(eta_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(phi, m)?)?;
    m.add_function(wrap_pyfunction!(standard_brackets, m)?)?;
    m.add_function(wrap_pyfunction!(straighten_bracket, m)?)?;
    m.add_function(wrap_pyfunction!(lanke_verify, m)?)?;
    m.add_function(wrap_pyfunction!(appendix_check, m)?)?;
    Ok(())
}
