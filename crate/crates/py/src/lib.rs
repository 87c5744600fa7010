//! Python bindings. Rational parameters are taken as `Fraction`, `int` or
//! `"a/b"` strings and returned as `fractions.Fraction`.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use qtab::contain;
use qtab::exact::parse_rational;
use qtab::jset;
use qtab::limits;
use qtab::qstat;
use qtab::rsk;
use qtab::{BivarPoly, IntSet, Rational};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rational(x: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if x.is_instance_of::<pyo3::types::PyFloat>() {
        return Err(err("floats are not accepted; pass a Fraction, int or 'a/b' string"));
    }
    parse_rational(&x.str()?.to_string()).map_err(err)
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((r.numer().clone(), r.denom().clone()))
}

fn int_set(v: Vec<usize>) -> IntSet {
    IntSet::new(v)
}

fn poly_dict<'py>(py: Python<'py>, poly: &BivarPoly) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    for (&(i, j), c) in poly.terms() {
        d.set_item((i, j), c.clone())?;
    }
    Ok(d)
}

#[pyclass(name = "Permutation", module = "qtab", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPermutation(qtab::Permutation);

#[pymethods]
impl PyPermutation {
    /// From a one-line word such as `[5, 1, 3, 2, 4]` or a string `"51324"`.
    #[new]
    fn new(word: &Bound<'_, PyAny>) -> PyResult<Self> {
        if let Ok(s) = word.extract::<String>() {
            return s.parse().map(PyPermutation).map_err(err);
        }
        let w: Vec<usize> = word.extract()?;
        qtab::Permutation::new(&w).map(PyPermutation).map_err(err)
    }

    #[staticmethod]
    fn all(n: usize) -> Vec<PyPermutation> {
        qtab::Permutation::all(n).map(PyPermutation).collect()
    }

    #[staticmethod]
    fn involutions(n: usize) -> Vec<PyPermutation> {
        qtab::Permutation::involutions(n).into_iter().map(PyPermutation).collect()
    }

    fn word(&self) -> Vec<usize> {
        self.0.word()
    }

    fn inverse(&self) -> Self {
        PyPermutation(self.0.inverse())
    }

    fn is_involution(&self) -> bool {
        self.0.is_involution()
    }

    fn descents(&self) -> Vec<usize> {
        self.0.descents()
    }

    fn maj(&self) -> usize {
        self.0.maj()
    }

    fn imaj(&self) -> usize {
        self.0.imaj()
    }

    fn restrict_low(&self, k: usize) -> PyResult<Self> {
        self.0.restrict_low(k).map(PyPermutation).map_err(err)
    }

    fn restrict_high(&self, k: usize) -> PyResult<Self> {
        self.0.restrict_high(k).map(PyPermutation).map_err(err)
    }

    fn prefix(&self, k: usize) -> PyResult<Self> {
        self.0.prefix(k).map(PyPermutation).map_err(err)
    }

    fn suffix(&self, k: usize) -> PyResult<Self> {
        self.0.suffix(k).map(PyPermutation).map_err(err)
    }

    fn contains(&self, sigma: &PyPermutation) -> bool {
        contain::contains(&self.0, &sigma.0)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation({:?})", self.0.word())
    }
}

#[pyclass(name = "Tableau", module = "qtab", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyTableau(qtab::Tableau);

#[pymethods]
impl PyTableau {
    /// From rows such as `[[1, 2], [3]]` or the string form `"1,2|3"`.
    #[new]
    fn new(rows: &Bound<'_, PyAny>) -> PyResult<Self> {
        if let Ok(s) = rows.extract::<String>() {
            return s.parse().map(PyTableau).map_err(err);
        }
        let r: Vec<Vec<usize>> = rows.extract()?;
        qtab::Tableau::from_rows(r).map(PyTableau).map_err(err)
    }

    #[staticmethod]
    fn all(n: usize) -> Vec<PyTableau> {
        rsk::all_syt(n).into_iter().map(PyTableau).collect()
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text).map(PyTableau).map_err(err)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("tableau serializes")
    }

    fn rows(&self) -> Vec<Vec<usize>> {
        self.0.rows().to_vec()
    }

    fn shape(&self) -> Vec<usize> {
        self.0.shape().outer().parts().to_vec()
    }

    fn size(&self) -> usize {
        self.0.size()
    }

    fn descents(&self) -> Vec<usize> {
        self.0.descents()
    }

    fn maj(&self) -> usize {
        self.0.maj()
    }

    fn restrict_low(&self, k: usize) -> PyResult<Self> {
        self.0.restrict_low(k).map(PyTableau).map_err(err)
    }

    fn restrict_high(&self, k: usize) -> PyResult<Self> {
        self.0.restrict_high(k).map(PyTableau).map_err(err)
    }

    fn contains(&self, a: &PyTableau) -> bool {
        contain::tab_contains(&self.0, &a.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Tableau({:?})", self.0.rows())
    }
}

/// `(P, Q)` tableaux of a permutation.
#[pyfunction]
fn rs(pi: &PyPermutation) -> (PyTableau, PyTableau) {
    let (p, q) = rsk::rs(&pi.0);
    (PyTableau(p), PyTableau(q))
}

#[pyfunction]
fn rs_inverse(p: &PyTableau, q: &PyTableau) -> PyResult<PyPermutation> {
    rsk::rs_inverse(&p.0, &q.0).map(PyPermutation).map_err(err)
}

#[pyfunction]
fn j_set(pi: &PyPermutation) -> Vec<usize> {
    jset::j_set(&pi.0).iter().collect()
}

#[pyfunction]
fn j2_set(sigma: &PyPermutation, tau: &PyPermutation) -> Vec<usize> {
    jset::j2_set(&sigma.0, &tau.0).iter().collect()
}

#[pyfunction]
fn is_j_set(s: Vec<usize>) -> bool {
    jset::is_j_set(&int_set(s))
}

#[pyfunction]
fn is_j2_set(s: Vec<usize>) -> bool {
    jset::is_j2_set(&int_set(s))
}

/// Difference profile as strings: delta, delta_bar, psi and psi2 (or None).
#[pyfunction]
fn profile(s: Vec<usize>) -> PyResult<(String, String, String, Option<String>)> {
    let p = jset::profile(&int_set(s)).map_err(err)?;
    Ok((
        jset::format_seq(&p.delta),
        jset::format_seq(&p.delta_bar),
        jset::format_blocks(&p.psi),
        p.psi2.as_ref().map(|b| jset::format_blocks(b)),
    ))
}

#[pyfunction]
fn j2_series(n: usize) -> Vec<BigInt> {
    jset::j2_series(n)
}

#[pyfunction]
fn t_count(n: usize) -> BigInt {
    qstat::t_count(n)
}

/// Coefficients of `t_n(q)`, lowest degree first.
#[pyfunction]
fn t_poly(n: usize) -> Vec<BigInt> {
    qstat::t_poly(n).q_coeffs()
}

/// `{(i, j): c}` for the terms `c p^i q^j` of `A_n(p, q)`.
#[pyfunction]
fn a_poly(py: Python<'_>, n: usize) -> PyResult<Bound<'_, PyDict>> {
    poly_dict(py, &qstat::a_poly(n))
}

#[pyfunction]
fn qbinomial(n: usize, k: usize) -> PyResult<Vec<BigInt>> {
    qtab::exact::qbinomial(n, k).map(|p| p.q_coeffs()).map_err(err)
}

/// Runs one identity family; returns `(checked, failures)` with failures as instance labels.
#[pyfunction]
fn verify(py: Python<'_>, suite: &str, max_size: usize) -> PyResult<(usize, Vec<String>)> {
    let rep = py.detach(|| match suite {
        "permcont1" => Ok(contain::verify_permcont1_range(max_size)),
        "permcont2" => Ok(contain::verify_permcont2_range(max_size)),
        "permtotab" => Ok(contain::verify_permtotab_range(max_size)),
        "majgen" => Ok(contain::verify_majgen_range(max_size, max_size).0),
        "majgen1" => Ok(contain::verify_majgen_range(max_size, max_size).1),
        other => Err(format!("unknown suite {other:?}")),
    });
    let rep = rep.map_err(err)?;
    Ok((rep.checked, rep.failures.into_iter().map(|f| f.instance).collect()))
}

macro_rules! rational_fn {
    ($name:ident, ($($arg:ident : $ty:ty),*), |$($p:ident),*| $body:expr) => {
        #[pyfunction]
        fn $name<'py>(py: Python<'py>, $($arg: $ty),*) -> PyResult<Bound<'py, PyAny>> {
            $(let $p = rational($p)?;)*
            let r = py.detach(|| $body).map_err(err)?;
            fraction(py, &r)
        }
    };
}

rational_fn!(t_ratio, (q: &Bound<'py, PyAny>, n: usize), |q| limits::t_ratio(&q, n));
rational_fn!(a_ratio, (p: &Bound<'py, PyAny>, q: &Bound<'py, PyAny>, n: usize), |p, q| limits::a_ratio(&p, &q, n));
rational_fn!(qlim1_lhs, (sigma: &PyPermutation, q: &Bound<'py, PyAny>, n: usize), |q| limits::qlim1_lhs(&sigma.0, &q, n));
rational_fn!(qlim1_rhs, (sigma: &PyPermutation, q: &Bound<'py, PyAny>), |q| limits::qlim1_rhs(&sigma.0, &q));
rational_fn!(
    m2_1_lhs,
    (sigma: &PyPermutation, tau: &PyPermutation, p: &Bound<'py, PyAny>, q: &Bound<'py, PyAny>, n: usize),
    |p, q| limits::m2_1_lhs(&sigma.0, &tau.0, &p, &q, n)
);
rational_fn!(
    m2_1_rhs,
    (sigma: &PyPermutation, tau: &PyPermutation, p: &Bound<'py, PyAny>, q: &Bound<'py, PyAny>),
    |p, q| limits::m2_1_rhs(&sigma.0, &tau.0, &p, &q)
);
rational_fn!(m3_lhs, (a: &PyTableau, q: &Bound<'py, PyAny>, n: usize), |q| limits::m3_lhs(&a.0, &q, n));
rational_fn!(m3_rhs, (a: &PyTableau, q: &Bound<'py, PyAny>), |q| limits::m3_rhs(&a.0, &q));
rational_fn!(
    m3_1_lhs,
    (a: &PyTableau, b: &PyTableau, p: &Bound<'py, PyAny>, q: &Bound<'py, PyAny>, n: usize),
    |p, q| limits::m3_1_lhs(&a.0, &b.0, &p, &q, n)
);
rational_fn!(
    m3_1_rhs,
    (a: &PyTableau, b: &PyTableau, p: &Bound<'py, PyAny>, q: &Bound<'py, PyAny>),
    |p, q| limits::m3_1_rhs(&a.0, &b.0, &p, &q)
);
rational_fn!(xi_partial, (q: &Bound<'py, PyAny>, n: usize), |q| limits::xi_partial(&q, n));

/// `(value, terms, tail_bound)` of the truncated infinite product.
#[pyfunction]
fn xi_limit_product<'py>(
    py: Python<'py>,
    q: &Bound<'py, PyAny>,
    tol: &Bound<'py, PyAny>,
) -> PyResult<(Bound<'py, PyAny>, usize, Bound<'py, PyAny>)> {
    let (q, tol) = (rational(q)?, rational(tol)?);
    let t = py.detach(|| limits::xi_limit_product(&q, &tol)).map_err(err)?;
    Ok((fraction(py, &t.value)?, t.terms, fraction(py, &t.tail_bound)?))
}

/// `(holds, margin)` for the certified logarithmic inequality at `q`.
#[pyfunction]
fn check_bound<'py>(py: Python<'py>, q: &Bound<'py, PyAny>) -> PyResult<(bool, Bound<'py, PyAny>)> {
    let q = rational(q)?;
    let rep = py.detach(|| limits::check_bound(&q)).map_err(err)?;
    Ok((rep.holds, fraction(py, &rep.margin)?))
}

#[pyfunction]
fn eq8_check(py: Python<'_>, a: usize, n: usize) -> PyResult<(Bound<'_, PyAny>, Bound<'_, PyAny>)> {
    let r = limits::eq8_check(a, n).map_err(err)?;
    Ok((fraction(py, &r.shifted)?, fraction(py, &r.doubled)?))
}

#[pyfunction]
fn conjecture_probe<'py>(py: Python<'py>, tableaux: Vec<PyTableau>, n: usize) -> PyResult<Bound<'py, PyAny>> {
    let tabs: Vec<qtab::Tableau> = tableaux.into_iter().map(|t| t.0).collect();
    fraction(py, &contain::conjecture_probe(&tabs, n))
}

#[pymodule]
#[pyo3(name = "qtab")]
fn qtab_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyTableau>()?;
    m.add_function(wrap_pyfunction!(rs, m)?)?;
    m.add_function(wrap_pyfunction!(rs_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(j_set, m)?)?;
    m.add_function(wrap_pyfunction!(j2_set, m)?)?;
    m.add_function(wrap_pyfunction!(is_j_set, m)?)?;
    m.add_function(wrap_pyfunction!(is_j2_set, m)?)?;
    m.add_function(wrap_pyfunction!(profile, m)?)?;
    m.add_function(wrap_pyfunction!(j2_series, m)?)?;
    m.add_function(wrap_pyfunction!(t_count, m)?)?;
    m.add_function(wrap_pyfunction!(t_poly, m)?)?;
    m.add_function(wrap_pyfunction!(a_poly, m)?)?;
    m.add_function(wrap_pyfunction!(qbinomial, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(t_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(a_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(qlim1_lhs, m)?)?;
    m.add_function(wrap_pyfunction!(qlim1_rhs, m)?)?;
    m.add_function(wrap_pyfunction!(m2_1_lhs, m)?)?;
    m.add_function(wrap_pyfunction!(m2_1_rhs, m)?)?;
    m.add_function(wrap_pyfunction!(m3_lhs, m)?)?;
    m.add_function(wrap_pyfunction!(m3_rhs, m)?)?;
    m.add_function(wrap_pyfunction!(m3_1_lhs, m)?)?;
    m.add_function(wrap_pyfunction!(m3_1_rhs, m)?)?;
    m.add_function(wrap_pyfunction!(xi_partial, m)?)?;
    m.add_function(wrap_pyfunction!(xi_limit_product, m)?)?;
    m.add_function(wrap_pyfunction!(check_bound, m)?)?;
    m.add_function(wrap_pyfunction!(eq8_check, m)?)?;
    m.add_function(wrap_pyfunction!(conjecture_probe, m)?)?;
    Ok(())
}
