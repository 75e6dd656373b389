//! Python bindings: exact restricted partition counting, wave
//! decomposition export, the DP oracle and Molien invariant counts.
//!
//! Usage from Python:
//!
//!     from sylvester_py import PartitionFunction, molien_catalog
//!     w = PartitionFunction([2, 3, 5])
//!     w.eval(10)            # 4
//!     w.eval_real(10.5)     # trigonometric extension
//!     molien_catalog("dihedral", 4).count(4)   # 2

use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use sylvester::molien;
use sylvester::oracle;
use sylvester::waves::{self, WaveDecomposition};
use sylvester::{Error, PartSet};

fn to_py_err(e: Error) -> PyErr {
    if e.is_internal() {
        PyRuntimeError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

/// The restricted partition function of one part multiset, with its wave
/// decomposition built once at construction.
#[pyclass]
struct PartitionFunction {
    decomposition: WaveDecomposition,
}

#[pymethods]
impl PartitionFunction {
    #[new]
    fn new(parts: Vec<u32>) -> PyResult<Self> {
        let ps = PartSet::new(parts).map_err(to_py_err)?;
        let decomposition = WaveDecomposition::new(&ps).map_err(to_py_err)?;
        Ok(PartitionFunction { decomposition })
    }

    /// The natural set {1, …, m}.
    #[staticmethod]
    fn natural(m: u32) -> PyResult<Self> {
        if m == 0 {
            return Err(PyValueError::new_err("natural set needs m >= 1"));
        }
        let decomposition =
            WaveDecomposition::new(&PartSet::natural(m)).map_err(to_py_err)?;
        Ok(PartitionFunction { decomposition })
    }

    #[getter]
    fn parts(&self) -> Vec<u32> {
        self.decomposition.part_set().parts().to_vec()
    }

    /// Quasi-polynomial period, the lcm of the parts.
    #[getter]
    fn period(&self) -> u64 {
        self.decomposition.part_set().period()
    }

    /// Wave indices: every j dividing at least one part.
    #[getter]
    fn wave_indices(&self) -> Vec<u32> {
        self.decomposition.part_set().wave_indices().to_vec()
    }

    /// Number of parts divisible by j.
    fn weight(&self, j: u32) -> usize {
        self.decomposition.part_set().weight(j)
    }

    /// Exact count W(s); negative s returns the quasi-polynomial value.
    fn eval(&self, s: i64) -> PyResult<BigInt> {
        self.decomposition.eval_exact(s).map_err(to_py_err)
    }

    /// W(0) … W(smax) as a list.
    fn table(&self, smax: u64) -> PyResult<Vec<BigInt>> {
        (0..=smax as i64)
            .map(|s| self.decomposition.eval_exact(s).map_err(to_py_err))
            .collect()
    }

    /// Trigonometric extension to a real argument.
    fn eval_real(&self, x: f64) -> f64 {
        self.decomposition.eval_real(x)
    }

    /// The wave decomposition in the same JSON schema the CLI emits.
    fn waves_json(&self) -> String {
        self.decomposition.to_document().to_json()
    }

    fn __repr__(&self) -> String {
        format!(
            "PartitionFunction(parts={:?}, period={})",
            self.decomposition.part_set().parts(),
            self.decomposition.part_set().period()
        )
    }
}

/// A Molien spec (numerator coefficients over denominator degrees) with
/// exact invariant counting.
#[pyclass]
struct MolienSpec {
    spec: molien::MolienSpec,
}

#[pymethods]
impl MolienSpec {
    /// Parse the JSON spec format, e.g.
    /// `{"name": "Q8", "numerator": {"0": 1, "6": 1}, "degrees": [4, 4]}`.
    #[new]
    fn new(json: &str) -> PyResult<Self> {
        Ok(MolienSpec {
            spec: molien::MolienSpec::from_json(json).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn name(&self) -> String {
        self.spec.name.clone()
    }

    #[getter]
    fn degrees(&self) -> Vec<u32> {
        self.spec.degrees.clone()
    }

    /// P(s, G): homogeneous invariants of degree s.
    fn count(&self, s: u64) -> PyResult<BigInt> {
        molien::invariant_count(&self.spec, s).map_err(to_py_err)
    }

    /// P(0, G) … P(smax, G).
    fn counts(&self, smax: u64) -> PyResult<Vec<BigInt>> {
        molien::invariant_counts(&self.spec, smax).map_err(to_py_err)
    }

    fn __repr__(&self) -> String {
        format!("MolienSpec({})", self.spec.name)
    }
}

/// A catalog group: alternating, cyclic_rotation, dihedral, sign_flip or
/// quaternion, with its family parameter.
#[pyfunction]
fn molien_catalog(name: &str, n: u32) -> PyResult<MolienSpec> {
    Ok(MolienSpec {
        spec: molien::catalog(name, n).map_err(to_py_err)?,
    })
}

/// DP-oracle partition counts W(0) … W(smax), independent of the closed form.
#[pyfunction]
fn count_partitions(parts: Vec<u32>, smax: usize) -> PyResult<Vec<BigInt>> {
    let ps = PartSet::new(parts).map_err(to_py_err)?;
    Ok(oracle::count_partitions(&ps, smax)
        .counts()
        .iter()
        .map(|c| BigInt::from(c.clone()))
        .collect())
}

/// W(s, {p1, p2}) for distinct primes from the explicit closed form.
#[pyfunction]
fn two_prime(p1: u32, p2: u32, s: u64) -> PyResult<BigInt> {
    waves::two_prime_closed_form(p1, p2, s).map_err(to_py_err)
}

#[pymodule]
fn sylvester_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PartitionFunction>()?;
    m.add_class::<MolienSpec>()?;
    m.add_function(wrap_pyfunction!(molien_catalog, m)?)?;
    m.add_function(wrap_pyfunction!(count_partitions, m)?)?;
    m.add_function(wrap_pyfunction!(two_prime, m)?)?;
    Ok(())
}
