//! Python bindings for the Heegaard diagram toolkit.
//!
//! Exposes a `Diagram` class wrapping the core library; numeric results
//! come back as Python ints, everything else as strings the CLI also
//! prints, so the two surfaces stay comparable.

// the expansion of #[pymethods] converts PyErr into PyErr on fallible methods
#![allow(clippy::useless_conversion)]

use heegaard_core::{
    enumerate_generators, fixture, manifold_h1, maslov_parity, parse_diagram, partition_classes,
    serialize_diagram, validate, whitney_exists, BigInt, FloerError, Generator, HeegaardDiagram,
};
use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;

/// A labeled Heegaard diagram with its derived invariants.
#[pyclass(name = "Diagram")]
struct PyDiagram {
    inner: HeegaardDiagram,
}

/// One Heegaard Floer generator: its id, sign, and class coordinate.
#[pyclass(name = "Generator")]
struct PyGenerator {
    #[pyo3(get)]
    id: String,
    #[pyo3(get)]
    sign: i64,
    #[pyo3(get)]
    coordinate: String,
}

#[pymethods]
impl PyGenerator {
    fn __repr__(&self) -> String {
        format!(
            "Generator(id={:?}, sign={}, coordinate={:?})",
            self.id, self.sign, self.coordinate
        )
    }
}

/// Accepts ids with or without braces, in any member order.
fn canonical_id(arg: &str) -> String {
    let trimmed = arg.trim();
    let inner = trimmed
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .unwrap_or(trimmed);
    let mut parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    parts.sort_unstable();
    format!("{{{}}}", parts.join(","))
}

fn find_generator(d: &HeegaardDiagram, arg: &str) -> PyResult<Generator> {
    let id = canonical_id(arg);
    enumerate_generators(d)
        .into_iter()
        .find(|g| g.id() == id)
        .ok_or_else(|| PyKeyError::new_err(format!("unknown generator `{arg}`")))
}

#[pymethods]
impl PyDiagram {
    /// Parses diagram text in the `.hd` format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<PyDiagram> {
        let inner = parse_diagram(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyDiagram { inner })
    }

    /// Builds one of the named example diagrams.
    #[staticmethod]
    fn fixture(name: &str) -> PyResult<PyDiagram> {
        let inner = fixture(name).map_err(|e| PyKeyError::new_err(e.to_string()))?;
        Ok(PyDiagram { inner })
    }

    fn serialize(&self) -> String {
        serialize_diagram(&self.inner)
    }

    fn genus(&self) -> usize {
        self.inner.genus()
    }

    /// Non-fatal warnings about the diagram, as printable strings.
    fn validate(&self) -> Vec<String> {
        validate(&self.inner).iter().map(|w| w.to_string()).collect()
    }

    /// First homology of the described manifold, e.g. "Z + Z/2".
    fn h1(&self) -> String {
        manifold_h1(&self.inner).to_string()
    }

    fn h1_rank(&self) -> usize {
        manifold_h1(&self.inner).free_rank()
    }

    fn h1_torsion(&self) -> Vec<BigInt> {
        manifold_h1(&self.inner).invariant_factors().to_vec()
    }

    fn generators(&self) -> Vec<PyGenerator> {
        partition_classes(&self.inner)
            .generators()
            .iter()
            .map(|g| PyGenerator {
                id: g.id.clone(),
                sign: g.sign.value(),
                coordinate: g.coordinate.to_string(),
            })
            .collect()
    }

    /// Classes as (coordinate, member ids) pairs, coordinate-ordered.
    fn classes(&self) -> Vec<(String, Vec<String>)> {
        partition_classes(&self.inner)
            .classes()
            .iter()
            .map(|(c, members)| (c.to_string(), members.clone()))
            .collect()
    }

    /// Whether a Whitney disk connects the two named generators.
    fn whitney(&self, x: &str, y: &str) -> PyResult<bool> {
        let gx = find_generator(&self.inner, x)?;
        let gy = find_generator(&self.inner, y)?;
        whitney_exists(&self.inner, &gx, &gy).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// Maslov index parity between two connected generators (0 or 1).
    fn parity(&self, x: &str, y: &str) -> PyResult<u8> {
        let gx = find_generator(&self.inner, x)?;
        let gy = find_generator(&self.inner, y)?;
        maslov_parity(&self.inner, &gx, &gy).map_err(|e| match e {
            FloerError::NoWhitneyDisk { .. } => PyValueError::new_err(e.to_string()),
            FloerError::ForeignGenerator { .. } => PyKeyError::new_err(e.to_string()),
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "Diagram(genus={}, points={})",
            self.inner.genus(),
            self.inner.points().len()
        )
    }
}

#[pymodule]
fn heegaard_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDiagram>()?;
    m.add_class::<PyGenerator>()?;
    Ok(())
}
