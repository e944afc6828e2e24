//! Python bindings: polynomials, symmetry groups, the two state spaces, the
//! transpose mirror and the coset diagrams. Rationals cross the boundary as
//! `"numer/denom"` strings.

use lgcy::diagram::{build_diagram, match_internal_to_empty};
use lgcy::mirror;
use lgcy::parse::{parse_group, parse_polynomial};
use lgcy::rat::format_rat;
use lgcy::state;
use lgcy::svg::render_diagram_svg;
use lgcy::symmetry::{cosets, j_element};
use lgcy::{PolyData, SymmetryGroup};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: lgcy::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A quasihomogeneous polynomial with its weights, degree and charges.
#[pyclass(frozen)]
struct Polynomial {
    inner: PolyData,
}

#[pymethods]
impl Polynomial {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        let matrix = parse_polynomial(text).map_err(err)?;
        let inner = PolyData::new(matrix).map_err(err)?;
        Ok(Polynomial { inner })
    }

    #[getter]
    fn n_vars(&self) -> usize {
        self.inner.n_vars()
    }

    #[getter]
    fn weights(&self) -> Vec<u64> {
        self.inner.charges.weights.clone()
    }

    #[getter]
    fn degree(&self) -> u64 {
        self.inner.charges.degree
    }

    #[getter]
    fn charges(&self) -> Vec<String> {
        self.inner.charges.charges.iter().map(format_rat).collect()
    }

    #[getter]
    fn is_calabi_yau(&self) -> bool {
        self.inner.charges.calabi_yau
    }

    /// Decomposition into power/loop/chain summands (invertible inputs).
    fn summands(&self) -> PyResult<String> {
        lgcy::poly::atomic_decomposition(&self.inner.matrix)
            .map(|d| d.to_string())
            .map_err(err)
    }

    fn transpose(&self) -> PyResult<Polynomial> {
        let matrix = self.inner.matrix.transpose().map_err(err)?;
        Ok(Polynomial {
            inner: PolyData::new(matrix).map_err(err)?,
        })
    }

    /// Resolve a group specification ("J", "SL", "Aut", "gens: ...").
    #[pyo3(signature = (spec, max_order = 1_000_000))]
    fn group(&self, spec: &str, max_order: u64) -> PyResult<Group> {
        let inner = parse_group(spec, &self.inner, max_order).map_err(err)?;
        Ok(Group { inner })
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({})", self.inner.matrix)
    }

    fn __str__(&self) -> String {
        self.inner.matrix.to_string()
    }
}

/// A finite group of diagonal symmetries.
#[pyclass(frozen)]
struct Group {
    inner: SymmetryGroup,
}

#[pymethods]
impl Group {
    #[getter]
    fn order(&self) -> u64 {
        self.inner.order()
    }

    #[getter]
    fn exponent(&self) -> u64 {
        self.inner.exponent()
    }

    /// Every element as a list of phase strings.
    fn elements(&self) -> Vec<Vec<String>> {
        self.inner
            .elements()
            .iter()
            .map(|e| e.phases().iter().map(format_rat).collect())
            .collect()
    }

    fn __len__(&self) -> usize {
        self.inner.order() as usize
    }

    fn __repr__(&self) -> String {
        format!("Group(order={})", self.inner.order())
    }
}

type DimRows = Vec<(String, String, u64)>;

fn dim_rows(dims: &lgcy::BigradedDims) -> DimRows {
    dims.iter()
        .map(|(p, q, m)| (format_rat(&p), format_rat(&q), m))
        .collect()
}

/// Bigraded dimensions of the singularity-side state space.
#[pyfunction]
fn fjrw_dims(poly: &Polynomial, group: &Group) -> PyResult<DimRows> {
    let space = state::fjrw(&poly.inner, &group.inner).map_err(err)?;
    Ok(dim_rows(&space.total))
}

/// Bigraded dimensions of the hypersurface-side orbifold cohomology.
#[pyfunction]
fn cr_dims(poly: &Polynomial, group: &Group) -> PyResult<DimRows> {
    let space = state::cr(&poly.inner, &group.inner).map_err(err)?;
    Ok(dim_rows(&space.total))
}

/// Per-sector view of either side: (label, fixed count, age, kind, dims).
#[pyfunction]
#[pyo3(signature = (poly, group, side = "lg"))]
fn sectors(
    poly: &Polynomial,
    group: &Group,
    side: &str,
) -> PyResult<Vec<(String, usize, String, String, DimRows)>> {
    let space = match side {
        "lg" => state::fjrw(&poly.inner, &group.inner).map_err(err)?,
        "cy" => state::cr(&poly.inner, &group.inner).map_err(err)?,
        other => return Err(PyValueError::new_err(format!("side must be lg or cy, got {other}"))),
    };
    Ok(space
        .sectors
        .iter()
        .map(|s| {
            (
                s.label(),
                s.n_fixed,
                format_rat(&s.age),
                s.kind.to_string(),
                dim_rows(&s.dims),
            )
        })
        .collect())
}

/// True when the two state spaces agree bidegree by bidegree.
#[pyfunction]
fn verify_lgcy(poly: &Polynomial, group: &Group) -> PyResult<bool> {
    let report = state::verify_isomorphism(&poly.inner, &group.inner).map_err(err)?;
    Ok(report.pass)
}

/// The dual group of `(W, G)` inside the symmetries of the transpose.
#[pyfunction]
#[pyo3(signature = (poly, group, max_order = 1_000_000))]
fn dual_group(poly: &Polynomial, group: &Group, max_order: u64) -> PyResult<Group> {
    let inner = mirror::dual_group(&poly.inner.matrix, &group.inner, max_order).map_err(err)?;
    Ok(Group { inner })
}

/// True when the transposed pair rotates the Hodge numbers as expected.
#[pyfunction]
#[pyo3(signature = (poly, group, max_order = 1_000_000))]
fn verify_mirror(poly: &Polynomial, group: &Group, max_order: u64) -> PyResult<bool> {
    let report = mirror::verify_mirror(&poly.inner, &group.inner, max_order).map_err(err)?;
    Ok(report.pass)
}

/// One SVG document per coset of the grading subgroup.
#[pyfunction]
fn diagram_svgs(poly: &Polynomial, group: &Group) -> PyResult<Vec<String>> {
    let j = j_element(&poly.inner.charges);
    let coset_list = cosets(&group.inner, &j).map_err(err)?;
    let charges = &poly.inner.charges;
    let mut out = Vec::new();
    for rep in &coset_list.representatives {
        let diagram = build_diagram(&charges.weights, charges.degree, rep);
        // the degree-preserving matching must exist on every coset
        match_internal_to_empty(&diagram).map_err(err)?;
        out.push(render_diagram_svg(&diagram));
    }
    Ok(out)
}

#[pymodule]
fn lgcy_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Polynomial>()?;
    m.add_class::<Group>()?;
    m.add_function(wrap_pyfunction!(fjrw_dims, m)?)?;
    m.add_function(wrap_pyfunction!(cr_dims, m)?)?;
    m.add_function(wrap_pyfunction!(sectors, m)?)?;
    m.add_function(wrap_pyfunction!(verify_lgcy, m)?)?;
    m.add_function(wrap_pyfunction!(dual_group, m)?)?;
    m.add_function(wrap_pyfunction!(verify_mirror, m)?)?;
    m.add_function(wrap_pyfunction!(diagram_svgs, m)?)?;
    Ok(())
}
