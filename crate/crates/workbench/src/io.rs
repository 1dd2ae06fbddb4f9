//! Algebra serialization: a JSON object with the basis labels, the dense
//! product table and the form, all scalars as exact strings. Loading
//! re-validates the structural invariants and rejects violations.

use griess_core::{Element, GriessAlgebra};
use griess_exact::{ExactScalar, Matrix};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum WorkbenchError {
    #[error("schema violation: {0}")]
    SchemaViolation(String),
    #[error("invariant violation on load: {0}")]
    InvariantViolation(#[from] griess_core::GriessError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("usage error: {0}")]
    Usage(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub dim: usize,
    pub field_d: u64,
    pub basis: Vec<String>,
    /// product[i][j] = coordinates of the product of basis i and j
    pub product: Vec<Vec<Vec<String>>>,
    pub form: Vec<Vec<String>>,
}

pub fn export_algebra(alg: &GriessAlgebra) -> AlgebraJson {
    use griess_core::Algebra;
    let dim = alg.dim();
    let product = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| {
                    alg.basis_product(i, j)
                        .coords()
                        .iter()
                        .map(ExactScalar::to_string)
                        .collect()
                })
                .collect()
        })
        .collect();
    let form = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| alg.basis_form(i, j).to_string())
                .collect()
        })
        .collect();
    AlgebraJson {
        dim,
        field_d: alg.field_d(),
        basis: alg.labels(),
        product,
        form,
    }
}

fn parse_scalar(s: &str) -> Result<ExactScalar, WorkbenchError> {
    s.parse()
        .map_err(|e: griess_exact::ParseScalarError| WorkbenchError::SchemaViolation(e.to_string()))
}

/// Rebuild an algebra from its serialized form. The loader checks the
/// shape, then hands the table to the validating constructor, which
/// enforces product symmetry, form symmetry, positive definiteness and
/// invariance.
pub fn import_algebra(json: &AlgebraJson) -> Result<GriessAlgebra, WorkbenchError> {
    let dim = json.dim;
    if json.basis.len() != dim {
        return Err(WorkbenchError::SchemaViolation(format!(
            "dim is {dim} but {} basis labels are given",
            json.basis.len()
        )));
    }
    if json.product.len() != dim || json.product.iter().any(|r| r.len() != dim) {
        return Err(WorkbenchError::SchemaViolation(
            "product table shape differs from dim".into(),
        ));
    }
    if json.form.len() != dim || json.form.iter().any(|r| r.len() != dim) {
        return Err(WorkbenchError::SchemaViolation(
            "form shape differs from dim".into(),
        ));
    }
    let mut table = Vec::with_capacity(dim);
    for row in &json.product {
        let mut out_row = Vec::with_capacity(dim);
        for entry in row {
            if entry.len() != dim {
                return Err(WorkbenchError::SchemaViolation(
                    "product vector length differs from dim".into(),
                ));
            }
            let coords = entry
                .iter()
                .map(|s| parse_scalar(s))
                .collect::<Result<Vec<_>, _>>()?;
            out_row.push(Element::new(coords));
        }
        table.push(out_row);
    }
    let mut form = Matrix::zeros(dim, dim);
    for (i, row) in json.form.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            form[(i, j)] = parse_scalar(s)?;
        }
    }
    Ok(GriessAlgebra::from_full_table(
        json.basis.clone(),
        json.field_d,
        table,
        form,
    )?)
}
