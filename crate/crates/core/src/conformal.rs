//! The conformal-vector solver: inside a product-closed span with
//! nonsingular Gram matrix, the conformal vector is the unique element of
//! the span with `(eta|t) = (t|t)` for every spanning vector `t`.

use crate::algebra::Algebra;
use crate::element::Element;
use crate::error::GriessError;
use crate::miyamoto::{central_charge, is_virasoro};
use griess_exact::{solve_linear, ExactScalar, LinearError, Matrix};

/// A Virasoro vector `e*e = 2e` with its central charge `2(e|e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirasoroVector {
    pub element: Element,
    pub central_charge: ExactScalar,
}

impl VirasoroVector {
    /// Wrap and check an element already known in ambient coordinates.
    pub fn new(alg: &impl Algebra, element: Element) -> Result<Self, GriessError> {
        if !is_virasoro(alg, &element) {
            return Err(GriessError::NotVirasoro);
        }
        let central_charge = central_charge(alg, &element);
        Ok(VirasoroVector {
            element,
            central_charge,
        })
    }
}

/// Solve the Gram system for the conformal vector of the subalgebra spanned
/// by `basis_set`, then validate `eta*eta = 2 eta` and the half-unit action
/// `eta*t = 2t` on every spanning vector.
///
/// The spanning vectors must themselves be Virasoro vectors: the defining
/// condition `(eta|t) = (t|t)` characterizes the conformal vector only on
/// such a set. Passing other spanning vectors makes the solved vector fail
/// validation.
pub fn conformal_vector(
    alg: &impl Algebra,
    basis_set: &[Element],
) -> Result<VirasoroVector, GriessError> {
    let k = basis_set.len();
    let gram = Matrix::from_fn(k, k, |i, j| alg.form(&basis_set[i], &basis_set[j]));
    let rhs: Vec<ExactScalar> = (0..k)
        .map(|i| alg.form(&basis_set[i], &basis_set[i]))
        .collect();
    let coeffs = solve_linear(&gram, &rhs).map_err(|e| match e {
        LinearError::NoSolution | LinearError::NonUnique => GriessError::SingularGram,
        other => GriessError::Linear(other),
    })?;
    let dim = alg.dim();
    let mut eta = Element::zeros(dim);
    for (c, t) in coeffs.iter().zip(basis_set) {
        eta.add_scaled(c, t);
    }
    let two = ExactScalar::from_int(2);
    if alg.mul(&eta, &eta) != eta.scale(&two) {
        return Err(GriessError::NotConformal(
            "solved vector is not Virasoro".into(),
        ));
    }
    for (i, t) in basis_set.iter().enumerate() {
        if alg.mul(&eta, t) != t.scale(&two) {
            return Err(GriessError::NotConformal(format!(
                "half-unit action fails on spanning vector {i}"
            )));
        }
    }
    let central_charge = &two * &alg.form(&eta, &eta);
    Ok(VirasoroVector {
        element: eta,
        central_charge,
    })
}
