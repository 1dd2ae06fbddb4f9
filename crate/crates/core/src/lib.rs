//! Finite-dimensional commutative algebras with invariant bilinear form —
//! the weight-two algebras of OZ-type vertex algebras — together with
//! Miyamoto involutions, subalgebra closure, the conformal-vector solver,
//! dihedral-pair classification, and the unitary Virasoro series data that
//! drives the sign rules.
//!
//! All arithmetic is exact. Algebras are immutable after construction and
//! every operation is a pure function, so concurrent use is safe.

mod algebra;
mod classify;
mod conformal;
mod element;
mod error;
mod miyamoto;
mod subalgebra;
pub mod virasoro;

pub use algebra::{Algebra, GriessAlgebra};
pub use classify::{classify_pair, dihedral_metadata, dihedral_table, DihedralType, DihedralTypeName};
pub use conformal::{conformal_vector, VirasoroVector};
pub use element::Element;
pub use error::GriessError;
pub use miyamoto::{
    adjoint_eigendims, central_charge, circle, is_ising, is_tau_fixed, is_virasoro, ising_spectrum,
    miyamoto_sigma, miyamoto_tau, sigma_image, tau_image, u_vector, Flavor, MiyamotoMap,
};
pub use subalgebra::{close_subalgebra, SpanBuilder, Subalgebra};
