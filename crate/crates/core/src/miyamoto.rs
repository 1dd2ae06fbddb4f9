//! Ising-vector analysis and Miyamoto involutions, computed from the
//! adjoint spectrum of an axis at the algebra level.
//!
//! For an Ising vector `e` the adjoint acts semisimply with spectrum inside
//! `{2, 0, 1/2, 1/16}`. The tau involution negates the 1/16-eigenspace; when
//! that eigenspace vanishes (`e` of sigma type) the finer sigma involution
//! negates the 1/2-eigenspace instead. Every returned map is validated to be
//! an involutive, form-preserving algebra automorphism before it escapes.

use crate::algebra::Algebra;
use crate::element::Element;
use crate::error::GriessError;
use griess_exact::{eigensplit, ExactScalar, LinearError, Matrix};

/// Expected adjoint eigenvalues of an Ising vector: 2, 0, 1/2, 1/16.
pub fn ising_spectrum() -> [ExactScalar; 4] {
    [
        ExactScalar::from_int(2),
        ExactScalar::zero(),
        ExactScalar::ratio(1, 2),
        ExactScalar::ratio(1, 16),
    ]
}

/// `e` is a Virasoro vector: `e*e = 2e`.
pub fn is_virasoro(alg: &impl Algebra, e: &Element) -> bool {
    !e.is_zero() && alg.mul(e, e) == e.scale(&ExactScalar::from_int(2))
}

/// Central charge `2(e|e)` of a Virasoro vector.
pub fn central_charge(alg: &impl Algebra, e: &Element) -> ExactScalar {
    &ExactScalar::from_int(2) * &alg.form(e, e)
}

/// `e` is an Ising vector: `e*e = 2e` and `2(e|e) = 1/2`.
pub fn is_ising(alg: &impl Algebra, e: &Element) -> bool {
    is_virasoro(alg, e) && central_charge(alg, e) == ExactScalar::ratio(1, 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Tau,
    Sigma,
}

impl std::fmt::Display for Flavor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Flavor::Tau => write!(f, "tau"),
            Flavor::Sigma => write!(f, "sigma"),
        }
    }
}

/// A validated Miyamoto involution attached to an axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiyamotoMap {
    pub matrix: Matrix,
    pub flavor: Flavor,
    pub axis: Element,
}

impl MiyamotoMap {
    pub fn apply(&self, v: &Element) -> Element {
        Element::new(self.matrix.mat_vec(v.coords()))
    }
}

/// Check that an involution matrix is an isometric algebra automorphism.
pub fn validate_automorphism(alg: &impl Algebra, g: &Matrix) -> Result<(), GriessError> {
    let n = alg.dim();
    if g.mat_mul(g) != Matrix::identity(n) {
        return Err(GriessError::NotAutomorphism(
            "matrix squared is not the identity".into(),
        ));
    }
    let images: Vec<Element> = (0..n)
        .map(|j| {
            Element::new((0..n).map(|i| g[(i, j)].clone()).collect())
        })
        .collect();
    for i in 0..n {
        for j in i..n {
            let lhs = Element::new(g.mat_vec(alg.basis_product(i, j).coords()));
            let rhs = alg.mul(&images[i], &images[j]);
            if lhs != rhs {
                return Err(GriessError::NotAutomorphism(format!(
                    "g({}.{}) differs from g({}).g({})",
                    alg.basis_label(i),
                    alg.basis_label(j),
                    alg.basis_label(i),
                    alg.basis_label(j)
                )));
            }
            if alg.form(&images[i], &images[j]) != alg.basis_form(i, j) {
                return Err(GriessError::NotAutomorphism(format!(
                    "form not preserved on ({}, {})",
                    alg.basis_label(i),
                    alg.basis_label(j)
                )));
            }
        }
    }
    Ok(())
}

/// Eigenspace dimensions of `ad(e)` against the Ising spectrum, in the
/// order (2, 0, 1/2, 1/16). Errors if the spectrum is not exhausted.
pub fn adjoint_eigendims(alg: &impl Algebra, e: &Element) -> Result<[usize; 4], GriessError> {
    let ad = alg.adjoint(e);
    let spaces = eigensplit(&ad, &ising_spectrum()).map_err(|err| match err {
        LinearError::ResidualNonzero { residual } => GriessError::BadSpectrum { residual },
        other => GriessError::Linear(other),
    })?;
    let mut dims = [0usize; 4];
    for (k, (_, basis)) in spaces.iter().enumerate() {
        dims[k] = basis.len();
    }
    Ok(dims)
}

/// Projection of `v` onto the `target` eigenspace of `ad(e)`, assuming the
/// adjoint is semisimple with spectrum among the Ising candidates: apply
/// `prod_{lambda != target} (ad - lambda) / (target - lambda)` to `v`.
fn eigenprojection(
    alg: &impl Algebra,
    e: &Element,
    target: &ExactScalar,
    v: &Element,
) -> Element {
    let mut w = v.clone();
    let mut denom = ExactScalar::one();
    for lambda in ising_spectrum() {
        if &lambda == target {
            continue;
        }
        // w <- (ad(e) - lambda) w  without forming the adjoint matrix
        let ew = alg.mul(e, &w);
        w = ew.sub(&w.scale(&lambda));
        denom = &denom * &(target - &lambda);
    }
    w.scale(&denom.inverse())
}

fn involution_from_projection(dim: usize, alg: &impl Algebra, e: &Element, target: &ExactScalar) -> Matrix {
    let two = ExactScalar::from_int(2);
    let mut m = Matrix::identity(dim);
    for j in 0..dim {
        let p = eigenprojection(alg, e, target, &Element::basis(dim, j));
        for i in 0..dim {
            if !p[i].is_zero() {
                let t = &m[(i, j)] - &(&two * &p[i]);
                m[(i, j)] = t;
            }
        }
    }
    m
}

/// The tau involution of an Ising vector: -1 on the 1/16-eigenspace of the
/// adjoint, +1 elsewhere. Validated as an automorphism before returning.
pub fn miyamoto_tau(alg: &impl Algebra, e: &Element) -> Result<MiyamotoMap, GriessError> {
    if !is_ising(alg, e) {
        return Err(GriessError::NotIsing);
    }
    adjoint_eigendims(alg, e)?;
    let m = involution_from_projection(alg.dim(), alg, e, &ExactScalar::ratio(1, 16));
    validate_automorphism(alg, &m)?;
    Ok(MiyamotoMap {
        matrix: m,
        flavor: Flavor::Tau,
        axis: e.clone(),
    })
}

/// The sigma involution of a sigma-type Ising vector: -1 on the
/// 1/2-eigenspace. Errors with `NotSigmaType` when the 1/16-eigenspace of
/// the axis is nonzero.
pub fn miyamoto_sigma(alg: &impl Algebra, e: &Element) -> Result<MiyamotoMap, GriessError> {
    if !is_ising(alg, e) {
        return Err(GriessError::NotIsing);
    }
    let dims = adjoint_eigendims(alg, e)?;
    if dims[3] != 0 {
        return Err(GriessError::NotSigmaType);
    }
    let m = involution_from_projection(alg.dim(), alg, e, &ExactScalar::ratio(1, 2));
    validate_automorphism(alg, &m)?;
    Ok(MiyamotoMap {
        matrix: m,
        flavor: Flavor::Sigma,
        axis: e.clone(),
    })
}

/// Whether `v` is fixed by the tau involution of `e`, i.e. has no
/// 1/16-component in the adjoint decomposition of `e`.
pub fn is_tau_fixed(alg: &impl Algebra, e: &Element, v: &Element) -> bool {
    eigenprojection(alg, e, &ExactScalar::ratio(1, 16), v).is_zero()
}

/// Closed-form sigma image `sigma_e v = v + 32(e|v)e - 4 e*v`, defined for
/// tau-fixed `v` even when `e` is not of sigma type on the whole algebra.
pub fn sigma_image(
    alg: &impl Algebra,
    e: &Element,
    v: &Element,
) -> Result<Element, GriessError> {
    if !is_ising(alg, e) {
        return Err(GriessError::NotIsing);
    }
    if !is_tau_fixed(alg, e, v) {
        return Err(GriessError::NotTauFixed);
    }
    let c = &ExactScalar::from_int(32) * &alg.form(e, v);
    let mut out = v.add(&e.scale(&c));
    out.add_scaled(&ExactScalar::from_int(-4), &alg.mul(e, v));
    Ok(out)
}

/// Third axis of a 2A pair: `a o b = a + b - 4 a*b`. Requires Ising axes
/// with `(a|b) = 2^-5`.
pub fn circle(alg: &impl Algebra, a: &Element, b: &Element) -> Result<Element, GriessError> {
    if !is_ising(alg, a) || !is_ising(alg, b) {
        return Err(GriessError::NotIsing);
    }
    if alg.form(a, b) != ExactScalar::ratio(1, 32) {
        return Err(GriessError::NotTwoAPair);
    }
    let mut out = a.add(b);
    out.add_scaled(&ExactScalar::from_int(-4), &alg.mul(a, b));
    Ok(out)
}

/// Apply the tau involution of `e` to a single vector without building the
/// full matrix: `tau_e v = v - 2 P_{1/16} v`.
pub fn tau_image(alg: &impl Algebra, e: &Element, v: &Element) -> Result<Element, GriessError> {
    if !is_ising(alg, e) {
        return Err(GriessError::NotIsing);
    }
    let p = eigenprojection(alg, e, &ExactScalar::ratio(1, 16), v);
    let mut out = v.clone();
    out.add_scaled(&ExactScalar::from_int(-2), &p);
    Ok(out)
}

/// The characteristic 4/5-charge Virasoro vector of a 3A pair:
/// `u = (2^6/135) (2a + 2b + c - 16 a*b)` with `c = tau_a b`.
pub fn u_vector(alg: &impl Algebra, a: &Element, b: &Element) -> Result<Element, GriessError> {
    if !is_ising(alg, a) || !is_ising(alg, b) {
        return Err(GriessError::NotIsing);
    }
    if alg.form(a, b) != ExactScalar::ratio(13, 1024) {
        return Err(GriessError::NotThreeAPair);
    }
    let c = tau_image(alg, a, b)?;
    let two = ExactScalar::from_int(2);
    let mut u = a.scale(&two).add(&b.scale(&two)).add(&c);
    u.add_scaled(&ExactScalar::from_int(-16), &alg.mul(a, b));
    let u = u.scale(&ExactScalar::ratio(64, 135));
    if !is_virasoro(alg, &u) || central_charge(alg, &u) != ExactScalar::ratio(4, 5) {
        return Err(GriessError::NotVirasoro);
    }
    Ok(u)
}
