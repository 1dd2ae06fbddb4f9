//! Virasoro vectors attached to a root system inside its lattice algebra:
//! the orthogonal split of the conformal vector, the axis-span subalgebra,
//! and the nested-chain frame for type A.

use crate::roots::RootType;
use crate::weight2::LatticeGriess;
use griess_core::{
    close_subalgebra, conformal_vector, Algebra, Element, GriessError, Subalgebra, VirasoroVector,
};
use griess_exact::ExactScalar;

/// The orthogonal pair (s, t) with s + t the conformal vector: s is the
/// normalized sum of the minus-sign axis vectors over the positive roots,
/// t the complement.
pub struct StDecomposition {
    pub s: VirasoroVector,
    pub t: VirasoroVector,
    pub omega: Element,
}

/// s over a chosen sub-root-set (all representatives by default):
/// `4/(h+2)` times the sum of minus-axes.
fn s_vector(lg: &LatticeGriess, reps: &[usize], coxeter: usize) -> Element {
    let mut s = Element::zeros(lg.dim());
    let c = ExactScalar::ratio(4, coxeter as i64 + 2);
    for &k in reps {
        s.add_scaled(&c, &lg.axis(k, -1));
    }
    s
}

pub fn s_t_decomposition(lg: &LatticeGriess) -> Result<StDecomposition, GriessError> {
    let reps: Vec<usize> = (0..lg.xdim()).collect();
    let s = s_vector(lg, &reps, lg.roots.coxeter);
    let omega = lg.conformal();
    let t = omega.sub(&s);
    let s = VirasoroVector::new(lg, s)?;
    let t = VirasoroVector::new(lg, t)?;
    if !lg.form(&s.element, &t.element).is_zero() || !lg.mul(&s.element, &t.element).is_zero() {
        return Err(GriessError::NotConformal(
            "s and t are not orthogonal".into(),
        ));
    }
    Ok(StDecomposition { s, t, omega })
}

/// Central charge of the t-part per type: 2n/(n+3) for A_n, 1 for D_n,
/// and 6/7, 7/10, 1/2 for E6, E7, E8.
pub fn expected_t_charge(rtype: RootType) -> ExactScalar {
    match rtype {
        RootType::A(n) => ExactScalar::ratio(2 * n as i64, n as i64 + 3),
        RootType::D(_) => ExactScalar::one(),
        RootType::E6 => ExactScalar::ratio(6, 7),
        RootType::E7 => ExactScalar::ratio(7, 10),
        RootType::E8 => ExactScalar::ratio(1, 2),
    }
}

/// Closure of the minus-axes: the axis-span subalgebra, with s as its
/// conformal vector; every member is annihilated by the adjoint of t.
pub struct AxisSpanAlgebra {
    pub subalgebra: Subalgebra,
    pub conformal: VirasoroVector,
}

pub fn axis_span_algebra(lg: &LatticeGriess) -> Result<AxisSpanAlgebra, GriessError> {
    let axes: Vec<Element> = (0..lg.xdim()).map(|k| lg.axis(k, -1)).collect();
    let subalgebra = close_subalgebra(lg, &axes)?;
    let conformal = conformal_vector(lg, &axes)?;
    Ok(AxisSpanAlgebra {
        subalgebra,
        conformal,
    })
}

/// The nested-chain frame of an A-type lattice algebra: with s^k the
/// normalized axis sum over the roots supported on the first k simple
/// roots, the differences s^k - s^{k-1} are orthogonal Virasoro vectors of
/// central charge c_k, and together with t they sum to the conformal
/// vector.
pub fn eta_frame(lg: &LatticeGriess) -> Result<Vec<VirasoroVector>, GriessError> {
    let RootType::A(n) = lg.roots.rtype else {
        return Err(GriessError::InvariantViolation(
            "the nested-chain frame needs an A-type lattice".into(),
        ));
    };
    let mut stage: Vec<Element> = Vec::with_capacity(n);
    for k in 1..=n {
        // roots supported on the first k simple roots
        let reps: Vec<usize> = (0..lg.xdim())
            .filter(|&r| {
                lg.roots.simple_coords[r][k..].iter().all(ExactScalar::is_zero)
            })
            .collect();
        debug_assert_eq!(reps.len(), k * (k + 1) / 2);
        stage.push(s_vector(lg, &reps, k + 1));
    }
    let mut etas = Vec::with_capacity(n);
    for k in 0..n {
        let e = if k == 0 {
            stage[0].clone()
        } else {
            stage[k].sub(&stage[k - 1])
        };
        etas.push(VirasoroVector::new(lg, e)?);
    }
    Ok(etas)
}
