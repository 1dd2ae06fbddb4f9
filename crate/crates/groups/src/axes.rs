//! Axis-orbit closure and the finite groups generated by Miyamoto
//! involutions on a fixed algebra: permutation images, product-order
//! diagnostics, and the 3-transposition verdict.

use crate::perm::Perm;
use crate::sims::PermGroup;
use griess_core::{
    adjoint_eigendims, circle, is_ising, miyamoto_sigma, miyamoto_tau, Algebra, Element, Flavor,
    GriessError, MiyamotoMap,
};
use griess_exact::{ExactScalar, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("axis closure exceeded the budget of {budget} axes")]
    ClosureBudgetExceeded { budget: usize },
    #[error("axis set is not closed: {0}")]
    NotClosed(String),
    #[error("map order computation exceeded {cap} iterations")]
    OrderCapExceeded { cap: usize },
    #[error(transparent)]
    Griess(#[from] GriessError),
}

/// How the closure assigns an involution to each axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlavorRule {
    TauOnly,
    SigmaOnly,
    /// Sigma when the 1/16-eigenspace of the axis vanishes, tau otherwise.
    Auto,
}

impl FlavorRule {
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tau" => Some(FlavorRule::TauOnly),
            "sigma" => Some(FlavorRule::SigmaOnly),
            "auto" => Some(FlavorRule::Auto),
            _ => None,
        }
    }
}

/// A set of distinct Ising axes of a common ambient algebra with one
/// validated Miyamoto map per axis.
#[derive(Debug, Clone)]
pub struct AxisSet {
    pub axes: Vec<Element>,
    pub maps: Vec<MiyamotoMap>,
}

impl AxisSet {
    pub fn len(&self) -> usize {
        self.axes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.axes.is_empty()
    }

    pub fn flavors(&self) -> Vec<Flavor> {
        self.maps.iter().map(|m| m.flavor).collect()
    }

    pub fn position(&self, axis: &Element) -> Option<usize> {
        self.axes.iter().position(|a| a == axis)
    }
}

fn map_for(alg: &impl Algebra, axis: &Element, rule: FlavorRule) -> Result<MiyamotoMap, GroupError> {
    match rule {
        FlavorRule::TauOnly => Ok(miyamoto_tau(alg, axis)?),
        FlavorRule::SigmaOnly => Ok(miyamoto_sigma(alg, axis)?),
        FlavorRule::Auto => {
            let dims = adjoint_eigendims(alg, axis)?;
            if dims[3] == 0 {
                Ok(miyamoto_sigma(alg, axis)?)
            } else {
                Ok(miyamoto_tau(alg, axis)?)
            }
        }
    }
}

pub const DEFAULT_CLOSURE_BUDGET: usize = 10_000;

/// Smallest axis set containing the seeds and closed under applying every
/// generated Miyamoto map to every axis, and under the circle map on 2A
/// pairs (which adjoins the third axis of their dihedral subalgebra; the
/// Miyamoto images alone cannot reach central axes).
pub fn close_axes(
    alg: &impl Algebra,
    seeds: &[Element],
    rule: FlavorRule,
    budget: usize,
) -> Result<AxisSet, GroupError> {
    let two_a = ExactScalar::ratio(1, 32);
    let mut axes: Vec<Element> = Vec::new();
    let mut maps: Vec<MiyamotoMap> = Vec::new();
    for s in seeds {
        if !is_ising(alg, s) {
            return Err(GriessError::NotIsing.into());
        }
        if !axes.contains(s) {
            axes.push(s.clone());
        }
    }
    let mut next = 0;
    while next < axes.len() {
        if axes.len() > budget {
            return Err(GroupError::ClosureBudgetExceeded { budget });
        }
        // maps are built lazily in axis order
        while maps.len() < axes.len() {
            maps.push(map_for(alg, &axes[maps.len()], rule)?);
        }
        let current = axes.len();
        for i in 0..current {
            let image = maps[i].apply(&axes[next]);
            if !axes.contains(&image) {
                axes.push(image);
            }
        }
        for i in 0..current {
            if i != next && alg.form(&axes[i], &axes[next]) == two_a {
                let third = circle(alg, &axes[i], &axes[next])?;
                if !axes.contains(&third) {
                    axes.push(third);
                }
            }
        }
        next += 1;
    }
    while maps.len() < axes.len() {
        maps.push(map_for(alg, &axes[maps.len()], rule)?);
    }
    Ok(AxisSet { axes, maps })
}

/// The permutation induced by a matrix on the axis set, if the matrix maps
/// the set onto itself.
pub fn permutation_of(s: &AxisSet, m: &Matrix) -> Option<Perm> {
    let mut images = Vec::with_capacity(s.len());
    for a in &s.axes {
        let img = Element::new(m.mat_vec(a.coords()));
        images.push(s.position(&img)?);
    }
    Perm::from_images(images)
}

/// Permutation image of the generated Miyamoto group on a closed axis set.
#[derive(Debug, Clone)]
pub struct PermutationImage {
    pub group: PermGroup,
    /// Per-axis permutation of the axis set induced by its Miyamoto map.
    pub generator_perms: Vec<Perm>,
    /// Whether the permutation representation is verified faithful: every
    /// generator acts as the identity on the orthogonal complement of the
    /// axis span, so a matrix is determined by its axis action.
    pub faithful: bool,
}

/// The axis span's orthogonal complement: kernel of the pairing against all
/// axes.
fn axis_complement(alg: &impl Algebra, s: &AxisSet) -> Vec<Element> {
    let n = alg.dim();
    let pairing = Matrix::from_fn(s.len(), n, |i, j| {
        alg.form(&s.axes[i], &alg.basis_element(j))
    });
    griess_exact::kernel_basis(&pairing)
        .into_iter()
        .map(Element::new)
        .collect()
}

pub fn permutation_image(
    alg: &impl Algebra,
    s: &AxisSet,
) -> Result<PermutationImage, GroupError> {
    let mut perms = Vec::with_capacity(s.len());
    for (i, map) in s.maps.iter().enumerate() {
        let p = permutation_of(s, &map.matrix).ok_or_else(|| {
            GroupError::NotClosed(format!("map of axis {i} does not preserve the axis set"))
        })?;
        perms.push(p);
    }
    let complement = axis_complement(alg, s);
    let faithful = s.maps.iter().all(|m| {
        complement
            .iter()
            .all(|w| Element::new(m.matrix.mat_vec(w.coords())) == *w)
    });
    let group = PermGroup::from_generators(s.len(), &perms);
    Ok(PermutationImage {
        group,
        generator_perms: perms,
        faithful,
    })
}

/// Permutation group generated by arbitrary automorphism matrices acting on
/// a closed axis set.
pub fn group_from_matrices(s: &AxisSet, matrices: &[Matrix]) -> Result<PermGroup, GroupError> {
    let mut perms = Vec::with_capacity(matrices.len());
    for (i, m) in matrices.iter().enumerate() {
        let p = permutation_of(s, m).ok_or_else(|| {
            GroupError::NotClosed(format!("matrix {i} does not preserve the axis set"))
        })?;
        perms.push(p);
    }
    Ok(PermGroup::from_generators(s.len(), &perms))
}

const ORDER_CAP: usize = 360;

/// Multiplicative order of a matrix, computed by repeated multiplication.
pub fn matrix_order(m: &Matrix) -> Result<usize, GroupError> {
    let mut p = m.clone();
    let mut k = 1usize;
    while !p.is_identity() {
        p = p.mat_mul(m);
        k += 1;
        if k > ORDER_CAP {
            return Err(GroupError::OrderCapExceeded { cap: ORDER_CAP });
        }
    }
    Ok(k)
}

/// For each unordered axis pair, the exact multiplicative order of the
/// product of their Miyamoto matrices on the ambient algebra. This is the
/// order on this algebra; the order on a larger ambient model can be
/// strictly bigger.
pub fn product_order_table(s: &AxisSet) -> Result<Vec<(usize, usize, usize)>, GroupError> {
    let mut out = Vec::new();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            let prod = s.maps[i].matrix.mat_mul(&s.maps[j].matrix);
            out.push((i, j, matrix_order(&prod)?));
        }
    }
    Ok(out)
}

/// 3-transposition verdict: every pairwise product order is at most 3.
/// Returns the witness pair on failure. Also reports whether the generated
/// group is transitive on the axes (a single conjugacy-orbit check).
#[derive(Debug, Clone)]
pub struct TranspositionVerdict {
    pub is_three_transposition: bool,
    pub witness: Option<(usize, usize, usize)>,
    pub transitive_on_axes: bool,
    pub order_histogram: Vec<(usize, usize)>,
}

pub fn three_transposition_verdict(
    alg: &impl Algebra,
    s: &AxisSet,
) -> Result<TranspositionVerdict, GroupError> {
    let table = product_order_table(s)?;
    let witness = table.iter().find(|&&(_, _, ord)| ord > 3).copied();
    let image = permutation_image(alg, s)?;
    let transitive = image.group.orbits().len() <= 1;
    let mut histogram: Vec<(usize, usize)> = Vec::new();
    for &(_, _, ord) in &table {
        match histogram.iter_mut().find(|(o, _)| *o == ord) {
            Some((_, c)) => *c += 1,
            None => histogram.push((ord, 1)),
        }
    }
    histogram.sort_unstable();
    Ok(TranspositionVerdict {
        is_three_transposition: witness.is_none(),
        witness,
        transitive_on_axes: transitive,
        order_histogram: histogram,
    })
}

/// Smallest element set containing the seeds and stable under the given
/// matrices. The generator set stays fixed; this closes orbits of extra
/// vectors (axes of other types, say) under an already-generated group.
pub fn orbit_closure(
    matrices: &[Matrix],
    seeds: &[Element],
    budget: usize,
) -> Result<Vec<Element>, GroupError> {
    let mut elements: Vec<Element> = Vec::new();
    for s in seeds {
        if !elements.contains(s) {
            elements.push(s.clone());
        }
    }
    let mut next = 0;
    while next < elements.len() {
        if elements.len() > budget {
            return Err(GroupError::ClosureBudgetExceeded { budget });
        }
        for m in matrices {
            let image = Element::new(m.mat_vec(elements[next].coords()));
            if !elements.contains(&image) {
                elements.push(image);
            }
        }
        next += 1;
    }
    Ok(elements)
}

/// Permutation group of matrices acting on a stable element set.
pub fn perm_group_on(matrices: &[Matrix], elements: &[Element]) -> Result<PermGroup, GroupError> {
    let mut perms = Vec::with_capacity(matrices.len());
    for (k, m) in matrices.iter().enumerate() {
        let mut images = Vec::with_capacity(elements.len());
        for e in elements {
            let img = Element::new(m.mat_vec(e.coords()));
            let pos = elements.iter().position(|x| *x == img).ok_or_else(|| {
                GroupError::NotClosed(format!("matrix {k} does not preserve the element set"))
            })?;
            images.push(pos);
        }
        perms.push(Perm::from_images(images).expect("injective on a finite stable set"));
    }
    Ok(PermGroup::from_generators(elements.len(), &perms))
}

/// Sub-axis-set whose Miyamoto maps commute with `t` (exact matrix
/// commutation).
pub fn filter_commuting(s: &AxisSet, t: &Matrix) -> AxisSet {
    let mut axes = Vec::new();
    let mut maps = Vec::new();
    for (a, m) in s.axes.iter().zip(&s.maps) {
        if m.matrix.mat_mul(t) == t.mat_mul(&m.matrix) {
            axes.push(a.clone());
            maps.push(m.clone());
        }
    }
    AxisSet { axes, maps }
}
