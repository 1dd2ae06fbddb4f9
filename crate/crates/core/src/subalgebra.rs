//! Span machinery and product-closure of subalgebras.

use crate::algebra::{Algebra, GriessAlgebra};
use crate::element::Element;
use crate::error::GriessError;
use griess_exact::{ExactScalar, Matrix};

/// Incremental row space with exact reduced echelon rows.
///
/// Tracks, for every echelon row, its expression in the originally inserted
/// independent vectors, so arbitrary vectors in the span can be rewritten in
/// that original basis. Pivoting is deterministic: the first nonzero
/// coordinate in basis order.
#[derive(Debug, Clone, Default)]
pub struct SpanBuilder {
    rows: Vec<Element>,
    pivots: Vec<usize>,
    trans: Vec<Vec<ExactScalar>>,
    origs: Vec<Element>,
}

impl SpanBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn originals(&self) -> &[Element] {
        &self.origs
    }

    fn eliminate(&self, v: &Element) -> (Element, Vec<ExactScalar>) {
        let mut resid = v.clone();
        let mut coeffs = vec![ExactScalar::zero(); self.rows.len()];
        for (r, row) in self.rows.iter().enumerate() {
            let c = resid[self.pivots[r]].clone();
            if !c.is_zero() {
                resid.add_scaled(&(-&c), row);
                coeffs[r] = c;
            }
        }
        (resid, coeffs)
    }

    /// Coordinates of `v` in the original-vector basis, or `None` when `v`
    /// is outside the current span.
    pub fn coordinates(&self, v: &Element) -> Option<Vec<ExactScalar>> {
        let (resid, coeffs) = self.eliminate(v);
        if !resid.is_zero() {
            return None;
        }
        let mut out = vec![ExactScalar::zero(); self.origs.len()];
        for (r, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                for (j, t) in self.trans[r].iter().enumerate() {
                    if !t.is_zero() {
                        out[j] += &(c * t);
                    }
                }
            }
        }
        Some(out)
    }

    pub fn contains(&self, v: &Element) -> bool {
        self.eliminate(v).0.is_zero()
    }

    /// Insert a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, v: &Element) -> bool {
        let (resid, coeffs) = self.eliminate(v);
        if resid.is_zero() {
            return false;
        }
        let pivot = resid
            .support()
            .next()
            .map(|(i, _)| i)
            .expect("nonzero residual has a support");
        let inv = resid[pivot].inverse();
        let row = resid.scale(&inv);

        let k = self.origs.len();
        let mut trans_new = vec![ExactScalar::zero(); k + 1];
        for (r, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let f = &(-c) * &inv;
                for (j, t) in self.trans[r].iter().enumerate() {
                    if !t.is_zero() {
                        trans_new[j] += &(&f * t);
                    }
                }
            }
        }
        trans_new[k] = inv;

        for t in &mut self.trans {
            t.push(ExactScalar::zero());
        }
        // keep rows fully reduced
        for r in 0..self.rows.len() {
            let c = self.rows[r][pivot].clone();
            if !c.is_zero() {
                let neg = -&c;
                self.rows[r].add_scaled(&neg, &row);
                for (j, t) in trans_new.iter().enumerate() {
                    if !t.is_zero() {
                        let delta = &neg * t;
                        self.trans[r][j] += &delta;
                    }
                }
            }
        }
        self.origs.push(v.clone());
        self.rows.push(row);
        self.pivots.push(pivot);
        self.trans.push(trans_new);
        true
    }
}

/// A product-closed subalgebra with its induced structure constants and the
/// embedding into the ambient algebra.
#[derive(Debug, Clone)]
pub struct Subalgebra {
    pub ambient_dim: usize,
    /// Sub-basis vectors in ambient coordinates, in encounter order.
    pub basis: Vec<Element>,
    pub algebra: GriessAlgebra,
    span: SpanBuilder,
}

impl Subalgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of an ambient element in the sub-basis.
    pub fn coordinates(&self, v: &Element) -> Option<Element> {
        self.span.coordinates(v).map(Element::new)
    }

    /// Change-of-coordinates matrix: rows are the sub-basis vectors in
    /// ambient coordinates.
    pub fn embedding_matrix(&self) -> Matrix {
        Matrix::from_fn(self.dim(), self.ambient_dim, |i, j| self.basis[i][j].clone())
    }

    /// Ambient element from sub-basis coordinates.
    pub fn to_ambient(&self, coords: &Element) -> Element {
        let mut out = Element::zeros(self.ambient_dim);
        for (i, c) in coords.support() {
            out.add_scaled(c, &self.basis[i]);
        }
        out
    }
}

/// Smallest product-closed subspace containing the generators, by iterated
/// span extension under pairwise products. Terminates since the dimension is
/// bounded by the ambient dimension.
pub fn close_subalgebra(
    alg: &impl Algebra,
    generators: &[Element],
) -> Result<Subalgebra, GriessError> {
    let mut span = SpanBuilder::new();
    for g in generators {
        span.insert(g);
    }
    // process pairs (i, j) with j <= i in increasing i over the growing list
    let mut i = 0;
    while i < span.origs.len() {
        for j in 0..=i {
            let p = alg.mul(&span.origs[i].clone(), &span.origs[j].clone());
            span.insert(&p);
        }
        i += 1;
    }
    let basis = span.origs.clone();
    let k = basis.len();
    let labels = (0..k).map(|i| format!("s{i}")).collect();
    let mut products = Vec::with_capacity(k * (k + 1) / 2);
    for i in 0..k {
        for j in i..k {
            let p = alg.mul(&basis[i], &basis[j]);
            let coords = span.coordinates(&p).ok_or_else(|| {
                GriessError::InvariantViolation(
                    "closure produced a product outside its own span".into(),
                )
            })?;
            products.push(Element::new(coords));
        }
    }
    let form = Matrix::from_fn(k, k, |i, j| alg.form(&basis[i], &basis[j]));
    let algebra = GriessAlgebra::new(labels, alg.field_d(), products, form)?;
    Ok(Subalgebra {
        ambient_dim: alg.dim(),
        basis,
        algebra,
        span,
    })
}
