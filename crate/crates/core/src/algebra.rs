//! The central data structure: a finite-dimensional commutative algebra
//! with an invariant symmetric bilinear form, given by exact structure
//! constants. Immutable after construction.

use crate::element::Element;
use crate::error::GriessError;
use griess_exact::{leading_principal_minors, ExactScalar, Matrix};

/// Common interface of structure-constant algebras. The dense
/// [`GriessAlgebra`] implements it directly; large structured models can
/// implement the basis products lazily instead of storing a dim^3 table.
pub trait Algebra {
    fn dim(&self) -> usize;
    fn field_d(&self) -> u64;
    fn basis_label(&self, i: usize) -> &str;

    /// Product of the i-th and j-th basis vectors.
    fn basis_product(&self, i: usize, j: usize) -> Element;

    /// Form value of the i-th and j-th basis vectors.
    fn basis_form(&self, i: usize, j: usize) -> ExactScalar;

    /// `acc += coeff * (b_i . b_j)`; hot path of element multiplication.
    fn accumulate_product(&self, i: usize, j: usize, coeff: &ExactScalar, acc: &mut Element) {
        let p = self.basis_product(i, j);
        for (k, v) in p.support() {
            acc[k] += &(coeff * v);
        }
    }

    /// Algebra product of two coordinate vectors.
    fn mul(&self, u: &Element, v: &Element) -> Element {
        assert_eq!(u.len(), self.dim());
        assert_eq!(v.len(), self.dim());
        let mut acc = Element::zeros(self.dim());
        for (i, ui) in u.support() {
            for (j, vj) in v.support() {
                let c = ui * vj;
                self.accumulate_product(i, j, &c, &mut acc);
            }
        }
        acc
    }

    /// Bilinear form of two coordinate vectors.
    fn form(&self, u: &Element, v: &Element) -> ExactScalar {
        assert_eq!(u.len(), self.dim());
        assert_eq!(v.len(), self.dim());
        let mut acc = ExactScalar::zero();
        for (i, ui) in u.support() {
            for (j, vj) in v.support() {
                let g = self.basis_form(i, j);
                if !g.is_zero() {
                    acc += &(&(ui * vj) * &g);
                }
            }
        }
        acc
    }

    /// Matrix of `v -> e*v` in the ambient basis (the zero-mode of `e`).
    fn adjoint(&self, e: &Element) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let col = self.mul(e, &Element::basis(n, j));
            for i in 0..n {
                m[(i, j)] = col[i].clone();
            }
        }
        m
    }

    fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim(), i)
    }

    fn labels(&self) -> Vec<String> {
        (0..self.dim()).map(|i| self.basis_label(i).to_string()).collect()
    }

    fn index_of_label(&self, label: &str) -> Option<usize> {
        (0..self.dim()).find(|&i| self.basis_label(i) == label)
    }
}

/// Dense commutative algebra with invariant form.
///
/// Structure constants are stored for unordered basis pairs, which bakes in
/// the commutativity invariant; symmetry of the form, positive definiteness
/// (leading principal minors) and invariance `(u.v|w) = (v|u.w)` are checked
/// at construction and loaders reuse the same checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GriessAlgebra {
    labels: Vec<String>,
    field_d: u64,
    /// products[pair_index(i, j)] for i <= j
    products: Vec<Element>,
    form: Matrix,
}

fn pair_index(dim: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * dim - i * (i + 1) / 2 + j
}

impl GriessAlgebra {
    /// Build from products over unordered basis pairs (`i <= j`,
    /// lexicographic) and a form matrix, verifying all structural
    /// invariants.
    pub fn new(
        labels: Vec<String>,
        field_d: u64,
        products: Vec<Element>,
        form: Matrix,
    ) -> Result<Self, GriessError> {
        let dim = labels.len();
        if products.len() != dim * (dim + 1) / 2 {
            return Err(GriessError::InvariantViolation(format!(
                "expected {} pair products for dimension {dim}, got {}",
                dim * (dim + 1) / 2,
                products.len()
            )));
        }
        if products.iter().any(|p| p.len() != dim) {
            return Err(GriessError::InvariantViolation(
                "product vector length differs from dimension".into(),
            ));
        }
        if form.rows() != dim || form.cols() != dim {
            return Err(GriessError::InvariantViolation(
                "form matrix shape differs from dimension".into(),
            ));
        }
        {
            let mut sorted = labels.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != dim {
                return Err(GriessError::InvariantViolation(
                    "duplicate basis labels".into(),
                ));
            }
        }
        let alg = GriessAlgebra {
            labels,
            field_d,
            products,
            form,
        };
        alg.validate()?;
        Ok(alg)
    }

    /// Build from a full dense product table, checking product symmetry.
    pub fn from_full_table(
        labels: Vec<String>,
        field_d: u64,
        table: Vec<Vec<Element>>,
        form: Matrix,
    ) -> Result<Self, GriessError> {
        let dim = labels.len();
        if table.len() != dim || table.iter().any(|r| r.len() != dim) {
            return Err(GriessError::InvariantViolation(
                "product table shape differs from dimension".into(),
            ));
        }
        for i in 0..dim {
            for j in 0..i {
                if table[i][j] != table[j][i] {
                    return Err(GriessError::InvariantViolation(format!(
                        "product table is not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        let mut products = Vec::with_capacity(dim * (dim + 1) / 2);
        for i in 0..dim {
            for j in i..dim {
                products.push(table[i][j].clone());
            }
        }
        Self::new(labels, field_d, products, form)
    }

    fn validate(&self) -> Result<(), GriessError> {
        let dim = self.dim();
        if !self.form.is_symmetric() {
            return Err(GriessError::InvariantViolation(
                "bilinear form is not symmetric".into(),
            ));
        }
        for (k, minor) in leading_principal_minors(&self.form)?.iter().enumerate() {
            if !minor.is_positive() {
                return Err(GriessError::InvariantViolation(format!(
                    "form is not positive definite: leading principal minor {} is {minor}",
                    k + 1
                )));
            }
        }
        // Invariance (b_i.b_j | b_k) = (b_j | b_i.b_k): with commutativity it
        // makes t(i,j,k) = (b_i.b_j | b_k) fully symmetric. Precompute
        // t(i,j,.) for each unordered pair and compare across transpositions.
        let mut paired: Vec<Vec<ExactScalar>> = Vec::with_capacity(self.products.len());
        for p in &self.products {
            let mut w = vec![ExactScalar::zero(); dim];
            for (m, c) in p.support() {
                for (k, wk) in w.iter_mut().enumerate() {
                    let g = &self.form[(m, k)];
                    if !g.is_zero() {
                        *wk += &(c * g);
                    }
                }
            }
            paired.push(w);
        }
        for i in 0..dim {
            for j in i..dim {
                for k in j..dim {
                    let a = &paired[pair_index(dim, i, j)][k];
                    let b = &paired[pair_index(dim, i, k)][j];
                    let c = &paired[pair_index(dim, j, k)][i];
                    if a != b || b != c {
                        return Err(GriessError::InvariantViolation(format!(
                            "form is not invariant on basis triple ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn form_matrix(&self) -> &Matrix {
        &self.form
    }

    pub fn product_ref(&self, i: usize, j: usize) -> &Element {
        &self.products[pair_index(self.dim(), i, j)]
    }

    /// Element from a `(label, coefficient)` list.
    pub fn element_from_pairs(&self, pairs: &[(&str, ExactScalar)]) -> Element {
        let mut e = Element::zeros(self.dim());
        for (label, c) in pairs {
            let i = self
                .index_of_label(label)
                .unwrap_or_else(|| panic!("unknown basis label {label}"));
            e[i] += c;
        }
        e
    }
}

impl Algebra for GriessAlgebra {
    fn dim(&self) -> usize {
        self.labels.len()
    }

    fn field_d(&self) -> u64 {
        self.field_d
    }

    fn basis_label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    fn basis_product(&self, i: usize, j: usize) -> Element {
        self.product_ref(i, j).clone()
    }

    fn basis_form(&self, i: usize, j: usize) -> ExactScalar {
        self.form[(i, j)].clone()
    }

    fn accumulate_product(&self, i: usize, j: usize, coeff: &ExactScalar, acc: &mut Element) {
        for (k, v) in self.product_ref(i, j).support() {
            acc[k] += &(coeff * v);
        }
    }

    fn form(&self, u: &Element, v: &Element) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for (i, ui) in u.support() {
            for (j, vj) in v.support() {
                let g = &self.form[(i, j)];
                if !g.is_zero() {
                    acc += &(&(ui * vj) * g);
                }
            }
        }
        acc
    }
}
