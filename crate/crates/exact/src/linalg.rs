//! Exact dense linear algebra: fraction-free elimination, determinants,
//! linear solving, kernels and candidate-eigenvalue splitting.

use crate::matrix::Matrix;
use crate::scalar::ExactScalar;
use num::{BigInt, BigRational, One};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinearError {
    #[error("matrix is not square")]
    NonSquare,
    #[error("inconsistent linear system")]
    NoSolution,
    #[error("rank-deficient linear system with a solution family")]
    NonUnique,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("candidate eigenvalues leave a residual of rank {residual}")]
    ResidualNonzero { residual: usize },
}

/// Scale each row by the lcm of its denominators (both scalar components)
/// so that Bareiss elimination runs over integral entries. Returns the
/// per-row factors as scalars.
fn integerize_rows(m: &mut Matrix) -> Vec<BigRational> {
    let mut factors = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let mut lcm = BigInt::one();
        for j in 0..m.cols() {
            let s = &m[(i, j)];
            lcm = num::integer::lcm(lcm.clone(), s.rational_part().denom().clone());
            lcm = num::integer::lcm(lcm, s.radical_part().denom().clone());
        }
        let f = BigRational::from_integer(lcm);
        let fs = ExactScalar::from_rational(f.clone());
        for j in 0..m.cols() {
            m[(i, j)] = &m[(i, j)] * &fs;
        }
        factors.push(f);
    }
    factors
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Denominators are cleared per row first, so all intermediate entries are
/// minors of an integral matrix and division steps are exact in Z[sqrt d].
pub fn determinant(a: &Matrix) -> Result<ExactScalar, LinearError> {
    if !a.is_square() {
        return Err(LinearError::NonSquare);
    }
    let n = a.rows();
    if n == 0 {
        return Ok(ExactScalar::one()); // empty product
    }
    let mut m = a.clone();
    let factors = integerize_rows(&mut m);
    let mut sign = 1i32;
    let mut prev = ExactScalar::one();
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            match (k + 1..n).find(|&r| !m[(r, k)].is_zero()) {
                Some(r) => {
                    m.swap_rows(k, r);
                    sign = -sign;
                }
                None => return Ok(ExactScalar::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[(k, k)] * &m[(i, j)]) - &(&m[(i, k)] * &m[(k, j)]);
                m[(i, j)] = &t / &prev;
            }
            m[(i, k)] = ExactScalar::zero();
        }
        prev = m[(k, k)].clone();
    }
    let mut det = m[(n - 1, n - 1)].clone();
    if sign < 0 {
        det = -det;
    }
    let mut scale = BigRational::one();
    for f in factors {
        scale *= f;
    }
    Ok(&det / &ExactScalar::from_rational(scale))
}

/// Leading principal minors `M_1, ..., M_n` of a square matrix, by a single
/// pivot-free Bareiss pass. A zero pivot makes that and all later minors 0.
pub fn leading_principal_minors(a: &Matrix) -> Result<Vec<ExactScalar>, LinearError> {
    if !a.is_square() {
        return Err(LinearError::NonSquare);
    }
    let n = a.rows();
    let mut m = a.clone();
    let factors = integerize_rows(&mut m);
    let mut minors = Vec::with_capacity(n);
    let mut prev = ExactScalar::one();
    let mut scale = BigRational::one();
    for k in 0..n {
        scale *= &factors[k];
        if m[(k, k)].is_zero() {
            // this and, without pivoting information, all deeper minors
            // of the echelon pass are zero from here on
            for _ in k..n {
                minors.push(ExactScalar::zero());
            }
            return Ok(minors);
        }
        minors.push(&m[(k, k)] / &ExactScalar::from_rational(scale.clone()));
        if k + 1 == n {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[(k, k)] * &m[(i, j)]) - &(&m[(i, k)] * &m[(k, j)]);
                m[(i, j)] = &t / &prev;
            }
            m[(i, k)] = ExactScalar::zero();
        }
        prev = m[(k, k)].clone();
    }
    Ok(minors)
}

/// Reduced row echelon form in place; returns the pivot columns.
/// Pivot choice is the first row with a nonzero entry, so results are
/// deterministic across runs.
pub fn row_reduce(m: &mut Matrix) -> Vec<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        m.swap_rows(r, p);
        let inv = m[(r, c)].inverse();
        for j in c..cols {
            m[(r, j)] = &m[(r, j)] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[(i, c)].is_zero() {
                let f = m[(i, c)].clone();
                for j in c..cols {
                    let t = &m[(i, j)] - &(&f * &m[(r, j)]);
                    m[(i, j)] = t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(a: &Matrix) -> usize {
    let mut m = a.clone();
    row_reduce(&mut m).len()
}

/// Basis of the kernel of `a`, via reduced echelon form and free variables.
pub fn kernel_basis(a: &Matrix) -> Vec<Vec<ExactScalar>> {
    let mut m = a.clone();
    let pivots = row_reduce(&mut m);
    let cols = a.cols();
    let mut basis = Vec::new();
    let pivot_set: Vec<Option<usize>> = {
        let mut v = vec![None; cols];
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = Some(r);
        }
        v
    };
    for free in 0..cols {
        if pivot_set[free].is_some() {
            continue;
        }
        let mut vec = vec![ExactScalar::zero(); cols];
        vec[free] = ExactScalar::one();
        for (c, pr) in pivot_set.iter().enumerate() {
            if let Some(r) = pr {
                vec[c] = -&m[(*r, free)];
            }
        }
        basis.push(vec);
    }
    basis
}

/// Solve `A x = b` exactly. Errors with `NoSolution` on inconsistency and
/// `NonUnique` when the solution space is positive-dimensional.
pub fn solve_linear(a: &Matrix, b: &[ExactScalar]) -> Result<Vec<ExactScalar>, LinearError> {
    if a.rows() != b.len() {
        return Err(LinearError::DimensionMismatch(format!(
            "matrix has {} rows but rhs has {} entries",
            a.rows(),
            b.len()
        )));
    }
    let cols = a.cols();
    let mut aug = Matrix::from_fn(a.rows(), cols + 1, |i, j| {
        if j < cols {
            a[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let pivots = row_reduce(&mut aug);
    if pivots.last() == Some(&cols) {
        return Err(LinearError::NoSolution);
    }
    if pivots.len() < cols {
        return Err(LinearError::NonUnique);
    }
    let mut x = vec![ExactScalar::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[(r, cols)].clone();
    }
    Ok(x)
}

/// Eigenspace decomposition against a known finite list of candidate
/// eigenvalues: the kernels of `A - lambda I` for each candidate.
///
/// Every candidate appears in the output, including those with an empty
/// eigenspace. If the eigenspace dimensions do not sum to the full
/// dimension, the spectrum is not exhausted by the candidates and the
/// residual rank is reported as an error.
pub fn eigensplit(
    a: &Matrix,
    candidates: &[ExactScalar],
) -> Result<Vec<(ExactScalar, Vec<Vec<ExactScalar>>)>, LinearError> {
    if !a.is_square() {
        return Err(LinearError::NonSquare);
    }
    let n = a.rows();
    let mut spaces = Vec::with_capacity(candidates.len());
    let mut total = 0usize;
    for lambda in candidates {
        let shifted = Matrix::from_fn(n, n, |i, j| {
            if i == j {
                &a[(i, j)] - lambda
            } else {
                a[(i, j)].clone()
            }
        });
        let basis = kernel_basis(&shifted);
        total += basis.len();
        spaces.push((lambda.clone(), basis));
    }
    if total < n {
        return Err(LinearError::ResidualNonzero { residual: n - total });
    }
    Ok(spaces)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, den: i64) -> ExactScalar {
        ExactScalar::ratio(p, den)
    }

    #[test]
    fn determinant_of_empty_matrix_is_one() {
        let m = Matrix::zeros(0, 0);
        assert_eq!(determinant(&m).unwrap(), ExactScalar::one());
    }

    #[test]
    fn determinant_of_diagonal() {
        let m = Matrix::from_rows(vec![
            vec![q(2, 1), q(0, 1)],
            vec![q(0, 1), q(3, 5)],
        ]);
        assert_eq!(determinant(&m).unwrap(), q(6, 5));
    }

    #[test]
    fn determinant_with_radicals() {
        // det [[sqrt2, 1], [1, sqrt2]] = 2 - 1 = 1
        let r2 = ExactScalar::sqrt_d(2);
        let m = Matrix::from_rows(vec![
            vec![r2.clone(), q(1, 1)],
            vec![q(1, 1), r2.clone()],
        ]);
        assert_eq!(determinant(&m).unwrap(), ExactScalar::one());
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let m = Matrix::identity(3);
        let b = vec![q(1, 3), q(-2, 7), q(5, 1)];
        assert_eq!(solve_linear(&m, &b).unwrap(), b);
    }

    #[test]
    fn solve_one_by_one_division() {
        let m = Matrix::from_rows(vec![vec![q(2, 1)]]);
        let b = vec![q(13, 1024)];
        assert_eq!(solve_linear(&m, &b).unwrap(), vec![q(13, 2048)]);
    }

    #[test]
    fn solve_detects_inconsistency_and_non_uniqueness() {
        let m = Matrix::from_rows(vec![
            vec![q(1, 1), q(1, 1)],
            vec![q(2, 1), q(2, 1)],
        ]);
        assert_eq!(
            solve_linear(&m, &[q(1, 1), q(3, 1)]),
            Err(LinearError::NoSolution)
        );
        assert_eq!(
            solve_linear(&m, &[q(1, 1), q(2, 1)]),
            Err(LinearError::NonUnique)
        );
    }

    #[test]
    fn eigensplit_scalar_matrix() {
        let m = Matrix::identity(4).scale(&q(2, 1));
        let spaces = eigensplit(&m, &[q(2, 1)]).unwrap();
        assert_eq!(spaces.len(), 1);
        assert_eq!(spaces[0].1.len(), 4);
    }

    #[test]
    fn eigensplit_reports_residual() {
        // rotation-like matrix with no rational eigenvalues
        let m = Matrix::from_rows(vec![
            vec![q(0, 1), q(-1, 1)],
            vec![q(1, 1), q(0, 1)],
        ]);
        assert_eq!(
            eigensplit(&m, &[q(1, 1), q(-1, 1)]),
            Err(LinearError::ResidualNonzero { residual: 2 })
        );
    }

    #[test]
    fn leading_minors_match_determinants() {
        let m = Matrix::from_rows(vec![
            vec![q(2, 1), q(1, 1), q(0, 1)],
            vec![q(1, 1), q(3, 1), q(1, 2)],
            vec![q(0, 1), q(1, 2), q(1, 1)],
        ]);
        let minors = leading_principal_minors(&m).unwrap();
        assert_eq!(minors[0], q(2, 1));
        assert_eq!(minors[1], q(5, 1));
        assert_eq!(minors[2], determinant(&m).unwrap());
    }
}
