use alloc::vec::Vec;

use crate::error::Error;
use crate::linalg::{Matrix, Subspace};
use crate::quadform::QuadraticForm;
use crate::scalars::Field;

/// Which linear system defines the Lie algebra of `O(Q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LieVariant {
    /// `{A : beta(v, A v) = 0 for all v}`, the tangent space of the naive stabilizer.
    SchemeTangent,
    /// The above plus `A * rad(beta) = 0`; differs from `SchemeTangent` only for odd `n`.
    Smooth,
}

/// A subspace of `End(F^n)` closed under `[A, B] = AB + BA`, stored as a canonical subspace
/// of `F^(n*n)` (row-major matrix entries) together with the form it preserves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSubalgebra<F> {
    form: QuadraticForm<F>,
    space: Subspace<F>,
}

impl<F: Field> LieSubalgebra<F> {
    /// Wraps a subspace of `F^(n*n)`; closure is not checked here, see [`Self::bracket_failure`].
    pub fn from_space(form: QuadraticForm<F>, space: Subspace<F>) -> Result<Self, Error> {
        let n = form.dim();
        if space.ambient_dim() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, found: space.ambient_dim() });
        }
        Ok(Self { form, space })
    }

    pub fn from_matrices(form: QuadraticForm<F>, matrices: &[Matrix<F>]) -> Result<Self, Error> {
        let n = form.dim();
        let space = Subspace::from_vectors(n * n, matrices.iter().map(|m| m.entries().to_vec()))?;
        Self::from_space(form, space)
    }

    pub fn n(&self) -> usize {
        self.form.dim()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn form(&self) -> &QuadraticForm<F> {
        &self.form
    }

    pub fn space(&self) -> &Subspace<F> {
        &self.space
    }

    pub fn basis_matrices(&self) -> Vec<Matrix<F>> {
        let n = self.n();
        self.space.basis().iter().map(|v| Matrix::from_vec(n, n, v.clone()).expect("n*n entries")).collect()
    }

    pub fn contains(&self, a: &Matrix<F>) -> bool {
        a.rows() == self.n() && a.cols() == self.n() && self.space.contains(a.entries())
    }

    /// The matrix with the given coordinates in the canonical basis.
    pub fn element(&self, coords: &[F]) -> Matrix<F> {
        let n = self.n();
        Matrix::from_vec(n, n, self.space.combine(coords)).expect("n*n entries")
    }

    /// First basis pair whose bracket leaves the span, if any.
    pub fn bracket_failure(&self) -> Option<(usize, usize)> {
        let basis = self.basis_matrices();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                if !self.contains(&basis[i].bracket(&basis[j])) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_subalgebra_of(&self, other: &Self) -> bool {
        self.space.is_subspace_of(&other.space)
    }
}

/// Linear conditions on the `n*n` entries of `A` (index `k*n + j` for `A[k][j]`) that cut out
/// the Lie algebra of the given variant.
pub fn lie_constraints<F: Field>(q: &QuadraticForm<F>, variant: LieVariant) -> Matrix<F> {
    let n = q.dim();
    let b = q.polarize();
    let gram = b.gram();
    let mut rows: Vec<Vec<F>> = Vec::new();
    // (B A)_{ij} = sum_k B_ik A_kj must be alternating
    for i in 0..n {
        for j in i..n {
            let mut row = alloc::vec![F::zero(); n * n];
            for k in 0..n {
                if !gram[(i, k)].is_zero() {
                    row[k * n + j] += gram[(i, k)].clone();
                }
                if i != j && !gram[(j, k)].is_zero() {
                    row[k * n + i] += gram[(j, k)].clone();
                }
            }
            rows.push(row);
        }
    }
    if variant == LieVariant::Smooth && n % 2 == 1 {
        let rad = b.radical();
        for r in rad.basis() {
            for k in 0..n {
                let mut row = alloc::vec![F::zero(); n * n];
                for (j, x) in r.iter().enumerate() {
                    row[k * n + j] = x.clone();
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(rows)
}

/// The Lie algebra of `O(Q)` as the kernel of [`lie_constraints`].
pub fn lie_algebra<F: Field>(q: &QuadraticForm<F>, variant: LieVariant) -> Result<LieSubalgebra<F>, Error> {
    if !q.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    let space = lie_constraints(q, variant).kernel_basis();
    LieSubalgebra::from_space(q.clone(), space)
}

/// Direct check of `beta(e_i, A e_i) = 0` and `beta(e_i, A e_j) = beta(e_j, A e_i)`.
pub fn preserves_form<F: Field>(q: &QuadraticForm<F>, a: &Matrix<F>) -> bool {
    let n = q.dim();
    let ba = q.polarize().gram().mul(a);
    (0..n).all(|i| ba[(i, i)].is_zero() && (i + 1..n).all(|j| ba[(i, j)] == ba[(j, i)]))
}
