//! Exact dense linear algebra over any [`Field`].
//!
//! [`Matrix`] is the generic representation; [`BitMatrix`] is a packed GF(2) backend behind
//! the same [`ExactMatrix`] interface. [`Subspace`] keeps a canonical echelon basis so that
//! subspace equality is structural.

mod bitmatrix;
mod matrix;
mod subspace;

use alloc::vec::Vec;

pub use bitmatrix::BitMatrix;
pub use matrix::{Echelon, Matrix};
pub use subspace::{unit, QuotientMap, Subspace};

use crate::scalars::Field;

/// Operations shared by the generic and the bit-packed matrix representations.
pub trait ExactMatrix<F: Field> {
    fn nrows(&self) -> usize;
    fn ncols(&self) -> usize;
    fn rank(&self) -> usize;
    fn kernel_basis(&self) -> Subspace<F>;
    fn solve(&self, rhs: &[F]) -> Option<Vec<F>>;
}

/// A Frobenius-semilinear map `x -> M * x^[2]`, where `x^[2]` squares each coordinate.
///
/// It is additive and satisfies `f(c x) = c^2 f(x)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SemilinearMap<F> {
    matrix: Matrix<F>,
}

impl<F: Field> SemilinearMap<F> {
    /// `matrix` gives the images of the basis vectors as columns.
    pub fn new(matrix: Matrix<F>) -> Self {
        Self { matrix }
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn apply(&self, x: &[F]) -> Vec<F> {
        let twisted: Vec<F> = x.iter().map(F::frobenius).collect();
        self.matrix.mul_vec(&twisted)
    }
}
