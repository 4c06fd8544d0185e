use alloc::vec::Vec;

use super::Matrix;
use crate::error::Error;
use crate::scalars::Field;

/// A subspace of `F^n` stored as the nonzero rows of its reduced row echelon form.
///
/// Pivot columns are ascending and every pivot entry is 1, so two spanning sets of the same
/// subspace produce identical values and `==` is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Self { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_vectors(ambient, (0..ambient).map(|i| unit(ambient, i))).expect("unit vectors")
    }

    /// Span of the given vectors (not necessarily independent).
    pub fn from_vectors(ambient: usize, vectors: impl IntoIterator<Item = Vec<F>>) -> Result<Self, Error> {
        let mut rows = Vec::new();
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, found: v.len() });
            }
            rows.push(v);
        }
        if rows.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let echelon = Matrix::from_rows(rows).rref();
        let rank = echelon.pivots.len();
        let basis = (0..rank).map(|i| echelon.matrix.row(i).to_vec()).collect();
        Ok(Self { ambient, basis, pivots: echelon.pivots })
    }

    /// Span of the coordinate vectors `e_i` for the listed indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        Self::from_vectors(ambient, indices.iter().map(|&i| unit(ambient, i))).expect("unit vectors")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The basis vectors as the rows of a matrix (`dim x ambient`).
    pub fn basis_matrix(&self) -> Matrix<F> {
        if self.basis.is_empty() {
            return Matrix::zeros(0, self.ambient);
        }
        Matrix::from_rows(self.basis.clone())
    }

    /// `v` minus its component along the echelon basis; zero at every pivot.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            for (x, y) in r.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x += c.clone() * y.clone();
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[F]) -> bool {
        v.len() == self.ambient && self.reduce(v).iter().all(F::is_zero)
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        self.contains(v).then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The vector with the given coordinates in the echelon basis.
    pub fn combine(&self, coords: &[F]) -> Vec<F> {
        let mut v = alloc::vec![F::zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(b) {
                *x += c.clone() * y.clone();
            }
        }
        v
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }

    fn check_ambient(&self, other: &Self) -> Result<(), Error> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self, Error> {
        self.check_ambient(other)?;
        Self::from_vectors(self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    /// `self ∩ other`, from the left kernel of the stacked bases.
    pub fn intersection(&self, other: &Self) -> Result<Self, Error> {
        self.check_ambient(other)?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Self::zero(self.ambient));
        }
        let stacked = self.basis_matrix().vconcat(&other.basis_matrix());
        let relations = stacked.transpose().kernel_basis();
        let d = self.dim();
        let vectors = relations.basis().iter().map(|rel| self.combine(&rel[..d])).collect::<Vec<_>>();
        Self::from_vectors(self.ambient, vectors)
    }

    /// Image of the subspace under a linear map given as a matrix acting on columns.
    pub fn image(&self, map: &Matrix<F>) -> Result<Self, Error> {
        if map.cols() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: map.cols() });
        }
        Self::from_vectors(map.rows(), self.basis.iter().map(|b| map.mul_vec(b)).collect::<Vec<_>>())
    }

    /// The projection `F^n -> F^n / self` with a section.
    pub fn quotient_map(&self) -> QuotientMap<F> {
        let free = (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect();
        QuotientMap { sub: self.clone(), free }
    }
}

/// Linear surjection `F^n -> F^n / W` with kernel exactly `W`, in coordinates given by the
/// non-pivot columns of `W`'s echelon form.
#[derive(Clone, Debug)]
pub struct QuotientMap<F> {
    sub: Subspace<F>,
    free: Vec<usize>,
}

impl<F: Field> QuotientMap<F> {
    pub fn source_dim(&self) -> usize {
        self.sub.ambient
    }

    pub fn target_dim(&self) -> usize {
        self.free.len()
    }

    pub fn kernel(&self) -> &Subspace<F> {
        &self.sub
    }

    pub fn project(&self, v: &[F]) -> Vec<F> {
        let r = self.sub.reduce(v);
        self.free.iter().map(|&i| r[i].clone()).collect()
    }

    /// A right inverse of [`Self::project`].
    pub fn section(&self, u: &[F]) -> Vec<F> {
        let mut v = alloc::vec![F::zero(); self.sub.ambient];
        for (&i, x) in self.free.iter().zip(u) {
            v[i] = x.clone();
        }
        v
    }

    /// The projection as a `target_dim x source_dim` matrix.
    pub fn matrix(&self) -> Matrix<F> {
        let n = self.sub.ambient;
        let cols: Vec<Vec<F>> = (0..n).map(|j| self.project(&unit(n, j))).collect();
        Matrix::from_columns(self.target_dim(), &cols)
    }
}

/// The standard basis vector `e_i` of `F^n`.
pub fn unit<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = alloc::vec![F::zero(); n];
    v[i] = F::one();
    v
}
