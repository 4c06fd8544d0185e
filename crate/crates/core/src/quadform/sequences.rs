//! Dimension and kernel/image checks for the sequences built from polarization:
//!
//! ```text
//! P : Sym^2(V*) -> S_2(V*),      ker P = F(V*) = coker P
//! 0 -> F(V) -> Sym^2 V -> Λ^2 V -> 0
//! 0 -> S_2(V) -> V ⊗ V -> Λ^2 V -> 0,   image of S_2(V) in Sym^2 V = F(V)
//! ```
//!
//! Here `S_2(V)` is the subspace of swap-invariant tensors and `F(V)` the span of the
//! squares `v·v`.

use alloc::string::String;
use alloc::vec::Vec;

use super::{lambda2_dim, lambda2_index, sym2_dim, sym2_index, sym2_pairs, QuadraticForm};
use crate::linalg::{unit, Matrix, SemilinearMap, Subspace};
use crate::scalars::{Field, FiniteField};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizationReport {
    pub n: usize,
    pub field: String,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    pub coker_dim: usize,
    /// Every kernel basis vector equals `l^2` for an explicitly recovered linear form `l`.
    pub kernel_are_squares: bool,
    /// The diagonal functionals `S -> S_ii` vanish on the image and number exactly `coker_dim`.
    pub coker_is_diagonal: bool,
}

impl PolarizationReport {
    pub fn passed(&self) -> bool {
        self.kernel_dim == self.n && self.coker_dim == self.n && self.kernel_are_squares && self.coker_is_diagonal
    }
}

/// The polarization map as a matrix from monomial coordinates of `Sym^2(V*)` to the
/// upper-triangular coordinates `(i <= j)` of symmetric matrices `S_2(V*)`.
pub fn polarization_matrix<F: Field>(n: usize) -> Matrix<F> {
    let dim = sym2_dim(n);
    let columns: Vec<Vec<F>> = sym2_pairs(n)
        .map(|(i, j)| {
            let gram = QuadraticForm::<F>::from_monomials(n, &[(i, j)]).polarize();
            sym2_pairs(n).map(|(a, b)| gram.gram()[(a, b)].clone()).collect()
        })
        .collect();
    Matrix::from_columns(dim, &columns)
}

/// Writes `q` as `l^2` if it is the square of a linear form.
fn as_square_of_linear<F: Field>(q: &QuadraticForm<F>) -> Option<Vec<F>> {
    let n = q.dim();
    if q.terms().any(|(i, j, _)| i != j) {
        return None;
    }
    let l: Option<Vec<F>> = (0..n).map(|i| q.coeff(i, i).sqrt()).collect();
    let l = l?;
    (QuadraticForm::square_of_linear(&l) == *q).then_some(l)
}

pub fn polarization_report<F: Field>(n: usize) -> PolarizationReport {
    let p = polarization_matrix::<F>(n);
    let rank = p.rank();
    let kernel = p.kernel_basis();
    let kernel_are_squares = kernel.basis().iter().all(|v| {
        let q = QuadraticForm::from_coefficients(n, v.clone()).expect("kernel vector length");
        as_square_of_linear(&q).is_some()
    });
    let target_dim = p.rows();
    let image = Subspace::from_vectors(target_dim, (0..p.cols()).map(|c| p.column(c))).expect("column length");
    let diagonal: Vec<Vec<F>> = (0..n).map(|i| unit(target_dim, sym2_index(n, i, i))).collect();
    // the functionals are coordinate projections: they vanish on the image iff no image vector
    // has a diagonal coordinate, and they are independent modulo the image iff image + span(e_ii)
    // is everything
    let vanish = image.basis().iter().all(|v| (0..n).all(|i| v[sym2_index(n, i, i)].is_zero()));
    let complement = Subspace::from_vectors(target_dim, diagonal).expect("unit vectors");
    let spans = image.sum(&complement).expect("same ambient").dim() == target_dim;
    let coker_dim = target_dim - rank;
    PolarizationReport {
        n,
        field: F::field_name(),
        source_dim: p.cols(),
        target_dim,
        rank,
        kernel_dim: kernel.dim(),
        coker_dim,
        kernel_are_squares,
        coker_is_diagonal: vanish && spans && complement.dim() == coker_dim,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sym2SequenceReport {
    pub n: usize,
    pub field: String,
    pub sym2_dim: usize,
    pub lambda2_dim: usize,
    /// Dimension of the span of `{v·v}`.
    pub frobenius_twist_dim: usize,
    pub projection_kernel_dim: usize,
    pub projection_rank: usize,
    /// `ker(Sym^2 V -> Λ^2 V) = span{v·v}`.
    pub kernel_is_twist: bool,
    pub s2_dim: usize,
    /// `ker(V ⊗ V -> Λ^2 V) = S_2(V)` and the map is onto.
    pub tensor_sequence_exact: bool,
    /// The image of `S_2(V)` under `V ⊗ V -> Sym^2 V` equals `span{v·v}`.
    pub s2_image_is_twist: bool,
}

impl Sym2SequenceReport {
    pub fn passed(&self) -> bool {
        self.frobenius_twist_dim == self.n
            && self.kernel_is_twist
            && self.projection_rank == self.lambda2_dim
            && self.frobenius_twist_dim + self.lambda2_dim == self.sym2_dim
            && self.tensor_sequence_exact
            && self.s2_image_is_twist
    }
}

/// Vectors to push through the square map: all of `F^n` when small, otherwise basis vectors
/// and their pairwise sums.
fn sample_vectors<F: FiniteField>(n: usize) -> Vec<Vec<F>> {
    const LIMIT: usize = 4096;
    let total = F::ORDER.checked_pow(n as u32).filter(|&t| t <= LIMIT);
    match total {
        Some(total) => (0..total)
            .map(|mut idx| {
                (0..n)
                    .map(|_| {
                        let e = F::from_index(idx % F::ORDER);
                        idx /= F::ORDER;
                        e
                    })
                    .collect()
            })
            .collect(),
        None => {
            let mut out: Vec<Vec<F>> = (0..n).map(|i| unit(n, i)).collect();
            for i in 0..n {
                for j in i + 1..n {
                    let mut v = unit::<F>(n, i);
                    v[j] = F::from_index(F::ORDER - 1);
                    out.push(v);
                }
            }
            out
        }
    }
}

pub fn sym2_sequence_report<F: FiniteField>(n: usize) -> Sym2SequenceReport {
    let (sd, ld) = (sym2_dim(n), lambda2_dim(n));

    // Sym^2 V -> Λ^2 V: v_i v_j -> v_i ∧ v_j for i < j, squares go to zero
    let projection = Matrix::from_fn(ld, sd, |row, col| {
        let (i, j) = sym2_pairs(n).nth(col).expect("column in range");
        if i < j && lambda2_index(n, i, j) == row {
            F::one()
        } else {
            F::zero()
        }
    });
    let proj_kernel = projection.kernel_basis();

    // v -> v·v, Frobenius-semilinear into Sym^2 V
    let square_cols: Vec<Vec<F>> = (0..n).map(|i| unit(sd, sym2_index(n, i, i))).collect();
    let square = SemilinearMap::new(Matrix::from_columns(sd, &square_cols));
    let twist = Subspace::from_vectors(sd, sample_vectors::<F>(n).iter().map(|v| square.apply(v)).collect::<Vec<_>>())
        .expect("image length");

    // V ⊗ V with basis e_i ⊗ e_j at index i * n + j
    let nn = n * n;
    let swap_plus_id = Matrix::from_fn(nn, nn, |row, col| {
        let (i, j) = (col / n, col % n);
        let swapped = j * n + i;
        match (row == col, row == swapped) {
            (true, true) => F::zero(),
            (true, false) | (false, true) => F::one(),
            (false, false) => F::zero(),
        }
    });
    let s2 = swap_plus_id.kernel_basis();
    let tensor_to_lambda = Matrix::from_fn(ld, nn, |row, col| {
        let (i, j) = (col / n, col % n);
        if i != j && lambda2_index(n, i.min(j), i.max(j)) == row {
            F::one()
        } else {
            F::zero()
        }
    });
    let tensor_sequence_exact = tensor_to_lambda.kernel_basis() == s2 && tensor_to_lambda.rank() == ld;
    let tensor_to_sym = Matrix::from_fn(sd, nn, |row, col| {
        let (i, j) = (col / n, col % n);
        if sym2_index(n, i.min(j), i.max(j)) == row {
            F::one()
        } else {
            F::zero()
        }
    });
    let s2_image = s2.image(&tensor_to_sym).expect("tensor dimension");

    Sym2SequenceReport {
        n,
        field: F::field_name(),
        sym2_dim: sd,
        lambda2_dim: ld,
        frobenius_twist_dim: twist.dim(),
        projection_kernel_dim: proj_kernel.dim(),
        projection_rank: projection.rank(),
        kernel_is_twist: proj_kernel == twist,
        s2_dim: s2.dim(),
        tensor_sequence_exact,
        s2_image_is_twist: s2_image == twist,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Gf2, Gf4, Gf8, RationalFunction};

    #[test]
    fn polarization_dimensions() {
        for n in 1..=6 {
            let r2 = polarization_report::<Gf2>(n);
            let r4 = polarization_report::<Gf4>(n);
            for r in [&r2, &r4] {
                assert_eq!(r.kernel_dim, n);
                assert_eq!(r.coker_dim, n);
                assert!(r.passed(), "{r:?}");
            }
        }
        // rank n(n-1)/2 on a source and target of dimension n(n+1)/2
        let r = polarization_report::<Gf2>(3);
        assert_eq!((r.source_dim, r.target_dim, r.rank), (6, 6, 3));
        let r = polarization_report::<Gf2>(1);
        assert_eq!((r.kernel_dim, r.coker_dim, r.rank), (1, 1, 0));
        assert!(polarization_report::<RationalFunction>(3).passed());
    }

    #[test]
    fn non_squares_are_rejected() {
        let q = QuadraticForm::<Gf2>::hyperbolic_plane();
        assert_eq!(as_square_of_linear(&q), None);
        let t = RationalFunction::t();
        let q = QuadraticForm::from_terms(1, [(0, 0, t)]);
        // t x^2 is not a square over K
        assert_eq!(as_square_of_linear(&q), None);
    }

    #[test]
    fn sym2_sequences() {
        for n in 1..=5 {
            let r = sym2_sequence_report::<Gf2>(n);
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.s2_dim, sym2_dim(n));
        }
        let r = sym2_sequence_report::<Gf2>(2);
        assert_eq!((r.frobenius_twist_dim, r.lambda2_dim, r.sym2_dim), (2, 1, 3));
        let r = sym2_sequence_report::<Gf2>(4);
        assert_eq!(r.frobenius_twist_dim, 4);
        assert!(r.s2_image_is_twist);
        assert!(sym2_sequence_report::<Gf4>(3).passed());
        assert!(sym2_sequence_report::<Gf8>(5).passed());
    }
}
