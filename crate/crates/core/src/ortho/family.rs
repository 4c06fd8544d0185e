//! Block-matrix parametrizations of so(8) and so(7) in the coordinates
//!
//! ```text
//! so(8):  Q = x1 x7 + x2 x8 + x3 x5 + x4 x6      so(7):  Q = x1 x6 + x2 x7 + x3 x4 + x5^2
//! ```
//!
//! so(8) uses 2x2 blocks `X1..X6` and antidiagonal blocks `D1..D4 = [[0, d], [d, 0]]`:
//!
//! ```text
//! | X1  X2   X3   D1  |
//! | X4  X5   D2   X3ᵗ |
//! | X6  D3   X5ᵗ  X2ᵗ |
//! | D4  X6ᵗ  X4ᵗ  X1ᵗ |
//! ```
//!
//! so(7) has block rows/columns `{1,2}, {3,4}, {5}, {6,7}`, a scalar block `Δ = λI`, row
//! pieces `x1, x2, x3` and antidiagonal `D1, D2`:
//!
//! ```text
//! | X1  X2      0  D1      |
//! | X3  Δ       0  J X2ᵗ   |
//! | x1  x2      0  x3      |
//! | D2  X3ᵗ J   0  X1ᵗ     |
//! ```
//!
//! where `J = [[0, 1], [1, 0]]` is the Gram block of `x3 x4`. With plain transposes in
//! place of `J X2ᵗ` and `X3ᵗ J` ([`FamilyKind::So7PlainTranspose`]) the family is only
//! invariant for a bilinear form with an identity block on `(x3, x4)`, which is not the
//! polarization of `x3 x4`; that variant is kept to exhibit the difference.

use alloc::vec::Vec;

use super::{preserves_form, LieSubalgebra};
use crate::error::Error;
use crate::linalg::{Matrix, Subspace};
use crate::scalars::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    So8,
    So7,
    So7PlainTranspose,
}

impl FamilyKind {
    pub fn parameter_count(self) -> usize {
        match self {
            FamilyKind::So8 => 28,
            FamilyKind::So7 | FamilyKind::So7PlainTranspose => 21,
        }
    }

    pub fn n(self) -> usize {
        match self {
            FamilyKind::So8 => 8,
            FamilyKind::So7 | FamilyKind::So7PlainTranspose => 7,
        }
    }

    /// Human-readable name of parameter `index`, e.g. `X3[0][1]` or `D2`.
    pub fn parameter_name(self, index: usize) -> alloc::string::String {
        use alloc::format;
        match self {
            FamilyKind::So8 => match index {
                0..=23 => format!("X{}[{}][{}]", index / 4 + 1, (index % 4) / 2, index % 2),
                _ => format!("D{}", index - 23),
            },
            FamilyKind::So7 | FamilyKind::So7PlainTranspose => match index {
                0..=11 => format!("X{}[{}][{}]", index / 4 + 1, (index % 4) / 2, index % 2),
                12 => "lambda".into(),
                13..=18 => format!("x{}[{}]", (index - 13) / 2 + 1, (index - 13) % 2),
                _ => format!("D{}", index - 18),
            },
        }
    }
}

/// Writes a 2x2 block (`[[a, b], [c, d]]`, optionally transposed) at block offset `(r, c)`.
fn put_block<F: Field>(m: &mut Matrix<F>, r: usize, c: usize, x: &[F], transpose: bool) {
    for i in 0..2 {
        for j in 0..2 {
            let (si, sj) = if transpose { (j, i) } else { (i, j) };
            m[(r + i, c + j)] = x[2 * si + sj].clone();
        }
    }
}

fn put_antidiagonal<F: Field>(m: &mut Matrix<F>, r: usize, c: usize, d: &F) {
    m[(r, c + 1)] = d.clone();
    m[(r + 1, c)] = d.clone();
}

/// The family member with the given parameters.
pub fn family_matrix<F: Field>(kind: FamilyKind, params: &[F]) -> Result<Matrix<F>, Error> {
    let expected = kind.parameter_count();
    if params.len() != expected {
        return Err(Error::ParameterCount { expected, found: params.len() });
    }
    let mut m = Matrix::zeros(kind.n(), kind.n());
    match kind {
        FamilyKind::So8 => {
            let x = |k: usize| &params[4 * (k - 1)..4 * k];
            let d = |k: usize| &params[23 + k];
            put_block(&mut m, 0, 0, x(1), false);
            put_block(&mut m, 0, 2, x(2), false);
            put_block(&mut m, 0, 4, x(3), false);
            put_antidiagonal(&mut m, 0, 6, d(1));
            put_block(&mut m, 2, 0, x(4), false);
            put_block(&mut m, 2, 2, x(5), false);
            put_antidiagonal(&mut m, 2, 4, d(2));
            put_block(&mut m, 2, 6, x(3), true);
            put_block(&mut m, 4, 0, x(6), false);
            put_antidiagonal(&mut m, 4, 2, d(3));
            put_block(&mut m, 4, 4, x(5), true);
            put_block(&mut m, 4, 6, x(2), true);
            put_antidiagonal(&mut m, 6, 0, d(4));
            put_block(&mut m, 6, 2, x(6), true);
            put_block(&mut m, 6, 4, x(4), true);
            put_block(&mut m, 6, 6, x(1), true);
        }
        FamilyKind::So7 | FamilyKind::So7PlainTranspose => {
            let x = |k: usize| &params[4 * (k - 1)..4 * k];
            let lambda = &params[12];
            let row = |k: usize| &params[13 + 2 * (k - 1)..13 + 2 * k];
            let d = |k: usize| &params[18 + k];
            let twisted = kind == FamilyKind::So7;
            put_block(&mut m, 0, 0, x(1), false);
            put_block(&mut m, 0, 2, x(2), false);
            put_antidiagonal(&mut m, 0, 5, d(1));
            put_block(&mut m, 2, 0, x(3), false);
            m[(2, 2)] = lambda.clone();
            m[(3, 3)] = lambda.clone();
            // J X2ᵗ: rows of X2ᵗ swapped
            let x2t: Vec<F> = {
                let x2 = x(2);
                alloc::vec![x2[0].clone(), x2[2].clone(), x2[1].clone(), x2[3].clone()]
            };
            let block = if twisted {
                alloc::vec![x2t[2].clone(), x2t[3].clone(), x2t[0].clone(), x2t[1].clone()]
            } else {
                x2t
            };
            put_block(&mut m, 2, 5, &block, false);
            for (j, v) in row(1).iter().enumerate() {
                m[(4, j)] = v.clone();
            }
            for (j, v) in row(2).iter().enumerate() {
                m[(4, 2 + j)] = v.clone();
            }
            for (j, v) in row(3).iter().enumerate() {
                m[(4, 5 + j)] = v.clone();
            }
            put_antidiagonal(&mut m, 5, 0, d(2));
            // X3ᵗ J: columns of X3ᵗ swapped
            let x3t: Vec<F> = {
                let x3 = x(3);
                alloc::vec![x3[0].clone(), x3[2].clone(), x3[1].clone(), x3[3].clone()]
            };
            let block = if twisted {
                alloc::vec![x3t[1].clone(), x3t[0].clone(), x3t[3].clone(), x3t[2].clone()]
            } else {
                x3t
            };
            put_block(&mut m, 5, 2, &block, false);
            put_block(&mut m, 5, 5, x(1), true);
        }
    }
    Ok(m)
}

/// Images of the unit parameter vectors.
pub fn family_generators<F: Field>(kind: FamilyKind) -> Vec<Matrix<F>> {
    let count = kind.parameter_count();
    (0..count)
        .map(|i| {
            let mut p = alloc::vec![F::zero(); count];
            p[i] = F::one();
            family_matrix(kind, &p).expect("parameter count")
        })
        .collect()
}

/// The span of the family inside `F^(n*n)`.
pub fn family_span<F: Field>(kind: FamilyKind) -> Subspace<F> {
    let n = kind.n();
    Subspace::from_vectors(n * n, family_generators::<F>(kind).into_iter().map(Matrix::into_entries))
        .expect("n*n entries")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeReport {
    pub family_dim: usize,
    pub algebra_dim: usize,
    /// First parameter whose unit matrix is not in the computed algebra.
    pub first_outside: Option<usize>,
    /// First parameter whose unit matrix fails the direct form-invariance check.
    pub first_not_invariant: Option<usize>,
    pub equal: bool,
}

/// Span equality of a family and a computed algebra: every generator lies in the algebra,
/// and the dimensions agree.
pub fn shape_equivalence<F: Field>(kind: FamilyKind, computed: &LieSubalgebra<F>) -> Result<ShapeReport, Error> {
    if computed.n() != kind.n() {
        return Err(Error::DimensionMismatch { expected: kind.n(), found: computed.n() });
    }
    let gens = family_generators::<F>(kind);
    let first_outside = gens.iter().position(|g| !computed.contains(g));
    let first_not_invariant = gens.iter().position(|g| !preserves_form(computed.form(), g));
    let span = family_span::<F>(kind);
    let equal = span == *computed.space();
    Ok(ShapeReport {
        family_dim: span.dim(),
        algebra_dim: computed.dim(),
        first_outside,
        first_not_invariant,
        equal,
    })
}
