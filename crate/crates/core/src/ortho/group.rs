use alloc::vec::Vec;
use core::ops::Range;

use crate::error::Error;
use crate::linalg::{BitMatrix, Matrix};
use crate::quadform::QuadraticForm;
use crate::scalars::{Field, Gf2};

/// `Q(g v) = Q(v)` for all `v`, checked by comparing `Q ∘ g` with `Q` coefficientwise.
pub fn is_orthogonal<F: Field>(q: &QuadraticForm<F>, g: &Matrix<F>) -> Result<bool, Error> {
    if g.rows() != q.dim() || g.cols() != q.dim() {
        return Err(Error::DimensionMismatch { expected: q.dim(), found: g.rows() });
    }
    if g.inverse().is_none() {
        return Ok(false);
    }
    Ok(q.pullback(g)? == *q)
}

/// `rank(g + I) mod 2`.
pub fn dickson<F: Field>(g: &Matrix<F>) -> u8 {
    let id = Matrix::identity(g.rows());
    (g.add(&id).rank() % 2) as u8
}

fn dickson_bits(g: &BitMatrix) -> u8 {
    (g.add(&BitMatrix::identity(g.rows())).rank() % 2) as u8
}

/// Largest `n` for which `O(Q)(GF(2))` is found by running over all `2^(n*n)` matrices.
pub const MAX_ENUMERATION_DIM: usize = 4;

fn quad_bits(q: &QuadraticForm<Gf2>) -> Vec<(usize, usize)> {
    q.terms().filter(|(_, _, c)| !c.is_zero()).map(|(i, j, _)| (i, j)).collect()
}

fn eval_bits(terms: &[(usize, usize)], v: &[bool]) -> bool {
    terms.iter().fold(false, |acc, &(i, j)| acc ^ (v[i] & v[j]))
}

/// Checks `Q(g x) = Q(x)` on every vector of `GF(2)^n`.
fn preserves_bits(terms: &[(usize, usize)], n: usize, g: &BitMatrix) -> bool {
    (0u32..1 << n).all(|x| {
        let v: Vec<bool> = (0..n).map(|i| x >> i & 1 == 1).collect();
        eval_bits(terms, &g.mul_vec(&v)) == eval_bits(terms, &v)
    })
}

/// The elements of `O(Q)(GF(2))` among matrices with index in `range` (see
/// [`BitMatrix::from_index`]), in increasing index order.
pub fn orthogonal_elements_in(q: &QuadraticForm<Gf2>, range: Range<u64>) -> Result<Vec<BitMatrix>, Error> {
    let n = q.dim();
    if n > MAX_ENUMERATION_DIM {
        return Err(Error::EnumerationBound { bits: n * n, limit: MAX_ENUMERATION_DIM * MAX_ENUMERATION_DIM });
    }
    let terms = quad_bits(q);
    let end = range.end.min(1u64 << (n * n));
    Ok((range.start..end)
        .map(|i| BitMatrix::from_index(n, i))
        .filter(|g| g.is_invertible() && preserves_bits(&terms, n, g))
        .collect())
}

pub fn orthogonal_elements(q: &QuadraticForm<Gf2>) -> Result<Vec<BitMatrix>, Error> {
    orthogonal_elements_in(q, 0..1u64 << (q.dim() * q.dim()))
}

/// Summary of `O(Q)(GF(2))` and the kernel of the Dickson invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupCensus {
    pub n: usize,
    pub order: usize,
    /// Number of elements with Dickson invariant 0.
    pub dickson_zero_order: usize,
    /// Products of elements stay in the group.
    pub closed: bool,
    /// `D(gh) = D(g) + D(h)` on all pairs.
    pub dickson_additive: bool,
    /// All elements have determinant 1 (automatic in characteristic 2).
    pub det_one: bool,
    /// Every element fixes the radical of the polar form pointwise.
    pub fixes_radical: bool,
}

impl GroupCensus {
    pub fn from_elements(q: &QuadraticForm<Gf2>, elements: &[BitMatrix]) -> Self {
        let n = q.dim();
        let terms = quad_bits(q);
        let dicksons: Vec<u8> = elements.iter().map(dickson_bits).collect();
        let mut closed = true;
        let mut dickson_additive = true;
        for (a, da) in elements.iter().zip(&dicksons) {
            for (b, db) in elements.iter().zip(&dicksons) {
                let ab = a.mul(b);
                if !(ab.is_invertible() && preserves_bits(&terms, n, &ab)) {
                    closed = false;
                }
                if dickson_bits(&ab) != da ^ db {
                    dickson_additive = false;
                }
            }
        }
        let det_one = elements.iter().all(|g| g.to_matrix().determinant() == Some(Gf2::one()));
        let radical = q.polarize().radical();
        let fixes_radical = elements.iter().all(|g| {
            let g = g.to_matrix();
            radical.basis().iter().all(|r| g.mul_vec(r) == *r)
        });
        Self {
            n,
            order: elements.len(),
            dickson_zero_order: dicksons.iter().filter(|&&d| d == 0).count(),
            closed,
            dickson_additive,
            det_one,
            fixes_radical,
        }
    }
}

pub fn group_census(q: &QuadraticForm<Gf2>) -> Result<GroupCensus, Error> {
    let elements = orthogonal_elements(q)?;
    Ok(GroupCensus::from_elements(q, &elements))
}

/// An invertible matrix together with a form it preserves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalElement<F> {
    g: Matrix<F>,
    form: QuadraticForm<F>,
}

impl<F: Field> OrthogonalElement<F> {
    pub fn new(g: Matrix<F>, form: QuadraticForm<F>) -> Result<Self, Error> {
        if !is_orthogonal(&form, &g)? {
            return Err(Error::NotOrthogonal);
        }
        debug_assert!(g.determinant().is_some_and(|d| d.is_one()));
        Ok(Self { g, form })
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.g
    }

    pub fn form(&self) -> &QuadraticForm<F> {
        &self.form
    }

    pub fn dickson(&self) -> u8 {
        dickson(&self.g)
    }

    pub fn compose(&self, other: &Self) -> Result<Self, Error> {
        if self.form != other.form {
            return Err(Error::NotOrthogonal);
        }
        Ok(Self { g: self.g.mul(&other.g), form: self.form.clone() })
    }
}
